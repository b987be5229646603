"""
The extended affine Weyl group of GL_n, as pairs (translation, permutation).

Conventions
-----------
* A permutation is a tuple ``p`` of length n with ``p[i]`` the image of ``i``
  (0-indexed).  Composition is right-to-left: ``compose(x, y)[i] = x[y[i]]``.
* A cocharacter is a tuple of n integers.  A permutation permutes positions:
  ``perm_on_cochar(p, lam)[p[i]] = lam[i]``.
* An element ``w = t^lam . p`` is stored as ``AffineWeylElement(trans=lam,
  perm=p)`` and acts on Z^n affinely by ``v -> lam + p.v``.  Multiplication is
  ``(lam1, p1)(lam2, p2) = (lam1 + p1.lam2, p1 p2)``.
* Simple reflections carry indices 0..n-1.  For ``1 <= i <= n-1``, ``s_i``
  swaps the (1-indexed) letters i and i+1, i.e. positions i-1 and i.  ``s_0``
  is the affine reflection ``t^(e_1 - e_n) . (1 n)``.
* ``tau = t^(e_1) . (1 2 ... n)`` generates the length-zero subgroup Omega;
  ``tau^n`` is translation by (1, ..., 1) and ``tau s_i tau^-1 = s_(i+1 mod n)``.
  Every element factors as (affine Weyl group part) . tau^kappa where
  ``kappa(w) = sum(trans)``.
* Roots chi_(i,j) with 1-indexed i != j pair with cocharacters by
  ``lam(i) - lam(j)``; positive means i < j.

The Frobenius acts trivially throughout (split group), so sigma-conjugation
is ordinary conjugation; functions that would twist by sigma simply do not
take a twist argument.
"""

from __future__ import annotations

import functools
import re
from typing import Iterable, NamedTuple, Sequence


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def compose(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    """Compose permutations right-to-left: (x y)(i) = x(y(i))."""
    return tuple(x[j] for j in y)


def inverse_perm(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, pi in enumerate(p):
        inv[pi] = i
    return tuple(inv)


def transposition(n: int, i: int, j: int) -> tuple[int, ...]:
    p = list(range(n))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def longest_perm(n: int) -> tuple[int, ...]:
    """The longest element of S_n (the order-reversing permutation)."""
    return tuple(range(n - 1, -1, -1))


def inversions(p: Sequence[int]) -> int:
    """Coxeter length of a permutation, i.e. its inversion count."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    """Cycle lengths in decreasing order."""
    n = len(p)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def is_n_cycle(p: Sequence[int]) -> bool:
    return cycle_type(p) == (len(p),)


def finite_supp(p: Sequence[int]) -> frozenset[int]:
    """
    Indices i in 1..n-1 such that s_i occurs in every reduced word of p.

    s_i is absent exactly when p preserves the prefix {0, ..., i-1} of
    positions, i.e. when p splits as a block permutation across the cut.
    """
    n = len(p)
    out = set()
    running = -1
    for i in range(1, n):
        running = max(running, p[i - 1])
        if running != i - 1:
            out.add(i)
    return frozenset(out)


def is_coxeter(p: Sequence[int]) -> bool:
    """
    Whether p is a Coxeter element of S_n: every reduced word uses each of the
    n-1 simple reflections exactly once, i.e. length n-1 with full support.
    """
    n = len(p)
    return inversions(p) == n - 1 and len(finite_supp(p)) == n - 1


def perm_on_cochar(p: Sequence[int], lam: Sequence[int]) -> tuple[int, ...]:
    """Permute positions: result[p[i]] = lam[i]."""
    out = [0] * len(p)
    for i, v in enumerate(lam):
        out[p[i]] = v
    return tuple(out)


def perm_word(p: Sequence[int]) -> tuple[int, ...]:
    """
    A reduced word (1-indexed simple-reflection indices) for a permutation,
    chosen by repeatedly taking the smallest left descent.
    """
    p = list(p)
    n = len(p)
    word = []
    # left descent i of p  <=>  i sits below i-1 in one-line position order,
    # i.e. index of value i-1 is greater than index of value i ... easiest is
    # to peel from the inverse, bubble-sort style.
    inv = list(inverse_perm(p))
    while True:
        for i in range(1, n):
            if inv[i - 1] > inv[i]:
                word.append(i)
                inv[i - 1], inv[i] = inv[i], inv[i - 1]
                break
        else:
            break
    return tuple(word)


def perm_from_word(n: int, word: Iterable[int]) -> tuple[int, ...]:
    p = identity_perm(n)
    for i in word:
        p = compose(p, transposition(n, i - 1, i))
    return p


# ---------------------------------------------------------------------------
# group elements
# ---------------------------------------------------------------------------

class AffineWeylElement(NamedTuple):
    trans: tuple[int, ...]
    perm: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.perm)


def identity(n: int) -> AffineWeylElement:
    return AffineWeylElement((0,) * n, identity_perm(n))


def from_translation(lam: Sequence[int]) -> AffineWeylElement:
    lam = tuple(lam)
    return AffineWeylElement(lam, identity_perm(len(lam)))


def from_perm(p: Sequence[int]) -> AffineWeylElement:
    p = tuple(p)
    return AffineWeylElement((0,) * len(p), p)


def simple_reflection(n: int, i: int) -> AffineWeylElement:
    """s_i for i in 0..n-1; s_0 is the affine one."""
    if i == 0:
        lam = [0] * n
        lam[0], lam[n - 1] = 1, -1
        return AffineWeylElement(tuple(lam), transposition(n, 0, n - 1))
    return from_perm(transposition(n, i - 1, i))


def tau(n: int, k: int = 1) -> AffineWeylElement:
    """tau^k, with tau = t^(e_1) . (i -> i+1 mod n)."""
    q, r = divmod(k, n)
    lam = [q + (1 if i < r else 0) for i in range(n)]
    p = tuple((i + k) % n for i in range(n))
    return AffineWeylElement(tuple(lam), p)


def mul(*ws: AffineWeylElement) -> AffineWeylElement:
    """Product of elements, left to right."""
    it = iter(ws)
    acc = next(it)
    for w in it:
        ta, pa = acc
        tb, pb = w
        t = list(ta)
        for i, v in enumerate(tb):
            t[pa[i]] += v
        acc = AffineWeylElement(tuple(t), tuple(pa[j] for j in pb))
    return acc


def inv(w: AffineWeylElement) -> AffineWeylElement:
    lam, p = w
    pinv = inverse_perm(p)
    return AffineWeylElement(tuple(-lam[p[i]] for i in range(len(p))), pinv)


def kappa(w: AffineWeylElement) -> int:
    """The Omega-component: w lies in W_a . tau^kappa(w)."""
    return sum(w.trans)


def act_on_cochar(w: AffineWeylElement, lam: Sequence[int]) -> tuple[int, ...]:
    """Affine action t^mu.p : lam -> mu + p.lam."""
    mu, p = w
    out = list(mu)
    for i, v in enumerate(lam):
        out[p[i]] += v
    return tuple(out)


def left_mul_simple(i: int, w: AffineWeylElement) -> AffineWeylElement:
    """s_i . w, in O(n)."""
    lam, p = w
    n = len(p)
    if i == 0:
        a, b = 0, n - 1
        t = list(lam)
        t[0], t[n - 1] = t[n - 1] + 1, t[0] - 1
    else:
        a, b = i - 1, i
        t = list(lam)
        t[a], t[b] = t[b], t[a]
    q = tuple(b if v == a else a if v == b else v for v in p)
    return AffineWeylElement(tuple(t), q)


def right_mul_simple(w: AffineWeylElement, i: int) -> AffineWeylElement:
    """w . s_i, in O(n)."""
    lam, p = w
    n = len(p)
    if i == 0:
        t = list(lam)
        t[p[0]] += 1
        t[p[n - 1]] -= 1
        q = list(p)
        q[0], q[n - 1] = q[n - 1], q[0]
    else:
        t = lam
        q = list(p)
        q[i - 1], q[i] = q[i], q[i - 1]
    return AffineWeylElement(tuple(t), tuple(q))


# ---------------------------------------------------------------------------
# length, reduced words, Bruhat order
# ---------------------------------------------------------------------------

def length(w: AffineWeylElement) -> int:
    """
    Length of t^lam . p, as the sum over positive roots chi_(i,j) of
    |<chi, p^-1 lam> + 1| when p chi < 0 and |<chi, p^-1 lam>| when p chi > 0.
    """
    lam, p = w
    n = len(p)
    lamp = [lam[p[i]] for i in range(n)]
    total = 0
    for i in range(n):
        li, pi = lamp[i], p[i]
        for j in range(i + 1, n):
            d = li - lamp[j]
            if pi > p[j]:
                d += 1
            total += d if d >= 0 else -d
    return total


def left_descents(w: AffineWeylElement) -> list[int]:
    lw = length(w)
    return [i for i in range(len(w.perm)) if length(left_mul_simple(i, w)) < lw]


def reduced_word(w: AffineWeylElement) -> tuple[tuple[int, ...], int]:
    """
    A reduced word for w: returns (letters, omega_power) with
    w = s_(letters[0]) ... s_(letters[-1]) . tau^omega_power.

    Ties between descents are broken by the smallest reflection index, which
    pins a canonical word for golden outputs; any descent choice is valid.
    """
    n = w.n
    k = kappa(w)
    u = mul(w, tau(n, -k))
    letters = []
    lu = length(u)
    while lu > 0:
        for i in range(n):
            v = left_mul_simple(i, u)
            lv = length(v)
            if lv < lu:
                letters.append(i)
                u, lu = v, lv
                break
        else:
            raise AssertionError(f"no descent at positive length: {u}")
    if u != identity(n):
        raise AssertionError(f"omega part did not cancel: {w}")
    return tuple(letters), k


def from_word(n: int, letters: Iterable[int], omega_power: int = 0) -> AffineWeylElement:
    w = identity(n)
    for i in letters:
        w = right_mul_simple(w, i)
    if omega_power:
        w = mul(w, tau(n, omega_power))
    return w


def subword_elements(n: int, letters: Sequence[int]) -> frozenset[AffineWeylElement]:
    """
    All products of subwords of `letters` (a word in the affine simple
    reflections).  When the word is reduced this is the lower Bruhat interval
    of the corresponding affine Weyl group element.
    """
    reached = {identity(n)}
    for i in letters:
        reached |= {right_mul_simple(x, i) for x in reached}
    return frozenset(reached)


def bruhat_lower_set(w: AffineWeylElement) -> frozenset[AffineWeylElement]:
    """All x <= w in Bruhat order (within the same Omega-coset)."""
    letters, k = reduced_word(w)
    n = w.n
    lower = subword_elements(n, letters)
    if k == 0:
        return lower
    tk = tau(n, k)
    return frozenset(mul(x, tk) for x in lower)


def bruhat_leq(x: AffineWeylElement, y: AffineWeylElement) -> bool:
    """
    Bruhat order on the extended group: comparable only within one
    Omega-coset, where the order is that of the affine Weyl group.

    Uses the lifting property: for a left descent s of y,
    x <= y  iff  (sx <= sy if sx < x else x <= sy).
    """
    if kappa(x) != kappa(y):
        return False
    n = x.n
    k = kappa(x)
    tk = tau(n, -k)
    x = mul(x, tk)
    y = mul(y, tk)
    lx = length(x)
    ly = length(y)
    while True:
        if lx > ly:
            return False
        if lx == 0:
            return True
        if x == y:
            return True
        for i in range(n):
            y1 = left_mul_simple(i, y)
            ly1 = length(y1)
            if ly1 < ly:
                break
        else:  # pragma: no cover - y has positive length, so a descent exists
            raise AssertionError("no descent found")
        y, ly = y1, ly1
        x1 = left_mul_simple(i, x)
        lx1 = length(x1)
        if lx1 < lx:
            x, lx = x1, lx1


# ---------------------------------------------------------------------------
# supports, tau-rotation, the duality automorphism
# ---------------------------------------------------------------------------

def supp(w: AffineWeylElement) -> frozenset[int]:
    """Simple affine reflections occurring in any reduced word of the W_a part."""
    letters, _ = reduced_word(w)
    return frozenset(letters)


def supp_sigma(w: AffineWeylElement) -> frozenset[int]:
    """
    The smallest subset of {0..n-1} containing supp of the W_a part of w and
    stable under the index rotation i -> i + kappa(w) coming from conjugation
    by the Omega-part.  (The Frobenius itself acts trivially here.)
    """
    n = w.n
    k = kappa(w) % n
    letters, _ = reduced_word(mul(w, tau(n, -kappa(w))))
    closed = set(letters)
    frontier = list(closed)
    while frontier:
        i = frontier.pop()
        j = (i + k) % n
        if j not in closed:
            closed.add(j)
            frontier.append(j)
    return frozenset(closed)


def conjugate_by_tau(w: AffineWeylElement, k: int = 1) -> AffineWeylElement:
    n = w.n
    return mul(tau(n, k), w, tau(n, -k))


def varsigma(w: AffineWeylElement) -> AffineWeylElement:
    """
    The length-preserving automorphism fixing s_0 and swapping s_i with
    s_(n-i): on t^lam . p it returns t^(-w_max lam) . (w_max p w_max).
    """
    lam, p = w
    n = len(p)
    wmax = longest_perm(n)
    new_lam = tuple(-lam[n - 1 - i] for i in range(n))
    return AffineWeylElement(new_lam, compose(wmax, compose(p, wmax)))


# ---------------------------------------------------------------------------
# cocharacter helpers
# ---------------------------------------------------------------------------

def is_dominant(lam: Sequence[int]) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def dominant_sort(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(lam, reverse=True))


def antidominant_sort(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(lam))


def coroot(n: int, i: int, j: int) -> tuple[int, ...]:
    """chi^vee_(i,j) = e_i - e_j with 1-indexed i, j."""
    lam = [0] * n
    lam[i - 1] += 1
    lam[j - 1] -= 1
    return tuple(lam)


def omega(n: int, k: int) -> tuple[int, ...]:
    """The coweight (1,...,1,0,...,0) with k ones."""
    return tuple(1 if i < k else 0 for i in range(n))


def two_rho_pairing(lam: Sequence[int]) -> int:
    """<lam, 2 rho> = sum_i lam[i] * (n - 1 - 2i) with 0-indexed i."""
    n = len(lam)
    return sum(v * (n - 1 - 2 * i) for i, v in enumerate(lam))


def dominance_leq(a: Sequence, b: Sequence) -> bool:
    """a <= b in dominance order: equal sums, partial sums of a below b's."""
    if len(a) != len(b):
        raise ValueError("length mismatch")
    sa = sb = 0
    for i in range(len(a)):
        sa += a[i]
        sb += b[i]
        if sa > sb:
            return False
    return sa == sb


# ---------------------------------------------------------------------------
# text encoding
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"t\[([^\]]*)\]|p\[([^\]]*)\]|s(\d+)|tau(?:\^(-?\d+))?")


def encode_element(w: AffineWeylElement) -> str:
    """Canonical text form t[lam1,...,lamn]*p[p(1),...,p(n)] (1-indexed images)."""
    lam, p = w
    ts = ",".join(str(v) for v in lam)
    ps = ",".join(str(v + 1) for v in p)
    return f"t[{ts}]*p[{ps}]"


def parse_element(text: str, n: int) -> AffineWeylElement:
    """
    Parse a '*'-separated product of tokens: t[...], p[...] (1-indexed
    images), s0..s(n-1), tau, tau^k.  Round-trips with encode_element.
    """
    pos = 0
    acc = identity(n)
    stripped = text.replace(" ", "")
    while pos < len(stripped):
        if stripped[pos] == "*":
            pos += 1
            continue
        msearch = _TOKEN.match(stripped, pos)
        if not msearch:
            raise ValueError(f"cannot parse element at {stripped[pos:]!r}")
        tvals, pvals, sidx, taupow = msearch.groups()
        if tvals is not None:
            lam = tuple(int(v) for v in tvals.split(",")) if tvals else ()
            if len(lam) != n:
                raise ValueError(f"translation needs {n} entries: {tvals!r}")
            acc = mul(acc, from_translation(lam))
        elif pvals is not None:
            imgs = tuple(int(v) - 1 for v in pvals.split(",")) if pvals else ()
            if sorted(imgs) != list(range(n)):
                raise ValueError(f"not a permutation of 1..{n}: {pvals!r}")
            acc = mul(acc, from_perm(imgs))
        elif sidx is not None:
            i = int(sidx)
            if not 0 <= i < n:
                raise ValueError(f"reflection index out of range: s{i}")
            acc = mul(acc, simple_reflection(n, i))
        else:
            acc = mul(acc, tau(n, int(taupow) if taupow is not None else 1))
        pos = msearch.end()
    return acc


@functools.lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[tuple[int, ...], ...]:
    import itertools

    return tuple(itertools.permutations(range(n)))
