"""
Semi-modules and extended semi-modules for a pair of coprime integers (m, n).

A semi-module is a subset A of Z, bounded below, with m + A and n + A inside
A.  It is the union over residue classes r mod n of arithmetic progressions
abar_r + nN, so it is determined by the n class minima Abar = A \\ (n + A).
A is normalized when Abar sums to n(n-1)/2; writing abar_(i-1 mod n) =
(i-1) + lam(i) n defines the lambda-vector, and normalization means
sum(lam) = 0.  The type of A is the vector mu' with a_i = a_(i-1) + m -
mu'(i) n walking the m-step cycle on Abar from its minimum.

An extended semi-module for a dominant mu in N^n with sum(mu) = m (the
normalization mu(n) = 0 is conventional, not required) adds a multiplicity
function phi: A -> N with
  (1) phi = -infinity off A,
  (2) phi(a + n) >= phi(a) + 1,
  (3) phi(a) <= maxk(a) := max{k : a + m - k n in A}, with equality as soon
      as [a, oo) is contained in A (i.e. past the conductor), and
  (4) A decomposes into n disjoint increasing chains along which phi steps
      by one, a chain moving to a + n exactly when phi(a + n) = phi(a) + 1
      and otherwise jumping past it, with chain-start values a permutation
      of mu.
The pair is cyclic when (3) is an equality everywhere; equivalently the type
of A is a rearrangement of mu.  The dimension of the stratum attached to
(A, phi) is the size of

    V(A, phi) = {(a, c) : c > a, phi(a) > phi(c) > phi(a - n)}.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import weyl as W


# ---------------------------------------------------------------------------
# semi-modules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SemiModule:
    m: int
    n: int
    lam: tuple[int, ...]            # lambda-vector; abar contains (i-1) + lam[i-1]*n
    abar: tuple[int, ...]           # sorted class minima
    class_min: tuple[int, ...]      # class_min[r] = min of A in residue r
    conductor: int                  # least a with [a, oo) contained in A

    def contains(self, a: int) -> bool:
        return a >= self.class_min[a % self.n]

    def maxk(self, a: int) -> int:
        """max{k : a + m - k n in A}; requires a in A."""
        t = a + self.m
        return (t - self.class_min[t % self.n]) // self.n

    def elements(self, lo: int, hi: int) -> list[int]:
        """Elements of A in [lo, hi)."""
        return [a for a in range(lo, hi) if a >= self.class_min[a % self.n]]


def from_lambda(lam: tuple[int, ...], m: int) -> SemiModule:
    """
    The semi-module with Abar = {(i-1) + lam(i) n}.  Requires sum(lam) = 0
    (normalization) and stability under +m, which is a genuine condition.
    """
    n = len(lam)
    if sum(lam) != 0:
        raise ValueError(f"lambda must sum to 0, got {lam}")
    sm = _assemble(m, n, tuple(lam))
    if sm is None:
        raise ValueError(f"A^lambda is not stable under +{m}: {lam}")
    return sm


def _assemble(m: int, n: int, lam: tuple[int, ...]) -> SemiModule | None:
    class_min = [0] * n
    for i in range(n):
        a = i + lam[i] * n
        class_min[a % n] = a
    abar = tuple(sorted(class_min))
    # +n stability is built in; check +m stability on the class minima.
    for a in abar:
        t = a + m
        if t < class_min[t % n]:
            return None
    conductor = abar[-1] - n + 1
    return SemiModule(m=m, n=n, lam=tuple(lam), abar=abar,
                      class_min=tuple(class_min), conductor=conductor)


def lambda_of_abar(abar: tuple[int, ...], n: int) -> tuple[int, ...]:
    lam = [0] * n
    for a in abar:
        r = a % n
        lam[r] = (a - r) // n
    return tuple(lam)


def type_of(sm: SemiModule) -> tuple[int, ...]:
    """
    The type mu' of A: walk a_i = a_(i-1) + m - mu'(i) n around Abar starting
    from its minimum; the steps mu'(i) are the type.
    """
    m, n = sm.m, sm.n
    abar_set = set(sm.abar)
    a = sm.abar[0]
    mu = []
    seen = [a]
    for _ in range(n):
        t = a + m
        k = 0
        while t not in abar_set:
            t -= n
            k += 1
        mu.append(k)
        a = t
        seen.append(a)
    if a != sm.abar[0] or set(seen[:-1]) != abar_set:
        raise AssertionError(f"type walk did not close up on {sm.abar}")
    return tuple(mu)


def type_closed_form(sm: SemiModule) -> tuple[int, ...]:
    """
    c^m lam + lam_b_dom - lam, a rearrangement of the type (c the standard
    n-cycle).  Kept as an independent cross-check of type_of.
    """
    m, n = sm.m, sm.n
    lam = sm.lam
    cm = tuple((i + m) % n for i in range(n))
    clam = W.perm_on_cochar(cm, lam)
    lbd = dominant_lambda_b(m, n)
    return tuple(clam[i] + lbd[i] - lam[i] for i in range(n))


def nu_b(m: int, n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(m, n) for _ in range(n))


def lambda_b(m: int, n: int) -> tuple[int, ...]:
    """Entries floor(i m / n) - floor((i-1) m / n)."""
    return tuple((i * m) // n - ((i - 1) * m) // n for i in range(1, n + 1))


def dominant_lambda_b(m: int, n: int) -> tuple[int, ...]:
    return W.dominant_sort(lambda_b(m, n))


def valid_type(mu_prime: tuple[int, ...], m: int, n: int) -> SemiModule | None:
    """
    Reconstruct the normalized semi-module of a candidate type, or None.
    A candidate is a vector in N^n summing to m; it is realized exactly when
    the reversed vector dominates the slope vector (m/n, ..., m/n), which is
    re-verified here structurally rather than assumed.
    """
    if len(mu_prime) != n or sum(mu_prime) != m or any(v < 0 for v in mu_prime):
        return None
    # partial sums of the walk relative to a_0
    offsets = [0]
    for v in mu_prime[:-1]:
        offsets.append(offsets[-1] + m - v * n)
    total = sum(offsets)
    num = n * (n - 1) // 2 - total
    if num % n != 0:
        return None
    a0 = num // n
    abar = [a0 + off for off in offsets]
    if len({a % n for a in abar}) != n or min(abar) != a0:
        return None
    lam = lambda_of_abar(tuple(sorted(abar)), n)
    sm = _assemble(m, n, lam)
    if sm is None:
        return None
    if type_of(sm) != tuple(mu_prime):
        return None
    return sm


def enumerate_semimodules(m: int, n: int) -> tuple[SemiModule, ...]:
    """
    All normalized semi-modules for (m, n), indexed by their types: vectors
    in N^n summing to m whose reversal dominates (m/n, ..., m/n).
    """
    import math

    if math.gcd(m, n) != 1:
        raise ValueError(f"m and n must be coprime: {m}, {n}")
    out = []
    slope = nu_b(m, n)
    for mu_prime in _compositions(m, n):
        if not W.dominance_leq(slope, tuple(reversed(mu_prime))):
            continue
        sm = valid_type(mu_prime, m, n)
        if sm is None:
            raise AssertionError(f"dominated type failed to assemble: {mu_prime}")
        out.append(sm)
    return tuple(sorted(out, key=lambda s: s.lam))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


# ---------------------------------------------------------------------------
# extended semi-modules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtendedSemiModule:
    base: SemiModule
    mu: tuple[int, ...]
    phi_free: tuple[tuple[int, int], ...]   # (a, phi(a)) for a in A below the conductor

    @functools.cached_property
    def _free(self) -> dict[int, int]:
        return dict(self.phi_free)

    def phi(self, a: int) -> int | None:
        """phi(a), or None off A (standing in for -infinity)."""
        base = self.base
        if not base.contains(a):
            return None
        if a >= base.conductor:
            return base.maxk(a)
        return self._free[a]

    @functools.cached_property
    def is_cyclic(self) -> bool:
        return all(v == self.base.maxk(a) for a, v in self.phi_free)

    @functools.cached_property
    def dim(self) -> int:
        return len(v_set(self))

    def phi_window(self, scale: int = 1) -> tuple[tuple[int, int], ...]:
        """phi tabulated on the standard reporting window."""
        base = self.base
        hi = _window_end(self, scale)
        return tuple((a, self.phi(a)) for a in base.elements(base.abar[0], hi))


def _window_end(ext: ExtendedSemiModule, scale: int = 1) -> int:
    base = ext.base
    top = max([v for _, v in ext.phi_free] + [base.maxk(c) for c in _tail_starts(base)]
              + [max(ext.mu)])
    return base.conductor + base.n * (top + 2) * scale


def _tail_starts(base: SemiModule) -> list[int]:
    """Per residue class, the least element >= conductor."""
    c = base.conductor
    out = []
    for r in range(base.n):
        a = base.class_min[r]
        if a < c:
            a += ((c - a + base.n - 1) // base.n) * base.n
        out.append(a)
    return out


def cyclic_phi(sm: SemiModule, mu: tuple[int, ...]) -> ExtendedSemiModule | None:
    """
    The unique cyclic extension of A for mu, present exactly when the type of
    A is a rearrangement of mu; phi is then maxk everywhere.
    """
    if sorted(type_of(sm), reverse=True) != list(W.dominant_sort(mu)):
        return None
    free = tuple((a, sm.maxk(a))
                 for a in sm.elements(sm.abar[0], sm.conductor))
    ext = ExtendedSemiModule(base=sm, mu=tuple(mu), phi_free=free)
    if not verify_extended(ext):
        raise AssertionError(f"cyclic pair failed verification: {sm.lam}")
    return ext


def enumerate_extended(mu: tuple[int, ...], n: int | None = None,
                       window_scale: int = 1) -> tuple[ExtendedSemiModule, ...]:
    """
    All extended semi-modules for a dominant nonnegative mu with total
    coprime to n, one per normalized semi-module and admissible phi.
    Deterministic order: (dim, lambda, phi).
    """
    import math

    mu = tuple(mu)
    n = len(mu) if n is None else n
    if len(mu) != n:
        raise ValueError("mu must have n entries")
    if not W.is_dominant(mu) or mu[-1] < 0:
        raise ValueError(f"mu must be dominant with nonnegative entries: {mu}")
    m = sum(mu)
    if math.gcd(m, n) != 1:
        raise ValueError(f"sum(mu) must be coprime to n: {mu}")
    out = []
    cap = mu[0]
    for mu_prime in itertools.product(range(cap + 1), repeat=n):
        if sum(mu_prime) != m:
            continue
        if not W.dominance_leq(W.dominant_sort(mu_prime), mu):
            continue
        sm = valid_type(mu_prime, m, n)
        if sm is None:
            continue
        for free in _phi_assignments(sm, mu):
            ext = ExtendedSemiModule(base=sm, mu=mu, phi_free=free)
            if _chains_exist(ext):
                if not verify_extended(ext, scale=window_scale):
                    raise AssertionError(
                        f"generator/checker disagreement at {sm.lam}, {free}")
                out.append(ext)
    return tuple(sorted(out, key=lambda e: (e.dim, e.base.lam, e.phi_free)))


def _phi_assignments(sm: SemiModule, mu: tuple[int, ...]):
    """
    Level-by-level enumeration of phi on the free region (below the
    conductor), subject to the cap phi(a) <= maxk(a), strict increase along
    each residue class, and the forced level-set sizes #{phi = f} =
    #{i : mu(i) <= f} coming from the chain decomposition.
    """
    n = sm.n
    tail = _tail_starts(sm)
    base_val = [sm.maxk(t) for t in tail]
    # free elements per class, ascending; caps ascend with them
    freeby = []
    for r in range(n):
        els = []
        a = sm.class_min[r]
        while a < sm.conductor:
            els.append(a)
            a += n
        freeby.append(els)
    total_free = sum(len(e) for e in freeby)
    fmax = max(base_val + [max(mu)])

    need = []
    for f in range(fmax + 1):
        target = sum(1 for v in mu if v <= f)
        forced = sum(1 for b in base_val if b <= f)
        d = target - forced
        if d < 0:
            return
        need.append(d)
    if sum(need) != total_free:
        return

    # state: per class, index of next unassigned element
    nxt = [0] * n
    chosen: list[tuple[int, int]] = []

    def eligible(r: int, f: int) -> bool:
        i = nxt[r]
        return i < len(freeby[r]) and sm.maxk(freeby[r][i]) >= f

    def dead(f: int) -> bool:
        # an unassigned element whose cap has already passed can never be hit
        for r in range(n):
            i = nxt[r]
            if i < len(freeby[r]) and sm.maxk(freeby[r][i]) < f:
                return True
        return False

    def rec(f: int):
        if f > fmax:
            if all(nxt[r] == len(freeby[r]) for r in range(n)):
                yield tuple(sorted(chosen))
            return
        if dead(f):
            return
        classes = [r for r in range(n) if eligible(r, f)]
        for pick in itertools.combinations(classes, need[f]):
            for r in pick:
                chosen.append((freeby[r][nxt[r]], f))
                nxt[r] += 1
            yield from rec(f + 1)
            for r in pick:
                nxt[r] -= 1
                chosen.pop()

    yield from rec(0)


def _chains_exist(ext: ExtendedSemiModule) -> bool:
    """
    Whether the chain decomposition (condition (4)) exists: per level, the
    elements needing a jump must match injectively into the elements with no
    forced predecessor one level up, and the leftovers (the chain starts)
    must realize mu.  Levels are independent, so we match level by level.
    """
    base = ext.base
    n = base.n
    mu = ext.mu
    free = dict(ext.phi_free)
    tail = _tail_starts(base)
    base_val = [base.maxk(t) for t in tail]

    def phi(a: int) -> int:
        if a >= base.conductor:
            return base.maxk(a)
        return free[a]

    # jumping elements, grouped by their value
    jumps: dict[int, list[int]] = {}
    for a, v in ext.phi_free:
        if phi(a + n) > v + 1:
            jumps.setdefault(v, []).append(a)

    # elements with no forced predecessor, grouped by value:
    # class minima, and free/tail elements whose predecessor's value is lower
    loose: dict[int, list[int]] = {}
    for r in range(n):
        a0 = base.class_min[r]
        loose.setdefault(phi(a0), []).append(a0)
    for a, v in ext.phi_free:
        if phi(a + n) != v + 1:
            loose.setdefault(phi(a + n), []).append(a + n)

    # chain starts are the loose elements not consumed as jump targets;
    # their value multiset is forced by counting.
    start_count: dict[int, int] = {}
    for v, els in loose.items():
        start_count[v] = len(els)
    for v, js in jumps.items():
        start_count[v + 1] = start_count.get(v + 1, 0) - len(js)
    mu_count: dict[int, int] = {}
    for v in mu:
        mu_count[v] = mu_count.get(v, 0) + 1
    if {k: v for k, v in start_count.items() if v} != mu_count:
        return False

    # per level: injective matching of jumps at value v into loose elements
    # at value v+1 strictly beyond a + n
    for v, js in jumps.items():
        targets = loose.get(v + 1, [])
        if not _match(sorted(js, reverse=True), sorted(targets), n):
            return False
    return True


def _match(jumps: list[int], targets: list[int], n: int) -> bool:
    def rec(i: int, used: set[int]) -> bool:
        if i == len(jumps):
            return True
        a = jumps[i]
        for t in targets:
            if t in used or t <= a + n:
                continue
            used.add(t)
            if rec(i + 1, used):
                return True
            used.discard(t)
        return False

    return rec(0, set())


def verify_extended(ext: ExtendedSemiModule, scale: int = 1) -> bool:
    """
    Re-check conditions (1)-(4) on a finite window, independently of the
    enumerator: (2) and (3) pointwise, and (4) by explicitly building a chain
    decomposition by backtracking over the window.
    """
    base = ext.base
    n = base.n
    hi = _window_end(ext, scale)
    window = base.elements(base.abar[0], hi)
    phi = {a: ext.phi(a) for a in window}

    for a in window:
        v = phi[a]
        if v is None or v < 0:
            return False
        up = ext.phi(a + n)
        if up is None or up < v + 1:
            return False
        if v > base.maxk(a):
            return False
        if a >= base.conductor and v != base.maxk(a):
            return False

    mu_sorted = sorted(ext.mu)

    # chains: list of (last element, value); process window ascending
    def rec(idx: int, chains: list[tuple[int, int]], starts: list[int]) -> bool:
        if idx == len(window):
            if sorted(starts) != mu_sorted:
                return False
            # every open chain must continue forced (by +n steps) forever
            return all(ext.phi(a + n) == v + 1 for a, v in chains)
        a = window[idx]
        v = phi[a]
        # a chain whose last element is a - n and whose phi steps by one is
        # forced onto a: no other placement of a is legal
        for i, (last, lv) in enumerate(chains):
            if last + n == a and lv + 1 == v:
                chains[i] = (a, v)
                if rec(idx + 1, chains, starts):
                    return True
                chains[i] = (last, lv)
                return False
        # otherwise: a extends some jumping chain, or opens a new one
        for i, (last, lv) in enumerate(chains):
            if lv + 1 == v and a > last + n and ext.phi(last + n) != lv + 1:
                chains[i] = (a, v)
                if rec(idx + 1, chains, starts):
                    return True
                chains[i] = (last, lv)
        if len(chains) < n and v in _remaining(mu_sorted, starts):
            chains.append((a, v))
            starts.append(v)
            if rec(idx + 1, chains, starts):
                return True
            chains.pop()
            starts.pop()
        return False

    return rec(0, [], [])


def _remaining(mu_sorted: list[int], starts: list[int]) -> set[int]:
    pool = list(mu_sorted)
    for s in starts:
        if s in pool:
            pool.remove(s)
        else:
            return set()
    return set(pool)


# ---------------------------------------------------------------------------
# the pair set V(A, phi) and dimensions
# ---------------------------------------------------------------------------

def v_set(ext: ExtendedSemiModule) -> frozenset[tuple[int, int]]:
    """
    {(a, c) : c > a, phi(a) > phi(c) > phi(a - n)}.  Finite: past the
    conductor phi steps by exactly one along each class, so a is confined to
    a window and c to the elements of bounded value; we also assert that one
    extra period contributes nothing.
    """
    base = ext.base
    n = base.n
    lo = base.abar[0]
    a_hi = base.conductor + n
    a_window = base.elements(lo, a_hi + n)
    top = max(ext.phi(a) for a in a_window)

    by_value: dict[int, list[int]] = {}
    for r in range(n):
        a = base.class_min[r]
        while True:
            v = ext.phi(a)
            if v >= top:
                break
            by_value.setdefault(v, []).append(a)
            a += n

    pairs = set()
    for a in a_window:
        va = ext.phi(a)
        below = ext.phi(a - n)
        floor = below if below is not None else -1
        found = [(a, c) for v in range(floor + 1, va)
                 for c in by_value.get(v, ()) if c > a]
        if a >= a_hi and found:
            raise AssertionError("pair found beyond the stable window")
        pairs.update(found)
    return frozenset(pairs)


def dualize(mu: tuple[int, ...], lam: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    The dual datum: mu* = (mu(1), mu(1)-mu(n-1), ..., mu(1)-mu(2), 0) and
    lam* = -w_max lam.  Extended semi-modules for (mu, lam) biject with those
    for (mu*, lam*), preserving cyclicity.
    """
    n = len(mu)
    d = mu[0]
    mu_star = (d,) + tuple(d - mu[n - i] for i in range(2, n)) + (0,)
    lam_star = tuple(-lam[n - 1 - i] for i in range(n))
    return mu_star, lam_star


def dim_x_mu(mu: tuple[int, ...], n: int | None = None) -> int:
    """
    <rho, mu - nu_b> - (n-1)/2 with the defect of a superbasic element being
    n - 1.  The slope term vanishes against rho, leaving <rho, mu> - (n-1)/2;
    integrality is asserted rather than assumed.
    """
    import math

    n = len(mu) if n is None else n
    m = sum(mu)
    if math.gcd(m, n) != 1:
        raise ValueError("sum(mu) must be coprime to n")
    num = W.two_rho_pairing(mu) - (n - 1)
    if num % 2 != 0:
        raise AssertionError(f"dimension is not an integer for {mu}")
    return num // 2
