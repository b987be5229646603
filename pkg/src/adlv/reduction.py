"""
Conjugation-reduction of affine Weyl group elements and class polynomials.

An element that is not of minimal length in its conjugacy class can always be
carried, by a chain of length-preserving conjugations by simple reflections,
to some w' admitting s with length(s w' s) = length(w') - 2.  A reduction
tree branches at each such step into s w' (a type I edge, length drop 1) and
s w' s (type II, drop 2) and recurses; its end points are minimal length in
their class.  Summing (q-1)^(#type I) q^(#type II) over the paths that end at
tau^m gives the class polynomial of (w, tau^m); its top-degree data recover
stratum dimension and component counts.

Trees are not unique: exploration order is seeded, and the polynomial's
independence of the seed is a checkable invariant.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass

from . import weyl as W
from .weyl import AffineWeylElement


@dataclass(frozen=True)
class ReductionEdge:
    src: AffineWeylElement
    dst: AffineWeylElement
    kind: int                       # 1 or 2
    s: int                          # the reflection applied
    chain: tuple[int, ...]          # conjugators carrying src to the pivot


@dataclass(frozen=True)
class ReductionTree:
    root: AffineWeylElement
    edges: tuple[ReductionEdge, ...]
    end_points: frozenset[AffineWeylElement]


@dataclass(frozen=True)
class ClassPolynomial:
    w: AffineWeylElement
    m: int
    path_profile: tuple[tuple[tuple[int, int], int], ...]  # ((lI, lII), count)
    coefficients: tuple[int, ...]                          # in q, ascending

    @property
    def dim_from_tree(self) -> int | None:
        profile = dict(self.path_profile)
        return max((a + b for a, b in profile), default=None)

    @property
    def top_components(self) -> int:
        d = self.dim_from_tree
        if d is None:
            return 0
        return sum(c for (a, b), c in self.path_profile if a + b == d)

    def evaluate(self, q: int) -> int:
        return sum(c * (q - 1) ** a * q ** b for (a, b), c in self.path_profile)


def find_reduction_step(w: AffineWeylElement, rng: random.Random | None = None
                        ) -> tuple[AffineWeylElement, int, tuple[int, ...]] | None:
    """
    Search the orbit of w under length-preserving conjugation for a pivot w'
    and s with length(s w' s) = length(w') - 2; returns (w', s, chain) where
    chain conjugates w to w' one reflection at a time.  None when w is of
    minimal length in its class (no such pivot exists in the whole orbit).
    """
    n = w.n
    lw = W.length(w)
    order = list(range(n))
    if rng is not None:
        rng.shuffle(order)
    seen = {w: ()}
    queue = [w]
    while queue:
        if rng is not None:
            idx = rng.randrange(len(queue))
            queue[idx], queue[-1] = queue[-1], queue[idx]
        z = queue.pop()
        chain = seen[z]
        for s in order:
            zs = W.left_mul_simple(s, z)
            zss = W.right_mul_simple(zs, s)
            lz = W.length(zss)
            if lz == lw - 2:
                return z, s, chain
            if lz == lw and zss not in seen:
                seen[zss] = chain + (s,)
                queue.append(zss)
    return None


def build_tree(w: AffineWeylElement, seed: int | None = None) -> ReductionTree:
    """
    A reduction tree of w, exploring deterministically unless seeded.  The
    subtrees of repeated elements are shared, so edges form a DAG whose paths
    from the root are exactly the reduction paths.
    """
    rng = random.Random(seed) if seed is not None else None
    edges: list[ReductionEdge] = []
    ends: set[AffineWeylElement] = set()
    expanded: set[AffineWeylElement] = set()

    def expand(z: AffineWeylElement):
        if z in expanded:
            return
        expanded.add(z)
        step = find_reduction_step(z, rng)
        if step is None:
            ends.add(z)
            return
        pivot, s, chain = step
        child1 = W.left_mul_simple(s, pivot)
        child2 = W.right_mul_simple(child1, s)
        edges.append(ReductionEdge(z, child1, 1, s, chain))
        edges.append(ReductionEdge(z, child2, 2, s, chain))
        expand(child1)
        expand(child2)

    expand(w)
    return ReductionTree(root=w, edges=tuple(edges), end_points=frozenset(ends))


def path_profiles(tree: ReductionTree) -> dict[AffineWeylElement, dict[tuple[int, int], int]]:
    """Per end point, the multiset of (type I, type II) counts over paths."""
    children: dict[AffineWeylElement, list[ReductionEdge]] = {}
    for e in tree.edges:
        children.setdefault(e.src, []).append(e)

    @functools.lru_cache(maxsize=None)
    def profile(z: AffineWeylElement) -> tuple[tuple[AffineWeylElement, int, int, int], ...]:
        if z not in children:
            return ((z, 0, 0, 1),)
        out: dict[tuple[AffineWeylElement, int, int], int] = {}
        for e in children[z]:
            for end, a, b, c in profile(e.dst):
                key = (end, a + (e.kind == 1), b + (e.kind == 2))
                out[key] = out.get(key, 0) + c
        return tuple((end, a, b, c) for (end, a, b), c in sorted(out.items()))

    result: dict[AffineWeylElement, dict[tuple[int, int], int]] = {}
    for end, a, b, c in profile(tree.root):
        result.setdefault(end, {})[(a, b)] = c
    profile.cache_clear()
    return result


def class_polynomial(w: AffineWeylElement, m: int,
                     seed: int | None = None) -> ClassPolynomial:
    """
    The class polynomial of (w, tau^m): the path profile over reduction paths
    ending at tau^m (the unique minimal-length class mapping to the
    superbasic element), and its expansion in powers of q.
    """
    import math

    n = w.n
    if math.gcd(m, n) != 1:
        raise ValueError("m must be coprime to n")
    tree = build_tree(w, seed)
    target = W.tau(n, m)
    for end in tree.end_points:
        if end != target and W.kappa(end) == m and W.length(end) == 0:
            raise AssertionError("another length-zero end point in the coset")
    byend = path_profiles(tree)
    profile = byend.get(target, {})
    lw = W.length(w)
    for (a, b), _ in profile.items():
        if a + 2 * b != lw:
            raise AssertionError("path lengths do not telescope")
    coeffs = [0]
    for (a, b), c in profile.items():
        term = _poly_scale(_poly_mul(_qminus1_pow(a), _q_pow(b)), c)
        coeffs = _poly_add(coeffs, term)
    return ClassPolynomial(
        w=w, m=m,
        path_profile=tuple(sorted(profile.items())),
        coefficients=_poly_trim(coeffs),
    )


def tree_invariance_check(w: AffineWeylElement, m: int, trials: int,
                          seed: int = 0) -> bool:
    """Class polynomial independence of randomized tree construction."""
    if trials < 2:
        raise ValueError("need at least two trials")
    polys = {class_polynomial(w, m, seed=seed + t).coefficients
             for t in range(trials)}
    return len(polys) == 1


# polynomial helpers (coefficient lists in q, ascending degree)

def _poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return out


def _poly_scale(a: list[int], c: int) -> list[int]:
    return [c * v for v in a]


def _q_pow(k: int) -> list[int]:
    return [0] * k + [1]


def _qminus1_pow(k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = _poly_mul(out, [-1, 1])
    return out


def _poly_trim(a: list[int]) -> tuple[int, ...]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_str(coeffs: tuple[int, ...]) -> str:
    if not any(coeffs):
        return "0"
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}q" if c != 1 else "q")
        else:
            parts.append(f"{c}q^{i}" if c != 1 else f"q^{i}")
    return " + ".join(parts)
