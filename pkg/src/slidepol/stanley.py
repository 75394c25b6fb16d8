"""Stanley decompositions and exact Stanley depth.

The Stanley depth of an ideal or quotient is computed on its
characteristic poset: the multidegrees below the join of the generators
that carry the module.  Interval partitions of that finite poset encode
Stanley decompositions (interval [b, c] gives the space with generator
degree b, free on the variables where c reaches the join), so the depth
is the best min free-set size over all partitions, found by binary search
on the answer with a memoized backtracking cover search.

Every decomposition produced here can be re-checked against the defining
direct-sum condition with :func:`validate_decomposition`, which counts
covering spaces degree by degree over a finite box that suffices because
both the module and the spaces are determined below the join.

The push/pull constructions transfer a decomposition across a slide in
either direction without changing the minimum free-set size; pushing
duplicates exactly the spaces whose degree sits at the threshold layer
without the slide axis free, and pulling drops that class again.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    CapExceededError,
    Vec,
    contains,
    lcm_join,
    unit_vec,
    vadd,
    vleq,
    zero_vec,
)
from .functors import contract_ideal, point_map, slide_ideal
from .homalg import ModuleDesc

DEFAULT_POSET_CAP = 4096


@dataclass(frozen=True)
class StanleySpace:
    """A free summand: generator degree plus the set of free variables (1-based)."""

    degree: Vec
    free: frozenset[int]


@dataclass(frozen=True)
class StanleyDecomposition:
    module: ModuleDesc
    spaces: tuple[StanleySpace, ...]

    def sdepth(self) -> int:
        """Min free-set size over the spaces."""
        return min(len(s.free) for s in self.spaces)


@dataclass(frozen=True)
class CharPoset:
    """Finite model of the module: its supported degrees below g."""

    g: Vec
    points: tuple[Vec, ...]


def _supported(module: ModuleDesc, c: Vec) -> bool:
    if module.shape == "quotient":
        return not contains(module.ideal, c)
    return contains(module.ideal, c)


def _det_vector(module: ModuleDesc) -> Vec:
    ideal = module.ideal
    return zero_vec(ideal.ring.n) if ideal.is_zero else lcm_join(ideal)


def char_poset(module: ModuleDesc, g: Vec | None = None, poset_cap: int = DEFAULT_POSET_CAP) -> CharPoset:
    """Supported degrees in the box [0, g], g defaulting to the lcm join."""
    base = _det_vector(module)
    if g is None:
        g = base
    elif not vleq(base, g):
        raise ValueError("determining vector must dominate the lcm join")
    size = 1
    for e in g:
        size *= e + 1
    if size > poset_cap:
        raise CapExceededError(f"characteristic poset size {size} exceeds cap {poset_cap}")
    pts = tuple(
        c
        for c in itertools.product(*(range(e + 1) for e in g))
        if _supported(module, c)
    )
    return CharPoset(g, pts)


def validate_decomposition(D: StanleyDecomposition) -> tuple[bool, Vec | None]:
    """Exact cover check over the box [0, g+1].

    Every degree must be covered by exactly as many spaces as the module's
    vector space dimension there (one or zero).  On failure the first bad
    degree is returned.
    """
    ideal = D.module.ideal
    n = ideal.ring.n
    g = _det_vector(D.module)
    for c in itertools.product(*(range(e + 2) for e in g)):
        expected = 1 if _supported(D.module, c) else 0
        cover = 0
        for s in D.spaces:
            if vleq(s.degree, c) and all(
                c[k] == s.degree[k] for k in range(n) if k + 1 not in s.free
            ):
                cover += 1
        if cover != expected:
            return False, c
    return True, None


# ---------------------------------------------------------------------------
# exact Stanley depth


def sdepth_exact(
    module: ModuleDesc, g: Vec | None = None, poset_cap: int = DEFAULT_POSET_CAP
) -> tuple[int, StanleyDecomposition]:
    """Exact Stanley depth together with a witness decomposition.

    Binary search on the answer k; for each k a backtracking search looks
    for an interval partition of the characteristic poset whose interval
    tops all touch the join in at least k coordinates.  The witness always
    passes :func:`validate_decomposition`.
    """
    poset = char_poset(module, g, poset_cap)
    gvec = poset.g
    pts = poset.points
    if not pts:
        raise ValueError("zero module has no Stanley decomposition")
    n = len(gvec)
    m = len(pts)
    rho = [sum(1 for k in range(n) if p[k] == gvec[k]) for p in pts]
    above = [[j for j in range(m) if vleq(pts[i], pts[j])] for i in range(m)]
    maximal = [i for i in range(m) if len(above[i]) == 1]
    hi = min(rho[i] for i in maximal)

    interval_cache: dict[tuple[int, int], int | None] = {}

    def interval_mask(b: int, c: int) -> int | None:
        """Mask of poset points in [pts[b], pts[c]]; None when the box escapes."""
        key = (b, c)
        if key in interval_cache:
            return interval_cache[key]
        lo, hi_pt = pts[b], pts[c]
        size = 1
        for x, y in zip(lo, hi_pt):
            size *= y - x + 1
        mask = 0
        count = 0
        for j in above[b]:
            if vleq(pts[j], hi_pt):
                mask |= 1 << j
                count += 1
        out = mask if count == size else None
        interval_cache[key] = out
        return out

    def search(k: int):
        if any(rho[i] < k for i in maximal):
            return None
        candidates = [
            sorted(
                (j for j in above[i] if rho[j] >= k and interval_mask(i, j) is not None),
                key=lambda j, i=i: -interval_mask(i, j).bit_count(),
            )
            for i in range(m)
        ]
        dead: set[int] = set()
        full = (1 << m) - 1

        def rec(covered: int, acc: list[tuple[int, int]]):
            if covered == full:
                return list(acc)
            if covered in dead:
                return None
            b = ((~covered) & full)
            b = (b & -b).bit_length() - 1
            for c in candidates[b]:
                mask = interval_mask(b, c)
                if mask & covered:
                    continue
                acc.append((b, c))
                res = rec(covered | mask, acc)
                if res is not None:
                    return res
                acc.pop()
            dead.add(covered)
            return None

        return rec(0, [])

    lo = 0
    best = search(0)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        found = search(mid)
        if found is not None:
            lo = mid
            best = found
        else:
            hi = mid - 1
    spaces: list[StanleySpace] = []
    for b, c in best:
        bot, top = pts[b], pts[c]
        free = frozenset(k + 1 for k in range(n) if top[k] == gvec[k])
        # one space per base degree in the interval that is pinned on the
        # free axes; together they cover exactly the monomials clamping
        # into [bot, top]
        ranges = [
            range(bot[k], bot[k] + 1) if k + 1 in free else range(bot[k], top[k] + 1)
            for k in range(n)
        ]
        for d in itertools.product(*ranges):
            spaces.append(StanleySpace(d, free))
    spaces.sort(key=lambda s: (s.degree, sorted(s.free)))
    return lo, StanleyDecomposition(module, tuple(spaces))


# ---------------------------------------------------------------------------
# decomposition transfer across a slide


def push_decomposition(D: StanleyDecomposition, i: int, j: int) -> StanleyDecomposition:
    """Transfer a decomposition of M to one of the slid module.

    Every space lifts to its tau-image degree; a space whose degree sits
    at the threshold layer j-1 without axis i free covers the duplicated
    layer and contributes a second copy one step up the axis.  The min
    free-set size is unchanged.
    """
    if j < 1:
        raise ValueError("slides need threshold j >= 1")
    ok, bad = validate_decomposition(D)
    if not ok:
        raise ValueError(f"input decomposition is invalid at degree {bad}")
    ideal = D.module.ideal
    slid = ModuleDesc(D.module.shape, slide_ideal(ideal, i, j))
    n = ideal.ring.n
    out: list[StanleySpace] = []
    for s in D.spaces:
        out.append(StanleySpace(point_map("tau", s.degree, i, j), s.free))
        if s.degree[i - 1] == j - 1 and i not in s.free:
            out.append(StanleySpace(vadd(s.degree, unit_vec(n, i)), s.free))
    spaces = tuple(sorted(out, key=lambda s: (s.degree, sorted(s.free))))
    return StanleyDecomposition(slid, spaces)


def pull_decomposition(D: StanleyDecomposition, i: int, j: int) -> StanleyDecomposition:
    """Transfer a decomposition of the slid module back to the original.

    Spaces at the threshold layer with axis i free keep their degree
    (multiplying the generator into the upper copy first), spaces off the
    layer map through sigma, and spaces at the layer without axis i free
    are dropped.  The min free-set size never drops below the input's.
    """
    if j < 1:
        raise ValueError("slides need threshold j >= 1")
    ok, bad = validate_decomposition(D)
    if not ok:
        raise ValueError(f"input decomposition is invalid at degree {bad}")
    slid_ideal = D.module.ideal
    original = ModuleDesc(D.module.shape, contract_ideal(slid_ideal, i, j))
    out: list[StanleySpace] = []
    for s in D.spaces:
        ai = s.degree[i - 1]
        if ai == j - 1 and i in s.free:
            out.append(s)
        elif ai != j - 1:
            out.append(StanleySpace(point_map("sigma", s.degree, i, j), s.free))
    spaces = tuple(sorted(out, key=lambda s: (s.degree, sorted(s.free))))
    return StanleyDecomposition(original, spaces)
