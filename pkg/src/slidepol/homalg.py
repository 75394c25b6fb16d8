"""Exact homological invariants of monomial ideals and their quotients.

Multigraded Betti numbers are computed on the lcm lattice: the Betti
number in degree b equals a reduced homology rank of the upper-Koszul
complex at b.  That complex is covered by the full simplices on the
generators dividing b, so by the nerve lemma its homology equals the
homology of the nerve, the complex of generator subsets whose join is
strictly below b.  The completely separate :func:`taylor_betti` oracle
re-derives every table from the Taylor resolution and is used to
cross-check the engine.

Depth comes from projective dimension via Auslander-Buchsbaum, dimension
from a monomial-prime containment scan, the arithmetic degree from
standard pairs, and the sequential Cohen-Macaulay test runs Reisner's
criterion over every pure skeleton of the polarized Stanley-Reisner
complex (Duval's characterization).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    CapExceededError,
    MonomialIdeal,
    Vec,
    WHOLE_RING,
    ZeroIdealError,
    colon_monomial,
    contains,
    lcm_join,
    ones_vec,
    support,
    total,
    vadd,
    vjoin,
    vleq,
    vsub_clamp,
    zero_vec,
)
from .simplicial import (
    DEFAULT_VERTEX_CAP,
    SimplicialComplex,
    _boundary_ranks_from_faces,
    homology_vanishes_below,
    rank_mod_p,
    stanley_reisner_facets,
)

DEFAULT_LATTICE_CAP = 1 << 16
DEFAULT_BOX_CAP = 10**6
DEFAULT_GEN_CAP = 12
DEFAULT_DIM_CAP = 16


# ---------------------------------------------------------------------------
# module descriptions and Betti tables


@dataclass(frozen=True)
class ModuleDesc:
    """Either an ideal or its quotient ring, as a graded module."""

    shape: str
    ideal: MonomialIdeal

    def __post_init__(self) -> None:
        if self.shape not in ("ideal", "quotient"):
            raise ValueError("shape must be 'ideal' or 'quotient'")
        if self.shape == "ideal" and self.ideal.is_zero:
            raise ZeroIdealError("the zero ideal is not a valid ideal-shaped module")


def as_ideal_module(ideal: MonomialIdeal) -> ModuleDesc:
    return ModuleDesc("ideal", ideal)


def as_quotient_module(ideal: MonomialIdeal) -> ModuleDesc:
    return ModuleDesc("quotient", ideal)


@dataclass
class BettiTable:
    """Multigraded Betti numbers: (homological index, multidegree) -> rank."""

    entries: dict[tuple[int, Vec], int]
    n: int

    def projdim(self) -> int:
        return max((l for l, _ in self.entries), default=0)

    def by_index(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (l, _), r in self.entries.items():
            out[l] = out.get(l, 0) + r
        return out

    def by_total_degree(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (l, b), r in self.entries.items():
            key = (l, total(b))
            out[key] = out.get(key, 0) + r
        return out

    def rank_at(self, l: int) -> int:
        return sum(r for (k, _), r in self.entries.items() if k == l)

    def reindexed(self, degree_map) -> "BettiTable":
        """Apply an injective map to every multidegree key."""
        out: dict[tuple[int, Vec], int] = {}
        for (l, b), r in self.entries.items():
            key = (l, degree_map(b))
            if key in out:
                raise ValueError("degree map is not injective on the table")
            out[key] = r
        return BettiTable(out, self.n)


# ---------------------------------------------------------------------------
# upper-Koszul Betti numbers on the lcm lattice


def _subset_joins(gens: tuple[Vec, ...], n: int, lattice_cap: int) -> list[Vec]:
    if 1 << len(gens) > lattice_cap:
        raise CapExceededError(
            f"2^{len(gens)} generator subsets exceed the lattice cap {lattice_cap}"
        )
    joins: list[Vec] = [zero_vec(n)] * (1 << len(gens))
    for mask in range(1, 1 << len(gens)):
        low = mask & -mask
        joins[mask] = vjoin(joins[mask ^ low], gens[low.bit_length() - 1])
    return joins


def multigraded_betti(
    module: ModuleDesc, char: int = 0, lattice_cap: int = DEFAULT_LATTICE_CAP
) -> BettiTable:
    """Exact multigraded Betti table over char 0 or a prime field.

    For an ideal the table lives on the lcm lattice; the quotient table is
    the shift by one plus a single rank at homological index 0, degree 0.
    """
    ideal = module.ideal
    n = ideal.ring.n
    if ideal.is_zero:
        return BettiTable({(0, zero_vec(n)): 1}, n)
    gens = ideal.gens
    joins = _subset_joins(gens, n, lattice_cap)
    lattice = sorted(set(joins[1:]))
    entries: dict[tuple[int, Vec], int] = {}
    for b in lattice:
        below = [g for g in gens if vleq(g, b)]
        local = _subset_joins(tuple(below), n, lattice_cap)
        faces = {mask for mask, j in enumerate(local) if j != b}
        hom = _boundary_ranks_from_faces(faces, char)
        for l, rank in enumerate(hom):
            if rank:
                entries[(l, b)] = rank
    if module.shape == "ideal":
        return BettiTable(entries, n)
    shifted = {(l + 1, b): r for (l, b), r in entries.items()}
    shifted[(0, zero_vec(n))] = 1
    return BettiTable(shifted, n)


# ---------------------------------------------------------------------------
# Taylor complex oracle (independent route, independent rank kernel)


def _rank_fractions(rows: list[list[int]]) -> int:
    """Rank over Q by plain Gaussian elimination on Fraction entries."""
    mat = [[Fraction(x) for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        inv = 1 / prow[col]
        mat[rank] = [x * inv for x in prow]
        prow = mat[rank]
        for i in range(rank + 1, nrows):
            f = mat[i][col]
            if f:
                mat[i] = [x - f * y for x, y in zip(mat[i], prow)]
        rank += 1
        if rank == nrows:
            break
    return rank


def taylor_betti(
    module: ModuleDesc, char: int = 0, lattice_cap: int = DEFAULT_LATTICE_CAP
) -> BettiTable:
    """Betti table from the Taylor resolution tensored with the residue field.

    Brute-force oracle: basis elements are generator subsets graded by
    their joins, boundary terms survive exactly when dropping a generator
    keeps the join, and homology is taken per multidegree.  Kept fully
    independent of the upper-Koszul engine.
    """
    ideal = module.ideal
    n = ideal.ring.n
    if ideal.is_zero:
        return BettiTable({(0, zero_vec(n)): 1}, n)
    gens = ideal.gens
    r = len(gens)
    joins = _subset_joins(gens, n, lattice_cap)
    strata: dict[Vec, dict[int, list[int]]] = {}
    for mask in range(1 << r):
        strata.setdefault(joins[mask], {}).setdefault(mask.bit_count(), []).append(mask)
    entries: dict[tuple[int, Vec], int] = {}
    for b, by_size in strata.items():
        sizes = sorted(by_size)
        ranks: dict[int, int] = {}
        for l in sizes:
            if l - 1 not in by_size:
                ranks[l] = 0
                continue
            lower = sorted(by_size[l - 1])
            upper = sorted(by_size[l])
            index = {m: i for i, m in enumerate(lower)}
            rows = [[0] * len(upper) for _ in lower]
            for cidx, mask in enumerate(upper):
                sign = 1
                v = mask
                while v:
                    low = v & -v
                    sub = mask ^ low
                    if joins[sub] == b and sub in index:
                        rows[index[sub]][cidx] = sign
                    sign = -sign
                    v ^= low
            ranks[l] = _rank_fractions(rows) if char == 0 else rank_mod_p(rows, char)
        for l in sizes:
            h = len(by_size[l]) - ranks.get(l, 0) - ranks.get(l + 1, 0)
            if h:
                entries[(l, b)] = h
    if module.shape == "quotient":
        return BettiTable(entries, n)
    shifted: dict[tuple[int, Vec], int] = {}
    for (l, b), rk in entries.items():
        if l == 0:
            continue
        shifted[(l - 1, b)] = rk
    return BettiTable(shifted, n)


# ---------------------------------------------------------------------------
# depth, dimension, associated primes


@dataclass(frozen=True)
class DepthDim:
    depth: int
    projdim: int
    dim: int


def _dim_quotient(ideal: MonomialIdeal, dim_cap: int = DEFAULT_DIM_CAP) -> int:
    """Krull dimension of the quotient by a monomial-prime containment scan."""
    n = ideal.ring.n
    if n > dim_cap:
        raise CapExceededError(f"{n} variables exceed the dimension scan cap {dim_cap}")
    supports = [sum(1 << k for k, e in enumerate(g) if e) for g in ideal.gens]
    best = -1
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best:
            continue
        if all(s & ~mask for s in supports):
            best = size
    return best


def depth_dim(module: ModuleDesc, char: int = 0, lattice_cap: int = DEFAULT_LATTICE_CAP) -> DepthDim:
    """Depth, projective dimension and Krull dimension of the module.

    Depth is n - projdim by Auslander-Buchsbaum, which is exact here.
    """
    n = module.ideal.ring.n
    bt = multigraded_betti(module, char, lattice_cap)
    pd = bt.projdim()
    if module.shape == "ideal":
        return DepthDim(depth=n - pd, projdim=pd, dim=n)
    return DepthDim(depth=n - pd, projdim=pd, dim=_dim_quotient(module.ideal))


def associated_primes(
    ideal: MonomialIdeal, box_cap: int = DEFAULT_BOX_CAP
) -> frozenset[frozenset[int]]:
    """Ass(S/I) by brute force: monomial colons over the box below the lcm join.

    Every returned prime is the variable-index support (1-based) of a
    colon ideal generated by single variables.
    """
    if ideal.is_zero:
        raise ZeroIdealError("associated primes need a nonzero ideal")
    g = lcm_join(ideal)
    size = 1
    for e in g:
        size *= e + 1
    if size > box_cap:
        raise CapExceededError(f"box size {size} exceeds cap {box_cap}")
    found: set[frozenset[int]] = set()
    for c in itertools.product(*(range(e + 1) for e in g)):
        q = colon_monomial(ideal, c)
        if q is WHOLE_RING:
            continue
        if all(total(v) == 1 for v in q.gens):
            found.add(frozenset().union(*(support(v) for v in q.gens)))
    return frozenset(found)


# ---------------------------------------------------------------------------
# standard pairs and degrees


@dataclass(frozen=True)
class StandardPair:
    """Base monomial and free variable set of a maximal free region."""

    base: Vec
    free: frozenset[int]


@dataclass(frozen=True)
class StandardPairSummary:
    pairs: tuple[StandardPair, ...]
    adeg: int
    deg: int
    dim: int


def _pair_subsumed(b: Vec, z: frozenset[int], b2: Vec, z2: frozenset[int]) -> bool:
    """Whether the region of (b, z) sits inside the region of (b2, z2)."""
    if not z <= z2:
        return False
    for k, (x, y) in enumerate(zip(b, b2)):
        if k + 1 in z2:
            if x < y:
                return False
        elif x != y:
            return False
    return True


def _standard_pairs_scan(ideal: MonomialIdeal, box_cap: int) -> tuple[StandardPair, ...]:
    """Admissible-pair box scan keeping the maximal pairs (general route)."""
    n = ideal.ring.n
    g = lcm_join(ideal)
    size = 1
    for e in g:
        size *= e + 2
    if size > box_cap:
        raise CapExceededError(f"pair scan size {size} exceeds cap {box_cap}")
    admissible: list[tuple[Vec, frozenset[int]]] = []
    for zmask in range(1 << n):
        z = frozenset(k + 1 for k in range(n) if zmask >> k & 1)
        ztop = tuple(g[k] if zmask >> k & 1 else 0 for k in range(n))
        ranges = [range(1) if zmask >> k & 1 else range(g[k] + 1) for k in range(n)]
        for b in itertools.product(*ranges):
            if not contains(ideal, vadd(b, ztop)):
                admissible.append((b, z))
    return tuple(
        StandardPair(b, z)
        for b, z in admissible
        if not any(
            (b, z) != (b2, z2) and _pair_subsumed(b, z, b2, z2)
            for b2, z2 in admissible
        )
    )


def standard_pairs(
    ideal: MonomialIdeal, box_cap: int = DEFAULT_BOX_CAP
) -> StandardPairSummary:
    """Standard pairs of the quotient, with adeg, deg and dim.

    The arithmetic degree is the number of standard pairs, deg counts the
    top-dimensional ones.  Squarefree ideals short-circuit through the
    Stanley-Reisner facets (their standard pairs are exactly the facets
    with base 1); the general case scans admissible pairs over the box and
    keeps the maximal ones.
    """
    if ideal.is_zero:
        raise ZeroIdealError("standard pairs need a nonzero ideal")
    n = ideal.ring.n
    if all(e <= 1 for g in ideal.gens for e in g):
        K = stanley_reisner_facets(ideal)
        pairs = tuple(
            StandardPair(zero_vec(n), frozenset(k + 1 for k in range(n) if f >> k & 1))
            for f in K.facets
        )
    else:
        pairs = _standard_pairs_scan(ideal, box_cap)
    pairs = tuple(sorted(pairs, key=lambda p: (sorted(p.free), p.base)))
    dim = max((len(p.free) for p in pairs), default=-1)
    deg = sum(1 for p in pairs if len(p.free) == dim)
    return StandardPairSummary(pairs=pairs, adeg=len(pairs), deg=deg, dim=dim)


# ---------------------------------------------------------------------------
# ring properties


@dataclass(frozen=True)
class RingProperties:
    cohen_macaulay: bool
    gorenstein: bool
    seq_cm: bool


def _pure_skeleton(K: SimplicialComplex, i: int) -> SimplicialComplex:
    """Subcomplex generated by all faces of dimension exactly i."""
    ifaces = sorted(m for m in K.faces() if m.bit_count() == i + 1)
    return SimplicialComplex(K.vertex_count, tuple(ifaces))


def _link(K: SimplicialComplex, sigma: int) -> SimplicialComplex:
    facets = sorted({f ^ sigma for f in K.facets if f & sigma == sigma})
    return SimplicialComplex(K.vertex_count, tuple(facets))


def is_cm_complex(K: SimplicialComplex, char: int = 0) -> bool:
    """Reisner criterion: every face link has vanishing homology below its dim.

    Links that are cones (a vertex common to all their facets) are
    contractible and skipped outright.
    """
    if K.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ring")
    for sigma in sorted(K.faces()):
        link = _link(K, sigma)
        d = link.dim
        if d <= 0:
            continue
        common = link.facets[0]
        for f in link.facets[1:]:
            common &= f
        if common:
            continue
        if not homology_vanishes_below(link, d, char):
            return False
    return True


def is_sequentially_cm(
    ideal: MonomialIdeal, char: int = 0, vertex_cap: int = DEFAULT_VERTEX_CAP
) -> bool:
    """Sequentially Cohen-Macaulay test for the quotient ring.

    Non-squarefree input is polarized first (slots from the lcm join, which
    preserves the property); the squarefree case is decided by Duval's
    criterion: every pure skeleton of the Stanley-Reisner complex must be
    Cohen-Macaulay in the sense of Reisner.
    """
    if ideal.is_zero:
        return True
    if any(e > 1 for g in ideal.gens for e in g):
        from .functors import polarize

        if ideal.ring.is_grid:
            raise ValueError("non-squarefree grid ideals are not supported here")
        a = vjoin(lcm_join(ideal), ones_vec(ideal.ring.n))
        ideal = polarize(ideal, a)
    K = stanley_reisner_facets(ideal, vertex_cap)
    d = K.dim
    if d <= 0:
        return True
    for i in range(0, d + 1):
        if not is_cm_complex(_pure_skeleton(K, i), char):
            return False
    return True


def ring_properties(
    ideal: MonomialIdeal, char: int = 0, lattice_cap: int = DEFAULT_LATTICE_CAP
) -> RingProperties:
    """Cohen-Macaulay, Gorenstein and sequentially CM flags of the quotient."""
    if ideal.is_zero:
        raise ZeroIdealError("ring properties need a nonzero proper ideal")
    module = as_quotient_module(ideal)
    bt = multigraded_betti(module, char, lattice_cap)
    pd = bt.projdim()
    depth = ideal.ring.n - pd
    dim = _dim_quotient(ideal)
    cm = depth == dim
    gor = cm and bt.rank_at(pd) == 1
    return RingProperties(
        cohen_macaulay=cm,
        gorenstein=gor,
        seq_cm=is_sequentially_cm(ideal, char),
    )


# ---------------------------------------------------------------------------
# linear quotients


def has_linear_quotients(
    ideal: MonomialIdeal, gen_cap: int = DEFAULT_GEN_CAP
) -> tuple[bool, tuple[Vec, ...] | None]:
    """Search for a generator order with prime successive colon ideals.

    Returns the witness order on success.  Backtracking over orders with
    memoized dead prefixes; generator count capped.
    """
    if ideal.is_zero:
        raise ZeroIdealError("linear quotients need a nonzero ideal")
    gens = ideal.gens
    r = len(gens)
    if r > gen_cap:
        raise CapExceededError(f"{r} generators exceed cap {gen_cap}")
    if r == 1:
        return True, gens

    def colon_is_prime(prefix: list[Vec], m: Vec) -> bool:
        vs = [vsub_clamp(g, m) for g in prefix]
        units = [v for v in vs if total(v) == 1]
        return all(any(vleq(u, v) for u in units) for v in vs)

    dead: set[int] = set()

    def search(mask: int, order: list[Vec]):
        if len(order) == r:
            return tuple(order)
        if mask in dead:
            return None
        for k in range(r):
            if mask >> k & 1:
                continue
            if order and not colon_is_prime(order, gens[k]):
                continue
            order.append(gens[k])
            res = search(mask | 1 << k, order)
            if res is not None:
                return res
            order.pop()
        dead.add(mask)
        return None

    witness = search(0, [])
    return (witness is not None), witness
