"""Simplicial complexes and exact reduced homology.

Complexes are stored by their facets as vertex bitmasks, which keeps the
void complex (no facets) and the irrelevant complex {empty face}
distinguishable.  Homology ranks are exact: fraction-free Gaussian
elimination (Bareiss) over the integers gives rational ranks, bitset
elimination gives GF(2) ranks, and plain modular elimination handles any
other prime.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CapExceededError, MonomialIdeal

DEFAULT_VERTEX_CAP = 24


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex on vertices 0..vertex_count-1.

    ``facets`` are the maximal faces as bitmasks, sorted ascending and
    pairwise incomparable.  ``()`` is the void complex, ``(0,)`` the
    irrelevant complex whose only face is the empty set.
    """

    vertex_count: int
    facets: tuple[int, ...]

    def __post_init__(self) -> None:
        full = (1 << self.vertex_count) - 1
        for f in self.facets:
            if f & ~full:
                raise ValueError("facet uses a vertex outside the range")
        if tuple(sorted(set(self.facets))) != self.facets:
            raise ValueError("facets must be sorted and distinct")
        for f in self.facets:
            for g in self.facets:
                if f != g and f & g == f:
                    raise ValueError("facets must be pairwise incomparable")

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension; -1 for the irrelevant complex.  Void complex rejected."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(m.bit_count() for m in self.facets) - 1

    def has_face(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facets)

    def faces(self) -> set[int]:
        """All faces as bitmasks, including the empty face when non-void."""
        out: set[int] = set()
        for f in self.facets:
            if f in out:
                continue
            sub = f
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return out

    def f_vector(self) -> tuple[int, ...]:
        """(f_0, ..., f_dim); empty tuple for dim -1."""
        if self.is_void:
            return ()
        counts: dict[int, int] = {}
        for m in self.faces():
            k = m.bit_count() - 1
            if k >= 0:
                counts[k] = counts.get(k, 0) + 1
        return tuple(counts.get(k, 0) for k in range(0, self.dim + 1))


def complex_from_faces(vertex_count: int, faces) -> SimplicialComplex:
    """Build a complex from any face list by keeping the maximal ones."""
    masks = sorted(set(faces))
    maximal = [m for m in masks if not any(m != o and m & o == m for o in masks)]
    return SimplicialComplex(vertex_count, tuple(sorted(maximal)))


def _minimal_transversals(sets: list[int]) -> list[int]:
    """Minimal hitting sets (as bitmasks) of a family of vertex bitmasks."""
    partial = [0]
    for s in sets:
        nxt: set[int] = set()
        for t in partial:
            if t & s:
                nxt.add(t)
            else:
                v = s
                while v:
                    low = v & -v
                    nxt.add(t | low)
                    v ^= low
        # prune non-minimal partial transversals
        cand = sorted(nxt, key=lambda m: m.bit_count())
        kept: list[int] = []
        for m in cand:
            if not any(k & m == k for k in kept):
                kept.append(m)
        partial = kept
    return sorted(partial)


def stanley_reisner_facets(ideal: MonomialIdeal, vertex_cap: int = DEFAULT_VERTEX_CAP) -> SimplicialComplex:
    """The complex whose Stanley-Reisner ideal is the given squarefree ideal.

    Faces are the vertex subsets containing no generator support; the
    vertex set is every ring variable, including those dividing no
    generator.  Facets are the complements of the minimal transversals of
    the generator supports.
    """
    n = ideal.ring.n
    if n > vertex_cap:
        raise CapExceededError(f"{n} vertices exceeds cap {vertex_cap}")
    supports = []
    for g in ideal.gens:
        if any(e > 1 for e in g):
            raise ValueError(f"ideal is not squarefree: generator {g}")
        supports.append(sum(1 << k for k, e in enumerate(g) if e))
    full = (1 << n) - 1
    facets = sorted(full ^ t for t in _minimal_transversals(supports))
    return SimplicialComplex(n, tuple(facets))


# ---------------------------------------------------------------------------
# exact rank kernels


def rank_fraction_free(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix by one-step Bareiss elimination."""
    mat = [r[:] for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank][col]
        for i in range(rank + 1, nrows):
            mi = mat[i]
            mr = mat[rank]
            f = mi[col]
            if f:
                for j in range(col + 1, ncols):
                    mi[j] = (p * mi[j] - f * mr[j]) // prev
            elif prev != 1 or p != 1:
                for j in range(col + 1, ncols):
                    mi[j] = (p * mi[j]) // prev
            mi[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    mat = [[x % p for x in r] for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        row = [(x * inv) % p for x in mat[rank]]
        mat[rank] = row
        for i in range(rank + 1, nrows):
            f = mat[i][col]
            if f:
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], row)]
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_gf2(cols: list[int]) -> int:
    """GF(2) rank of a matrix given as column bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for c in cols:
        while c:
            top = c.bit_length() - 1
            if top in pivots:
                c ^= pivots[top]
            else:
                pivots[top] = c
                rank += 1
                break
    return rank


# ---------------------------------------------------------------------------
# reduced homology


def _boundary_ranks_from_faces(faces: set[int], char: int) -> tuple[int, ...]:
    """Reduced homology ranks (H_-1 .. H_top) of an explicit face set.

    ``faces`` must be subset-closed bitmasks including 0 (the empty face).
    """
    by_dim: dict[int, list[int]] = {}
    for m in faces:
        by_dim.setdefault(m.bit_count() - 1, []).append(m)
    for lst in by_dim.values():
        lst.sort()
    f = {k: len(v) for k, v in by_dim.items()}
    r: dict[int, int] = {}
    if not by_dim:
        return ()
    top = max(by_dim)
    for k in range(0, top + 1):
        if k not in by_dim or (k - 1) not in by_dim:
            r[k] = 0
            continue
        lower = by_dim[k - 1]
        upper = by_dim[k]
        index = {m: i for i, m in enumerate(lower)}
        if char == 2:
            cols = []
            for sigma in upper:
                colmask = 0
                v = sigma
                while v:
                    low = v & -v
                    colmask |= 1 << index[sigma ^ low]
                    v ^= low
                cols.append(colmask)
            r[k] = rank_gf2(cols)
        else:
            rows = [[0] * len(upper) for _ in lower]
            for cidx, sigma in enumerate(upper):
                sign = 1
                v = sigma
                while v:
                    low = v & -v
                    rows[index[sigma ^ low]][cidx] = sign
                    sign = -sign
                    v ^= low
            r[k] = rank_fraction_free(rows) if char == 0 else rank_mod_p(rows, char)
    out = []
    for k in range(-1, top + 1):
        out.append(f.get(k, 0) - r.get(k, 0) - r.get(k + 1, 0))
    return tuple(out)


def reduced_homology(K: SimplicialComplex, char: int = 0, vertex_cap: int = DEFAULT_VERTEX_CAP) -> tuple[int, ...]:
    """Exact reduced homology ranks (H_-1, H_0, ..., H_dim).

    ``char`` 0 means rational coefficients, otherwise the prime field.
    The void complex yields the empty tuple.
    """
    if K.vertex_count > vertex_cap:
        raise CapExceededError(f"{K.vertex_count} vertices exceeds cap {vertex_cap}")
    if char != 0 and (char < 2 or any(char % q == 0 for q in range(2, int(char**0.5) + 1))):
        raise ValueError("char must be 0 or a prime")
    if K.is_void:
        return ()
    return _boundary_ranks_from_faces(K.faces(), char)


def homology_vanishes_below(K: SimplicialComplex, d: int, char: int = 0) -> bool:
    """True when H_j(K) = 0 for every j < d.

    For char 0 a GF(2) computation runs first: mod-2 ranks dominate the
    rational ones, so mod-2 vanishing certifies rational vanishing and the
    exact rational pass is only needed otherwise.
    """
    if K.is_void:
        return True
    need = [j for j in range(-1, K.dim + 1) if j < d]
    if not need:
        return True
    if char == 0:
        h2 = reduced_homology(K, 2)
        if all(h2[j + 1] == 0 for j in need):
            return True
    h = reduced_homology(K, char)
    return all(h[j + 1] == 0 for j in need)
