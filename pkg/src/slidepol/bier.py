"""Sphere-type ideals built from an ideal and its Alexander dual.

For an ideal determined by a, the construction lives in the grid ring
with a_i + 1 slots per axis and is generated by the bottom polarization
of the ideal, the top polarization of its dual, and the full products
along every axis.  The associated Stanley-Reisner complex is certified
against the necessary sphere conditions (purity, the pseudomanifold
property, reduced Euler characteristic, and the homology of a sphere of
the expected dimension); the certificate never claims more than that.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    MonomialIdeal,
    Vec,
    minimalize,
    ones_vec,
    unit_vec,
    vadd,
)
from .duality import DEFAULT_BOX_CAP, alexander_dual
from .functors import copolarize, inflate, inflation_variable_map, polarize, slide_ideal
from .simplicial import (
    DEFAULT_VERTEX_CAP,
    SimplicialComplex,
    reduced_homology,
    stanley_reisner_facets,
)


def bier_murai_ideal(ideal: MonomialIdeal, a: Vec, box_cap: int = DEFAULT_BOX_CAP) -> MonomialIdeal:
    """The sphere ideal of a positively a-determined ideal.

    Generators: polarize(I, a+1), copolarize(dual of I w.r.t. a, a+1) and
    one full slot product per axis, minimalized together over the grid
    ring with a_i + 1 slots.
    """
    n = ideal.ring.n
    a1 = vadd(a, ones_vec(n))
    dual = alexander_dual(ideal, a, box_cap)
    part_low = polarize(ideal, a1)
    part_high = copolarize(dual, a1)
    ring = part_low.ring
    axis_products = []
    offset = 0
    for s in a1:
        vec = [0] * ring.n
        for k in range(s):
            vec[offset + k] = 1
        axis_products.append(tuple(vec))
        offset += s
    return minimalize(ring, list(part_low.gens) + list(part_high.gens) + axis_products)


def bm_complex(ideal: MonomialIdeal, a: Vec, box_cap: int = DEFAULT_BOX_CAP,
               vertex_cap: int = DEFAULT_VERTEX_CAP) -> SimplicialComplex:
    """Stanley-Reisner complex of the sphere ideal."""
    return stanley_reisner_facets(bier_murai_ideal(ideal, a, box_cap), vertex_cap)


# ---------------------------------------------------------------------------
# sphere certificates


@dataclass(frozen=True)
class SphereCertificate:
    """Necessary-condition bundle for being a sphere of a given dimension.

    ``verdict`` is true only when the complex is pure, a pseudomanifold,
    has the reduced Euler characteristic and rational homology of a sphere
    of its dimension, and that dimension matches the expected one.  A
    passing certificate does not assert an actual homeomorphism.
    """

    vertex_count: int
    dimension: int
    f_vector: tuple[int, ...]
    pure: bool
    pseudomanifold: bool
    euler_reduced: int
    homology: tuple[int, ...]
    verdict: bool


def _sphere_profile(dim: int) -> tuple[int, ...]:
    return tuple(0 for _ in range(dim + 1)) + (1,)


def sphere_certificate(
    K: SimplicialComplex, expected_dim: int, vertex_cap: int = DEFAULT_VERTEX_CAP
) -> SphereCertificate:
    """Certify the necessary sphere conditions at the expected dimension.

    Homology is reported over the rationals.  A GF(2) computation runs
    first: mod-2 Betti numbers bound the rational ones from above and the
    Euler characteristic pins the alternating sum, so a mod-2 sphere
    profile already proves the rational profile and the exact rational
    elimination only runs when the cheap pass is inconclusive.
    """
    if K.is_void:
        raise ValueError("the void complex cannot be certified")
    dim = K.dim
    fvec = K.f_vector()
    euler = sum((-1) ** k * f for k, f in enumerate(fvec)) - 1
    facet_sizes = {f.bit_count() for f in K.facets}
    pure = len(facet_sizes) == 1
    pm = True
    if dim >= 0:
        ridges = {m for m in K.faces() if m.bit_count() == dim}
        for ridge in ridges:
            count = sum(1 for f in K.facets if f & ridge == ridge)
            if count != 2:
                pm = False
                break
    profile = _sphere_profile(dim)
    hom2 = reduced_homology(K, 2, vertex_cap)
    if hom2 == profile and euler == (-1) ** (dim % 2):
        homology = hom2
    else:
        homology = reduced_homology(K, 0, vertex_cap)
    verdict = (
        pure
        and pm
        and homology == profile
        and euler == (1 if dim % 2 == 0 else -1)
        and dim == expected_dim
    )
    return SphereCertificate(
        vertex_count=K.vertex_count,
        dimension=dim,
        f_vector=fvec,
        pure=pure,
        pseudomanifold=pm,
        euler_reduced=euler,
        homology=homology,
        verdict=verdict,
    )


# ---------------------------------------------------------------------------
# inflation identity


@dataclass(frozen=True)
class InflationIdentityReport:
    """Comparison of the slid sphere ideal against the inflated one."""

    ok: bool
    slid_side: MonomialIdeal
    inflated_side: MonomialIdeal
    variable_map: dict[str, str]


def bm_inflation_identity(
    ideal: MonomialIdeal, a: Vec, i: int, j: int, box_cap: int = DEFAULT_BOX_CAP
) -> InflationIdentityReport:
    """Check that sliding before building the sphere ideal equals inflating after.

    Both sides are built independently: the left side is the sphere ideal
    of the slid ideal w.r.t. a + e_i, the right side is the 1-vertex
    inflation of the original sphere ideal at grid variable (i, j).  The
    canonical slot renaming (slot m to m+1 for m >= j on axis i, the
    inflated pair occupying slots j and j+1) is built into the inflation,
    so success is plain equality of canonical generator sets.  A failure
    is reported, not raised: it would be a counterexample.
    """
    if not (1 <= j <= a[i - 1] + 1):
        raise ValueError(f"slot {j} out of range 1..{a[i - 1] + 1}")
    n = ideal.ring.n
    slid = slide_ideal(ideal, i, j)
    lhs = bier_murai_ideal(slid, vadd(a, unit_vec(n, i)), box_cap)
    base = bier_murai_ideal(ideal, a, box_cap)
    rhs = inflate(base, i, j)
    return InflationIdentityReport(
        ok=lhs == rhs,
        slid_side=lhs,
        inflated_side=rhs,
        variable_map=inflation_variable_map(base.ring, i, j),
    )
