"""Alexander duality of monomial ideals with respect to a determining vector.

The dual with respect to a is generated by the monomials b <= a whose
complementary monomial x^(a-b) lies outside the ideal.  It is computed by
direct enumeration of the box [0, a]: desk-scale correctness beats
asymptotics here, and the member set is an up-set inside the box so its
minimal elements fall out of a single scan.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    CapExceededError,
    MonomialIdeal,
    NotDeterminedError,
    Vec,
    ZeroIdealError,
    contains,
    is_positively_determined,
    minimalize,
    unit_vec,
    vadd,
)
from .functors import point_map, slide_ideal

DEFAULT_BOX_CAP = 10**6


def alexander_dual(ideal: MonomialIdeal, a: Vec, box_cap: int = DEFAULT_BOX_CAP) -> MonomialIdeal:
    """The Alexander dual with respect to a (requires a-determinedness)."""
    if ideal.is_zero:
        raise ZeroIdealError("the dual of the zero ideal is the unit ideal")
    if not is_positively_determined(ideal, a):
        raise NotDeterminedError(f"ideal {ideal} is not positively determined by {a}")
    size = 1
    for ai in a:
        size *= ai + 1
    if size > box_cap:
        raise CapExceededError(f"box size {size} exceeds cap {box_cap}")
    member: dict[Vec, bool] = {}
    for b in itertools.product(*(range(ai + 1) for ai in a)):
        comp = tuple(ai - bi for ai, bi in zip(a, b))
        member[b] = not contains(ideal, comp)
    gens = []
    for b, ok in member.items():
        if not ok:
            continue
        if all(b[k] == 0 or not member[b[:k] + (b[k] - 1,) + b[k + 1 :]] for k in range(len(b))):
            gens.append(b)
    return minimalize(ideal.ring, gens)


@dataclass(frozen=True)
class PairingReport:
    """Outcome of the generator pairing between a dual and a slid dual."""

    success: bool
    pairs: tuple[tuple[Vec, Vec], ...]
    unmatched_left: tuple[Vec, ...]
    unmatched_right: tuple[Vec, ...]


def dual_slide_correspondence(
    ideal: MonomialIdeal, a: Vec, i: int, j: int, box_cap: int = DEFAULT_BOX_CAP
) -> PairingReport:
    """Pair dual generators through tau at the reflected threshold.

    Maps each minimal generator b of the dual w.r.t. a through
    tau(i, a_i + 2 - j) and reports whether the image set is exactly the
    minimal generator set of the dual of the slid ideal w.r.t. a + e_i.
    A failed pairing is reported, not raised: it would be a genuine
    counterexample to the underlying correspondence.
    """
    if not (1 <= j <= a[i - 1] + 1):
        raise ValueError(f"threshold {j} out of range 1..{a[i - 1] + 1}")
    left = alexander_dual(ideal, a, box_cap)
    slid = slide_ideal(ideal, i, j)
    right = alexander_dual(slid, vadd(a, unit_vec(len(a), i)), box_cap)
    thresh = a[i - 1] + 2 - j
    pairs = tuple((b, point_map("tau", b, i, thresh)) for b in left.gens)
    image = {img for _, img in pairs}
    target = set(right.gens)
    return PairingReport(
        success=image == target and len(image) == len(pairs),
        pairs=pairs,
        unmatched_left=tuple(sorted(image - target)),
        unmatched_right=tuple(sorted(target - image)),
    )
