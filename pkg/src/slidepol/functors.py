"""Sliding maps, polarization, depolarization, inflation and compression.

The four point maps act on all of Z^n and change only the chosen axis:

* ``sigma``: subtract 1 from entries >= j
* ``tau``:   add 1 to entries >= j
* ``lambda``: add 1 to entries < j
* ``rho``:   subtract 1 from entries <= j

``tau`` drives the ideal-level slide, ``sigma`` is its one-sided inverse;
``lambda`` and ``rho`` are the companions needed for bookkeeping
identities such as -tau(i,j)(a) = rho(i,-j)(-a).  Polarization sends a
determined ideal into a grid ring by filling slots from the bottom
(:func:`polarize`) or from the top (:func:`copolarize`); the two differ
by the slot reversal and both are undone by :func:`depolarize`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    MonomialIdeal,
    NotDeterminedError,
    Ring,
    Vec,
    ZeroIdealError,
    grid_ring,
    is_positively_determined,
    minimalize,
    monomial_str,
)

POINT_MAP_KINDS = ("sigma", "tau", "lambda", "rho")


def point_map(kind: str, a: Vec, i: int, j: int) -> Vec:
    """Apply one of the four threshold maps to a signed vector, axis i 1-based."""
    x = a[i - 1]
    if kind == "sigma":
        y = x - 1 if x >= j else x
    elif kind == "tau":
        y = x + 1 if x >= j else x
    elif kind == "lambda":
        y = x if x >= j else x + 1
    elif kind == "rho":
        y = x if x > j else x - 1
    else:
        raise ValueError(f"unknown point map kind {kind!r}")
    return a[: i - 1] + (y,) + a[i:]


def slide_ideal(ideal: MonomialIdeal, i: int, j: int) -> MonomialIdeal:
    """Slide along axis i at threshold j: apply tau to every generator.

    Only j >= 1 is meaningful at the ideal level.  No generator of the
    result has i-th exponent equal to j, and the quotient slides along:
    the slid quotient is the quotient by the slid ideal.
    """
    _check_axis(ideal.ring, i)
    if j < 1:
        raise ValueError("ideal-level slides need threshold j >= 1")
    return minimalize(ideal.ring, [point_map("tau", g, i, j) for g in ideal.gens])


def contract_ideal(ideal: MonomialIdeal, i: int, j: int) -> MonomialIdeal:
    """Inverse slide: decrement every i-th exponent above j.

    Requires that no generator has i-th exponent exactly j; the offending
    generator is reported otherwise.  ``slide_ideal(result, i, j)``
    reproduces the input.
    """
    _check_axis(ideal.ring, i)
    if j < 1:
        raise ValueError("contraction needs threshold j >= 1")
    for g in ideal.gens:
        if g[i - 1] == j:
            raise ValueError(
                f"cannot contract at axis {i}, threshold {j}: "
                f"generator {monomial_str(ideal.ring, g)} has exponent {j} there"
            )
    out = [g[: i - 1] + (g[i - 1] - 1 if g[i - 1] > j else g[i - 1],) + g[i:] for g in ideal.gens]
    return minimalize(ideal.ring, out)


@dataclass(frozen=True)
class SlideOp:
    """A single slide: axis (1-based), threshold, and direction kind."""

    axis: int
    threshold: int
    kind: str = "left"

    def __post_init__(self) -> None:
        if self.kind not in ("left", "right"):
            raise ValueError("kind must be 'left' or 'right'")
        if self.kind == "left" and self.threshold < 1:
            raise ValueError("ideal-level slides need threshold >= 1")


SlideScript = tuple[SlideOp, ...]


def apply_script(ideal: MonomialIdeal, script: SlideScript) -> MonomialIdeal:
    """Apply the slide ops left to right."""
    out = ideal
    for op in script:
        if op.kind != "left":
            raise ValueError("only left slides act on ideals")
        out = slide_ideal(out, op.axis, op.threshold)
    return out


def compress(ideal: MonomialIdeal) -> tuple[MonomialIdeal, SlideScript]:
    """Remove exponent gaps so each used axis has consecutive exponents.

    Returns ``(core_ideal, script)`` where the core ideal's exponent set
    on every axis that divides some generator is {0,..,b} or {1,..,b},
    axes dividing no generator are untouched, and applying the script via
    :func:`apply_script` reproduces the input exactly.  Gaps are removed
    highest threshold first per axis, axes ascending, which makes the
    script reproducible.
    """
    if ideal.is_zero:
        raise ZeroIdealError("compress of the zero ideal")
    current = ideal
    contracted: list[tuple[int, int]] = []
    for axis in range(1, ideal.ring.n + 1):
        exps = {g[axis - 1] for g in current.gens}
        top = max(exps)
        if top == 0:
            continue
        for j in range(top, 0, -1):
            if j not in exps:
                current = contract_ideal(current, axis, j)
                contracted.append((axis, j))
    script = tuple(SlideOp(axis, j) for axis, j in reversed(contracted))
    return current, script


def satisfies_consecutive_condition(ideal: MonomialIdeal) -> bool:
    """Exponents on every axis dividing a generator are {0,..,b} or {1,..,b}."""
    for axis in range(1, ideal.ring.n + 1):
        exps = {g[axis - 1] for g in ideal.gens}
        top = max(exps, default=0)
        if top == 0:
            continue
        if any(j not in exps for j in range(1, top)):
            return False
        if top not in exps:
            return False
    return True


# ---------------------------------------------------------------------------
# polarization


def _check_axis(ring: Ring, i: int) -> None:
    if not (1 <= i <= ring.n):
        raise ValueError(f"axis {i} out of range for ring with {ring.n} variables")


def _require_determined(ideal: MonomialIdeal, a: Vec) -> None:
    if not is_positively_determined(ideal, a):
        raise NotDeterminedError(
            f"ideal {ideal} is not positively determined by {a}"
        )


def _require_plain(ideal: MonomialIdeal) -> None:
    if ideal.ring.is_grid:
        raise ValueError("expected an ideal over a plain (non-grid) ring")


def polarize(ideal: MonomialIdeal, a: Vec) -> MonomialIdeal:
    """Bottom-filled polarization into the grid ring with a_i slots on axis i.

    A generator with exponents b maps to the squarefree grid monomial
    using slots 1..b_i of every axis.
    """
    _require_plain(ideal)
    _require_determined(ideal, a)
    out_ring = grid_ring(ideal.ring.names, a)
    gens = []
    for g in ideal.gens:
        bits = []
        for bi, ai in zip(g, a):
            bits.extend(1 if j <= bi else 0 for j in range(1, ai + 1))
        gens.append(tuple(bits))
    return minimalize(out_ring, gens)


def copolarize(ideal: MonomialIdeal, a: Vec) -> MonomialIdeal:
    """Top-filled (reversed) polarization: slots a_i-b_i+1..a_i are used."""
    _require_plain(ideal)
    _require_determined(ideal, a)
    out_ring = grid_ring(ideal.ring.names, a)
    gens = []
    for g in ideal.gens:
        bits = []
        for bi, ai in zip(g, a):
            bits.extend(1 if j >= ai - bi + 1 else 0 for j in range(1, ai + 1))
        gens.append(tuple(bits))
    return minimalize(out_ring, gens)


def slot_reversal(ideal: MonomialIdeal) -> MonomialIdeal:
    """Rename every grid variable (i, j) to (i, slots_i + 1 - j)."""
    grid = ideal.ring._require_grid()
    gens = []
    for g in ideal.gens:
        bits = list(g)
        offset = 0
        for s in grid.slots:
            bits[offset : offset + s] = reversed(bits[offset : offset + s])
            offset += s
        gens.append(tuple(bits))
    return minimalize(ideal.ring, gens)


def depolarize(ideal: MonomialIdeal) -> MonomialIdeal:
    """Substitute every grid variable (i, j) by base variable i and minimalize.

    Undoes both :func:`polarize` and :func:`copolarize`.
    """
    grid = ideal.ring._require_grid()
    base = Ring(grid.base_names)
    gens = []
    for g in ideal.gens:
        vec = []
        offset = 0
        for s in grid.slots:
            vec.append(sum(g[offset : offset + s]))
            offset += s
        gens.append(tuple(vec))
    return minimalize(base, gens)


def inflate(ideal: MonomialIdeal, i: int, j: int = 1) -> MonomialIdeal:
    """1-vertex inflation at grid variable (i, j).

    The axis gains one slot; slot j splits into the pair {j, j+1}, so a
    generator containing slot j keeps it and gains slot j+1 while higher
    slots shift up by one.  A plain squarefree ideal is first viewed as a
    grid ring with one slot per variable, which makes the plain case equal
    to the bottom polarization of the threshold-1 slide.
    """
    for g in ideal.gens:
        if any(e > 1 for e in g):
            raise ValueError(f"inflation needs a squarefree ideal; generator {g}")
    ring = ideal.ring
    if not ring.is_grid:
        ring = grid_ring(ring.names, (1,) * ring.n)
    grid = ring.grid
    if not (1 <= i <= len(grid.slots)):
        raise ValueError(f"axis {i} out of range")
    if not (1 <= j <= grid.slots[i - 1]):
        raise ValueError(f"slot {j} out of range for axis {i}")
    new_slots = tuple(s + 1 if k == i - 1 else s for k, s in enumerate(grid.slots))
    out_ring = grid_ring(grid.base_names, new_slots)
    offset = sum(grid.slots[: i - 1])
    pos = offset + (j - 1)
    gens = []
    for g in ideal.gens:
        bits = list(g)
        bits.insert(pos + 1, bits[pos])
        gens.append(tuple(bits))
    return minimalize(out_ring, gens)


def is_generalized_polarization(ideal: MonomialIdeal, polarized: MonomialIdeal, a: Vec, char: int = 0) -> bool:
    """Whether a squarefree grid ideal is a (possibly non-standard) polarization.

    Checks that depolarizing recovers the ideal and that the coarse
    Z-graded Betti tables agree, which characterizes the slot-identifying
    linear forms being a regular sequence on the quotient.
    """
    from .homalg import as_ideal_module, multigraded_betti

    grid = polarized.ring._require_grid()
    if grid.base_names != ideal.ring.names or grid.slots != tuple(a):
        raise ValueError("grid ring shape does not match the determining vector")
    _require_determined(ideal, a)
    for g in polarized.gens:
        if any(e > 1 for e in g):
            raise ValueError("candidate polarization must be squarefree")
    if depolarize(polarized) != ideal:
        return False
    bt_base = multigraded_betti(as_ideal_module(ideal), char)
    bt_grid = multigraded_betti(as_ideal_module(polarized), char)
    return bt_base.by_total_degree() == bt_grid.by_total_degree()


def inflation_variable_map(ring: Ring, i: int, j: int) -> dict[str, str]:
    """Old-name to new-name map of the injection underlying inflation at (i, j).

    Slot m maps to m for m < j and to m+1 for m >= j; the inflated pair
    occupies slots j and j+1 of the enlarged axis.
    """
    grid = ring._require_grid()
    out = {}
    for pos, name in enumerate(ring.names):
        bi, sj = ring.grid_pair(pos)
        if bi == i and sj >= j:
            out[name] = f"{grid.base_names[bi - 1]}[{sj + 1}]"
        else:
            out[name] = name
    return out
