"""Exact arithmetic for monomial ideals in multigraded polynomial rings.

Conventions used throughout the package:

* A multidegree is a plain tuple of ints, one entry per ring variable.
  When a tuple is used as a monomial exponent every entry is >= 0; signed
  entries are allowed wherever a map is defined on all of Z^n.
* Variable axes are 1-based in every public signature (``i`` ranges over
  ``1..n``), matching the usual mathematical convention.  Tuple positions
  are of course 0-based.
* A :class:`MonomialIdeal` stores the unique minimal generating set in
  canonical order (ascending lexicographic, first coordinate most
  significant).  Ideal equality is therefore plain value equality.
* The unit ideal is not representable.  Operations that would produce it
  return the :data:`WHOLE_RING` flag instead.  The zero ideal is the empty
  generator list.

All values are immutable after construction and every operation is a pure
function, so everything here is safe for unrestricted concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass

Vec = tuple[int, ...]


class UnitIdealError(ValueError):
    """An operation would need the unit ideal as a MonomialIdeal."""


class ZeroIdealError(ValueError):
    """The operation requires a nonzero ideal."""


class NotDeterminedError(ValueError):
    """The ideal is not positively determined by the given vector."""


class CapExceededError(RuntimeError):
    """An enumeration would exceed a configured size cap."""


class _WholeRing:
    """Singleton flag standing in for the unit ideal (the whole ring)."""

    _instance = None

    def __new__(cls) -> "_WholeRing":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "WHOLE_RING"


WHOLE_RING = _WholeRing()


# ---------------------------------------------------------------------------
# vector helpers


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub_clamp(a: Vec, b: Vec) -> Vec:
    """Coordinatewise max(a - b, 0)."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def vjoin(a: Vec, b: Vec) -> Vec:
    return tuple(max(x, y) for x, y in zip(a, b))

def vmeet(a: Vec, b: Vec) -> Vec:
    return tuple(min(x, y) for x, y in zip(a, b))


def vleq(a: Vec, b: Vec) -> bool:
    """Componentwise a <= b."""
    return all(x <= y for x, y in zip(a, b))


def unit_vec(n: int, i: int) -> Vec:
    """The i-th unit vector, i 1-based."""
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def zero_vec(n: int) -> Vec:
    return (0,) * n


def ones_vec(n: int) -> Vec:
    return (1,) * n


def total(a: Vec) -> int:
    return sum(a)


def support(a: Vec) -> frozenset[int]:
    """1-based indices of the nonzero entries."""
    return frozenset(k + 1 for k, x in enumerate(a) if x)


# ---------------------------------------------------------------------------
# rings


@dataclass(frozen=True)
class GridShape:
    """Slot layout of a polarized ring: slots[i-1] copies of base variable i."""

    base_names: tuple[str, ...]
    slots: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.base_names) != len(self.slots):
            raise ValueError("base_names and slots must have equal length")
        if any(s < 1 for s in self.slots):
            raise ValueError("every slot count must be positive")


@dataclass(frozen=True)
class Ring:
    """Ambient polynomial ring descriptor.

    ``grid`` is set exactly when the ring is a polarized grid ring; the
    variable order is then base-major, slot-minor and the names are
    generated as ``base[slot]``.  Plain variable names may not contain
    ``[`` so the two namespaces never collide.
    """

    names: tuple[str, ...]
    grid: GridShape | None = None

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be pairwise distinct")
        if any(not n for n in self.names):
            raise ValueError("variable names must be non-empty")
        if self.grid is None:
            bad = [n for n in self.names if "[" in n or "]" in n]
            if bad:
                raise ValueError(f"'[' is reserved for grid rings: {bad}")
        else:
            expected = tuple(
                f"{b}[{j}]"
                for b, s in zip(self.grid.base_names, self.grid.slots)
                for j in range(1, s + 1)
            )
            if self.names != expected:
                raise ValueError("grid ring names must follow base-major slot-minor order")

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def is_grid(self) -> bool:
        return self.grid is not None

    # -- grid coordinate helpers (1-based axis i, slot j) --

    def grid_position(self, i: int, j: int) -> int:
        """0-based tuple position of grid variable (i, j)."""
        g = self._require_grid()
        if not (1 <= i <= len(g.slots) and 1 <= j <= g.slots[i - 1]):
            raise ValueError(f"no grid variable ({i},{j})")
        return sum(g.slots[: i - 1]) + (j - 1)

    def grid_pair(self, pos: int) -> tuple[int, int]:
        """(axis, slot) of a 0-based tuple position, both 1-based."""
        g = self._require_grid()
        for i, s in enumerate(g.slots, start=1):
            if pos < s:
                return i, pos + 1
            pos -= s
        raise ValueError("position out of range")

    def _require_grid(self) -> GridShape:
        if self.grid is None:
            raise ValueError("operation requires a grid ring")
        return self.grid


def make_ring(names) -> Ring:
    return Ring(tuple(names))


def grid_ring(base_names, slots) -> Ring:
    shape = GridShape(tuple(base_names), tuple(slots))
    names = tuple(
        f"{b}[{j}]"
        for b, s in zip(shape.base_names, shape.slots)
        for j in range(1, s + 1)
    )
    return Ring(names, shape)


def monomial_str(ring: Ring, v: Vec) -> str:
    """Render an exponent tuple as ``x^2*y`` style text."""
    parts = []
    for name, e in zip(ring.names, v):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# monomial ideals


@dataclass(frozen=True)
class MonomialIdeal:
    """A proper monomial ideal given by its canonical minimal generators.

    ``gens`` must be divisibility-minimal, sorted ascending lexicographic,
    and free of the zero exponent vector; the empty tuple is the zero
    ideal.  Use :func:`minimalize` to build one from an arbitrary
    generator list.
    """

    ring: Ring
    gens: tuple[Vec, ...]

    def __post_init__(self) -> None:
        n = self.ring.n
        for g in self.gens:
            if len(g) != n:
                raise ValueError(f"generator {g} has wrong length for ring with {n} variables")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in generator {g}")
        if any(not any(g) for g in self.gens):
            raise UnitIdealError("the unit ideal is not representable")
        if tuple(sorted(self.gens)) != self.gens:
            raise ValueError("generators must be sorted in canonical order")
        for a in self.gens:
            for b in self.gens:
                if a is not b and vleq(a, b):
                    raise ValueError(f"generators not minimal: {a} divides {b}")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def n(self) -> int:
        return self.ring.n

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(monomial_str(self.ring, g) for g in self.gens) + ")"


def minimalize(ring: Ring, raw) -> MonomialIdeal:
    """Canonicalize a generator list: drop non-minimal members, sort.

    Raises :class:`UnitIdealError` if the zero exponent vector (the
    monomial 1) is present.  An empty input yields the zero ideal.
    """
    vecs = []
    n = ring.n
    for v in raw:
        t = tuple(v)
        if len(t) != n:
            raise ValueError(f"generator {t} has wrong length for ring with {n} variables")
        if any(e < 0 for e in t):
            raise ValueError(f"negative exponent in generator {t}")
        if not any(t):
            raise UnitIdealError("generator 1 would give the unit ideal")
        vecs.append(t)
    vecs = sorted(set(vecs))
    keep = []
    for v in vecs:
        if not any(vleq(w, v) for w in vecs if w != v):
            keep.append(v)
    return MonomialIdeal(ring, tuple(keep))


def contains(ideal: MonomialIdeal, c: Vec) -> bool:
    """Monomial membership: some minimal generator divides x^c."""
    return any(vleq(g, c) for g in ideal.gens)


def colon_monomial(ideal: MonomialIdeal, c: Vec):
    """The colon ideal (I : x^c).

    Returns :data:`WHOLE_RING` when x^c lies in I, otherwise the
    minimalized ideal generated by the clamped differences.
    """
    if ideal.is_zero:
        raise ZeroIdealError("colon of the zero ideal")
    quotients = [vsub_clamp(g, c) for g in ideal.gens]
    if any(not any(q) for q in quotients):
        return WHOLE_RING
    return minimalize(ideal.ring, quotients)


def lcm_join(ideal: MonomialIdeal) -> Vec:
    """Coordinatewise maximum of the minimal generators."""
    if ideal.is_zero:
        raise ZeroIdealError("lcm join of the zero ideal")
    out = ideal.gens[0]
    for g in ideal.gens[1:]:
        out = vjoin(out, g)
    return out


def is_positively_determined(ideal: MonomialIdeal, a: Vec) -> bool:
    """Every minimal generator divides x^a.  Requires a >= (1,...,1)."""
    if len(a) != ideal.n:
        raise ValueError("determining vector has wrong length")
    if any(e < 1 for e in a):
        raise NotDeterminedError("determining vector must have all entries >= 1")
    return all(vleq(g, a) for g in ideal.gens)


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    """Clamp every generator to its support and minimalize."""
    return minimalize(ideal.ring, [tuple(min(e, 1) for e in g) for g in ideal.gens])
