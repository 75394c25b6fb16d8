import itertools

import pytest

from slidepol import (
    MonomialIdeal,
    UnitIdealError,
    WHOLE_RING,
    ZeroIdealError,
    colon_monomial,
    contains,
    grid_ring,
    is_positively_determined,
    lcm_join,
    make_ring,
    minimalize,
    parse_ideal,
    radical,
)
from slidepol.core import NotDeterminedError, vleq


class TestMinimalize:
    def test_drops_divisible_generators(self, r2):
        ideal = minimalize(r2, [(2, 0), (3, 0), (1, 1)])
        assert ideal.gens == ((1, 1), (2, 0))

    def test_empty_input_is_zero_ideal(self, r2):
        assert minimalize(r2, []).is_zero

    def test_four_variable_example(self, r4):
        raw = [(1, 1, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1), (2, 0, 0, 1)]
        assert minimalize(r4, raw) == parse_ideal("x*y*z, x*w, y*w", r4)

    def test_unit_ideal_rejected(self, r2):
        with pytest.raises(UnitIdealError):
            minimalize(r2, [(0, 0), (1, 0)])

    def test_idempotent(self, r3):
        ideal = minimalize(r3, [(1, 2, 0), (0, 1, 1), (2, 2, 0), (0, 3, 1)])
        assert minimalize(r3, ideal.gens) == ideal

    def test_same_ideal_membership_on_box(self, r2):
        raw = [(2, 0), (3, 0), (1, 1), (1, 3)]
        ideal = minimalize(r2, raw)
        top = lcm_join(ideal)
        for c in itertools.product(range(top[0] + 1), range(top[1] + 1)):
            raw_member = any(vleq(g, c) for g in raw)
            assert contains(ideal, c) == raw_member


class TestContains:
    def test_divisibility(self, r2):
        ideal = parse_ideal("x*y", r2)
        assert contains(ideal, (2, 1))
        assert not contains(ideal, (2, 0))

    def test_zero_ideal_contains_nothing(self, r2):
        zero = MonomialIdeal(r2, ())
        assert not contains(zero, (3, 3))

    def test_zw_outside_example_ideal(self, example_ideal):
        assert not contains(example_ideal, (0, 0, 1, 1))

    def test_agrees_with_whole_ring_colon(self, r2):
        ideal = parse_ideal("x^2, x*y, y^3", r2)
        top = lcm_join(ideal)
        for c in itertools.product(range(top[0] + 2), range(top[1] + 2)):
            flagged = colon_monomial(ideal, c) is WHOLE_RING
            assert flagged == contains(ideal, c)


class TestColon:
    def test_simple_subtraction(self, r2):
        assert colon_monomial(parse_ideal("x^2, x*y", r2), (1, 0)) == parse_ideal("x, y", r2)

    def test_member_gives_whole_ring(self, r2):
        assert colon_monomial(parse_ideal("x*y", r2), (1, 1)) is WHOLE_RING

    def test_whole_ring_via_intermediate_unit(self, r2):
        # (x^3, x*y, y^3) : x*y contains 1 because x*y is a generator
        assert colon_monomial(parse_ideal("x^3, x*y, y^3", r2), (1, 1)) is WHOLE_RING

    def test_zero_ideal_rejected(self, r2):
        with pytest.raises(ZeroIdealError):
            colon_monomial(MonomialIdeal(r2, ()), (1, 0))


class TestLcmJoin:
    def test_squarefree(self, example_ideal):
        assert lcm_join(example_ideal) == (1, 1, 1, 1)

    def test_mixed(self, r4):
        assert lcm_join(parse_ideal("x^2*y*z, x^2*w, y*w", r4)) == (2, 1, 1, 1)

    def test_principal(self, r2):
        assert lcm_join(parse_ideal("x^3*y", r2)) == (3, 1)

    def test_zero_rejected(self, r2):
        with pytest.raises(ZeroIdealError):
            lcm_join(MonomialIdeal(r2, ()))


class TestDetermined:
    def test_squarefree_by_ones(self, example_ideal):
        assert is_positively_determined(example_ideal, (1, 1, 1, 1))

    def test_exponent_two_fails_ones(self, r4):
        slid = parse_ideal("x^2*y*z, x^2*w, y*w", r4)
        assert not is_positively_determined(slid, (1, 1, 1, 1))
        assert is_positively_determined(slid, (2, 1, 1, 1))

    def test_zero_coordinate_rejected(self, r2):
        with pytest.raises(NotDeterminedError):
            is_positively_determined(parse_ideal("x", r2), (1, 0))


class TestRadical:
    def test_clamps_exponents(self, r2):
        assert radical(parse_ideal("x^2*y", r2)) == parse_ideal("x*y", r2)

    def test_squarefree_fixed(self, example_ideal):
        assert radical(example_ideal) == example_ideal

    def test_clamp_then_minimalize(self, r2):
        assert radical(parse_ideal("x^3, x^2*y, y^3", r2)) == parse_ideal("x, y", r2)

    def test_idempotent(self, r3):
        ideal = parse_ideal("x^2*y, y^3*z^2, x*z", r3)
        assert radical(radical(ideal)) == radical(ideal)


class TestInvariantsOfRepresentation:
    def test_generators_must_be_sorted(self, r2):
        with pytest.raises(ValueError):
            MonomialIdeal(r2, ((2, 0), (1, 1)))

    def test_generators_must_be_minimal(self, r2):
        with pytest.raises(ValueError):
            MonomialIdeal(r2, ((1, 0), (2, 0)))

    def test_negative_exponent_rejected(self, r2):
        with pytest.raises(ValueError):
            MonomialIdeal(r2, ((-1, 2),))

    def test_wrong_length_rejected(self, r2):
        with pytest.raises(ValueError):
            MonomialIdeal(r2, ((1, 0, 0),))

    def test_grid_ring_names(self):
        ring = grid_ring(("x", "y"), (2, 3))
        assert ring.names == ("x[1]", "x[2]", "y[1]", "y[2]", "y[3]")
        assert ring.grid_position(2, 3) == 4
        assert ring.grid_pair(1) == (1, 2)

    def test_bracket_forbidden_in_plain_names(self):
        with pytest.raises(ValueError):
            make_ring(("x[1]", "y"))
