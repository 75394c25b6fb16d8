import pytest

from slidepol import make_ring, parse_ideal


@pytest.fixture
def r1():
    return make_ring(("x",))


@pytest.fixture
def r2():
    return make_ring(("x", "y"))


@pytest.fixture
def r3():
    return make_ring(("x", "y", "z"))


@pytest.fixture
def r4():
    return make_ring(("x", "y", "z", "w"))


@pytest.fixture
def example_ideal(r4):
    """The running four-variable example: (xyz, xw, yw)."""
    return parse_ideal("x*y*z, x*w, y*w", r4)
