import pytest

from closurekit import LEX, QQ, PolyRing, parse_polynomial


@pytest.fixture
def ring_xy():
    return PolyRing(QQ, ["x", "y"])


@pytest.fixture
def ring_xyz():
    return PolyRing(QQ, ["x", "y", "z"])


@pytest.fixture
def ring_xy_lex():
    return PolyRing(QQ, ["x", "y"], LEX)


def P(ring, text):
    """Parse a polynomial literal against a ring (test convenience)."""
    return parse_polynomial(text, ring)


@pytest.fixture
def p():
    return P
