from itertools import product

import pytest
from hypothesis import given, strategies as st

from lawayacm.errors import InputError, ParseError
from lawayacm.geometry import (
    BL1,
    BL2,
    BL3,
    P1xP1,
    P2,
    SURFACES,
    chi_line,
    chi_rank2,
    degree,
    format_divisor,
    get_surface,
    h_multiple,
    intersect,
    parse_divisor,
    serre_dual,
    slope_twist,
)

# Gram matrices written out by hand, independent of the implementation
GRAM = {
    "P2": [[1]],
    "P1xP1": [[0, 1], [1, 0]],
    "Bl1": [[1, 0], [0, -1]],
    "Bl2": [[1, 0, 0], [0, -1, 0], [0, 0, -1]],
    "Bl3": [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
}


def _gram(kind, x, y):
    g = GRAM[kind]
    return sum(x[i] * g[i][j] * y[j] for i in range(len(x)) for j in range(len(y)))


def _rr(surface, d):
    # chi(O(D)) = 1 + (D.D - D.K)/2
    x, k = d.coords, surface.K.coords
    twice = _gram(surface.kind, x, x) - _gram(surface.kind, x, k)
    assert twice % 2 == 0
    return 1 + twice // 2


def divisors(surface, bound=20):
    return st.tuples(*[st.integers(-bound, bound)] * surface.rank).map(lambda c: surface.divisor(*c))


surfaces = st.sampled_from(list(SURFACES.values()))


@st.composite
def surface_and_divisors(draw, n=1, bound=20):
    s = draw(surfaces)
    return (s,) + tuple(draw(divisors(s, bound)) for _ in range(n))


def test_canonical_and_hyperplane():
    assert P2.K.coords == (-3,)
    assert P1xP1.K.coords == (-2, -2)
    assert BL3.h.coords == (3, -1, -1, -1)
    for s in SURFACES.values():
        assert s.K == -s.index * s.h


def test_degrees_of_h():
    assert [intersect(s, s.h, s.h) for s in (P2, P1xP1, BL1, BL2, BL3)] == [1, 2, 8, 7, 6]
    assert [intersect(s, s.K, s.K) for s in (P2, P1xP1, BL1, BL2, BL3)] == [9, 8, 8, 7, 6]


@given(surface_and_divisors(n=3))
def test_intersection_symmetric_bilinear(data):
    s, a, b, c = data
    assert intersect(s, a, b) == intersect(s, b, a) == _gram(s.kind, a.coords, b.coords)
    assert intersect(s, a + b, c) == intersect(s, a, c) + intersect(s, b, c)
    assert intersect(s, 3 * a, c) == 3 * intersect(s, a, c)


@given(surface_and_divisors())
def test_serre_dual_is_involution_and_preserves_chi(data):
    s, d = data
    assert serre_dual(s, serre_dual(s, d)) == d
    assert chi_line(s, d) == chi_line(s, serre_dual(s, d))


@given(surface_and_divisors())
def test_chi_line_matches_riemann_roch(data):
    s, d = data
    assert chi_line(s, d) == _rr(s, d)


def test_chi_rank2_on_direct_sums():
    # a direct sum of two line bundles has c1 = a + b, c2 = a.b
    for s in (P2, P1xP1):
        for x, y in product(range(-3, 4), repeat=2):
            a = s.divisor(*([x] * s.rank)) if s is P2 else s.divisor(x, y)
            b = s.divisor(*([y] * s.rank)) if s is P2 else s.divisor(y, -x)
            for t in range(-3, 3):
                th = t * s.h
                expect = chi_line(s, a + th) + chi_line(s, b + th)
                assert chi_rank2(s, a + b, intersect(s, a, b), t) == expect


def test_chi_rank2_bidegree_twist():
    c1 = P1xP1.divisor(1, 2)
    a, b = P1xP1.divisor(1, 0), P1xP1.divisor(0, 2)
    assert chi_rank2(P1xP1, c1, intersect(P1xP1, a, b), (2, -1)) == chi_line(
        P1xP1, a + P1xP1.divisor(2, -1)
    ) + chi_line(P1xP1, b + P1xP1.divisor(2, -1))


def test_h_multiple_and_slope():
    assert h_multiple(P1xP1, P1xP1.divisor(3, 3)) == 3
    assert h_multiple(P1xP1, P1xP1.divisor(3, 2)) is None
    assert h_multiple(BL1, BL1.divisor(-6, 2)) == -2
    assert h_multiple(BL1, BL1.divisor(3, 1)) is None
    assert degree(P1xP1, P1xP1.divisor(3, -2)) == 1
    assert slope_twist(P1xP1, P1xP1.divisor(5, 0)) == 2
    assert slope_twist(P1xP1, P1xP1.divisor(-5, 0)) == -2


@given(surface_and_divisors(bound=99))
def test_divisor_text_round_trip(data):
    s, d = data
    assert parse_divisor(format_divisor(d), s) == d


def test_divisor_text_forms():
    assert parse_divisor(" O( -3 , 2 ) ", "P1xP1") == P1xP1.divisor(-3, 2)
    assert parse_divisor("O(4;-1,-2)", "Bl2") == BL2.divisor(4, -1, -2)
    assert format_divisor(BL1.divisor(2, -2)) == "O(2;-2)"
    with pytest.raises(ParseError):
        parse_divisor("O(1;2)", "P1xP1")
    with pytest.raises(ParseError):
        parse_divisor("O(1,2)", "P2")
    with pytest.raises(ParseError):
        parse_divisor("L(1)", "P2")


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_divisor("O(1,x)", "P1xP1")
    assert info.value.pos >= 0


def test_surface_aliases_and_mixing():
    assert get_surface("q") is P1xP1
    assert get_surface("BL2") is BL2
    with pytest.raises(InputError):
        get_surface("P3")
    with pytest.raises(InputError):
        P2.h + P1xP1.h
