import pytest
from hypothesis import given, settings, strategies as st

from lawayacm import constructions as C
from lawayacm.acm import (
    bl1_families,
    check_k0_bounds,
    chi_polynomial,
    classify_laway_lines,
    h1_interval_bl1,
    h1_profile,
    integer_roots,
    is_initialized,
    is_special,
    is_supernatural,
    is_weakly_ulrich,
    line_h1_support,
    line_spectrum,
    weakly_ulrich_conditions,
    weakly_ulrich_violation,
)
from lawayacm.bundlecalc import Interval, Line, Spectrum, Sum, special_c, spectrum, twist_by
from lawayacm.errors import IndeterminateError, InputError, WindowError
from lawayacm.geometry import BL1, BL2, P1xP1, P2

A = [C.H0_VANISHING]


def _spec(rows, chi=None):
    """Spectrum from ``{t: (h0, h1, h2)}`` with exact or (lo, hi) entries."""
    def iv(x):
        return Interval(*x) if isinstance(x, tuple) else Interval.exact(x)

    entries = {t: tuple(iv(x) for x in row) for t, row in rows.items()}
    return Spectrum("P2", (min(rows), max(rows)), entries, chi)


def test_profile_of_kernel():
    sp = spectrum(C.p2_kernel(4), (-14, 6), A)
    p = h1_profile(sp)
    assert p.support == (-5, -4, -3, -2)
    assert (p.k0, p.s, p.l) == (-5, 3, 4)
    assert p.connected and p.definite and not p.is_acm


def test_profile_needs_vanishing_ends():
    sp = spectrum(C.p2_one_away(), (-3, 1))
    with pytest.raises(WindowError):
        h1_profile(sp)
    with pytest.raises(WindowError):
        h1_profile(sp.restrict(-2, 0))


def test_profile_gaps_and_indefinite():
    z = (0, 0, 0)
    rows = {t: z for t in range(0, 9)}
    rows[3], rows[5] = (0, 1, 0), (0, (0, 2), 0)
    p = h1_profile(_spec(rows))
    assert p.support == (3,) and not p.definite
    rows[5] = (0, 2, 0)
    p = h1_profile(_spec(rows))
    assert p.gaps == (4,) and not p.connected


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([C.p2_one_away(), C.q_one_away(1), C.q_extension(3), C.p2_two_away(2)]),
       st.integers(-4, 4))
def test_profile_twist_invariance(e, t):
    base = h1_profile(spectrum(e, (-16, 16), A if e.kind == "P2" else ()))
    moved = h1_profile(spectrum(twist_by(e, t), (-16 - t, 16 - t), A if e.kind == "P2" and t == 0 else ()))
    assert moved.support == tuple(s - t for s in base.support)
    assert moved.l == base.l


def test_initialized():
    assert is_initialized(spectrum(C.p2_one_away(), (-2, 1)))
    assert not is_initialized(spectrum(twist_by(C.p2_one_away(), 1), (-2, 1)))
    with pytest.raises(IndeterminateError):
        is_initialized(_spec({-1: ((0, 1), 0, 0), 0: (1, 0, 0)}))


def test_special_and_k0_bounds():
    assert is_special(P1xP1, P1xP1.divisor(2, 2)) == 2
    assert is_special(P1xP1, P1xP1.divisor(2, 1)) is None
    k = check_k0_bounds(3, -2, 0)
    assert (k.c, k.lower_ok, k.upper_ok) == (1, True, True)
    assert check_k0_bounds(2, -5, 1).lower_ok is False
    with pytest.raises(InputError):
        check_k0_bounds(2, -1, -1)


@pytest.mark.parametrize(
    "e,k0,s",
    [
        (C.p2_one_away(), -2, 0),
        (C.p2_two_away(1), -3, 1),
        (C.p2_two_away(2), -2, 1),
        (C.q_one_away(1), -2, 0),
        (C.q_one_away(2), -1, 0),
        (C.q_two_away(1), -3, 1),
        (C.q_two_away(2, 4), -2, 1),
        (C.q_extension(5), -6, 4),
    ],
    ids=str,
)
def test_c_from_k0_matches_c1(e, k0, s):
    p = h1_profile(spectrum(e, (-20, 16), A if e.kind == "P2" else ()))
    assert (p.k0, p.s) == (k0, s)
    assert check_k0_bounds(e.surface.index, k0, s).c == special_c(e)


def test_weakly_ulrich_conditions_table():
    assert weakly_ulrich_conditions(0) == [1, 2]
    assert weakly_ulrich_conditions(-1) == [2]
    assert weakly_ulrich_conditions(-2) == [0]
    assert weakly_ulrich_conditions(-3) == [0, 1]
    assert weakly_ulrich_conditions(3) == [1, 2]


def test_weakly_ulrich_examples():
    assert is_weakly_ulrich(spectrum(C.p2_one_away(), (-8, 8)))
    assert is_weakly_ulrich(spectrum(C.p2_two_away(2), (-8, 8), A))
    sp = spectrum(C.q_two_away(1), (-10, 10))
    t, i, iv = weakly_ulrich_violation(sp)
    assert (t, i, iv.lo) == (-3, 1, 4)
    assert is_weakly_ulrich(spectrum(twist_by(C.q_two_away(1), -1), (-10, 10)))
    with pytest.raises(IndeterminateError):
        is_weakly_ulrich(_spec({0: (0, (0, 1), 0)}))


def test_trivial_bundle_is_weakly_ulrich():
    # O on P2: h1 vanishes everywhere, h0(O(t)) = 0 for t <= -1, h2(O(t)) = 0 for t >= -2
    assert is_weakly_ulrich(line_spectrum(P2, P2.divisor(0), (-8, 8)))


def test_chi_polynomial_and_roots():
    for l in (2, 3, 7):
        sp = spectrum(C.p2_kernel(l), (-2 * l - 6, 6), A)
        assert integer_roots(chi_polynomial(sp)) == (-l - 2, -1)
        assert is_supernatural(sp)
    assert integer_roots((1, 0, 1)) is None
    assert integer_roots((0, 1, 0)) is None
    assert integer_roots((-1, 0, 4)) is None  # roots +-1/2
    assert is_supernatural(spectrum(C.q_two_away(1), (-10, 10)))
    # O + O(1) on P2 has chi = (t+2)^2, a double root
    assert not is_supernatural(spectrum(Sum((Line(P2.zero()), Line(P2.h))), (-6, 6)))
    with pytest.raises(InputError):
        chi_polynomial(_spec({0: (0, 0, 0)}))


def test_line_support_and_spectrum():
    assert line_h1_support(P1xP1, P1xP1.divisor(3, 0)) == (-3, -2)
    assert line_h1_support(P2, P2.divisor(5)) == ()
    sp = line_spectrum(BL1, BL1.divisor(0, 2))
    assert h1_profile(sp).support == (-1, 0)


def test_classify_lines_p1p1():
    for l in range(1, 5):
        got = classify_laway_lines(P1xP1, l)
        assert got == [P1xP1.divisor(0, l + 1), P1xP1.divisor(l + 1, 0)]
        assert got == classify_laway_lines(P1xP1, l, 3 * l + 8)
    assert classify_laway_lines(P2, 3) == []
    with pytest.raises(InputError):
        classify_laway_lines(P1xP1, 3, 5)
    with pytest.raises(InputError):
        classify_laway_lines(BL1, 1, (12, 3))


def test_bl1_families_readings():
    proof, strict = bl1_families(2, "proof"), bl1_families(2, "strict")
    assert proof(0, 2) and proof(1, 2) and proof(3, -3) and proof(5, -4)
    assert strict(9, -1) and not proof(9, -1)
    with pytest.raises(InputError):
        bl1_families(2, "loose")
    found = [d.coords for d in classify_laway_lines(BL1, 2, (15, 10))]
    assert found == [(0, 2), (1, 2), (3, -3), (5, -4)]


def test_h1_interval_bl1_small_grid():
    for a in range(-9, 10):
        for b in range(-7, 8):
            assert h1_interval_bl1(a, b) == set(line_h1_support(BL1, BL1.divisor(a, b)))


def test_bl2_line_support():
    m = C.bl23_m_divisor(BL2, 3)
    assert line_h1_support(BL2, m) == (-3, -2, -1)
