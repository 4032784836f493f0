"""The twelve acceptance criteria, one test each, each printing a PASS/FAIL line."""

from itertools import product

import pytest

from lawayacm import constructions as C
from lawayacm.acm import (
    chi_polynomial,
    classify_laway_lines,
    integer_roots,
    is_initialized,
    is_supernatural,
    is_weakly_ulrich,
    line_h1_support,
)
from lawayacm.bundlecalc import Engine, Line, Sum, ext_group_dim, spectrum, twist_by
from lawayacm.geometry import BL2, BL3, P1xP1, P2, SURFACES, chi_rank2, intersect, serre_dual
from lawayacm.linecoh import cohom_line, monomial_count_oracle, section_count
from lawayacm.quiver import BEILINSON_Q, KRONECKER3, DimVector, beilinson_dimvec, euler_form, moduli_dim
from lawayacm.verify import verify_theorem

A = [C.H0_VANISHING]


@pytest.fixture
def report(capsys, request):
    """Call with (ok, message); prints one PASS/FAIL line and asserts."""
    def _report(ok, message=""):
        name = request.node.name.replace("test_", "").replace("_", " ")
        with capsys.disabled():
            print(f"\n[acceptance] {name}: {'PASS' if ok else 'FAIL'}" + (f" ({message})" if message else ""))
        assert ok, message

    return _report


def _rows(sp, twists):
    return [tuple(sp.value(i, t) for i in range(3)) for t in twists]


def test_criterion_01_chi_kunneth(report):
    bad = []
    for a, b in product(range(-30, 31), repeat=2):
        h = cohom_line(P1xP1, P1xP1.divisor(a, b))
        if h.h0 - h.h1 + h.h2 != (a + 1) * (b + 1):
            bad.append((a, b))
    # rank 2 direct sums: Riemann-Roch with c1 = a + b, c2 = a.b against the engine
    eng = Engine()
    for x, y in product(range(-5, 5), repeat=2):
        a, b = P1xP1.divisor(x, y), P1xP1.divisor(y - 1, 2 - x)
        e = Sum((Line(a), Line(b)))
        for t in (-2, 0, 3):
            tri = eng.evaluate(e, t * P1xP1.h)
            chi = tri[0].value - tri[1].value + tri[2].value
            if chi != chi_rank2(P1xP1, a + b, intersect(P1xP1, a, b), t):
                bad.append((x, y, t))
    report(not bad, f"{len(bad)} disagreements")


def test_criterion_02_serre_duality(report):
    bad = []
    for s in SURFACES.values():
        for c in product(range(-15, 16), repeat=s.rank):
            d = s.divisor(*c)
            if cohom_line(s, d).reversed() != cohom_line(s, serre_dual(s, d)):
                bad.append((s.kind, c))
    report(not bad, f"{len(bad)} disagreements over five surfaces")


def test_criterion_03_oracle_equivalence(report, capsys):
    found = {1: [], 2: [], 3: []}
    for a in range(0, 26):
        for n in (1, 2, 3):
            for d in product(range(0, 26), repeat=n):
                if section_count(a, d) != monomial_count_oracle(a, d):
                    found[n].append((a, d))
    for n in (2, 3):
        if found[n]:
            a, d = found[n][0]
            with capsys.disabled():
                print(f"\n[acceptance] closed form vs monomial count, n={n}: {len(found[n])} discrepancies, "
                      f"first a={a} d={d}: {section_count(a, d)} vs {monomial_count_oracle(a, d)}")
    counts = ", ".join(f"n={n}: {len(v)}" for n, v in found.items())
    report(not found[1], f"discrepancies {counts}")


def test_criterion_04_q_lines(report):
    bad = []
    for l in range(1, 13):
        got = classify_laway_lines(P1xP1, l, 3 * l + 8)
        if got != [P1xP1.divisor(0, l + 1), P1xP1.divisor(l + 1, 0)]:
            bad.append((l, "lines"))
        for d in got:
            sup = line_h1_support(P1xP1, d)
            if (sup[0], sup[-1] - sup[0]) != (-l - 1, l - 1):
                bad.append((l, "k0/s"))
    report(not bad, f"l = 1..12, failures {bad}")


def test_criterion_05_p2_one_away(report):
    sp = spectrum(C.p2_one_away(), "-4..0")
    ok = _rows(sp, range(-3, 0)) == [(0, 0, 0), (0, 1, 0), (0, 0, 0)]
    ok = ok and is_initialized(sp) and is_weakly_ulrich(sp)
    report(ok, "Table 1, initialized, weakly Ulrich")


def test_criterion_06_p2_two_away(report):
    sp1 = spectrum(C.p2_two_away(1), (-10, 8), A)
    sp2 = spectrum(C.p2_two_away(2), (-10, 8), A)
    ok = _rows(sp1, range(-4, -1)) == [(0, 0, 0), (0, 2, 0), (0, 2, 0)]
    ok = ok and _rows(sp2, range(-3, 0)) == [(0, 0, 1), (0, 1, 0), (0, 1, 0)]
    wu1 = is_weakly_ulrich(spectrum(twist_by(C.p2_two_away(1).with_assumptions(*A), -1), (-10, 8)))
    ok = ok and wu1 and is_weakly_ulrich(sp2)
    report(ok, "Tables 2 and 3, weakly Ulrich twists")


def test_criterion_07_p2_kernel(report):
    bad = []
    for l in range(2, 11):
        sp = spectrum(C.p2_kernel(l), (-2 * l - 6, 6), A)
        for t in sp.twists:
            want = l if t == -l - 1 else (t + l + 2) * (-t - 1) if -l <= t <= -2 else 0
            if not sp.h(1, t).is_exact or sp.value(1, t) != want:
                bad.append((l, t))
        if not is_supernatural(sp) or integer_roots(chi_polynomial(sp)) != (-l - 2, -1):
            bad.append((l, "supernatural"))
        if sp.value(0, 0) != l + 2:
            bad.append((l, "h0"))
    report(not bad, f"l = 2..10, failures {bad[:5]}")


def test_criterion_08_q_ext(report):
    rep = verify_theorem("Q-EXT", {"l_max": 10})
    bad = []
    for l in range(1, 11):
        E = C.q_extension(l)
        if ext_group_dim(P1xP1, P1xP1.divisor(0, l + 1), P1xP1.divisor(l + 1, 0), 1) != l * l + 2 * l:
            bad.append((l, "ext1"))
        sp = spectrum(E, (-l - 8, l + 6))
        if sp.value(0, 0) != 2 * l + 4:
            bad.append((l, "h0"))
        sup = [t for t in sp.twists if sp.h(1, t).is_nonzero]
        if sup != list(range(-l - 1, -1)):
            bad.append((l, "support"))
    dims = {d.location: (d.paper_value, d.computed_value) for d in rep.details if d.claim.endswith("moduli dimension")}
    for l in range(1, 11):
        stated, derived = dims[f"l={l}"]
        if (stated, derived) != (2 * l * l + 2 * l - 3, 2 * l * l + 4 * l - 1):
            bad.append((l, "dimension values"))
        if l >= 2 and stated == derived:
            bad.append((l, "unexpected agreement"))
    flagged = rep.verdict == "mismatch" and any("expected outcome" in n for n in rep.notes)
    report(not bad and flagged, "moduli dimension discrepancy flagged as expected" if flagged else str(bad[:5]))


def test_criterion_09_bl1_lines(report):
    rep = verify_theorem("BL1-LINES", {"l_max": 10})
    reading = rep.computed["matching_reading"]
    report(rep.verdict == "match" and bool(reading), f"matching reading: {', '.join(reading) or 'none'}")


def test_criterion_10_bl23(report):
    bad = []
    for S in (BL2, BL3):
        for l in range(1, 11):
            m = C.bl23_m_divisor(S, l)
            sp = spectrum(Line(m), (-l - 8, l + 6))
            if [t for t in sp.twists if sp.h(1, t).is_nonzero] != list(range(-l, 0)):
                bad.append((S.kind, l, "M support"))
            if ext_group_dim(S, C.bl23_e1(S), m, 1) != 1:
                bad.append((S.kind, l, "ext1"))
            ext = spectrum(C.bl23_extension(S, l), (-l - 8, l + 6))
            sup = [t for t in ext.twists if ext.h(1, t).is_nonzero]
            undecided = [t for t in ext.twists if not ext.h(1, t).is_zero and not ext.h(1, t).is_nonzero]
            if sup != list(range(-l, 0)) or undecided:
                bad.append((S.kind, l, "extension"))
    report(not bad, f"failures {bad[:5]}")


def test_criterion_11_quiver(report):
    bad = []
    for l in range(1, 11):
        d2 = DimVector((l, l + 2))
        if euler_form(KRONECKER3, d2, d2) != -l * l - 2 * l + 4:
            bad.append(("P2", l))
        q, dq = beilinson_dimvec(P1xP1, l)
        if euler_form(BEILINSON_Q, dq, dq) != -2 * l * l - 4 * l + 2:
            bad.append(("Q", l))
        for m in range(1, 6):
            if moduli_dim(KRONECKER3, d2, m) != m * m * (l * l + 2 * l - 4) + 1:
                bad.append(("P2 moduli", l, m))
            if moduli_dim(BEILINSON_Q, dq, m) != m * m * (2 * l * l + 4 * l - 2) + 1:
                bad.append(("Q moduli", l, m))
        if l >= 2 and moduli_dim(*beilinson_dimvec(P2, l), 1) != l * l + 2 * l - 3:
            bad.append(("kernel dimension", l))
    report(not bad, f"failures {bad[:5]}")


def test_criterion_12_q_one_and_two_away(report):
    one = verify_theorem("Q-1AWAY")
    two = verify_theorem("Q-2AWAY")
    tables = [d for d in one.details if d.location.startswith("Table")]
    chi_level = [d for d in two.details if d.location == "item (iii)"]
    ok = one.verdict == "match" and two.verdict == "match" and len(tables) == 8 and chi_level
    ok = ok and all(d.status == "match" for d in chi_level)
    ok = ok and any("indeterminate by design" in n for n in two.notes)
    report(ok, "Tables 4 and 5 exact; item (iii) at Euler-characteristic level")
