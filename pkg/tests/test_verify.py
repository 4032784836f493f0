import json

import pytest

from lawayacm.cli import emit
from lawayacm.errors import InputError
from lawayacm.verify import REGISTRY, Detail, Report, verify_theorem

EXPECTED = {
    "P2-1AWAY": "match",
    "P2-2AWAY": "match",
    "P2-KERNEL": "match",
    "P2-QUIVER": "match",
    "Q-LINES": "match",
    "Q-1AWAY": "match",
    "Q-2AWAY": "match",
    "Q-EXT": "mismatch",
    "Q-CONNECTED": "match",
    "Q-QUIVER": "match",
    "BL1-LINES": "match",
    "BL1-RANK2": "match",
    "BL23-M": "match",
    "BL23-EXT": "match",
    "WU-ALL": "match",
    "SN-ALL": "match",
}


def test_registry_ids():
    assert list(REGISTRY) == list(EXPECTED)
    for entry in REGISTRY.values():
        assert entry.anchor and entry.claim


@pytest.mark.parametrize("key", list(EXPECTED))
def test_verdicts_small(key):
    small = {"Q-LINES": 3, "BL1-LINES": 2}.get(key, 4)
    rep = verify_theorem(key, {"l_max": small})
    assert rep.verdict == EXPECTED[key]
    assert rep.details


def test_detail_status_and_verdict_rule():
    assert Detail("x", 1, 1).status == "match"
    assert Detail("x", 1, 2).status == "mismatch"
    rep = Report("T", "anchor", {}, "claim")
    assert rep.verdict == "match"
    rep.check("a", 1, 1)
    rep.check("b", 1, "?", status="indeterminate")
    assert rep.verdict == "indeterminate"
    rep.check("c", 1, 2)
    assert rep.verdict == "mismatch"


def test_q_ext_reports_both_dimensions():
    rep = verify_theorem("Q-EXT", {"l_max": 2})
    dims = [d for d in rep.details if d.claim.endswith("moduli dimension")]
    assert [(d.paper_value, d.computed_value) for d in dims] == [(1, 5), (9, 15)]
    assert rep.computed["l=2"]["moduli_from_quiver_m1"] == 15
    assert any("expected outcome" in n for n in rep.notes)
    text = emit(rep, "table")
    assert "stated 9, computed 15" in text


def test_bl1_reading_switch():
    auto = verify_theorem("BL1-LINES", {"l_max": 2})
    assert auto.computed["matching_reading"] == ["proof"]
    strict = verify_theorem("BL1-LINES", {"l_max": 2, "families": "strict"})
    assert strict.verdict == "mismatch"
    assert strict.counterexamples
    proof = verify_theorem("BL1-LINES", {"l_max": 2, "families": "proof"})
    assert proof.verdict == "match"


def test_notes_on_printed_values():
    assert any("typo" in n for n in verify_theorem("P2-1AWAY").notes)
    assert any("printed divisor" in n for n in verify_theorem("BL23-EXT", {"l_max": 1}).notes)
    assert any("indeterminate by design" in n for n in verify_theorem("Q-2AWAY").notes)


def test_report_json_shape_and_determinism():
    rep = verify_theorem("Q-QUIVER", {"l_max": 2})
    a, b = emit(rep, "json"), emit(verify_theorem("Q-QUIVER", {"l_max": 2}), "json")
    assert a == b
    data = json.loads(a)
    for key in ("id", "anchor", "params", "claim", "computed", "verdict", "counterexamples", "details"):
        assert key in data
    assert data["params"] == {"l_max": 2}
    empty = json.loads(emit(Report("X", "a", {}, "c"), "json"))
    assert empty["verdict"] == "match" and empty["details"] == []


def test_csv_report():
    text = emit(verify_theorem("P2-1AWAY"), "csv")
    assert text.splitlines()[0] == "id,location,claim,paper_value,computed_value,status"


def test_bad_requests():
    with pytest.raises(InputError):
        verify_theorem("NOPE")
    with pytest.raises(InputError):
        verify_theorem("P2-KERNEL", {"l_max": 1})
    with pytest.raises(InputError):
        verify_theorem("Q-LINES", {"depth": 3})
    with pytest.raises(InputError):
        verify_theorem("BL1-LINES", {"families": "loose"})
