import json

import pytest

from sqplinks import golden
from sqplinks.invariants import alexander, least_obstructed_n
from sqplinks.tables import (
    PQR,
    TABLE_NAMES,
    _conway_implies,
    build_table,
    nabla_table,
    thresholds_table,
)
from sqplinks.three_braids import b_pqr

# printed Alexander entries that contradict the printed Conway entries
ALEXANDER_MISPRINTS = {
    "(1,2,4)", "(1,2,5)", "(1,4,4)", "(2,3,4)", "(2,3,5)",
    "(2,5,5)", "(3,3,4)", "(3,5,5)", "(4,5,5)", "(5,5,5)",
}


@pytest.mark.parametrize("name, rows", [("forms", 26), ("f", 8), ("nabla", 35), ("baader", 25)])
def test_clean_tables(name, rows):
    t = build_table(name)
    assert len(t.rows) == rows and t.ok


def test_alexander_table_diffs_are_exactly_the_misprints():
    t = build_table("alexander")
    assert len(t.rows) == 35
    assert {r.key for r in t.diffs} == ALEXANDER_MISPRINTS
    assert all("contradicts the printed Conway entry" in r.note for r in t.diffs)


def test_conway_entries_determine_the_computed_alexander_polynomials():
    for pqr in PQR:
        assert _conway_implies(golden.nabla(*pqr)) == alexander(b_pqr(*pqr))


def test_thresholds_table_has_one_diff():
    t = build_table("thresholds")
    (d,) = t.diffs
    assert (d.key, d.computed, d.expected) == ("(2,3,5)", "n >= 4", "n >= 3")
    # even the misprinted polynomial does not give n >= 3
    assert least_obstructed_n(golden.alexander(2, 3, 5), 50) != 3


def test_parallel_build_matches_serial():
    assert nabla_table(jobs=2) == nabla_table(jobs=1)
    assert thresholds_table(jobs=2) == thresholds_table(jobs=1)


def test_max_pqr_restricts_rows():
    t = build_table("nabla", max_pqr=3)
    assert len(t.rows) == 10 and t.ok
    with pytest.raises(ValueError):
        build_table("nabla", max_pqr=6)


def test_unknown_table():
    with pytest.raises(KeyError):
        build_table("nope")


def test_json_and_text_output():
    t = build_table("thresholds")
    j = json.loads(json.dumps(t.to_json()))
    assert j["table"] == "thresholds" and j["diff_count"] == 1 and len(j["rows"]) == 35
    text = t.format()
    assert text.splitlines()[0] == "table thresholds: 35 rows, 1 diffs"
    assert sum("DIFF" in line for line in text.splitlines()) == 1


def test_table_names():
    assert set(TABLE_NAMES) == {"forms", "f", "nabla", "alexander", "thresholds", "baader"}
