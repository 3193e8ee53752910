import json

import pytest

from unicis.constructions import build_delta, build_omega
from unicis.count import count_cis_oracle
from unicis.graph import Graph, GraphError, attach_path, canonical_hex, cut_vertices
from unicis.verification import (
    family_codes,
    pendant_profile,
    structural_checks,
    verify_closed_form_differences,
    verify_main_theorem,
    verify_structural_properties,
    wiener_correlation_report,
)


def sun(g: int) -> Graph:
    """Cycle C_g with one pendant edge at every cycle vertex."""
    out = Graph.cycle(g)
    for v in range(g):
        out, _ = attach_path(out, v, 2)
    return out


# ---------------------------------------------------------------- theorem sweep


def test_theorem_small_range_all_match():
    rep = verify_main_theorem(5, 9)
    assert rep["complete"] and rep["ok"]
    assert rep["summary"].get("mismatch", 0) == 0
    cells = {(c["n"], c["c"]): c for c in rep["cells"]}
    assert len(cells) == sum(n - 3 for n in range(5, 10))
    assert all(c["oracle_recheck"] for c in cells.values())


def test_theorem_n8_cells():
    cells = {c["c"]: c for c in verify_main_theorem(8, 8)["cells"]}
    assert cells[5]["empirical_labels"] == ["delta"]
    assert cells[4]["empirical_labels"] == ["omega"]
    assert sorted(cells[3]["empirical_labels"]) == ["delta", "omega"]
    assert cells[2]["empirical_labels"] == ["delta"]
    assert cells[1]["empirical_labels"] == ["delta"]


def test_theorem_9_4_is_omega():
    cell = next(c for c in verify_main_theorem(9, 9)["cells"] if c["c"] == 4)
    assert cell["empirical_labels"] == ["omega"]
    assert cell["verdict"] == "match"


def test_theorem_uncovered_residue_is_extrapolated():
    cell = next(c for c in verify_main_theorem(11, 11)["cells"] if c["c"] == 6)
    assert cell["extrapolated"]
    assert cell["verdict"].startswith("extrapolated-")


def test_theorem_counterexample_at_10_5():
    # The balanced girth-5 sun beats both constructions in U(10, 5).
    rep = verify_main_theorem(10, 10)
    cell = next(c for c in rep["cells"] if c["c"] == 5)
    assert cell["verdict"] == "mismatch"
    assert not rep["ok"]
    ce = cell["counterexamples"][0]
    assert ce["girth"] == 5
    g = Graph.from_edges(10, ce["edges"])
    assert canonical_hex(g) == canonical_hex(sun(5))
    assert count_cis_oracle(g) == 187
    assert len(cut_vertices(g)) == 5
    assert int(cell["predicted_values"]["delta"]) == int(cell["predicted_values"]["omega"]) == 179


def test_theorem_time_budget_marks_incomplete():
    rep = verify_main_theorem(5, 12, time_budget=0.0)
    assert not rep["complete"]


def test_theorem_report_is_deterministic():
    a = json.dumps(verify_main_theorem(5, 8))
    b = json.dumps(verify_main_theorem(5, 8))
    assert a == b
    assert "timing" not in json.loads(a)
    assert "timing" in verify_main_theorem(5, 5, timing=True)


def test_theorem_rejects_bad_range():
    with pytest.raises(GraphError):
        verify_main_theorem(3, 5)
    with pytest.raises(GraphError):
        verify_main_theorem(8, 6)


# ---------------------------------------------------------------- identities


def test_identities_small_m():
    rep = verify_closed_form_differences(2)
    rows = {(r["identity"].split(",")[0], r["m"]): r for r in rep["rows"]}
    assert rows[("n=4m+2", 1)]["difference"] == "1"
    assert rows[("n=4m+2", 1)]["N_delta"] == "32" and rows[("n=4m+2", 1)]["N_omega"] == "33"
    assert rows[("n=4m+1", 1)]["difference"] == "0"
    assert rows[("n=4m+1", 1)]["N_delta"] == "21"
    assert rows[("n=5m-2", 2)]["difference"] == "0"
    assert rows[("n=5m-2", 2)]["N_delta"] == "85"
    assert rows[("n=5m-2", 1)]["skipped"]


def test_identities_up_to_25():
    rep = verify_closed_form_differences(25)
    assert rep["ok"]
    assert rep["checked"] == 4 * 25 - 2


def test_identities_reject_bad_m():
    with pytest.raises(GraphError):
        verify_closed_form_differences(0)


# ---------------------------------------------------------------- structure


def test_structure_7_4():
    rep = verify_structural_properties(7, 4)
    assert rep["ok"]
    for row in rep["optimizers"]:
        assert row["checks"]["at_most_one_branching_vertex"]
        assert row["checks"]["branching_vertex_on_cycle"]


def test_structure_12_7():
    rep = verify_structural_properties(12, 7)
    assert rep["ok"]


def test_structure_10_5_fails_girth_only():
    rep = verify_structural_properties(10, 5)
    assert not rep["ok"]
    bad = [r for r in rep["optimizers"] if not r["ok"]]
    assert len(bad) == 1
    failed = [k for k, v in bad[0]["checks"].items() if not v]
    assert failed == ["girth_3_or_4"]


def test_structural_checks_on_constructions():
    for g in (build_delta(9, 5), build_omega(10, 5), build_omega(9, 5)):
        assert all(structural_checks(g).values())


def test_structural_checks_flag_two_branching_vertices():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4), (1, 5), (1, 6)])
    checks = structural_checks(g)
    assert not checks["at_most_one_branching_vertex"]


def test_pendant_profile_of_omega_10_5():
    prof = pendant_profile(build_omega(10, 5))
    assert prof["girth"] == 4
    assert prof["orders"] == [[2], [2], [3, 2], [2]]
    assert len(prof["branching"]) == 1


# ---------------------------------------------------------------- Wiener comparison


def test_wiener_9_6_same():
    rep = wiener_correlation_report(9, 6)
    assert rep["verdict"] == "same"
    code = canonical_hex(build_delta(9, 6))
    assert rep["max_N"]["codes"] == [code] == rep["min_W"]["codes"]


def test_wiener_cycle_class():
    rep = wiener_correlation_report(8, 0)
    assert rep["verdict"] == "same" and rep["class_size"] == 1


def test_family_codes():
    codes = family_codes(11, 6)
    assert set(codes) == {"delta"}
    assert set(family_codes(10, 5)) == {"delta", "omega"}
