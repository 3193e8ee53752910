"""Acceptance gate: every criterion at its stated tolerance (all exact).

Run with ``pytest tests/test_acceptance.py -v``; a summary with one PASS/FAIL
line per criterion is printed at the end of the session.
"""

import os
import random

import pytest

from acceptance_log import criterion
from unicis.constructions import build_delta, build_omega
from unicis.count import count_cis, count_cis_oracle, count_cis_rooted, count_cis_unicyclic
from unicis.enumeration import EnumerationQuery, enumerate_unicyclic
from unicis.generators import random_unicyclic
from unicis.graph import Graph, canonical_hex, cut_vertices, decompose_unicyclic
from unicis.transforms import LEMMAS, check_outcome, random_instance
from unicis.verification import verify_closed_form_differences, verify_main_theorem, wiener_correlation_report

WORKERS = int(os.environ.get("UNICIS_WORKERS", os.cpu_count() or 1))


def test_1_theorem_sweep():
    with criterion("1 theorem sweep 5<=n<=12, 1<=c<=n-3") as detail:
        rep = verify_main_theorem(5, 12, workers=WORKERS)
        cells = {(c["n"], c["c"]): c for c in rep["cells"]}
        assert rep["complete"]
        assert len(cells) == sum(n - 3 for n in range(5, 13))
        for nc in [(11, 6), (12, 7)]:
            assert cells[nc]["verdict"].startswith("extrapolated-"), f"{nc} not extrapolated"
        detail.append(", ".join(f"{k}={v}" for k, v in rep["summary"].items()))
        bad = [c for c in rep["cells"] if c["verdict"] == "mismatch"]
        assert not bad, "mismatch at " + "; ".join(
            f"(n={c['n']}, c={c['c']}): predicted {c['predicted']} N={c['predicted_values']}, "
            f"found {c['empirical_labels']} girth {[x['girth'] for x in c['counterexamples']]} N={c['value']}"
            for c in bad)
        for nc in [(5, 1), (8, 3), (10, 5)]:
            assert sorted(cells[nc]["empirical_labels"]) == ["delta", "omega"], f"tie {nc}"


def test_2_closed_form_identities():
    with criterion("2 closed-form identities 1<=m<=25") as detail:
        rep = verify_closed_form_differences(25, cross_check=False)
        bad = [r for r in rep["rows"] if r.get("ok") is False]
        assert not bad, f"failed rows: {bad[:3]}"
        skipped = [r for r in rep["rows"] if "skipped" in r]
        detail.append(f"{rep['checked']} rows exact; {len(skipped)} rows have no construction (m=1, c=n-5)")


def test_3_oracle_equivalence():
    with criterion("3 decomposition counter == subset oracle") as detail:
        exhaustive = 0
        for n in range(3, 10):
            for g in enumerate_unicyclic(EnumerationQuery(n)):
                assert count_cis_unicyclic(decompose_unicyclic(g)) == count_cis_oracle(g), g.edges()
                exhaustive += 1
        rng = random.Random("acceptance-3")
        for _ in range(1000):
            g = random_unicyclic(rng.randint(10, 18), rng)
            assert count_cis_unicyclic(decompose_unicyclic(g)) == count_cis_oracle(g), g.edges()
        detail.append(f"{exhaustive} exhaustive graphs (n<=9) + 1000 random (10<=n<=18)")


@pytest.mark.parametrize("lemma", LEMMAS)
def test_4_lemma_suite(lemma):
    with criterion(f"4 lemma suite {lemma} (500 instances, n<=14)") as detail:
        rng = random.Random(f"{lemma}:0")
        deltas = cuts = claims = order = 0
        for _ in range(500):
            out = random_instance(lemma, rng)
            order = max(order, out.before.n)
            res = check_outcome(out)
            deltas += not res["delta_ok"]
            cuts += not res["cut_ok"]
            claims += not res["claim_ok"]
        detail.append(f"max order {order}, sign-claim violations {claims}")
        assert order <= 14
        assert deltas == 0 and cuts == 0, (
            f"{deltas} delta mismatches, {cuts} cut violations, {claims} sign-claim violations of 500")


def test_4b_girth_reduce_exact_delta():
    # Companion line for the girth reduction: the same 500 instances with the
    # cycle-arc term counted directly instead of by the published triple sum.
    with criterion("4b girth-reduce with directly counted arc term") as detail:
        rng = random.Random("girth-reduce:0")
        bad = 0
        for _ in range(500):
            out = random_instance("girth-reduce", rng)
            actual = count_cis_oracle(out.after[0]) - count_cis_oracle(out.before)
            bad += out.details["exact_delta"] != actual
        assert bad == 0, f"{bad} mismatches"
        detail.append("500/500 exact")


def test_5_wiener_comparison():
    with criterion("5 Wiener comparison U(13,8) and U(9,6)") as detail:
        small = wiener_correlation_report(9, 6, WORKERS)
        delta96 = canonical_hex(build_delta(9, 6))
        assert small["max_N"]["codes"] == [delta96] == small["min_W"]["codes"], "U(9,6) sets differ"
        big = wiener_correlation_report(13, 8, WORKERS)
        detail.append(f"U(13,8) max-N {big['max_N']['labels']} N={big['max_N']['value']}, "
                      f"min-W {big['min_W']['labels']}")
        omega = canonical_hex(build_omega(13, 8))
        delta = canonical_hex(build_delta(13, 8))
        assert big["min_W"]["codes"] == [delta], f"min-W set is {big['min_W']['labels']}"
        assert big["max_N"]["codes"] == [omega], (
            f"max-N set over U(13,8) is {big['max_N']['labels']} with N={big['max_N']['value']}, "
            f"N(Omega_13,8)={count_cis(build_omega(13, 8))}")
        assert big["verdict"] == "different"


def test_6_closed_forms():
    with criterion("6 path and cycle closed forms") as detail:
        for n in range(1, 61):
            p = Graph.path(n)
            assert count_cis(p) == n * (n + 1) // 2, n
            assert count_cis_rooted(p, 0) == n, n
            if n >= 2:
                assert len(cut_vertices(p)) == max(n - 2, 0), n
        for n in range(3, 31):
            c = Graph.cycle(n)
            assert count_cis(c) == n * (n - 1) + 1, n
            if n <= 20:
                assert count_cis_oracle(c) == n * (n - 1) + 1, n
            assert cut_vertices(c) == set(), n
        detail.append("P_n n<=60, C_n n<=30 (oracle n<=20)")
