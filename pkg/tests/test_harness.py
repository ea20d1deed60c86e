from __future__ import annotations

import json

from kneserlab import harness as h
from kneserlab.exactcount import kappa_backtrack


def test_report_sorting_and_ranks():
    rep = h.ExperimentReport("demo", {"n": 5})
    rep.add("b", 10)
    rep.add("a", 10)
    rep.add("c", 30)
    rep.add("d", None)
    rep.finalize()
    assert [r.signature for r in rep.rows] == ["c", "a", "b", "d"]
    assert [r.rank for r in rep.rows] == [1, 2, 2, 0]


def test_report_serialization_is_lossless_and_deterministic():
    big = 3**200
    rep = h.ExperimentReport("demo", {"n": 5})
    rep.add("x", big, ratio=h.Fraction(7, 3))
    rep.check("claim", True, "ok")
    rep.observe("note", False, "at this n")
    rep.duration = 1.5
    rep.finalize()
    data = json.loads(rep.to_json())
    assert data["rows"][0]["count"] == str(big)
    assert data["rows"][0]["extra"]["ratio"] == "7/3"
    assert "duration_seconds" not in data
    assert data["passed"] is True
    assert rep.to_json() == rep.to_json()
    assert "duration_seconds" in json.loads(rep.to_json(timing=True))
    csv_text = rep.to_csv()
    assert str(big) in csv_text and csv_text.splitlines()[0].startswith("section,")


def test_report_failure_flags():
    rep = h.ExperimentReport("demo", {})
    rep.observe("x", False)
    assert rep.passed
    rep.check("y", False, "boom")
    assert not rep.passed and rep.failures()[0].claim == "y"


def test_verify_k2_star_case():
    rep = h.verify_k2(5, 2, 1)
    assert rep.passed
    assert rep.rows[0].count == 16 and rep.rows[0].extra["maximizers"] == 5


def test_verify_k2_petersen_is_an_observation():
    rep = h.verify_k2(5, 2, 1, ks=(3,))
    assert rep.passed  # nothing asserted for k = 3 below the threshold
    obs = {v.claim: v for v in rep.verdicts}
    assert obs["complete-hypergraph-vs-star-count"].kind == "observe"
    assert "120" in obs["complete-hypergraph-vs-star-count"].detail


def test_exhaustive_max_sharding_is_order_stable():
    a = h.exhaustive_max(4, 2, 1, 2, workers=1)
    b = h.exhaustive_max(4, 2, 1, 2, workers=2)
    assert a[0] == b[0] == 8
    assert [H.edges for H in a[1]] == [H.edges for H in b[1]]


def test_verify_k4_small():
    rep = h.verify_k4(8, 3, 2)
    assert rep.passed
    assert {r.signature: r.count for r in rep.rows} == {"y=0": 28896, "y=1": 29376}


def test_verify_k4_degenerate_ell_one():
    rep = h.verify_k4(6, 3, 1)
    assert rep.passed and [r.signature for r in rep.rows] == ["y=0"]


def test_verify_identities_with_brute_force():
    rep = h.verify_identities(10, 4, 2, 3)
    assert rep.passed
    assert any(v.claim == "coverage-matches-brute-force" for v in rep.verdicts)


def test_brute_coverage_counts_agree():
    from kneserlab.closedform import coverage_counts

    cc = coverage_counts(9, 4, 1, 4)
    brute = h.brute_coverage_counts(9, 4, 1, 4)
    for name in "ABCDE":
        assert list(getattr(cc, name)) == brute[name]


def test_verify_product():
    rep = h.verify_product(seed=3, trials=200)
    assert rep.passed
    assert sum(r.count for r in rep.rows) == 200 + len(h.boundary_product_instances())


def test_explore_single_candidate():
    rep = h.explore_conjecture(7, 3, 5, 2)
    assert rep.passed
    assert len(rep.rows) == 1 and rep.rows[0].signature.startswith("sig=0 ")


def test_explore_two_candidates():
    rep = h.explore_conjecture(7, 4, 5, 3)
    assert rep.passed
    assert sorted(r.extra["cover"] != [] for r in rep.rows) == [True, True]
    assert all(v.kind == "observe" for v in rep.verdicts if v.claim.startswith("winner"))


def test_cross_validate_deterministic_and_passing():
    a = h.cross_validate(seed=1, trials=40)
    b = h.cross_validate(seed=1, trials=40)
    assert a.passed and a.to_json() == b.to_json()


def test_cross_validate_zero_trials():
    rep = h.cross_validate(seed=5, trials=0)
    assert rep.passed and rep.rows == []


def test_cross_validate_negative_control():
    def corrupted(H, k, ell):
        return kappa_backtrack(H, k, ell) + 1

    rep = h.cross_validate(seed=2, trials=10, kappa_fn=corrupted)
    assert not rep.passed
    assert rep.failures()[0].claim == "backtrack-equals-chromatic"
    assert len(rep.rows) == 10
