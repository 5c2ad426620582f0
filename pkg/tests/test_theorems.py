import json

import pytest

from conftest import CHAIN, NEG_SWAP, NOT1
from monobn import embedmono, theorems
from monobn.asyncdyn import distance
from monobn.constructions import exp_diameter_monotone, gray_code_network, random_monotone, random_no_negative_loop
from monobn.netcore import BooleanNetwork, SizeError
from monobn.theorems import (
    check_embedding_suite,
    check_fixed_point_counts,
    check_monotone_reach,
    check_robert,
    run_corpus,
    run_suite,
)

EMBEDDING_CHECKS = [
    "host-monotone",
    "mirror-fixed-points",
    "outer-layers-collapse",
    "two-step-transitions",
    "distance-doubling",
    "mirror-identity",
]


class TestRobert:
    def test_chain(self):
        r = check_robert(CHAIN)
        assert r.passed and not r.skipped
        assert r.checks[0].detail is None

    def test_constant(self):
        r = check_robert(BooleanNetwork.constant(3, 6))
        assert r.passed and not r.skipped

    def test_identity_not_applicable(self):
        r = check_robert(BooleanNetwork.identity(2))
        assert r.skipped and r.passed and r.checks == []

    def test_cap(self):
        with pytest.raises(SizeError):
            check_robert(BooleanNetwork.constant(13))


class TestMonotoneReach:
    @pytest.mark.parametrize("seed", range(5))
    def test_random(self, seed):
        assert check_monotone_reach(random_monotone(4, seed)).passed

    def test_identity(self):
        assert check_monotone_reach(BooleanNetwork.identity(3)).passed

    def test_contrast_with_long_paths(self):
        w = exp_diameter_monotone(3)
        r = check_monotone_reach(w.network)
        assert r.passed and not r.skipped
        assert distance(w.network, w.start, w.end) == 14 > w.network.n

    def test_not_monotone(self):
        assert check_monotone_reach(NOT1).skipped


class TestEmbeddingSuite:
    def test_gray(self):
        r = check_embedding_suite(gray_code_network(3).network)
        assert [c.id for c in r.checks] == EMBEDDING_CHECKS
        assert r.passed

    def test_identity(self):
        r = check_embedding_suite(BooleanNetwork.identity(2))
        assert r.passed
        assert r.checks[1].detail == {"host_fixed_points_outside_omega": 2}

    @pytest.mark.parametrize("seed", range(10))
    def test_random(self, seed):
        assert check_embedding_suite(random_no_negative_loop(3, seed)).passed

    def test_negative_loop_not_applicable(self):
        assert check_embedding_suite(NOT1).skipped

    def test_detects_broken_embedding(self, monkeypatch):
        real = embedmono.embed

        def broken(f, force=False):
            fp = real(f, force)
            t = fp.tables.copy()
            # flip the first-half output on the all-zeros state
            t[0, 0] ^= 1
            return BooleanNetwork(fp.n, t)

        monkeypatch.setattr(theorems, "embed", broken)
        r = check_embedding_suite(gray_code_network(2).network)
        failed = {c.id for c in r.failures()}
        assert {"outer-layers-collapse", "mirror-identity"} <= failed
        cex = next(c for c in r.checks if c.id == "outer-layers-collapse").counterexample
        assert cex["z"] == "0000"

    def test_detects_wrong_transition_case(self, monkeypatch):
        real = embedmono.embed

        def broken(f, force=False):
            fp = real(f, force)
            t = fp.tables.copy()
            # f(00) = 01: drop the route (00,11) -> (01,11), keep (00,11) -> (00,10)
            assert t[1, 0b1100] == 1
            t[1, 0b1100] = 0
            return BooleanNetwork(fp.n, t)

        monkeypatch.setattr(theorems, "embed", broken)
        r = check_embedding_suite(gray_code_network(2).network)
        failed = {c.id for c in r.failures()}
        assert "two-step-transitions" in failed
        assert "distance-doubling" not in failed


class TestFixedPointCounts:
    def test_negative_cycle_only(self):
        r = check_fixed_point_counts(NEG_SWAP)
        assert [c.id for c in r.checks] == ["at-most-one-fixed-point"]
        assert r.passed

    def test_identity(self):
        r = check_fixed_point_counts(BooleanNetwork.identity(3))
        assert [c.id for c in r.checks] == ["at-least-one-fixed-point"]
        assert r.passed

    def test_acyclic_both(self):
        r = check_fixed_point_counts(CHAIN)
        assert len(r.checks) == 2 and r.passed

    def test_both_cycle_signs_skipped(self):
        f = BooleanNetwork.from_function(2, lambda x: (x[0] ^ x[1], 0))
        r = check_fixed_point_counts(f)
        assert r.skipped

    def test_failing_check_carries_counterexample(self):
        r = theorems.VerificationReport("x", {})
        r.checks.append(theorems.CheckRecord("c", False, {"x": "01"}))
        assert not r.passed
        assert r.to_dict()["checks"][0]["counterexample"] == {"x": "01"}


class TestCorpus:
    def test_embedding(self):
        reports = run_corpus("embedding", 100, 3, 0)
        assert len(reports) == 100 and all(r.passed and not r.skipped for r in reports)

    def test_all_gives_four_reports(self):
        reports = run_corpus("all", 1, 2, 7)
        assert [r.suite for r in reports] == list(theorems.SUITES)
        assert all(r.instance["seed"] == 7 for r in reports)

    def test_robert(self):
        reports = run_corpus("robert", 50, 6, 0)
        assert len(reports) == 50 and all(r.passed and not r.skipped for r in reports)

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_corpus("nope", 1, 2, 0)
        with pytest.raises(ValueError):
            run_suite("nope", CHAIN)

    def test_reports_replay(self):
        a = [r.to_dict(timing=False) for r in run_corpus("all", 3, 3, 5)]
        b = [r.to_dict(timing=False) for r in run_corpus("all", 3, 3, 5)]
        assert json.dumps(a) == json.dumps(b)

    def test_summary(self):
        reports = run_suite("all", BooleanNetwork.identity(2))
        s = theorems.summarize(reports)
        assert s["reports"] == 4 and s["failed"] == 0 and s["skipped"] == 1
