import json

import pytest

from qshuffle_pbw import verify
from qshuffle_pbw.catalan import catalan_element, substituted_catalan
from qshuffle_pbw.freealg import UNIT, Element, X, Y
from qshuffle_pbw.report import IdentityCheck, VerificationReport
from qshuffle_pbw.scalar import q_int

EXPECTED_IDS = {
    "eq-6.3", "eq-6.4", "ex-6.6", "prop-6.7", "thm-7.1", "ex-4.4", "lem-4.3", "lem-4.4",
    "lem-4.8", "eq-4.6", "eq-4.7", "lem-7.2", "lem-9.3", "lem-7.3", "cor-6.8", "cor-6.9",
    "eq-8.1", "cor-8.2", "cor-8.4", "eq-8.2", "eq-8.3", "lem-9.4", "eq-9.2", "eq-9.3",
    "cor-9.7", "eq-9.1", "appendix-A1", "appendix-A2", "appendix-A3", "appendix-A4",
    "pbw-damiani", "pbw-beck", "pbw-xcy", "pbw-alternating",
}


@pytest.fixture
def temp_check():
    added = []

    def add(check_id, fn, bound=lambda N: N):
        verify.register(check_id, "temporary", bound)(fn)
        added.append(check_id)

    yield add
    for cid in added:
        verify.REGISTRY.pop(cid, None)


def test_registry_is_complete():
    assert set(verify.all_ids()) == EXPECTED_IDS


def test_suite_at_degree_three_passes():
    report = verify.run_suite(3, 2)
    assert report.passed, [(c.id, c.detail) for c in report.checks if not c.passed]
    assert sorted(c.id for c in report.checks) == sorted(EXPECTED_IDS)
    assert all(c.elapsed >= 0 for c in report.checks)


def test_report_is_deterministic_without_timing():
    a = json.dumps(verify.run_suite(3, 2).to_json(timing=False), sort_keys=True)
    b = json.dumps(verify.run_suite(3, 2).to_json(timing=False), sort_keys=True)
    assert a == b


def test_only_and_bounds():
    report = verify.run_suite(3, 2, only=["thm-7.1"], bounds={"thm-7.1": 2})
    assert [c.id for c in report.checks] == ["thm-7.1"]
    assert report.checks[0].degree == 2
    with pytest.raises(KeyError):
        verify.run_suite(3, 2, only=["nope"])


def test_trivial_edge_of_alternating_sum_is_included():
    assert verify.run_check("eq-9.3", 1).detail == "2 comparisons"


@pytest.mark.parametrize("q0", [0, 1, -1])
def test_bad_specialization_rejected(q0):
    with pytest.raises(ValueError):
        verify.run_suite(3, q0)


def test_witness_is_lhs_minus_rhs(temp_check):
    lhs, rhs = Element({"xy": q_int(2)}), Element({"xy": 1, "yx": 1})

    def bad(bound):
        yield "fine", X, X
        yield "broken", lhs, rhs

    temp_check("tmp-broken", bad)
    r = verify.run_check("tmp-broken", 3)
    assert not r.passed and r.detail.startswith("broken")
    assert rhs + r.witness == lhs


def test_exceptions_become_failures(temp_check):
    def boom(bound):
        raise ZeroDivisionError("nope")
        yield

    temp_check("tmp-boom", boom)
    r = verify.run_check("tmp-boom", 3)
    assert not r.passed and r.witness == UNIT and "ZeroDivisionError" in r.detail


def test_mutation_is_detected():
    two = q_int(2)
    corrupted = Element({"xyxy": two ** 2, "xxyy": two * two ** 2})
    assert corrupted != catalan_element(2)
    with substituted_catalan(2, corrupted):
        report = verify.run_suite(4, 2, only=["thm-7.1", "eq-8.1"])
    for c in report.checks:
        assert not c.passed and not c.witness.is_zero()
    assert verify.run_suite(4, 2, only=["thm-7.1", "eq-8.1"]).passed


def test_failing_check_needs_witness():
    with pytest.raises(ValueError):
        IdentityCheck("x", 1, "fail")
    with pytest.raises(ValueError):
        IdentityCheck("x", 1, "maybe")


def test_report_merge():
    a = VerificationReport(3, 2, [IdentityCheck("b", 1, "pass")])
    b = VerificationReport(3, 2, [IdentityCheck("a", 1, "fail", witness=Y)])
    m = a.merge(b)
    assert [c.id for c in m.checks] == ["a", "b"] and not m.passed
    assert m.summary() == {"total": 2, "pass": 1, "fail": 1}
    with pytest.raises(ValueError):
        m.merge(a)
    assert m.to_json(timing=False)["checks"][0]["witness"]["terms"][0]["word"] == "y"
