"""
Tests for the identity verification suite.
"""

import pytest

from classes import BaseIdentityCheck, ClassContext, IdentityVerifier, default_checks, verify_identities
from classes.checks import PairingCheck
from errors import NotComplete, NotDivisible
from intersect import CycleClass


class AlwaysFails(PairingCheck):
    def __init__(self):
        super().__init__("always-fails", "test", "[X] = 0")

    def sides(self, context):
        return CycleClass.fundamental(context.fan), CycleClass.zero(context.fan)


class RaisesViolation(BaseIdentityCheck):
    def __init__(self):
        super().__init__("raises", "test", "never completes")

    def evaluate(self, context):
        raise NotDivisible("not divisible by (1 + y)", {"failed_at": 1})


class TestSuite:
    @pytest.mark.parametrize(
        "name", ["p2_fan", "p1xp1_fan", "t2_fan", "t3_fan", "t5_fan", "cube_fan", "p3_fan"]
    )
    def test_all_identities_hold(self, name, request):
        report = verify_identities(request.getfixturevalue(name))
        failed = [r.name for r in report.results if not r.passed]
        assert failed == []
        assert report.all_passed

    def test_result_layout(self, t3_fan):
        report = verify_identities(t3_fan)
        assert len(report.results) == len(default_checks()) == 17
        assert report.lattice_rank == 2
        assert {r.tag for r in report.results} == {
            "duality", "t-class", "decomposition", "specialization", "degree", "cross-path",
        }
        assert len({r.name for r in report.results}) == 17

    def test_degree_values_are_reported(self, p2_fan):
        report = verify_identities(p2_fan)
        ehler = next(r for r in report.results if r.name == "ehler-degree")
        assert ehler.lhs == ehler.rhs == "3"

    def test_incomplete_fan(self, quadrant_fan):
        with pytest.raises(NotComplete):
            verify_identities(quadrant_fan)


class TestFailures:
    def test_witness(self, p2_fan):
        report = IdentityVerifier([AlwaysFails()]).verify(p2_fan)
        (result,) = report.results
        assert not report.all_passed
        assert not result.passed
        assert len(result.witness) == 2
        assert result.lhs == "1" and result.rhs == "0"
        assert result.detail == "[X] = 0"

    def test_violation_becomes_failed_result(self, p2_fan):
        result = RaisesViolation().run(ClassContext(p2_fan))
        assert not result.passed
        assert result.detail.startswith("NotDivisible")

    def test_text_summary(self, p2_fan):
        report = IdentityVerifier([AlwaysFails()]).verify(p2_fan)
        assert "FAIL" in report.to_text()
        assert report.to_text().endswith("identity violations found")
