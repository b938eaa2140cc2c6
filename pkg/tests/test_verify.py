"""Reports over whole languages: clustering of return words and agreement
between induction chains and brute-force first returns."""

import random

import pytest

from ietbwt.errors import DomainError
from ietbwt.iet import diet_to_iet
from ietbwt.verify import (
    WordCheck,
    VerifyReport,
    verify_induction_consistency,
    verify_perfect_clustering_symmetric,
    verify_return_clustering,
)

from conftest import random_rational_iet


def test_return_clustering_e5(e5):
    report = verify_return_clustering(e5, 2, 8)
    assert report.ok
    assert report.failures() == ()
    by_word = {c.word: c for c in report.checks}
    assert by_word["b"].returns == ("b", "bc")
    assert by_word["b"].complete
    assert by_word["a"].returns == ("ae",)


def test_return_clustering_golden(golden):
    report = verify_return_clustering(golden, 2, 10)
    assert report.ok


def test_return_clustering_diet(diet421):
    report = verify_return_clustering(diet_to_iet(diet421), 2, 8)
    assert report.ok


def test_return_clustering_random():
    rng = random.Random(523)
    for _ in range(4):
        t = random_rational_iet(rng, rng.choice((3, 4)))
        assert verify_return_clustering(t, 2, 8).ok


def test_perfect_clustering_symmetric(golden, sym3):
    assert verify_perfect_clustering_symmetric(golden, 2, 10).ok
    assert verify_perfect_clustering_symmetric(sym3, 2, 8).ok


def test_perfect_clustering_requires_symmetric(e5):
    with pytest.raises(DomainError):
        verify_perfect_clustering_symmetric(e5, 1, 4)


def test_induction_consistency_e5(e5):
    report = verify_induction_consistency(e5, 2, 8, samples=2)
    assert report.ok
    by_word = {c.word: c for c in report.checks}
    assert by_word["c"].kinds == (
        "right_merge",
        "split",
        "split",
        "left_top",
        "left_bottom",
    )
    assert by_word["ae"].set_match
    assert by_word["ae"].point_match


def test_induction_consistency_diet(diet421):
    report = verify_induction_consistency(diet_to_iet(diet421), 2, 8, samples=2)
    assert report.ok


def test_report_json_shape(golden):
    report = verify_return_clustering(golden, 1, 6)
    data = report.to_json()
    assert data["kind"] == "return_clustering"
    assert data["ok"] is True
    assert data["failures"] == []
    assert data["checked"] == len(report.checks)
    assert all("word" in c for c in data["checks"])


def test_report_failure_paths():
    bad = WordCheck("w", ("ba", "aba"), True, ("aba",))
    good = WordCheck("v", ("ab",), True, ())
    report = VerifyReport("return_clustering", (bad, good))
    assert not report.ok
    assert report.failures() == ("w",)
    assert not bad.ok and good.ok
