import random
from fractions import Fraction

import pytest

from sqtriad import identities
from sqtriad.identities import CASES, IdentityCase, run_case, run_identities


def test_all_cases_zero():
    report = run_identities(100, 1)
    assert report.all_zero
    assert [r.name for r in report.results] == sorted(c.name for c in CASES)
    assert len(report.results) == 9


def test_deterministic():
    assert run_identities(20, 7) == run_identities(20, 7)


def test_seed_changes_draws():
    case = CASES[0]
    draws = []
    for seed in (1, 2):
        draws.append(case.sampler(random.Random(f"{seed}:{case.name}")))
    assert draws[0] != draws[1]


def test_broken_sum_identity_detected():
    bad = IdentityCase("bad", 3, identities._plain(3), lambda a, b, c: a + b + c - Fraction(1))
    result = run_case(bad, 10, 1)
    assert not result.zero
    a, b, c = result.witness
    assert result.residual == a + b + c - 1 != 0


def test_retry_cap(monkeypatch):
    def never(rng):
        raise identities.Excluded

    monkeypatch.setattr(identities, "MAX_RETRIES", 5)
    with pytest.raises(RuntimeError, match="5 redraws"):
        run_case(IdentityCase("never", 1, never, lambda x: 0), 1, 1)


def test_samples_must_be_positive():
    with pytest.raises(ValueError):
        run_identities(0)
