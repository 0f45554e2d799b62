import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sqtriad.exactnum import DomainError
from sqtriad.verify import Certificate, Failure, Triad, Verified, verify_triad


def _naive(a, b, c):
    roots = []
    for n in (a + b + c, a * a + b * b + c * c, a**3 + b**3 + c**3):
        r = math.isqrt(n)
        if r * r != n:
            return None
        roots.append(r)
    return tuple(roots)


@pytest.mark.parametrize(
    "triad, cert",
    [((108, 124, 129), (19, 209, 2305)), ((34, 2134, 2873), (71, 3579, 182845))],
)
def test_known_certificates(triad, cert):
    result = verify_triad(*triad)
    assert isinstance(result, Verified) and result
    assert result.certificate.as_tuple() == cert
    assert cert == _naive(*triad)


def test_order_does_not_matter():
    assert verify_triad(129, 108, 124).triad == Triad(108, 124, 129)


def test_failure_reports_first_stage():
    result = verify_triad(1, 2, 3)
    assert isinstance(result, Failure) and not result
    assert (result.stage, result.value) == ("sum", 6)


def test_failure_at_squares_stage():
    result = verify_triad(1, 1, 2)
    assert (result.stage, result.value) == ("squares", 6)


@pytest.mark.parametrize("bad", [(0, 1, 3), (-1, 2, 3)])
def test_rejects_non_positive(bad):
    with pytest.raises(DomainError):
        verify_triad(*bad)


def test_triad_is_sorted_and_totals():
    t = Triad.of(3, 1, 2)
    assert t.as_tuple() == (1, 2, 3) and t.total == 6


def test_certificate_holds_for():
    assert Certificate(19, 209, 2305).holds_for(Triad.of(108, 124, 129))
    assert not Certificate(19, 209, 2304).holds_for(Triad.of(108, 124, 129))


@given(st.integers(1, 10**6))
def test_k_squared_scaling(k):
    result = verify_triad(108 * k * k, 124 * k * k, 129 * k * k)
    assert result.certificate.as_tuple() == (19 * k, 209 * k**2, 2305 * k**3)


def test_agrees_with_naive_reference_below_200():
    for a in range(1, 200):
        for b in range(a, 200 - a):
            for c in range(b, 200 - a - b):
                got = verify_triad(a, b, c)
                want = _naive(a, b, c)
                assert (got.certificate.as_tuple() if got else None) == want
