import math

import pytest

from sqtriad.search import _scan_big, _scan_fast, iter_search, scan_sum, search
from sqtriad.verify import verify_triad


def naive_search(max_sum):
    out = []
    for a in range(1, max_sum):
        for b in range(a, max_sum - a):
            for c in range(b, max_sum - a - b):
                r = math.isqrt(a + b + c)
                if r * r != a + b + c:
                    continue
                v = math.isqrt(a * a + b * b + c * c)
                if v * v != a * a + b * b + c * c:
                    continue
                w = math.isqrt(a**3 + b**3 + c**3)
                if w * w != a**3 + b**3 + c**3:
                    continue
                g = math.gcd(a, b, c)
                if any(g % (d * d) == 0 for d in range(2, math.isqrt(g) + 1)):
                    continue
                out.append((a + b + c, a, b, c))
    return [t[1:] for t in sorted(out)]


def triads(hits):
    return [h.triad.as_tuple() for h in hits]


def test_first_triad_below_400():
    assert triads(search(400)) == [(108, 124, 129)]


def test_tiny_bound_is_empty():
    assert search(3) == []


def test_bound_below_three_rejected():
    with pytest.raises(ValueError):
        list(iter_search(2))


def test_bound_is_exclusive():
    assert search(361) == [] and len(search(362)) == 1


@pytest.mark.parametrize("bound", [50, 200, 361, 362, 500])
def test_matches_naive_reference(bound):
    assert triads(search(bound)) == naive_search(bound)


def test_naive_reference_sees_non_reduced_scalings():
    # the reference must actually filter: 4*(108,124,129) has sum 1444 = 38^2
    assert verify_triad(432, 496, 516)
    assert (432, 496, 516) not in triads(search(1445))


@pytest.mark.parametrize("jobs", [4, 16])
def test_jobs_deterministic(jobs):
    assert search(2000, jobs) == search(2000, 1)


def test_hits_verify():
    for h in search(3000):
        assert verify_triad(*h.triad.as_tuple()).certificate == h.certificate


@pytest.mark.parametrize("u", [2, 19, 25, 31])
def test_fast_and_big_paths_agree(u):
    assert _scan_fast(u) == _scan_big(u)


def test_scan_sum_sorted_by_a_b():
    hits = scan_sum(71)
    assert [h.key for h in hits] == sorted(h.key for h in hits)
    assert (34, 2134, 2873) in triads(hits)
