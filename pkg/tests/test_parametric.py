from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from sqtriad import parametric
from sqtriad.exactnum import DomainError, rational_square_root
from sqtriad.parametric import (
    ParamPoint,
    RationalTriple,
    abc_from_pqu,
    certify_family,
    ec1_rhs,
    ec2_rhs,
    family_functions,
    p_of_m,
    q_of_m,
    scale_to_integer_triad,
    solve_for_m,
    square_reduce,
)
from sqtriad.verify import verify_triad

M32_TRIAD = (
    22104703132724392891974197260485203180817980456068478,
    45051218517398331420875516790921404601474342024364969,
    273836695120684015976157268469007404280872671207701754,
)

fracs = st.fractions(min_value=-40, max_value=40, max_denominator=50)


# --- independent symbolic oracle, typed directly from the defining formulas -------

M, Pp, Qq, U = sympy.symbols("m p q u")
SYM_EC1 = (
    9 * Qq**2 * U**4 * (8 * Qq**2 * U**2 - 8 * Qq * U + 3) * Pp**4
    - 6 * U**2 * Qq * (12 * Qq**3 * U**3 - 3 * Qq**2 * U**2 - 2 * Qq * U + 2) * Pp**3
    + (27 * Qq**4 * U**4 + 12 * Qq**3 * U**3 + 2) * Pp**2
    - 2 * Qq * (6 * Qq**2 * U**2 + 1) * Pp
    + 2 * Qq**2
)
SYM_EC2 = (
    36 * (M**2 - 8 * M + 24) ** 2 * (M**2 - 4 * M - 8) ** 2 * Pp**4
    - 12 * (M**2 - 4 * M - 8)
    * (7 * M**6 - 136 * M**5 + 1112 * M**4 - 5120 * M**3 + 14272 * M**2 - 19968 * M + 1536)
    * Pp**3
    + (83 * M**8 - 1936 * M**7 + 18112 * M**6 - 90496 * M**5 + 291200 * M**4
       - 705536 * M**3 + 1060864 * M**2 - 352256 * M + 143360) * Pp**2
    - 8 * (M**2 - 8 * M + 8) * (M**2 - 4 * M - 8)
    * (5 * M**4 - 56 * M**3 + 160 * M**2 - 64 * M + 320) * Pp
    + 8 * (M**2 - 4 * M - 8) ** 2 * (M**2 - 8 * M + 8) ** 2
)
SYM_Q = (M**2 - 4 * M - 8) / (2 * (M**2 - 8 * M + 8))


def test_oracle_ec2_is_scaled_ec1_symbolically():
    diff = SYM_EC2 - 16 * (M**2 - 8 * M + 8) ** 4 * SYM_EC1.subs({U: 1, Qq: SYM_Q})
    assert sympy.simplify(sympy.together(diff)) == 0


def _sym(x: Fraction):
    return sympy.Rational(x.numerator, x.denominator)


# --- q(m), p(m) ----------------------------------------------------------


@pytest.mark.parametrize(
    "m, q", [(Fraction(3, 2), Fraction(47, 14)), (0, Fraction(-1, 2)), (4, Fraction(1, 2))]
)
def test_q_of_m(m, q):
    assert q_of_m(m) == q


def test_q_at_three_halves_by_hand():
    assert Fraction(-47, 4) / (2 * Fraction(-7, 4)) == Fraction(47, 14)


def test_p_of_m_at_zero():
    # constant terms: numerator -63870861312, denominator 12*(-8)*24*24^2*258048
    expected = -Fraction(-63870861312, 12 * (-8) * 24 * 24**2 * 258048)
    assert expected == Fraction(-47, 252)
    assert p_of_m(0) == expected


def test_p_of_m_makes_quartic_square_at_three_halves():
    assert rational_square_root(ec2_rhs(p_of_m(Fraction(3, 2)), Fraction(3, 2))) is not None


@settings(max_examples=60, deadline=None)
@given(fracs)
def test_p_of_m_makes_quartic_square(m):
    assert rational_square_root(ec2_rhs(p_of_m(m), m)) is not None


def test_p_of_m_pole_names_factor(monkeypatch):
    # real poles are irrational; a rational stand-in exercises the guard
    factors = parametric.P_DEN_FACTORS + (("m-5", (-5, 1), 1),)
    monkeypatch.setattr(parametric, "P_DEN_FACTORS", factors)
    with pytest.raises(DomainError, match="m-5"):
        p_of_m(5)


# --- abc_from_pqu --------------------------------------------------------


def test_abc_example():
    t = abc_from_pqu(ParamPoint(Fraction(-47, 21), Fraction(-1, 2), 1))
    assert 3 * Fraction(-47, 21) * Fraction(-1, 2) == Fraction(47, 14)
    assert t.b == Fraction(33, 47)
    assert t.a + t.b + t.c == 1


@pytest.mark.parametrize("p, q", [(0, 1), (1, 0), (2, 2)])
def test_param_point_rejects_degenerate(p, q):
    with pytest.raises(DomainError):
        ParamPoint(p, q, 1)


valid_points = st.tuples(fracs, fracs, fracs).filter(
    lambda t: t[0] != 0 and t[1] != 0 and t[0] != t[1]
)


@given(valid_points)
def test_construction_identities(pt):
    p, q, u = pt
    t = abc_from_pqu(ParamPoint(p, q, u))
    a, b, c, w = t.a, t.b, t.c, t.cert_w
    assert a + b + c == u * u
    assert a**3 + b**3 + c**3 == w * w
    assert a + b == p * (u**3 - w)
    assert b + c == q * (u**3 + w)
    assert c + a == 1 / (3 * p * q)


@given(fracs, fracs, fracs)
def test_cube_sum_factorization_for_any_rationals(a, b, c):
    assert (a + b + c) ** 3 - (a**3 + b**3 + c**3) - 3 * (a + b) * (b + c) * (a + c) == 0


def test_abc_against_symbolic_oracle():
    sa = -(6 * Pp**2 * Qq * U**3 - 3 * Pp * (Pp + Qq) * U**2 + 1) / (3 * Pp * (Pp - Qq))
    for p, q, u in [(Fraction(2, 3), Fraction(-5, 7), Fraction(3, 4)), (Fraction(9), Fraction(1, 2), Fraction(-2))]:
        t = abc_from_pqu(ParamPoint(p, q, u))
        assert _sym(t.a) == sa.subs({Pp: _sym(p), Qq: _sym(q), U: _sym(u)})


# --- quartics ------------------------------------------------------------


def test_ec1_constant_term():
    assert ec1_rhs(0, 1, 1) == 2


def test_ec1_u_zero():
    assert ec1_rhs(1, 1, 0) == 2 * 1 - 2 * 1 * 1 + 2 * 1


@given(valid_points)
def test_ec1_consistency(pt):
    p, q, u = pt
    t = abc_from_pqu(ParamPoint(p, q, u))
    assert (3 * p * q * (p - q)) ** 2 * (t.a**2 + t.b**2 + t.c**2) == ec1_rhs(p, q, u)


@given(fracs, fracs)
def test_ec1_matches_symbolic_oracle(p, q):
    u = Fraction(3, 5)
    assert _sym(ec1_rhs(p, q, u)) == SYM_EC1.subs({Pp: _sym(p), Qq: _sym(q), U: _sym(u)})


@given(fracs)
def test_ec2_constant_term(m):
    fa, fb = m * m - 4 * m - 8, m * m - 8 * m + 8
    assert ec2_rhs(0, m) == 8 * fa**2 * fb**2
    assert 16 * fb**4 * 2 * q_of_m(m) ** 2 == 8 * fa**2 * fb**2


@settings(max_examples=100)
@given(fracs, fracs)
def test_ec2_cross_scaling(p, m):
    assert ec2_rhs(p, m) == 16 * (m * m - 8 * m + 8) ** 4 * ec1_rhs(p, q_of_m(m), 1)


@given(fracs, fracs)
@settings(max_examples=30)
def test_ec2_matches_symbolic_oracle(p, m):
    assert _sym(ec2_rhs(p, m)) == SYM_EC2.subs({Pp: _sym(p), M: _sym(m)})


# --- solve_for_m and scaling ---------------------------------------------


def test_solve_three_halves_gives_known_triad():
    s = scale_to_integer_triad(solve_for_m(Fraction(3, 2)))
    assert s.triad.as_tuple() == M32_TRIAD
    assert s.fully_reduced
    assert [len(str(v)) for v in M32_TRIAD] == [53, 53, 54]


def test_solve_inside_window_is_positive():
    t = solve_for_m(Fraction(311, 200))
    assert t.all_positive and t.is_solution()


def test_solve_at_zero_has_negative_component():
    t = solve_for_m(0)
    assert t.is_solution()
    assert not t.all_positive
    assert t.b == Fraction(-121, 47)


@settings(max_examples=25, deadline=None)
@given(st.fractions(min_value=Fraction(147, 100), max_value=Fraction(158, 100), max_denominator=300))
def test_solve_in_window_scales_to_verified_triad(m):
    assume(Fraction(147, 100) < m < Fraction(158, 100))
    t = solve_for_m(m)
    assert t.is_solution() and t.all_positive
    s = scale_to_integer_triad(t)
    assert verify_triad(*s.triad.as_tuple()).certificate == s.certificate


def test_square_reduce_mechanics():
    ints, k, sq, full = square_reduce([Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)])
    assert (k, sq, full) == (4, 4, True)
    assert ints == [1, 1, 2]


def test_scale_integral_triad_unchanged():
    t = RationalTriple(*map(Fraction, (108, 124, 129, 19, 209, 2305)))
    s = scale_to_integer_triad(t)
    assert s.triad.as_tuple() == (108, 124, 129) and s.k == 1
    assert s.certificate.as_tuple() == (19, 209, 2305)


def test_scale_removes_square_factor():
    t = RationalTriple(*map(Fraction, (108, 124, 129, 19, 209, 2305))).scaled(Fraction(6, 5))
    s = scale_to_integer_triad(t)
    assert s.triad.as_tuple() == (108, 124, 129)
    assert s.certificate.as_tuple() == (19, 209, 2305)


def test_scale_rejects_non_positive():
    with pytest.raises(DomainError, match="component b"):
        scale_to_integer_triad(solve_for_m(0))


@given(st.fractions(min_value=-20, max_value=20, max_denominator=20).filter(bool))
def test_scaling_transforms_certificates(k):
    base = solve_for_m(Fraction(3, 2))
    s = base.scaled(k)
    assert s.is_solution()
    assert (s.cert_u, s.cert_v, s.cert_w) == (k * base.cert_u, k * k * base.cert_v, k**3 * base.cert_w)


# --- family --------------------------------------------------------------


@pytest.fixture(scope="module")
def report():
    return certify_family()


def test_family_sum_is_one():
    a, b, c, _ = family_functions()
    assert a + b + c == 1


def test_family_roots_square_back(report):
    a, b, c, w = family_functions()
    assert report.squares_root * report.squares_root == a * a + b * b + c * c
    assert report.cubes_root * report.cubes_root == a**3 + b**3 + c**3
    assert report.cubes_root in (w, -w)


def test_family_degree(report):
    assert report.sum_identity_holds
    assert report.cleared_degree == 68 and report.degree_matches_expected
    assert report.clearing_polynomial.degree == 34


def test_family_cleared_polys_are_integral_and_square_free_content(report):
    import math

    coeffs = [c for f in report.cleared_polys for c in f.coeffs]
    assert all(c.denominator == 1 for c in coeffs)
    content = math.gcd(*(c.numerator for c in coeffs))
    from sqtriad.exactnum import largest_square_divisor

    assert largest_square_divisor(abs(content)) == 1


def test_family_cleared_polys_reproduce_known_triad(report):
    m = Fraction(3, 2)
    values = [f.eval(m) for f in report.cleared_polys]
    ints, *_ = square_reduce(values)
    assert tuple(sorted(ints)) == M32_TRIAD


def test_family_matches_pointwise_solution(report):
    a, b, c, _ = family_functions()
    for m in (Fraction(3, 2), Fraction(-7, 3), Fraction(5)):
        t = solve_for_m(m)
        assert (a.eval(m), b.eval(m), c.eval(m)) == t.components()
