"""The parametric construction.

A general solution in three rational parameters (p, q, u), the one-parameter
specialisation through q(m) and p(m), the quartics whose square values govern
the sum-of-squares condition, scaling to integer triads, and a symbolic
certificate of the whole one-parameter family over Q(m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import (
    DomainError,
    FactorizationIncomplete,
    largest_square_divisor,
    rational_square_root,
    square_part_factorization,
)
from .poly import (
    Polynomial,
    RationalFunction,
    exact_div,
    gcd,
    lcm,
    rf_is_square,
    squarefree_factorization,
)
from .verify import Certificate, Triad, verify_triad

# Integer coefficient lists, constant term first.
Q_NUM = (-8, -4, 1)  # m^2 - 4m - 8
Q_DEN_HALF = (8, -8, 1)  # m^2 - 8m + 8

P_NUM = (
    -63870861312, 154014842880, -130157641728, 57252249600,
    -34652291072, 35770073088, -25774522368, 11595022336,
    -3417415680, 674709504, -87138304, 6494208,
    -108288, -27904, 2688, -96, 1,
)
# Denominator of p(m): 12 * F1 * F2 * F3^2 * F4.
P_DEN_CONST = 12
P_DEN_FACTORS: tuple[tuple[str, tuple[int, ...], int], ...] = (
    ("m^2-4m-8", (-8, -4, 1), 1),
    ("m^2-12m+24", (24, -12, 1), 1),
    ("m^2-8m+24", (24, -8, 1), 2),
    (
        "m^8-36m^7+672m^6-6944m^5+39936m^4-128256m^3+235520m^2-288768m+258048",
        (258048, -288768, 235520, -128256, 39936, -6944, 672, -36, 1),
        1,
    ),
)

# Quartic in p with coefficients in m:  Y^2 = c4 p^4 + c3 p^3 + c2 p^2 + c1 p + c0
_C3_INNER = (1536, -19968, 14272, -5120, 1112, -136, 7)
_C2 = (143360, -352256, 1060864, -705536, 291200, -90496, 18112, -1936, 83)
_C1_INNER = (320, -64, 160, -56, 5)
_F824 = (24, -8, 1)  # m^2 - 8m + 24

EXPECTED_FAMILY_DEGREE = 68


def _ev(coeffs: Sequence[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


class IdentityFailure(ArithmeticError):
    """An identity that must hold exactly did not; names the identity."""

    def __init__(self, identity: str, detail: str = ""):
        self.identity = identity
        super().__init__(f"identity failed: {identity}" + (f" ({detail})" if detail else ""))


# --- points and triples --------------------------------------------------


@dataclass(frozen=True)
class ParamPoint:
    p: Fraction
    q: Fraction
    u: Fraction

    def __post_init__(self):
        for name in ("p", "q", "u"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.p == 0 or self.q == 0 or self.p == self.q:
            raise DomainError(
                f"degenerate parameters p={self.p}, q={self.q}: need p, q nonzero and p != q"
            )


@dataclass(frozen=True)
class RationalTriple:
    """Rational solution (a, b, c) with its rational roots.

    ``cert_v`` is None when a^2+b^2+c^2 is not a rational square, i.e. the
    triple only satisfies the sum and cube conditions.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    cert_u: Fraction
    cert_v: Fraction | None
    cert_w: Fraction

    @property
    def has_v_certificate(self) -> bool:
        return self.cert_v is not None

    @property
    def all_positive(self) -> bool:
        return self.a > 0 and self.b > 0 and self.c > 0

    def components(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def is_solution(self) -> bool:
        """Exact check of all three conditions against the stored roots."""
        a, b, c = self.components()
        return (
            self.cert_v is not None
            and a + b + c == self.cert_u**2
            and a * a + b * b + c * c == self.cert_v**2
            and a**3 + b**3 + c**3 == self.cert_w**2
        )

    def scaled(self, k: Fraction) -> RationalTriple:
        """The triple times k^2, with roots (k u, k^2 v, k^3 w)."""
        k = Fraction(k)
        if k == 0:
            raise DomainError("scaling factor must be nonzero")
        k2 = k * k
        return RationalTriple(
            self.a * k2,
            self.b * k2,
            self.c * k2,
            self.cert_u * k,
            None if self.cert_v is None else self.cert_v * k2,
            self.cert_w * k2 * k,
        )


def abc_w_formulas(p, q, u):
    """a, b, c, w as functions of (p, q, u).

    Works on any field elements supporting + - * / with ints, so the same
    expressions serve Fractions and rational functions in m.
    """
    u2 = u * u
    u3 = u2 * u
    pq3 = 3 * p * q
    a = -(6 * p * p * q * u3 - 3 * p * (p + q) * u2 + 1) / (3 * p * (p - q))
    b = (pq3 * u2 - 1) / pq3
    c = (6 * p * q * q * u3 - 3 * q * (p + q) * u2 + 1) / (3 * q * (p - q))
    w = (pq3 * (p + q) * u3 - 6 * p * q * u2 + 1) / (pq3 * (p - q))
    return a, b, c, w


def abc_from_pqu(pt: ParamPoint) -> RationalTriple:
    a, b, c, w = abc_w_formulas(pt.p, pt.q, pt.u)
    v = rational_square_root(a * a + b * b + c * c)
    return RationalTriple(a, b, c, pt.u, v, w)


# --- the one-parameter substitution --------------------------------------


def q_of_m(m) -> Fraction:
    m = Fraction(m)
    den = 2 * _ev(Q_DEN_HALF, m)
    if den == 0:
        raise DomainError("q(m) has a pole: m^2-8m+8 vanishes")
    return _ev(Q_NUM, m) / den


def p_of_m(m) -> Fraction:
    m = Fraction(m)
    den = Fraction(P_DEN_CONST)
    for name, coeffs, power in P_DEN_FACTORS:
        v = _ev(coeffs, m)
        if v == 0:
            raise DomainError(f"p(m) has a pole: factor {name} vanishes at m={m}")
        den *= v**power
    return -_ev(P_NUM, m) / den


def q_function() -> RationalFunction:
    return RationalFunction(Polynomial(Q_NUM), 2 * Polynomial(Q_DEN_HALF))


def p_function() -> RationalFunction:
    den = Polynomial.constant(P_DEN_CONST)
    for _, coeffs, power in P_DEN_FACTORS:
        den = den * Polynomial(coeffs) ** power
    return RationalFunction(-Polynomial(P_NUM), den)


def ec1_rhs(p, q, u) -> Fraction:
    """Quartic in p equal to (3pq(p-q))^2 (a^2+b^2+c^2)."""
    p, q, u = Fraction(p), Fraction(q), Fraction(u)
    q2, u2 = q * q, u * u
    return (
        9 * q2 * u2 * u2 * (8 * q2 * u2 - 8 * q * u + 3) * p**4
        - 6 * u2 * q * (12 * q**3 * u**3 - 3 * q2 * u2 - 2 * q * u + 2) * p**3
        + (27 * q2 * q2 * u2 * u2 + 12 * q**3 * u**3 + 2) * p**2
        - 2 * q * (6 * q2 * u2 + 1) * p
        + 2 * q2
    )


def ec2_coefficients(m) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
    """(c4, c3, c2, c1, c0) of the quartic in p at parameter m."""
    m = Fraction(m)
    fa = _ev(Q_NUM, m)  # m^2 - 4m - 8
    fb = _ev(Q_DEN_HALF, m)  # m^2 - 8m + 8
    fc = _ev(_F824, m)  # m^2 - 8m + 24
    return (
        36 * fc**2 * fa**2,
        -12 * fa * _ev(_C3_INNER, m),
        _ev(_C2, m),
        -8 * fb * fa * _ev(_C1_INNER, m),
        8 * fa**2 * fb**2,
    )


def ec2_rhs(p, m) -> Fraction:
    p = Fraction(p)
    c4, c3, c2, c1, c0 = ec2_coefficients(m)
    return (((c4 * p + c3) * p + c2) * p + c1) * p + c0


def solve_for_m(m) -> RationalTriple:
    """Rational solution of the family at parameter m (u = 1)."""
    m = Fraction(m)
    triple = abc_from_pqu(ParamPoint(p_of_m(m), q_of_m(m), 1))
    if not triple.has_v_certificate:
        raise IdentityFailure("sum of squares is a square", f"m={m}")
    return triple


# --- integer triads ------------------------------------------------------


@dataclass(frozen=True)
class ScaledTriad:
    """Integer triad obtained from a rational triple.

    ``k`` is the lcm of the denominators (the triple was multiplied by k^2);
    ``square_divisor`` is the square then divided out of all entries.  When
    ``fully_reduced`` is False the gcd had a composite cofactor that could not
    be factored within budget, so a hidden square factor may remain.
    """

    triad: Triad
    certificate: Certificate
    k: int
    square_divisor: int
    fully_reduced: bool = True


def square_reduce(values: Sequence[Fraction]) -> tuple[list[int], int, int, bool]:
    """Scale positive rationals by k^2 to integers, then divide out a square.

    Returns ``(ints, k, square_divisor, fully_reduced)`` where k is the lcm of
    the denominators and square_divisor is the largest square dividing the gcd
    of the scaled values (or the part of it that could be found, in which case
    fully_reduced is False).
    """
    values = [Fraction(v) for v in values]
    k = math.lcm(*(v.denominator for v in values))
    k2 = k * k
    ints = [int(v * k2) for v in values]
    fully_reduced = True
    try:
        sq = largest_square_divisor(math.gcd(*ints))
    except FactorizationIncomplete as exc:
        sq, fully_reduced = exc.known_square, False
    return [v // sq for v in ints], k, sq, fully_reduced


def scale_to_integer_triad(t: RationalTriple) -> ScaledTriad:
    for name, v in zip("abc", t.components()):
        if v <= 0:
            raise DomainError(f"component {name} = {v} is not positive")
    if t.cert_v is None:
        raise DomainError("triple has no square root for its sum of squares")
    ints, k, sq, fully_reduced = square_reduce(t.components())
    r = math.isqrt(sq)
    roots = []
    for root, power in ((t.cert_u, 1), (t.cert_v, 2), (t.cert_w, 3)):
        scaled = abs(root) * Fraction(k, r) ** power
        if scaled.denominator != 1:
            raise IdentityFailure("rescaled certificate is integral", str(scaled))
        roots.append(int(scaled))
    cert = Certificate(*roots)
    result = verify_triad(*ints)
    if not result or result.certificate != cert:
        raise IdentityFailure("scaled triad satisfies all three conditions", str(ints))
    return ScaledTriad(result.triad, cert, k, sq, fully_reduced)


# --- symbolic certificate of the family ----------------------------------


@dataclass(frozen=True)
class FamilyReport:
    sum_identity_holds: bool
    squares_root: RationalFunction
    cubes_root: RationalFunction
    clearing_polynomial: Polynomial
    cleared_polys: tuple[Polynomial, Polynomial, Polynomial]
    cleared_degree: int
    expected_degree: int = EXPECTED_FAMILY_DEGREE

    @property
    def degree_matches_expected(self) -> bool:
        return self.cleared_degree == self.expected_degree


def _square_clearing(den: Polynomial) -> Polynomial:
    """Smallest monic D with den | D^2."""
    _, factors = squarefree_factorization(den)
    out = Polynomial.constant(1)
    for f, e in factors:
        out = out * f ** ((e + 1) // 2)
    return out


def _square_part(poly: Polynomial) -> Polynomial:
    """Monic H with H^2 the largest square polynomial factor of poly."""
    _, factors = squarefree_factorization(poly)
    out = Polynomial.constant(1)
    for f, e in factors:
        if e >= 2:
            out = out * f ** (e // 2)
    return out


def family_functions() -> tuple[RationalFunction, ...]:
    """a(m), b(m), c(m), w(m) as rational functions."""
    return abc_w_formulas(p_function(), q_function(), 1)


def certify_family() -> FamilyReport:
    """Prove the family identities in Q(m) and clear it to integer polynomials.

    Raises IdentityFailure naming the first identity that does not hold.
    """
    a, b, c, w = family_functions()
    if a + b + c != 1:
        raise IdentityFailure("a+b+c = 1")
    squares_root = rf_is_square(a * a + b * b + c * c)
    if squares_root is None:
        raise IdentityFailure("a^2+b^2+c^2 is a square in Q(m)")
    cubes = a**3 + b**3 + c**3
    cubes_root = rf_is_square(cubes)
    if cubes_root is None:
        raise IdentityFailure("a^3+b^3+c^3 is a square in Q(m)")
    if cubes_root != w and cubes_root != -w:
        raise IdentityFailure("square root of a^3+b^3+c^3 is w(m)")

    clearing = Polynomial.constant(1)
    for f in (a, b, c):
        clearing = lcm(clearing, _square_clearing(f.den))
    d2 = clearing * clearing
    cleared = []
    for f in (a, b, c):
        num = exact_div(f.num * d2, f.den)
        cleared.append(num)

    common = gcd(cleared[0], gcd(cleared[1], cleared[2]))
    h = _square_part(common)
    if not h.is_constant():
        h2 = h * h
        cleared = [exact_div(f, h2) for f in cleared]

    # integral coefficients with a square scale, then strip the square content
    den = math.lcm(*(x.denominator for f in cleared for x in f.coeffs))
    lam = 1
    for prime, e in square_part_factorization(den).items():
        lam *= prime ** ((e + 1) // 2)
    cleared = [f * (lam * lam) for f in cleared]
    content = math.gcd(*(x.numerator for f in cleared for x in f.coeffs))
    sq = largest_square_divisor(abs(content))
    if sq > 1:
        cleared = [f * Fraction(1, sq) for f in cleared]

    degree = max(int(f.degree) for f in cleared)
    return FamilyReport(
        sum_identity_holds=True,
        squares_root=squares_root,
        cubes_root=cubes_root,
        clearing_polynomial=clearing,
        cleared_polys=tuple(cleared),
        cleared_degree=degree,
    )
