"""The quartic Y^2 = Q(p) at a fixed rational m as an elliptic curve.

The quartic has a square leading coefficient, so after p = t + 1/z it becomes
V^2 = e0 z^4 + e1 z^3 + e2 z^2 + e3 z + s^2 with a square constant term, and
the classical quartic-to-cubic substitution turns that into a long
Weierstrass model.  Multiples of the base point on the cubic are mapped back
to new p values, and each p gives a new rational solution.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactnum import DomainError, rational_square_root
from .parametric import (
    IdentityFailure,
    ParamPoint,
    RationalTriple,
    abc_from_pqu,
    ec2_coefficients,
    p_of_m,
    q_of_m,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuarticCurve:
    """Y^2 = c4 p^4 + c3 p^3 + c2 p^2 + c1 p + c0 with c4 a nonzero square."""

    c4: Fraction
    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __post_init__(self):
        if self.c4 == 0:
            raise DomainError("leading coefficient of the quartic vanishes")
        if rational_square_root(self.c4) is None:
            raise DomainError(f"leading coefficient {self.c4} is not a rational square")

    @property
    def sqrt_c4(self) -> Fraction:
        return rational_square_root(self.c4)

    def __call__(self, p) -> Fraction:
        p = Fraction(p)
        return (((self.c4 * p + self.c3) * p + self.c2) * p + self.c1) * p + self.c0

    def contains(self, pt: QuarticPoint) -> bool:
        return pt.Y * pt.Y == self(pt.p)

    def taylor(self, t: Fraction) -> tuple[Fraction, ...]:
        """Coefficients (e0..e4) of Q(t + w) in powers of w."""
        c = [self.c0, self.c1, self.c2, self.c3, self.c4]
        # repeated synthetic division by (w - t)
        out = []
        for _ in range(5):
            acc = Fraction(0)
            rem = []
            for coef in reversed(c):
                acc = acc * t + coef
                rem.append(acc)
            out.append(rem[-1])
            c = list(reversed(rem[:-1]))
        return tuple(out)


@dataclass(frozen=True)
class QuarticPoint:
    p: Fraction
    Y: Fraction


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    @property
    def discriminant(self) -> Fraction:
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def contains(self, P: ECPoint) -> bool:
        if P.is_infinity:
            return True
        x, y = P.x, P.y
        return y * y + self.a1 * x * y + self.a3 * y == (
            x**3 + self.a2 * x * x + self.a4 * x + self.a6
        )


@dataclass(frozen=True)
class ECPoint:
    """Affine point, or the point at infinity when x and y are None."""

    x: Optional[Fraction] = None
    y: Optional[Fraction] = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None


INFINITY = ECPoint()


def ec_negate(E: WeierstrassCurve, P: ECPoint) -> ECPoint:
    if P.is_infinity:
        return P
    return ECPoint(P.x, -P.y - E.a1 * P.x - E.a3)


def ec_add(E: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    """Chord-tangent addition on a long Weierstrass model."""
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if y1 + y2 + E.a1 * x2 + E.a3 == 0:
            return INFINITY
        den = 2 * y1 + E.a1 * x1 + E.a3
        lam = (3 * x1 * x1 + 2 * E.a2 * x1 + E.a4 - E.a1 * y1) / den
        nu = (-(x1**3) + E.a4 * x1 + 2 * E.a6 - E.a3 * y1) / den
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = lam * lam + E.a1 * lam - E.a2 - x1 - x2
    y3 = -(lam + E.a1) * x3 - nu - E.a3
    return ECPoint(x3, y3)


def ec_mul(E: WeierstrassCurve, n: int, P: ECPoint) -> ECPoint:
    if n < 0:
        return ec_mul(E, -n, ec_negate(E, P))
    result = INFINITY
    while n:
        if n & 1:
            result = ec_add(E, result, P)
        n >>= 1
        if n:
            P = ec_add(E, P, P)
    return result


# --- quartic <-> cubic ---------------------------------------------------


@dataclass(frozen=True)
class WeierstrassModel:
    """Birational map between a quartic and a Weierstrass cubic.

    ``shift`` is the rational t in p = t + 1/z and ``zcoeffs`` are (a, b, c, d)
    in V^2 = a z^4 + b z^3 + c z^2 + d z + s^2.  The point at infinity of the
    cubic corresponds to the quartic's point at infinity with Y ~ +s p^2.
    """

    quartic: QuarticCurve
    curve: WeierstrassCurve
    point: ECPoint
    shift: Fraction
    s: Fraction
    zcoeffs: tuple[Fraction, Fraction, Fraction, Fraction]

    def forward(self, pt: QuarticPoint) -> ECPoint:
        if pt.p == self.shift:
            raise DomainError(f"p = {pt.p} is the exceptional point of this map")
        s = self.s
        _, _, c, d = self.zcoeffs
        z = 1 / (pt.p - self.shift)
        V = pt.Y * z * z
        x = (2 * s * (V + s) + d * z) / (z * z)
        y = (4 * s * s * (V + s) + 2 * s * (d * z + c * z * z) - d * d * z * z / (2 * s)) / z**3
        return ECPoint(x, y)

    def backward(self, P: ECPoint) -> QuarticPoint | None:
        """Inverse map; None on the exceptional locus (no finite p)."""
        if P.is_infinity or P.y == 0:
            return None
        s = self.s
        _, _, c, d = self.zcoeffs
        z = (2 * s * (P.x + c) - d * d / (2 * s)) / P.y
        if z == 0:
            return None
        V = -s + z * (z * P.x - d) / (2 * s)
        return QuarticPoint(self.shift + 1 / z, V / (z * z))


def to_weierstrass(
    quartic: QuarticCurve, pt: QuarticPoint, shift: Fraction | None = None
) -> WeierstrassModel:
    """Weierstrass model of the quartic with the image of pt.

    The shift t defaults to 0; if pt sits on the exceptional locus p = t the
    shift moves to the next integer.
    """
    if not quartic.contains(pt):
        raise DomainError("point is not on the quartic")
    t = Fraction(0) if shift is None else Fraction(shift)
    while pt.p == t:
        log.info("base point p=%s is exceptional for shift %s; shifting", pt.p, t)
        t += 1
    s = quartic.sqrt_c4
    # V^2 = e0 z^4 + e1 z^3 + e2 z^2 + e3 z + s^2 in z = 1/(p - t)
    zcoeffs = quartic.taylor(t)[:4]
    a_, b_, c_, d_ = zcoeffs
    a1 = d_ / s
    a2 = c_ - d_ * d_ / (4 * s * s)
    a3 = 2 * s * b_
    a4 = -4 * s * s * a_
    E = WeierstrassCurve(a1, a2, a3, a4, a2 * a4)
    if E.discriminant == 0:
        raise DomainError("quartic is singular at this parameter")
    model = WeierstrassModel(quartic, E, INFINITY, t, s, zcoeffs)
    P = model.forward(pt)
    if not E.contains(P):
        raise IdentityFailure("image of the base point lies on the cubic")
    return WeierstrassModel(quartic, E, P, t, s, zcoeffs)


# --- the family's curve --------------------------------------------------


def quartic_from_m(m) -> QuarticCurve:
    return QuarticCurve(*ec2_coefficients(m))


def base_point(m) -> QuarticPoint:
    m = Fraction(m)
    quartic = quartic_from_m(m)
    p = p_of_m(m)
    Y = rational_square_root(quartic(p))
    if Y is None:
        raise IdentityFailure("quartic is a square at p(m)", f"m={m}")
    return QuarticPoint(p, Y)


@dataclass(frozen=True)
class CurveSolution:
    multiple: int
    p: Fraction
    triple: RationalTriple
    all_positive: bool


def solutions_from_points(m, count: int) -> list[CurveSolution]:
    """Solutions from the multiples [1]P .. [count]P of the base point.

    Multiples that land on the exceptional locus, or whose p value is
    degenerate (p = 0 or p = q), are skipped with a log notice.
    """
    if count < 1:
        raise DomainError("count must be at least 1")
    m = Fraction(m)
    quartic = quartic_from_m(m)
    model = to_weierstrass(quartic, base_point(m))
    q = q_of_m(m)
    out: list[CurveSolution] = []
    P = INFINITY
    for n in range(1, count + 1):
        P = ec_add(model.curve, P, model.point)
        qp = model.backward(P)
        if qp is None:
            log.warning("[%d]P is on the exceptional locus; skipped", n)
            continue
        if quartic(qp.p) != qp.Y * qp.Y:
            raise IdentityFailure("mapped point lies on the quartic", f"[{n}]P")
        try:
            triple = abc_from_pqu(ParamPoint(qp.p, q, 1))
        except DomainError as exc:
            log.warning("[%d]P gives degenerate parameters (%s); skipped", n, exc)
            continue
        if not triple.is_solution():
            raise IdentityFailure("triple from curve point is a solution", f"[{n}]P")
        out.append(CurveSolution(n, qp.p, triple, triple.all_positive))
    return out
