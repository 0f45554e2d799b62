"""Dense univariate polynomials and rational functions over Q.

Coefficients are Fractions stored in ascending degree order.  The expensive
operations (multiplication, pseudo-division, gcd) are carried out on primitive
integer coefficient lists and only converted back at the end, so coefficient
growth stays under control for the degree-100-ish objects the family
certificate produces.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

from .exactnum import DomainError, rational_square_root

__all__ = [
    "Polynomial",
    "RationalFunction",
    "divrem",
    "gcd",
    "lcm",
    "poly_sqrt",
    "squarefree_factorization",
    "is_squarefree",
    "rf_is_square",
]

NEG_INF = -math.inf

Scalar = Union[int, Fraction]


# --- integer coefficient lists -------------------------------------------


def _strip(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _content(a: Sequence[int]) -> int:
    return reduce(math.gcd, a, 0)


def _imul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _prem(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int], int]:
    """Pseudo-division: L**k * a == q*b + r with L = lc(b), k = deg a - deg b + 1."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    k = len(a) - len(b) + 1
    if k <= 0:
        return [], r, 0
    q = [0] * k
    for step in range(k - 1, -1, -1):
        # r has degree <= db + step here; scale, then cancel the top term.
        top = r[db + step] if db + step < len(r) else 0
        for i in range(len(q)):
            q[i] *= lc
        q[step] += top
        for i in range(len(r)):
            r[i] *= lc
        if top:
            for j in range(db + 1):
                r[step + j] -= top * b[j]
        del r[db + step :]
    return q, _strip(r), k


def _primitive(a: Sequence[int]) -> list[int]:
    """Divide out the content and make the leading coefficient positive."""
    c = _content(a)
    if c == 0:
        return []
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


# --- Polynomial ----------------------------------------------------------


class Polynomial:
    """Immutable polynomial with rational coefficients (ascending order)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs: tuple[Fraction, ...] = tuple(
            _strip([Fraction(c) for c in coeffs])
        )

    @classmethod
    def _from_fractions(cls, coeffs: list[Fraction]) -> Polynomial:
        obj = cls.__new__(cls)
        obj.coeffs = tuple(_strip(coeffs))
        return obj

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls((c,))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def from_ints(cls, coeffs: Sequence[int], scale: Fraction = Fraction(1)) -> Polynomial:
        if scale == 1:
            return cls._from_fractions([Fraction(c) for c in coeffs])
        return cls._from_fractions([c * scale for c in coeffs])

    # integer view: self == scale * ints, ints primitive with positive lc
    def integer_form(self) -> tuple[Fraction, list[int]]:
        if not self.coeffs:
            return Fraction(0), []
        den = reduce(math.lcm, (c.denominator for c in self.coeffs), 1)
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        prim = _primitive(ints)
        return Fraction(ints[-1], den * prim[-1]), prim

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({self.render('x')!r})"

    def __str__(self) -> str:
        return self.render("x")

    def render(self, var: str = "x") -> str:
        """Human-readable form, highest degree first, e.g. ``3·m^2 - 1/2``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}·{mono}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __neg__(self) -> Polynomial:
        return Polynomial._from_fractions([-c for c in self.coeffs])

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._from_fractions(out)

    __radd__ = __add__

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial()
            return Polynomial._from_fractions([c * other for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        sa, ia = self.integer_form()
        sb, ib = other.integer_form()
        return Polynomial.from_ints(_imul(ia, ib), sa * sb)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise DomainError("negative power of a polynomial")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other) -> tuple[Polynomial, Polynomial]:
        return divrem(self, self._coerce(other))

    def __floordiv__(self, other) -> Polynomial:
        return divrem(self, self._coerce(other))[0]

    def __mod__(self, other) -> Polynomial:
        return divrem(self, self._coerce(other))[1]

    def __call__(self, x: Scalar) -> Fraction:
        return self.eval(x)

    def eval(self, x: Scalar) -> Fraction:
        """Horner evaluation at a rational point."""
        x = Fraction(x)
        # Horner on num/den separately avoids a gcd per step.
        num, den = x.numerator, x.denominator
        acc_num, acc_den = 0, 1
        for c in reversed(self.coeffs):
            # acc = acc * x + c
            acc_num = acc_num * num * c.denominator + c.numerator * acc_den * den
            acc_den = acc_den * den * c.denominator
        return Fraction(acc_num, acc_den)

    def derivative(self) -> Polynomial:
        return Polynomial._from_fractions(
            [k * c for k, c in enumerate(self.coeffs) if k]
        )

    def monic(self) -> Polynomial:
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return Polynomial._from_fractions([c / lc for c in self.coeffs])

    def compose(self, inner: Polynomial) -> Polynomial:
        result = Polynomial()
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result


def divrem(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder of f by g over Q."""
    if g.is_zero():
        raise DomainError("polynomial division by zero")
    if f.degree < g.degree:
        return Polynomial(), f
    sf, a = f.integer_form()
    sg, b = g.integer_form()
    q, r, k = _prem(a, b)
    scale = Fraction(1, b[-1] ** k)
    return (
        Polynomial.from_ints(q, sf * scale / sg),
        Polynomial.from_ints(r, sf * scale),
    )


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    q, r = divrem(f, g)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd via the primitive pseudo-remainder sequence.

    Each remainder is reduced to its primitive part, which keeps integer
    coefficients as small as the final answer allows.
    """
    if f.is_zero() and g.is_zero():
        raise DomainError("gcd of two zero polynomials")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    a = f.integer_form()[1]
    b = g.integer_form()[1]
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return Polynomial.constant(1)
        _, r, _ = _prem(a, b)
        a, b = b, _primitive(r)
    return Polynomial.from_ints(a, Fraction(1, a[-1]))


def lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() or g.is_zero():
        return Polynomial()
    return exact_div(f * g, gcd(f, g)).monic()


def is_squarefree(p: Polynomial) -> bool:
    if p.is_zero():
        return False
    return gcd(p, p.derivative()).is_constant()


def poly_sqrt(p: Polynomial) -> Polynomial | None:
    """Square root with positive leading coefficient, or None.

    Coefficients are matched from the top down; the candidate is accepted only
    after an exact re-squaring.
    """
    if p.is_zero():
        return Polynomial()
    n = len(p.coeffs) - 1
    if n % 2:
        return None
    top = rational_square_root(p.lc)
    if top is None:
        return None
    h = n // 2
    c = p.coeffs
    s = [Fraction(0)] * (h + 1)
    s[h] = top
    two_top = 2 * top
    for k in range(h - 1, -1, -1):
        # coefficient of x^(h+k) in s^2 fixes s[k]
        acc = c[h + k] - sum(s[i] * s[h + k - i] for i in range(k + 1, h))
        s[k] = acc / two_top
    root = Polynomial._from_fractions(s)
    return root if root * root == p else None


def squarefree_factorization(
    p: Polynomial,
) -> tuple[Fraction, list[tuple[Polynomial, int]]]:
    """Yun's algorithm.

    Returns ``(lc, [(f1, 1), (f2, 2), ...])`` with monic, squarefree, pairwise
    coprime factors such that ``p == lc * prod(f**k)``.  Only factors of
    positive degree are listed, in increasing multiplicity.
    """
    if p.is_zero():
        raise DomainError("squarefree factorization of the zero polynomial")
    lc = p.lc
    f = p.monic()
    if f.is_constant():
        return lc, []
    dp = f.derivative()
    a = gcd(f, dp)
    b = exact_div(f, a)
    c = exact_div(dp, a)
    d = c - b.derivative()
    out: list[tuple[Polynomial, int]] = []
    i = 1
    while not b.is_constant():
        a = gcd(b, d)
        if not a.is_constant():
            out.append((a, i))
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = c - b.derivative()
        i += 1
    return lc, out


# --- RationalFunction ----------------------------------------------------


class RationalFunction:
    """num/den with coprime parts and a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = Polynomial.constant(1) if den is None else _as_poly(den)
        if den.is_zero():
            raise DomainError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Polynomial.constant(1)
            return
        g = gcd(num, den)
        if not g.is_constant():
            num, den = exact_div(num, g), exact_div(den, g)
        lc = den.lc
        self.num = num * (1 / lc) if lc != 1 else num
        self.den = den.monic()

    @classmethod
    def _reduced(cls, num: Polynomial, den: Polynomial) -> RationalFunction:
        # caller guarantees gcd(num, den) == 1
        obj = cls.__new__(cls)
        if num.is_zero():
            obj.num, obj.den = num, Polynomial.constant(1)
            return obj
        lc = den.lc
        obj.num = num * (1 / lc) if lc != 1 else num
        obj.den = den.monic()
        return obj

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction(({self.num.render()}) / ({self.den.render()}))"

    def render(self, var: str = "x") -> str:
        if self.den == 1:
            return self.num.render(var)
        return f"({self.num.render(var)}) / ({self.den.render(var)})"

    def __neg__(self) -> RationalFunction:
        return RationalFunction._reduced(-self.num, self.den)

    def __add__(self, other) -> RationalFunction:
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        g = gcd(self.den, other.den)
        if g.is_constant():
            # coprime denominators give a reduced sum directly
            return RationalFunction._reduced(
                self.num * other.den + other.num * self.den, self.den * other.den
            )
        d1, d2 = exact_div(self.den, g), exact_div(other.den, g)
        num = self.num * d2 + other.num * d1
        if num.is_zero():
            return RationalFunction(num)
        # any common factor of num and the lcm divides g
        h = gcd(num, g)
        if not h.is_constant():
            num, g = exact_div(num, h), exact_div(g, h)
        return RationalFunction._reduced(num, d1 * d2 * g)

    __radd__ = __add__

    def __sub__(self, other) -> RationalFunction:
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RationalFunction:
        return (-self) + other

    def __mul__(self, other) -> RationalFunction:
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalFunction(Polynomial())
        g1 = gcd(self.num, other.den)
        g2 = gcd(other.num, self.den)
        n1, d2 = exact_div(self.num, g1), exact_div(other.den, g1)
        n2, d1 = exact_div(other.num, g2), exact_div(self.den, g2)
        return RationalFunction._reduced(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.is_zero():
            raise DomainError("inverse of the zero rational function")
        return RationalFunction._reduced(self.den, self.num)

    def __truediv__(self, other) -> RationalFunction:
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> RationalFunction:
        return _as_rf(other) * self.inverse()

    def __pow__(self, n: int) -> RationalFunction:
        if n < 0:
            return self.inverse() ** (-n)
        # powers of coprime parts stay coprime
        return RationalFunction._reduced(self.num**n, self.den**n)

    def eval(self, x: Scalar) -> Fraction:
        d = self.den.eval(x)
        if d == 0:
            raise DomainError(f"rational function has a pole at {x}")
        return self.num.eval(x) / d

    __call__ = eval


def _as_poly(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, (int, Fraction)):
        return Polynomial.constant(v)
    raise TypeError(f"cannot treat {type(v).__name__} as a polynomial")


def _as_rf(v):
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, Polynomial):
        return RationalFunction._reduced(v, Polynomial.constant(1))
    if isinstance(v, (int, Fraction)):
        return RationalFunction._reduced(Polynomial.constant(v), Polynomial.constant(1))
    return NotImplemented


def rf_is_square(f: RationalFunction) -> RationalFunction | None:
    """Square root of f in Q(x), or None.

    With num and den coprime and den monic, num*den is a square exactly when
    den is a monic square and num is a square, so the two halves are tested
    separately at half the degree.
    """
    if f.is_zero():
        return f
    sd = poly_sqrt(f.den)
    if sd is None:
        return None
    sn = poly_sqrt(f.num)
    if sn is None:
        return None
    return RationalFunction._reduced(sn, sd)
