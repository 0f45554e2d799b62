"""Decide whether an integer triad has square sum, square sum of squares and
square sum of cubes, and produce the witnessing roots."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .exactnum import DomainError, perfect_square

Stage = Literal["sum", "squares", "cubes"]
STAGES: tuple[Stage, ...] = ("sum", "squares", "cubes")


@dataclass(frozen=True, order=True)
class Triad:
    """Three positive integers, kept in ascending order."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise DomainError(f"triad entry {name} must be an int, got {v!r}")
        if min(self.a, self.b, self.c) < 1:
            raise DomainError(f"triad entries must be positive: {self.as_tuple()}")
        if not self.a <= self.b <= self.c:
            raise DomainError(f"triad must be sorted, got {self.as_tuple()}")

    @classmethod
    def of(cls, a: int, b: int, c: int) -> Triad:
        return cls(*sorted((a, b, c)))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def total(self) -> int:
        return self.a + self.b + self.c


@dataclass(frozen=True)
class Certificate:
    """Roots u, v, w with u^2 = a+b+c, v^2 = a^2+b^2+c^2, w^2 = a^3+b^3+c^3."""

    u: int
    v: int
    w: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.u, self.v, self.w)

    def holds_for(self, t: Triad) -> bool:
        a, b, c = t.as_tuple()
        return (
            self.u * self.u == a + b + c
            and self.v * self.v == a * a + b * b + c * c
            and self.w * self.w == a**3 + b**3 + c**3
        )


@dataclass(frozen=True)
class Failure:
    """First condition that fails, with the offending non-square value."""

    triad: Triad
    stage: Stage
    value: int

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class Verified:
    triad: Triad
    certificate: Certificate

    def __bool__(self) -> bool:
        return True


def verify_triad(a: int, b: int, c: int) -> Verified | Failure:
    """Check the three square conditions in the order sum, squares, cubes.

    Input order does not matter.  Returns a truthy ``Verified`` carrying the
    certificate, or a falsy ``Failure`` naming the first stage that broke.
    Non-positive entries raise DomainError.
    """
    t = Triad.of(a, b, c)
    a, b, c = t.as_tuple()
    roots = []
    for stage, value in zip(STAGES, (a + b + c, a * a + b * b + c * c, a**3 + b**3 + c**3)):
        r = perfect_square(value)
        if r is None:
            return Failure(t, stage, value)
        roots.append(r)
    return Verified(t, Certificate(*roots))
