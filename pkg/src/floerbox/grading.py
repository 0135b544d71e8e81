"""Grading group for the torus algebra and double-coset reduction.

Elements are quadruples (a; b, c; d) with a, b, c half-integers, d an
integer and b + c integral.  Half-integers are stored doubled so all
arithmetic stays in ``int``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Half = Union[int, Fraction, str]


class GradingError(ValueError):
    """Raised for malformed group elements or failed normalizations."""


def _doubled(x: Half) -> int:
    v = Fraction(x) * 2
    if v.denominator != 1:
        raise GradingError(f"{x!r} is not a half-integer")
    return int(v)


@dataclass(frozen=True, order=True)
class GroupElement:
    a2: int
    b2: int
    c2: int
    d: int

    def __post_init__(self):
        if (self.b2 + self.c2) % 2:
            raise GradingError(f"b + c must be an integer in {self}")

    @classmethod
    def of(cls, a: Half, b: Half, c: Half, d: int) -> "GroupElement":
        """Build from ordinary (possibly half-integral) components."""
        return cls(_doubled(a), _doubled(b), _doubled(c), int(d))

    @property
    def a(self) -> Fraction:
        return Fraction(self.a2, 2)

    @property
    def b(self) -> Fraction:
        return Fraction(self.b2, 2)

    @property
    def c(self) -> Fraction:
        return Fraction(self.c2, 2)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return group_mul(self, other)

    def __pow__(self, k: int) -> "GroupElement":
        # (b, c) is parallel to itself, so the twist term vanishes
        return GroupElement(k * self.a2, k * self.b2, k * self.c2, k * self.d)

    def inv(self) -> "GroupElement":
        return group_inv(self)

    def __str__(self) -> str:
        return f"({_fmt(self.a2)}; {_fmt(self.b2)}, {_fmt(self.c2)}; {self.d})"


def _fmt(x2: int) -> str:
    return str(x2 // 2) if x2 % 2 == 0 else f"{x2}/2"


IDENTITY = GroupElement(0, 0, 0, 0)
LAMBDA = GroupElement(2, 0, 0, 0)


def group_mul(g1: GroupElement, g2: GroupElement) -> GroupElement:
    # 2*det with doubled entries is (b1 c2 - c1 b2) / 2 in doubled units
    twist4 = g1.b2 * g2.c2 - g1.c2 * g2.b2
    if twist4 % 2:
        raise GradingError(f"product of {g1} and {g2} leaves the group")
    return GroupElement(
        g1.a2 + g2.a2 + twist4 // 2,
        g1.b2 + g2.b2,
        g1.c2 + g2.c2,
        g1.d + g2.d,
    )


def group_inv(g: GroupElement) -> GroupElement:
    return GroupElement(-g.a2, -g.b2, -g.c2, -g.d)


def product(*gs: GroupElement) -> GroupElement:
    out = IDENTITY
    for g in gs:
        out = out * g
    return out


def h_d(n: int) -> GroupElement:
    """Generator of the periodic-domain subgroup on the companion side."""
    return GroupElement(-n - 1, -2, -2 * n, 0)


@dataclass(frozen=True)
class DoubleCosetContext:
    h_A: GroupElement
    h_D: GroupElement

    def __post_init__(self):
        if self.h_D.b2 != -2:
            raise GradingError(f"h_D must have b = -1, got {self.h_D}")
        if self.h_A.b2 != 0 or abs(self.h_A.c2) != 2:
            raise GradingError(f"h_A must have b = 0 and c = ±1, got {self.h_A}")


def right_power(g: GroupElement, h: GroupElement) -> int | None:
    """Integer k with g = h**k, or None."""
    if h.b2:
        k, r = divmod(g.b2, h.b2)
    else:
        k, r = divmod(g.c2, h.c2)
    if r or h ** k != g:
        return None
    return k


def same_right_coset(g1: GroupElement, g2: GroupElement, h: GroupElement) -> bool:
    """g1<h> == g2<h>."""
    return right_power(g1.inv() * g2, h) is not None


def same_left_coset(g1: GroupElement, g2: GroupElement, h: GroupElement) -> bool:
    """<h>g1 == <h>g2."""
    return right_power(g2 * g1.inv(), h) is not None


def normalize_double_coset(g: GroupElement, ctx: DoubleCosetContext) -> tuple[int, int]:
    """Canonical (N, A_rel) of the double coset <h_A> g <h_D>."""
    # zero b on the right: h_D has b = -1 so b shifts by -q
    if g.b2 % 2:
        raise GradingError(f"b-component of {g} is not integral")
    g = g * ctx.h_D ** (g.b2 // 2)
    # zero c on the left
    hc = ctx.h_A.c2 // 2
    p = -(g.c2 // 2) * hc
    if g.c2 % 2:
        raise GradingError(f"c-component of {g} is not integral")
    g = ctx.h_A ** p * g
    assert g.b2 == 0 and g.c2 == 0
    if g.a2 % 2:
        raise GradingError(f"normalized Maslov component of {g} is not an integer")
    return g.a2 // 2, g.d
