"""The torus algebra: two idempotents and six Reeb elements over F2."""
from __future__ import annotations

from enum import Enum

from .grading import GroupElement, product


class Alg(Enum):
    IOTA0 = "iota0"
    IOTA1 = "iota1"
    RHO1 = "rho1"
    RHO2 = "rho2"
    RHO3 = "rho3"
    RHO12 = "rho12"
    RHO23 = "rho23"
    RHO123 = "rho123"
    ZERO = "zero"

    def __str__(self) -> str:
        return self.value

    @property
    def is_reeb(self) -> bool:
        return self not in (Alg.IOTA0, Alg.IOTA1, Alg.ZERO)

    @property
    def short(self) -> str:
        """Subscript string, e.g. '12' for rho12."""
        return self.value[3:] if self.is_reeb else self.value


IOTA = (Alg.IOTA0, Alg.IOTA1)

# (left idempotent, right idempotent) as indices 0/1
IDEMPOTENTS = {
    Alg.IOTA0: (0, 0),
    Alg.IOTA1: (1, 1),
    Alg.RHO1: (0, 1),
    Alg.RHO2: (1, 0),
    Alg.RHO3: (0, 1),
    Alg.RHO12: (0, 0),
    Alg.RHO23: (1, 1),
    Alg.RHO123: (0, 1),
}

_REEB_PRODUCTS = {
    (Alg.RHO1, Alg.RHO2): Alg.RHO12,
    (Alg.RHO2, Alg.RHO3): Alg.RHO23,
    (Alg.RHO1, Alg.RHO23): Alg.RHO123,
    (Alg.RHO12, Alg.RHO3): Alg.RHO123,
}

BY_SUBSCRIPT = {a.short: a for a in Alg if a.is_reeb}


def algebra_mul(x: Alg, y: Alg) -> Alg:
    if x is Alg.ZERO or y is Alg.ZERO:
        return Alg.ZERO
    if IDEMPOTENTS[x][1] != IDEMPOTENTS[y][0]:
        return Alg.ZERO
    if x in IOTA:
        return y
    if y in IOTA:
        return x
    return _REEB_PRODUCTS.get((x, y), Alg.ZERO)


class NoGradingError(ValueError):
    pass


_BASE_GRADINGS = {
    Alg.RHO1: GroupElement.of("-1/2", "1/2", "-1/2", 0),
    Alg.RHO2: GroupElement.of("-1/2", "1/2", "1/2", 0),
    Alg.RHO3: GroupElement.of("-1/2", "-1/2", "1/2", 0),
}

_FACTORS = {
    Alg.RHO1: (Alg.RHO1,),
    Alg.RHO2: (Alg.RHO2,),
    Alg.RHO3: (Alg.RHO3,),
    Alg.RHO12: (Alg.RHO1, Alg.RHO2),
    Alg.RHO23: (Alg.RHO2, Alg.RHO3),
    Alg.RHO123: (Alg.RHO1, Alg.RHO2, Alg.RHO3),
}


def grading_of(x: Alg) -> GroupElement:
    if not x.is_reeb:
        raise NoGradingError(f"{x} carries no grading")
    return product(*(_BASE_GRADINGS[f] for f in _FACTORS[x]))


def compatible(left_idem: int, x: Alg, right_idem: int) -> bool:
    """True when iota_left * x * iota_right == x."""
    return x is not Alg.ZERO and IDEMPOTENTS[x] == (left_idem, right_idem)
