"""End-to-end computation of the knot Floer homology of a satellite."""
from __future__ import annotations

from functools import lru_cache

from .cfd import build_cfd
from .cfk import CfkModel, build_thin_model
from .homology import HfkTable, homology, symmetrize
from .patterns import PATTERNS
from .tensor import BigradedComplex, box_tensor


def satellite_complex(model: CfkModel, n: int, pattern: str = "mazur") -> BigradedComplex:
    return box_tensor(PATTERNS[pattern](), build_cfd(model, n))


@lru_cache(maxsize=4096)
def satellite_homology(model: CfkModel, n: int, pattern: str = "mazur") -> BigradedComplex:
    return homology(satellite_complex(model, n, pattern))


@lru_cache(maxsize=4096)
def satellite_hfk(model: CfkModel, n: int, pattern: str = "mazur") -> HfkTable:
    return symmetrize(satellite_homology(model, n, pattern))


UNKNOT = build_thin_model(0)


def pattern_alexander(n: int):
    """Alexander polynomial of the n-twisted Mazur satellite of the unknot."""
    return satellite_hfk(UNKNOT, n).euler_characteristic().normalized()
