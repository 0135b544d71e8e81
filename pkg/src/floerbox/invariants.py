"""Genus, fiberedness and thickness of a satellite, with closed-form oracles."""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .cfk import CfkModel
from .homology import HfkTable


@dataclass(frozen=True)
class InvariantReport:
    genus: int
    fibered: bool
    thickness: int
    top_rank: int
    total_rank: int

    def as_dict(self) -> dict:
        return asdict(self)


def derive_invariants(t: HfkTable) -> InvariantReport:
    alex = t.alexander_ranks()
    g = max(alex)
    deltas = [e.delta_rel for e in t.entries]
    return InvariantReport(
        genus=g,
        fibered=alex[g] == 1,
        thickness=max(deltas) - min(deltas),
        top_rank=alex[g],
        total_rank=t.total_rank,
    )


def genus_formula(model: CfkModel, n: int) -> int:
    if model.is_unknot:
        return -n if n <= 0 else n + 1
    g = model.genus
    return g - n if n <= -1 else g + n + 1


def fibered_formula(model: CfkModel, n: int) -> bool:
    if model.is_unknot:
        return n != -1
    return model.fibered and n not in (-1, 0)


def _is_rht(model: CfkModel) -> bool:
    return len(model.generators) == 3 and model.tau == 1


def _thin_thickness(model: CfkModel, n: int) -> int:
    if model.is_unknot:
        return -n - 1 if n <= -1 else n
    if _is_rht(model):
        return -n + 1 if n <= -1 else (2 if n in (0, 1) else n + 2)
    g = model.genus
    if n <= -2 * g:
        return 2 * g - n - 1
    if n <= 2 * g - 2:
        return 4 * g - 2
    return 2 * g + n


def thickness_formula(model: CfkModel, n: int) -> int | None:
    """Closed-form thickness of Q_n(K), or None where no formula applies."""
    if model.lspace is not None and model.lspace.k >= 1:
        spec = model.lspace
        if spec.sign < 0:
            # the closed form is derived for the positive staircase only; the
            # mirrored staircase measurably departs from it at both edges
            return None
        g = spec.genus
        if spec.k == 1:
            edge = g
            late = 3 * g + n - 2
        elif spec.ell_condition:
            r2 = spec.r[2]
            edge = g + r2
            late = 3 * g - r2 + n - 2
        else:
            return None
        if n <= -2 * g:
            return 2 * g - n - 1
        if n <= edge:
            return 4 * g - 2
        return late
    if model.is_thin:
        return _thin_thickness(model, n)
    return None
