"""Cosmetic surgery screen for Mazur satellites Q_n(K)."""
from __future__ import annotations

from dataclasses import dataclass, field

from .cfk import CfkModel, LaurentPoly, alexander_polynomial
from .invariants import derive_invariants
from .pipeline import pattern_alexander, satellite_hfk


class CscDomainError(ValueError):
    pass


STATUSES = ("verified", "exceptional", "inconclusive")
OBSTRUCTIONS = ("boyer_lines", "ni_wu", "hanselman_f", "hanselman_slopes", "none")
TAU_SCOPES = ("none", "second_line", "both_lines")


def alexander_second_derivative_at_one(p: LaurentPoly) -> int:
    return p.second_derivative_at_one()


def _sym(*coeffs: int) -> LaurentPoly:
    """Symmetric polynomial from its coefficients at t^m, ..., t, 1."""
    m = len(coeffs) - 1
    d = {}
    for i, c in enumerate(coeffs):
        d[m - i] = c
        d[i - m] = c
    return LaurentPoly.from_dict(d)


@dataclass(frozen=True)
class Family:
    id: str
    n: int
    b_min: int
    build: object
    pairs: tuple[str, ...]

    def instance(self, b: int) -> LaurentPoly:
        return self.build(b)


FAMILIES = (
    Family("n-1:2t-5+2t^-1", -1, 0, lambda b: _sym(2, -5), ("±1", "±2")),
    Family("n-1:b,4b+2,6b+5", -1, 1, lambda b: _sym(b, -(4 * b + 2), 6 * b + 5), ("±1",)),
    Family("n-1:b,4b-2,6b-5", -1, 2, lambda b: _sym(b, -(4 * b - 2), 6 * b - 5), ("±1",)),
    Family("n-1:b+1,4b+6,6b+11", -1, 0, lambda b: _sym(b + 1, -(4 * b + 6), 6 * b + 11), ("±1",)),
    Family("n0:b,4b,6b-1", 0, 1, lambda b: _sym(b, -4 * b, 6 * b - 1), ("±1",)),
    Family("n0:b,4b,6b+1", 0, 1, lambda b: _sym(b, -4 * b, 6 * b + 1), ("±1",)),
)


def _tau_required(fam: Family, tau_scope: str) -> bool:
    if fam.n != 0 or tau_scope == "none":
        return False
    return tau_scope == "both_lines" or fam.id.endswith("6b+1")


def match_family(delta_k: LaurentPoly, n: int, tau: int, tau_scope: str = "none") -> str | None:
    """Id of the exceptional family containing delta_k at framing n, if any."""
    if tau_scope not in TAU_SCOPES:
        raise CscDomainError(f"tau_scope must be one of {TAU_SCOPES}")
    target = delta_k.normalized()
    top = abs(target.as_dict().get(2, 0))
    for fam in FAMILIES:
        if fam.n != n or (_tau_required(fam, tau_scope) and tau != -1):
            continue
        # the t^2 coefficient pins b; the degree-one family ignores it
        candidates = {fam.b_min} | {b for b in (top, top - 1) if b >= fam.b_min}
        if any(fam.instance(b).normalized() == target for b in sorted(candidates)):
            return fam.id
    return None


@dataclass(frozen=True)
class CscVerdict:
    status: str
    obstruction_used: str
    candidate_slope_pairs: tuple[str, ...] = ()
    matched_exceptional_family: str | None = None
    inputs: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        assert self.status in STATUSES and self.obstruction_used in OBSTRUCTIONS
        assert self.status != "verified" or not self.candidate_slope_pairs

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "obstruction": self.obstruction_used,
            "slopes": list(self.candidate_slope_pairs),
            "family": self.matched_exceptional_family,
            "inputs": self.inputs,
        }


def slope_pairs(g: int, th: int) -> tuple[str, ...]:
    """Slope pairs left open by the genus and thickness constraints."""
    if g < 2:
        return ()
    q_max = (th + 2 * g) // (2 * g * (g - 1))
    pairs = tuple("±1" if q == 1 else f"±1/{q}" for q in range(1, q_max + 1))
    return pairs + (("±2",) if g == 2 else ())


def check_csc(model: CfkModel, n: int, tau_satellite: int | None = None,
              tau_scope: str = "none") -> CscVerdict:
    if model.is_unknot and n == 0:
        raise CscDomainError("Q_0 of the unknot is the unknot; the screen needs a nontrivial satellite")
    if tau_scope not in TAU_SCOPES:
        raise CscDomainError(f"tau_scope must be one of {TAU_SCOPES}")
    delta_k = alexander_polynomial(model).normalized()
    delta_j = (pattern_alexander(n) * delta_k).normalized()
    report = derive_invariants(satellite_hfk(model, n))
    g, th = report.genus, report.thickness
    dpp = alexander_second_derivative_at_one(delta_j)
    f = 2 * g * g - 4 * g - th
    inputs = {"n": n, "genus": g, "thickness": th, "delta_J": str(delta_j),
              "delta_K": str(delta_k), "delta_pp": dpp, "f": f, "tau_satellite": tau_satellite}
    if dpp != 0:
        return CscVerdict("verified", "boyer_lines", inputs=inputs)
    if tau_satellite:
        return CscVerdict("verified", "ni_wu", inputs=inputs)
    if g >= 3 and f > 0:
        return CscVerdict("verified", "hanselman_f", inputs=inputs)
    if g < 2:
        return CscVerdict("inconclusive", "none", inputs=inputs)
    pairs = slope_pairs(g, th)
    if not pairs:
        return CscVerdict("verified", "hanselman_slopes", inputs=inputs)
    fam = match_family(delta_k, n, model.tau, tau_scope) if model.is_thin else None
    status = "exceptional" if fam else "inconclusive"
    return CscVerdict(status, "none", pairs, fam, inputs)
