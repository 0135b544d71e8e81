"""Golden-table checks run by `floerbox selftest`."""
from __future__ import annotations

from dataclasses import dataclass

from . import golden
from .cfd import build_cfd
from .cfk import CfkModel, LspaceSpec, build_lspace_model, build_thin_model
from .patterns import mazur_cfa_hat
from .pipeline import satellite_complex, satellite_homology
from .tensor import SEP, differential_census


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _d_kind(model: CfkModel, n: int, dname: str) -> tuple[str, int, int, int]:
    """Table-1 row kind and (M, A, j) parameters for a type D generator name."""
    if dname.startswith("mu"):
        return ("mu<" if n < 2 * model.tau else "mu>"), 0, 0, int(dname[2:])
    for kind in ("kappa", "lambda"):
        if dname.startswith(kind) and "^" in dname:
            j, src = dname[len(kind):].split("^", 1)
            g = model.gen(src)
            return kind, g.M, g.A, int(j)
    g = model.gen(dname)
    return "s", g.M, g.A, 0


def tensor_grading_mismatches(model: CfkModel, n: int) -> list[str]:
    out = []
    for c in satellite_complex(model, n).generators:
        a, d = c.name.split(SEP)
        kind, M, A, j = _d_kind(model, n, d)
        want = golden.TENSOR_GRADINGS[(a, kind)](M, A, j, n, model.tau)
        got = (c.N, c.A_rel, c.delta_rel)
        if got != want:
            out.append(f"{c.name}: got {got}, table {want}")
    return out


def census_mismatches(model: CfkModel, n: int) -> list[str]:
    got = {(e.src, e.dst, e.seq) for e in differential_census(mazur_cfa_hat(), build_cfd(model, n))}
    want = set(golden.expected_census(model, n))
    return [f"extra {r}" for r in sorted(got - want, key=str)] + \
           [f"missing {r}" for r in sorted(want - got, key=str)]


def _extremes(model: CfkModel, n: int):
    H = satellite_homology(model, n)
    lo = min(g.A_rel for g in H.generators)
    hi = max(g.A_rel for g in H.generators)
    return (lo, {g.name for g in H.generators if g.A_rel == lo},
            hi, {g.name for g in H.generators if g.A_rel == hi})


def run_checks() -> list[Check]:
    rht, lht = build_thin_model(1), build_thin_model(-1)
    companions = [rht, lht, build_thin_model(0, {0: 1}), build_thin_model(2, {1: 1, -1: 1, 0: 1}),
                  build_lspace_model(LspaceSpec(1, (2, 1))), build_lspace_model(LspaceSpec(-1, (3, 2)))]
    checks = []

    for n in (-4, -2):
        got = sorted((g.name, g.A_rel) for g in satellite_homology(rht, n).generators)
        checks.append(Check(f"rht survivors n={n}", got == golden.rht_survivors(n)))
    for n in (-3, -1, 0, 1, 2, 5):
        checks.append(Check(f"rht extremes n={n}", _extremes(rht, n) == golden.rht_extremes(n)))

    bad = []
    for m in companions:
        for n in range(-5, 6):
            bad += tensor_grading_mismatches(m, n)
    checks.append(Check("tensor grading table", not bad, bad[0] if bad else ""))

    bad = []
    for a in (0, 1, 2):
        m = build_thin_model(1, {a: 1, -a: 1} if a else {0: 1})
        sq = next(s for s in ("s1#0", "s1#1") if s in {g.name for g in m.generators})
        idx = sq.split("#")[1]
        for n in range(-4, 5):
            got = sorted((g.name, g.delta_rel) for g in satellite_homology(m, n).generators
                         if g.name.endswith(f"#{idx}"))
            want = golden.square_survivors(int(idx), 1, n, m.gen(sq).A)
            if got != want:
                bad.append(f"square a={a} n={n}")
    checks.append(Check("square summand table", not bad, bad[0] if bad else ""))

    bad = []
    for m in companions:
        for n in range(-5, 6):
            bad += census_mismatches(m, n)
    checks.append(Check("differential census", not bad, bad[0] if bad else ""))
    return checks
