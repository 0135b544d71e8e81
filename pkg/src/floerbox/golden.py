"""Hand-written reference data: tensor gradings, survivor lists, extremal
generators, square summands and the differential case table.

Everything here is typed in by hand and is used as an oracle by the self-test and the test suite; the pipeline never
reads it.
"""
from __future__ import annotations

from .algebra import Alg
from .cfd import chain_name
from .cfk import CfkModel

# ---------------------------------------------------------------------------
# Table of tensor gradings: (A-generator, D-kind) -> (N, A_rel, delta_rel)
# For "s" the parameters are M, A of the iota_0 generator itself; for
# "lambda" / "kappa" they are M, A of the source of the horizontal /
# vertical arrow; for the two mu families only tau, n, j matter.

TENSOR_GRADINGS = {
    ("x0", "s"): lambda M, A, j, n, t: (M - 2 * A, -A, M - 3 * A),
    ("x2", "s"): lambda M, A, j, n, t: (M + 1, -A + n, M - A + n + 1),
    ("y2", "s"): lambda M, A, j, n, t: (M, -A + n + 1, M - A + n + 1),
    ("x4", "s"): lambda M, A, j, n, t: (M + 2 * A - 2 * n + 1, -A + 2 * n + 1, M + A + 2),
    ("y4", "s"): lambda M, A, j, n, t: (M + 2 * A - 2 * n, -A + 2 * n + 2, M + A + 2),
    ("x1", "lambda"): lambda M, A, j, n, t: (M - 2 * A, -A - j, M - 3 * A - j),
    ("y1", "lambda"): lambda M, A, j, n, t: (M - 2 * A - 1, -A - j + 2, M - 3 * A - j + 1),
    ("x1", "kappa"): lambda M, A, j, n, t: (M, -A + j + n - 1, M - A + j + n - 1),
    ("y1", "kappa"): lambda M, A, j, n, t: (M - 1, -A + j + n + 1, M - A + j + n),
    ("x3", "lambda"): lambda M, A, j, n, t: (M + 2 * j, -A - j + n + 1, M - A + j + n + 1),
    ("y3", "lambda"): lambda M, A, j, n, t: (M + 2 * j - 1, -A - j + n + 2, M - A + j + n + 1),
    ("x3", "kappa"): lambda M, A, j, n, t: (M + 2 * A - 2 * j - 2 * n + 2, -A + j + 2 * n, M + A - j + 2),
    ("y3", "kappa"): lambda M, A, j, n, t: (M + 2 * A - 2 * j - 2 * n + 1, -A + j + 2 * n + 1, M + A - j + 2),
    ("x5", "lambda"): lambda M, A, j, n, t: (M - 2 * A - 1, -A - j + 2, M - 3 * A - j + 1),
    ("y5", "lambda"): lambda M, A, j, n, t: (M - 2 * A - 2, -A - j + 3, M - 3 * A - j + 1),
    ("x5", "kappa"): lambda M, A, j, n, t: (M - 1, -A + j + n + 1, M - A + j + n),
    ("y5", "kappa"): lambda M, A, j, n, t: (M - 2, -A + j + n + 2, M - A + j + n),
    ("x6", "lambda"): lambda M, A, j, n, t: (M + 2 * j - 3, -A - j + n + 3, M - A + j + n),
    ("y6", "lambda"): lambda M, A, j, n, t: (M + 2 * j - 4, -A - j + n + 4, M - A + j + n),
    ("x6", "kappa"): lambda M, A, j, n, t: (M + 2 * A - 2 * j - 2 * n - 1, -A + j + 2 * n + 2, M + A - j + 1),
    ("y6", "kappa"): lambda M, A, j, n, t: (M + 2 * A - 2 * j - 2 * n - 2, -A + j + 2 * n + 3, M + A - j + 1),
    ("x1", "mu<"): lambda M, A, j, n, t: (0, -t + j + n - 1, -t + j + n - 1),
    ("y1", "mu<"): lambda M, A, j, n, t: (-1, -t + j + n + 1, -t + j + n),
    ("x3", "mu<"): lambda M, A, j, n, t: (2 * t - 2 * j - 2 * n + 2, -t + j + 2 * n, t - j + 2),
    ("y3", "mu<"): lambda M, A, j, n, t: (2 * t - 2 * j - 2 * n + 1, -t + j + 2 * n + 1, t - j + 2),
    ("x5", "mu<"): lambda M, A, j, n, t: (-1, -t + j + n + 1, -t + j + n),
    ("y5", "mu<"): lambda M, A, j, n, t: (-2, -t + j + n + 2, -t + j + n),
    ("x6", "mu<"): lambda M, A, j, n, t: (2 * t - 2 * j - 2 * n - 1, -t + j + 2 * n + 2, t - j + 1),
    ("y6", "mu<"): lambda M, A, j, n, t: (2 * t - 2 * j - 2 * n - 2, -t + j + 2 * n + 3, t - j + 1),
    ("x1", "mu>"): lambda M, A, j, n, t: (1, -t - j + n, -t - j + n + 1),
    ("y1", "mu>"): lambda M, A, j, n, t: (0, -t - j + n + 2, -t - j + n + 2),
    ("x3", "mu>"): lambda M, A, j, n, t: (2 * t + 2 * j - 2 * n + 1, -t - j + 2 * n + 1, t + j + 2),
    ("y3", "mu>"): lambda M, A, j, n, t: (2 * t + 2 * j - 2 * n, -t - j + 2 * n + 2, t + j + 2),
    ("x5", "mu>"): lambda M, A, j, n, t: (0, -t - j + n + 2, -t - j + n + 2),
    ("y5", "mu>"): lambda M, A, j, n, t: (-1, -t - j + n + 3, -t - j + n + 2),
    ("x6", "mu>"): lambda M, A, j, n, t: (2 * t + 2 * j - 2 * n - 2, -t - j + 2 * n + 3, t + j + 1),
    ("y6", "mu>"): lambda M, A, j, n, t: (2 * t + 2 * j - 2 * n - 3, -t - j + 2 * n + 4, t + j + 1),
}


# ---------------------------------------------------------------------------
# Right-handed trefoil, n < -1: surviving generators and A_rel

def rht_survivors(n: int) -> list[tuple[str, int]]:
    assert n < -1
    K, L = chain_name("kappa", 1, "eta1"), chain_name("lambda", 1, "eta1")
    rows = [
        ("x0⊠eta0", 1), ("x2⊠eta0", 1 + n), ("y2⊠eta0", 2 + n),
        ("x4⊠eta0", 2 * n + 2), ("y4⊠eta0", 2 * n + 3),
        ("x0⊠eta1", 0), ("y2⊠eta1", n + 1),
        (f"y1⊠{L}", 1), (f"x5⊠{L}", 1), (f"y5⊠{L}", 2), (f"x6⊠{L}", n + 2), (f"y6⊠{L}", n + 3),
        (f"y1⊠{K}", n + 2), (f"x5⊠{K}", n + 2), (f"y5⊠{K}", n + 3), (f"x6⊠{K}", 2 * n + 3),
        (f"y6⊠{K}", 2 * n + 4),
    ]
    for j in range(2, 3 - n):
        rows += [(f"x1⊠mu{j}", n + j - 2), (f"y1⊠mu{j}", n + j),
                 (f"x3⊠mu{j}", 2 * n + j - 1), (f"y3⊠mu{j}", 2 * n + j)]
    for j in range(1, 3 - n):
        rows += [(f"x5⊠mu{j}", n + j), (f"y5⊠mu{j}", n + j + 1),
                 (f"x6⊠mu{j}", 2 * n + j + 1), (f"y6⊠mu{j}", 2 * n + j + 2)]
    return sorted(rows)


# Right-handed trefoil: extremal A_rel and the generators realizing them.
def rht_extremes(n: int) -> tuple[int, set[str], int, set[str]]:
    K = chain_name("kappa", 1, "eta1")
    if n < -1:
        return 2 * n + 1, {"x3⊠mu2"}, 3, {f"y5⊠mu{2 - n}"}
    if n == -1:
        return -1, {"x1⊠mu2", "x3⊠mu2"}, 3, {"y5⊠mu3", "y6⊠mu3"}
    if n == 0:
        return 0, {"x0⊠eta1", "x1⊠mu2"}, 4, {f"y6⊠{K}", "y6⊠mu2"}
    return 0, {"x0⊠eta1"}, 2 * n + 4, {f"y6⊠{K}"}


# Unknot extremes (relative Alexander range and the generators at each end).
def unknot_extremes(n: int) -> tuple[int, set[str], int, set[str]] | None:
    if n < -1:
        return 2 * n + 2, {"x3⊠mu2"}, 2, {f"y5⊠mu{-n}"}
    if n == 1:
        return 1, {"x2⊠eta0"}, 5, {"y6⊠mu1"}
    if n > 1:
        return 1, {f"x1⊠mu{n - 1}"}, 2 * n + 3, {"y6⊠mu1"}
    return None


# ---------------------------------------------------------------------------
# Homology of a square summand: generator -> delta_rel(tau, n, a)

def square_survivors(idx: int, tau: int, n: int, a: int) -> list[tuple[str, int]]:
    s = {i: f"s{i}#{idx}" for i in (1, 2, 3, 4)}
    k, kp = chain_name("kappa", 1, s[1]), chain_name("kappa", 1, s[2])
    l, lp = chain_name("lambda", 1, s[1]), chain_name("lambda", 1, s[3])
    base = -tau + n + 1
    rows = [
        (f"x2⊠{s[3]}", base), (f"x2⊠{s[4]}", base),
        (f"x0⊠{s[1]}", -tau - 2 * a), (f"x0⊠{s[3]}", -tau - 2 * a + 2),
        (f"x4⊠{s[3]}", -tau + 2 * a), (f"x4⊠{s[4]}", -tau + 2 * a + 2),
        (f"y2⊠{s[1]}", base), (f"y2⊠{s[3]}", base),
        (f"y4⊠{s[3]}", -tau + 2 * a), (f"y4⊠{s[4]}", -tau + 2 * a + 2),
        (f"x5⊠{k}", base), (f"y5⊠{k}", base),
        (f"x6⊠{k}", -tau + 2 * a), (f"y6⊠{k}", -tau + 2 * a),
        (f"x5⊠{kp}", base), (f"y5⊠{kp}", base),
        (f"x6⊠{kp}", -tau + 2 * a + 2), (f"y6⊠{kp}", -tau + 2 * a + 2),
        (f"y1⊠{k}", base),
        (f"x5⊠{l}", -tau - 2 * a), (f"y5⊠{l}", -tau - 2 * a),
        (f"x6⊠{l}", base), (f"y6⊠{l}", base),
        (f"x5⊠{lp}", -tau - 2 * a + 2), (f"y5⊠{lp}", -tau - 2 * a + 2),
        (f"x6⊠{lp}", base), (f"y6⊠{lp}", base),
        (f"y1⊠{l}", -tau - 2 * a), (f"y1⊠{lp}", -tau - 2 * a + 2),
        (f"y3⊠{lp}", -tau + n + 2),
    ]
    return sorted(rows)


# ---------------------------------------------------------------------------
# The case table of differentials for the Mazur pattern.

R1, R2, R12 = (Alg.RHO1,), (Alg.RHO2,), (Alg.RHO12,)
R21, R121 = (Alg.RHO2, Alg.RHO1), (Alg.RHO12, Alg.RHO1)


def expected_census(model: CfkModel, n: int) -> list[tuple[str, str, tuple[Alg, ...]]]:
    """Arrows predicted by the case analysis, for a simultaneously simplified model."""
    tau, eps, xi0, eta0 = model.tau, model.epsilon, model.xi0, model.eta0
    out = []
    kap = {v.src: chain_name("kappa", 1, v.src) for v in model.vertical}
    for h in model.horizontal:
        lam = chain_name("lambda", h.length, h.src)
        out += [(f"x1⊠{lam}", f"x0⊠{h.dst}", R2), (f"x3⊠{lam}", f"y2⊠{h.dst}", R2)]
        if h.dst in kap:
            out.append((f"y3⊠{lam}", f"y1⊠{kap[h.dst]}", R21))
    for v in model.vertical:
        k = kap[v.src]
        out += [(f"x2⊠{v.src}", f"x1⊠{k}", R1), (f"x4⊠{v.src}", f"x3⊠{k}", R1),
                (f"y4⊠{v.src}", f"y3⊠{k}", R1)]
    m = abs(2 * tau - n)
    if n < 2 * tau:
        out += [(f"x2⊠{xi0}", "x1⊠mu1", R1), (f"x4⊠{xi0}", "x3⊠mu1", R1),
                (f"y4⊠{xi0}", "y3⊠mu1", R1)]
        if eps == 1:
            (h,) = [h for h in model.horizontal if h.dst == xi0]
            out.append((f"y3⊠{chain_name('lambda', h.length, h.src)}", "y1⊠mu1", R21))
    elif n == 2 * tau:
        out += [(f"x2⊠{xi0}", f"x0⊠{eta0}", R12), (f"x4⊠{xi0}", f"y2⊠{eta0}", R12)]
        if eps == -1:
            out.append((f"y4⊠{xi0}", f"y1⊠{kap[eta0]}", R121))
    else:
        out += [(f"x1⊠mu{m}", f"x0⊠{eta0}", R2), (f"x3⊠mu{m}", f"y2⊠{eta0}", R2)]
        if eps == -1:
            out.append((f"y3⊠mu{m}", f"y1⊠{kap[eta0]}", R21))
    return sorted(out, key=lambda r: (r[0], r[1], [a.value for a in r[2]]))
