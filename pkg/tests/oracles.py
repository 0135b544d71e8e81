"""Shared oracle helpers for the test modules."""
from floerbox import golden
from floerbox.cfd import _iota0_grading, kappa_grading, lambda_grading, mu_grading
from floerbox.grading import DoubleCosetContext, h_d, normalize_double_coset
from floerbox.patterns import mazur_cfa_hat


def d_grading(kind, M, A, j, n, tau):
    if kind == "s":
        return _iota0_grading(M, A)
    if kind == "kappa":
        return kappa_grading(M, A, j)
    if kind == "lambda":
        return lambda_grading(M, A, j)
    return mu_grading(tau, n, j)


def framing_for(kind, n, tau):
    """Adjust n so the mu rows sit on the right side of 2 tau."""
    if kind == "mu<" and n >= 2 * tau:
        return 2 * tau - 1 - abs(n) % 5
    if kind == "mu>" and n <= 2 * tau:
        return 2 * tau + 1 + abs(n) % 5
    return n


def tensor_row_mismatches(M, A, j, n, tau):
    """Rows of the tensor grading table that disagree with the group computation."""
    A_struct = mazur_cfa_hat()
    bad = []
    for (a, kind), formula in golden.TENSOR_GRADINGS.items():
        nn = framing_for(kind, n, tau)
        ctx = DoubleCosetContext(A_struct.h_A, h_d(nn))
        N, a_rel = normalize_double_coset(A_struct.gen(a).grading * d_grading(kind, M, A, j, nn, tau), ctx)
        want = formula(M, A, j, nn, tau)
        if (N, a_rel, N + a_rel) != want:
            bad.append((a, kind, (M, A, j, nn, tau), (N, a_rel), want))
    return bad
