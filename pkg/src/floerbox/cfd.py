"""Type D structure of the n-framed companion complement.

The construction reads the chains of coefficient maps directly off a
simultaneously simplified CFK^- basis: one vertical chain per vertical
arrow, one horizontal chain per horizontal arrow, and the framing
dependent unstable chain joining xi0 and eta0.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .algebra import Alg, IDEMPOTENTS, grading_of
from .cfk import CfkModel
from .grading import LAMBDA, GroupElement, h_d, same_right_coset


@dataclass(frozen=True)
class DGen:
    name: str
    idem: int
    grading: GroupElement


@dataclass(frozen=True)
class DEdge:
    src: str
    dst: str
    label: Alg


@dataclass(frozen=True)
class TypeDStructure:
    generators: tuple[DGen, ...]
    edges: tuple[DEdge, ...]
    h_D: GroupElement
    n: int
    model: CfkModel
    _out: dict = field(default=None, compare=False, repr=False, hash=False)
    _gen: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        out = defaultdict(list)
        for e in self.edges:
            out[e.src].append(e)
        object.__setattr__(self, "_out", dict(out))
        object.__setattr__(self, "_gen", {g.name: g for g in self.generators})

    def gen(self, name: str) -> DGen:
        return self._gen[name]

    def out_edges(self, name: str) -> list[DEdge]:
        return self._out.get(name, [])

    def iota(self, i: int) -> list[DGen]:
        return [g for g in self.generators if g.idem == i]

    def to_dot(self) -> str:
        lines = ["digraph CFD {", "  rankdir=LR;"]
        for g in self.generators:
            shape = "box" if g.idem == 0 else "ellipse"
            lines.append(f'  "{g.name}" [shape={shape}, tooltip="{g.grading}"];')
        for e in self.edges:
            lines.append(f'  "{e.src}" -> "{e.dst}" [label="D{e.label.short}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _iota0_grading(M: int, A: int) -> GroupElement:
    return GroupElement(2 * M - 3 * A, 0, -2 * A, 0)


def kappa_grading(M: int, A: int, j: int) -> GroupElement:
    """j-th generator of the vertical chain out of a generator at (M, A)."""
    return GroupElement(2 * M - 2 * A + 2 * j - 3, -1, -2 * A + 2 * j - 1, 0)


def lambda_grading(M: int, A: int, j: int) -> GroupElement:
    """j-th generator of the horizontal chain out of a generator at (M, A)."""
    return GroupElement(2 * M - 4 * A - 1, 1, -2 * A - 2 * j + 1, 0)


def mu_grading(tau: int, n: int, j: int) -> GroupElement:
    if n < 2 * tau:
        return GroupElement(-2 * tau + 2 * j - 3, -1, -2 * tau + 2 * j - 1, 0)
    return GroupElement(-2 * tau - 2 * j + 1, -1, -2 * tau - 2 * j + 1, 0)


def chain_name(kind: str, j: int, source: str) -> str:
    return f"{kind}{j}^{source}"


def build_cfd(model: CfkModel, n: int) -> TypeDStructure:
    gens: list[DGen] = []
    edges: list[DEdge] = []
    for g in model.generators:
        gens.append(DGen(g.name, 0, _iota0_grading(g.M, g.A)))
    for arr in model.vertical:
        s = model.gen(arr.src)
        names = [chain_name("kappa", j, s.name) for j in range(1, arr.length + 1)]
        for j, nm in enumerate(names, 1):
            gens.append(DGen(nm, 1, kappa_grading(s.M, s.A, j)))
        edges.append(DEdge(s.name, names[0], Alg.RHO1))
        edges += [DEdge(names[j + 1], names[j], Alg.RHO23) for j in range(len(names) - 1)]
        edges.append(DEdge(arr.dst, names[-1], Alg.RHO123))
    for arr in model.horizontal:
        s = model.gen(arr.src)
        names = [chain_name("lambda", j, s.name) for j in range(1, arr.length + 1)]
        for j, nm in enumerate(names, 1):
            gens.append(DGen(nm, 1, lambda_grading(s.M, s.A, j)))
        edges.append(DEdge(s.name, names[0], Alg.RHO3))
        edges += [DEdge(names[j], names[j + 1], Alg.RHO23) for j in range(len(names) - 1)]
        edges.append(DEdge(names[-1], arr.dst, Alg.RHO2))
    tau, xi0, eta0 = model.tau, model.xi0, model.eta0
    m = abs(2 * tau - n)
    mus = [f"mu{j}" for j in range(1, m + 1)]
    gens += [DGen(nm, 1, mu_grading(tau, n, j)) for j, nm in enumerate(mus, 1)]
    if n == 2 * tau:
        edges.append(DEdge(xi0, eta0, Alg.RHO12))
    elif n < 2 * tau:
        edges.append(DEdge(xi0, mus[0], Alg.RHO1))
        edges += [DEdge(mus[j + 1], mus[j], Alg.RHO23) for j in range(m - 1)]
        edges.append(DEdge(eta0, mus[-1], Alg.RHO3))
    else:
        edges.append(DEdge(xi0, mus[0], Alg.RHO123))
        edges += [DEdge(mus[j], mus[j + 1], Alg.RHO23) for j in range(m - 1)]
        edges.append(DEdge(mus[-1], eta0, Alg.RHO2))
    return TypeDStructure(tuple(gens), tuple(edges), h_d(n), n, model)


def edge_violations(D: TypeDStructure) -> list[str]:
    """Idempotent and grading checks for every coefficient map."""
    out = []
    for e in D.edges:
        s, t = D.gen(e.src), D.gen(e.dst)
        if IDEMPOTENTS[e.label] != (s.idem, t.idem):
            out.append(f"idempotent mismatch on {e.src} -D{e.label.short}-> {e.dst}")
        expect = LAMBDA.inv() * grading_of(e.label).inv() * s.grading
        if not same_right_coset(t.grading, expect, D.h_D):
            out.append(f"grading mismatch on {e.src} -D{e.label.short}-> {e.dst}")
    return out
