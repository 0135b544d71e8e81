"""Box tensor product of a bounded type A structure with a type D structure."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .algebra import Alg
from .cfd import TypeDStructure
from .grading import DoubleCosetContext, GradingError, normalize_double_coset
from .patterns import TypeAStructure

SEP = "⊠"


class StructureError(RuntimeError):
    pass


@dataclass(frozen=True)
class CGen:
    name: str
    N: int
    A_rel: int

    @property
    def delta_rel(self) -> int:
        return self.N + self.A_rel


@dataclass(frozen=True)
class BigradedComplex:
    generators: tuple[CGen, ...]
    arrows: tuple[tuple[str, str], ...] = ()
    _gen: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_gen", {g.name: g for g in self.generators})

    def gen(self, name: str) -> CGen:
        return self._gen[name]

    @property
    def rank(self) -> int:
        return len(self.generators)

    def bigrade_ranks(self) -> Counter:
        return Counter((g.N, g.A_rel) for g in self.generators)


@dataclass(frozen=True)
class CensusEntry:
    src: str
    dst: str
    seq: tuple[Alg, ...]


def _paths(D: TypeDStructure, start: str, seq: tuple[Alg, ...]):
    """End points of edge paths from start whose labels spell seq."""
    ends = [start]
    for label in seq:
        ends = [e.dst for y in ends for e in D.out_edges(y) if e.label is label]
    return ends


def differential_census(A: TypeAStructure, D: TypeDStructure) -> list[CensusEntry]:
    out = []
    d_by_idem = {0: D.iota(0), 1: D.iota(1)}
    for op in A.operations:
        idem = A.gen(op.src).idem
        for y in d_by_idem[idem]:
            for y2 in _paths(D, y.name, op.seq):
                out.append(CensusEntry(f"{op.src}{SEP}{y.name}", f"{op.dst}{SEP}{y2}", op.seq))
    return out


def box_tensor(A: TypeAStructure, D: TypeDStructure) -> BigradedComplex:
    ctx = DoubleCosetContext(A.h_A, D.h_D)
    gens = []
    for x in A.generators:
        for y in D.generators:
            if x.idem != y.idem:
                continue
            try:
                N, a = normalize_double_coset(x.grading * y.grading, ctx)
            except GradingError as exc:
                raise StructureError(f"cannot grade {x.name}{SEP}{y.name}: {exc}") from exc
            gens.append(CGen(f"{x.name}{SEP}{y.name}", N, a))
    counts = Counter((c.src, c.dst) for c in differential_census(A, D))
    arrows = tuple(sorted(k for k, v in counts.items() if v % 2))
    return BigradedComplex(tuple(gens), arrows)


def arrow_violations(C: BigradedComplex) -> list[str]:
    out = []
    for s, t in C.arrows:
        a, b = C.gen(s), C.gen(t)
        if b.N != a.N - 1 or b.A_rel != a.A_rel:
            out.append(f"{s} -> {t}: ({a.N}, {a.A_rel}) -> ({b.N}, {b.A_rel})")
    return out
