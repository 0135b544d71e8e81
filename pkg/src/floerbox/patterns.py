"""Type A structures of the two satellite patterns in the solid torus."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Alg, BY_SUBSCRIPT, IDEMPOTENTS, grading_of
from .grading import LAMBDA, GroupElement, product, same_left_coset


@dataclass(frozen=True)
class AGen:
    name: str
    idem: int
    grading: GroupElement


@dataclass(frozen=True)
class AOp:
    src: str
    seq: tuple[Alg, ...]
    dst: str
    u_power: int = 0

    def __str__(self) -> str:
        word = "".join(f"r{a.short}" for a in self.seq)
        u = "" if not self.u_power else ("U" if self.u_power == 1 else f"U^{self.u_power}")
        return f"{self.src} -{u}{word or '1'}-> {self.dst}"


@dataclass(frozen=True)
class TypeAStructure:
    name: str
    generators: tuple[AGen, ...]
    operations: tuple[AOp, ...]
    h_A: GroupElement

    def gen(self, name: str) -> AGen:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    @property
    def max_seq_length(self) -> int:
        return max((len(op.seq) for op in self.operations), default=0)

    def hat(self) -> "TypeAStructure":
        ops = tuple(op for op in self.operations if op.u_power == 0)
        return TypeAStructure(self.name, self.generators, ops, self.h_A)


def _ops(spec: list[tuple[str, str, str, int]]) -> tuple[AOp, ...]:
    # "2.1" means the sequence (rho2, rho1); "" means no algebra inputs
    out = []
    for src, word, dst, u in spec:
        seq = tuple(BY_SUBSCRIPT[w] for w in word.split(".")) if word else ()
        out.append(AOp(src, seq, dst, u))
    return tuple(out)


H_A_MAZUR = GroupElement.of("-1/2", 0, 1, -1)
H_A_CABLE = GroupElement.of("-1/2", 0, 1, 2)

_MAZUR_GRADINGS = {
    "x0": (0, 0, 0, 0),
    "x1": ("1/2", "-1/2", "-1/2", 0),
    "x2": ("1/2", -1, 0, 0),
    "x3": ("1/2", "-3/2", "-1/2", 1),
    "x4": (0, -2, 0, 1),
    "x5": ("-1/2", "-1/2", "1/2", 1),
    "x6": ("-3/2", "-3/2", "1/2", 2),
    "y1": ("-1/2", "-1/2", "1/2", 1),
    "y2": ("-1/2", -1, 0, 1),
    "y3": ("-1/2", "-3/2", "-1/2", 2),
    "y4": (-1, -2, 0, 2),
    "y5": ("-3/2", "-1/2", "1/2", 2),
    "y6": ("-5/2", "-3/2", "1/2", 3),
}
_MAZUR_IOTA0 = {"x0", "x2", "x4", "y2", "y4"}

_MAZUR_OPS = [
    ("x1", "2", "x0", 0),
    ("x2", "1", "x1", 0),
    ("x4", "1", "x3", 0),
    ("y4", "1", "y3", 0),
    ("y2", "1", "y1", 1),
    ("x2", "12", "x0", 0),
    ("x4", "3.2.1", "x6", 1),
    ("x2", "3.2.1", "x5", 1),
    ("x1", "", "y1", 2),
    ("x1", "23", "y1", 1),
    ("x4", "123.2.1", "y5", 1),
    ("x3", "23.2.1", "y5", 1),
    ("x2", "", "y2", 1),
    ("x3", "", "y3", 1),
    ("x4", "", "y4", 1),
    ("x5", "", "y5", 1),
    ("x6", "", "y6", 1),
    ("x3", "2", "y2", 0),
    ("x4", "12", "y2", 0),
    ("y3", "2.1", "y1", 0),
    ("y4", "12.1", "y1", 0),
    ("y4", "3.2.1", "y6", 1),
    ("y2", "3.2.1", "y5", 1),
    ("x0", "3", "y1", 1),
    ("x2", "123", "y1", 1),
]


@lru_cache(maxsize=None)
def mazur_cfa_minus() -> TypeAStructure:
    names = sorted(_MAZUR_GRADINGS, key=lambda s: (s[0], int(s[1:])))
    gens = tuple(
        AGen(nm, 0 if nm in _MAZUR_IOTA0 else 1, GroupElement.of(*_MAZUR_GRADINGS[nm]))
        for nm in names
    )
    return TypeAStructure("mazur", gens, _ops(_MAZUR_OPS), H_A_MAZUR)


@lru_cache(maxsize=None)
def mazur_cfa_hat() -> TypeAStructure:
    return mazur_cfa_minus().hat()


@lru_cache(maxsize=None)
def cable21_cfa_hat() -> TypeAStructure:
    gens = (
        AGen("a", 0, GroupElement.of(0, 0, 0, 0)),
        AGen("b1", 1, GroupElement.of("1/2", "1/2", "-1/2", -1)),
        AGen("b2", 1, GroupElement.of("-1/2", "1/2", "-1/2", 0)),
    )
    return TypeAStructure("cable21", gens, _ops([("a", "1", "b2", 0)]), H_A_CABLE)


PATTERNS = {"mazur": mazur_cfa_hat, "cable21": cable21_cfa_hat}


def predicted_grading(A: TypeAStructure, op: AOp) -> GroupElement:
    """Right-hand side of the grading rule for a multiplication map."""
    src = A.gen(op.src).grading
    l = len(op.seq)
    return product(src, LAMBDA ** (l - 1), *(grading_of(r) for r in op.seq),
                   GroupElement(0, 0, 0, op.u_power))


def op_violations(A: TypeAStructure) -> list[str]:
    out = []
    for op in A.operations:
        src, dst = A.gen(op.src), A.gen(op.dst)
        idem = src.idem
        for r in op.seq:
            left, right = IDEMPOTENTS[r]
            if left != idem:
                out.append(f"idempotent mismatch in {op}")
                break
            idem = right
        else:
            if idem != dst.idem:
                out.append(f"output idempotent mismatch in {op}")
        if not same_left_coset(dst.grading, predicted_grading(A, op), A.h_A):
            out.append(f"grading mismatch in {op}")
    return out
