"""Simplified CFK^- models of companion knots.

A model is a basis that is simultaneously horizontally and vertically
simplified.  Builders cover thin knots (one staircase with unit steps
plus squares) and L-space knots (one staircase read off from the
Alexander polynomial exponents); anything else can be supplied
explicitly.
"""
from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping


class ModelError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Laurent polynomials


@dataclass(frozen=True)
class LaurentPoly:
    coeffs: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "LaurentPoly":
        return cls(tuple(sorted((e, c) for e, c in d.items() if c)))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls.from_dict({e: c})

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = Counter(self.as_dict())
        for e, c in other.coeffs:
            d[e] += c
        return LaurentPoly.from_dict(d)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly.from_dict({e: -c for e, c in self.coeffs})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        d: Counter = Counter()
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                d[e1 + e2] += c1 * c2
        return LaurentPoly.from_dict(d)

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly.from_dict({e + k: c for e, c in self.coeffs})

    def at_one(self) -> int:
        return sum(c for _, c in self.coeffs)

    def second_derivative_at_one(self) -> int:
        return sum(c * e * (e - 1) for e, c in self.coeffs)

    def is_symmetric(self) -> bool:
        d = self.as_dict()
        return all(d.get(-e) == c for e, c in d.items())

    def normalized(self) -> "LaurentPoly":
        """Sign fixed so that p(1) = 1 (p(1) = -1 inputs are negated)."""
        return -self if self.at_one() < 0 else self

    def degree(self) -> int:
        return self.coeffs[-1][0] if self.coeffs else 0

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in reversed(self.coeffs):
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                base = "t" if e == 1 else f"t^{e}"
                term = base if mag == 1 else f"{mag}{base}"
            parts.append(("-" if c < 0 else "+", term))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {t}" for s, t in parts[1:])


def lspace_polynomial(r: list[int]) -> LaurentPoly:
    """Alternating-coefficient Alexander polynomial of an L-space knot."""
    k = len(r) - 1
    d: Counter = Counter({0: (-1) ** (k + 1)})
    for j, rj in enumerate(r):
        d[rj] += (-1) ** j
        d[-rj] += (-1) ** j
    return LaurentPoly.from_dict(d)


# ---------------------------------------------------------------------------
# models


@dataclass(frozen=True)
class Generator:
    name: str
    A: int
    M: int


@dataclass(frozen=True)
class Arrow:
    src: str
    dst: str
    length: int


@dataclass(frozen=True)
class LspaceSpec:
    sign: int
    r: tuple[int, ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ModelError("sign must be +1 or -1")
        r = list(self.r)
        if not r or any(x <= 0 for x in r) or any(a <= b for a, b in zip(r, r[1:])):
            raise ModelError(f"r must be strictly decreasing positive integers, got {r}")
        if len(r) == 1 and r[0] != 1:
            raise ModelError("with k = 0 the only L-space knot is a trefoil (r = [1])")
        if len(r) >= 2 and r[1] != r[0] - 1:
            raise ModelError(f"r_1 must equal r_0 - 1, got {r}")

    @property
    def genus(self) -> int:
        return self.r[0]

    @property
    def k(self) -> int:
        return len(self.r) - 1

    @property
    def ells(self) -> list[int]:
        return [a - b for a, b in zip(self.r[1:], self.r[2:])]

    @property
    def ell_condition(self) -> bool:
        """l_1 >= l_2 >= ... >= l_{k-1} >= r_k."""
        chain = self.ells + [self.r[-1]]
        return self.k <= 1 or all(a >= b for a, b in zip(chain, chain[1:]))


@dataclass(frozen=True)
class CfkModel:
    generators: tuple[Generator, ...]
    horizontal: tuple[Arrow, ...]
    vertical: tuple[Arrow, ...]
    tau: int
    epsilon: int
    xi0: str
    eta0: str
    kind: str = "explicit"
    squares: tuple[tuple[int, int], ...] = ()
    lspace: LspaceSpec | None = None
    label: str = ""
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {g.name: g for g in self.generators})

    def gen(self, name: str) -> Generator:
        return self._index[name]

    @property
    def genus(self) -> int:
        return max(g.A for g in self.generators)

    @property
    def is_thin(self) -> bool:
        return len({g.M - g.A for g in self.generators}) == 1

    @property
    def top_rank(self) -> int:
        g = self.genus
        return sum(1 for x in self.generators if x.A == g)

    @property
    def fibered(self) -> bool:
        return self.top_rank == 1

    @property
    def is_unknot(self) -> bool:
        return len(self.generators) == 1

    def bigradings(self) -> Counter:
        return Counter((g.A, g.M) for g in self.generators)


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def _staircase_from_A(names: list[str], As: list[int], first_source: int) -> tuple[list[Generator], list[Arrow], list[Arrow]]:
    """Staircase through successive Alexander gradings As, starting at M = 0.

    Sources sit at positions first_source, first_source + 2, ...; every
    source points horizontally to its left neighbour and vertically to
    its right neighbour (as positions in the list).
    """
    horiz, vert = [], []
    M = [0] * len(As)
    for i in range(1, len(As)):
        step = As[i - 1] - As[i]
        if step <= 0:
            raise ModelError("staircase Alexander gradings must decrease")
        if (i - first_source) % 2 == 0:
            # i is a source, horizontal arrow i -> i-1 of length step
            M[i] = M[i - 1] - 2 * step + 1
            horiz.append(Arrow(names[i], names[i - 1], step))
        else:
            # i-1 is a source, vertical arrow i-1 -> i
            M[i] = M[i - 1] - 1
            vert.append(Arrow(names[i - 1], names[i], step))
    gens = [Generator(nm, a, m) for nm, a, m in zip(names, As, M)]
    return gens, horiz, vert


def _thin_staircase(tau: int) -> tuple[list[Generator], list[Arrow], list[Arrow]]:
    t = abs(tau)
    if t == 0:
        return [Generator("eta0", 0, 0)], [], []
    names = [f"eta{i}" for i in range(2 * t)] + ["xi0"]
    if tau > 0:
        # read from xi0 (top) downwards; odd positions are sources
        As = [-tau + i for i in range(2 * t, -1, -1)]
        gens, h, v = _staircase_from_A(names[::-1], As, first_source=1)
    else:
        # read from eta0 (top) downwards; eta0 is a source
        As = [t - i for i in range(2 * t + 1)]
        gens, h, v = _staircase_from_A(names, As, first_source=0)
        shift = -gens[-1].M
        gens = [Generator(g.name, g.A, g.M + shift) for g in gens]
    return sorted(gens, key=lambda g: _natural(g.name)), h, v


def _natural(name: str):
    return [int(p) if p.isdigit() else p for p in re.split(r"(\d+)", name)]


def build_thin_model(tau: int, squares: Mapping[int, int] | None = None) -> CfkModel:
    squares = {a: c for a, c in (squares or {}).items() if c}
    for a, c in squares.items():
        if c < 0:
            raise ModelError("square counts must be nonnegative")
        if squares.get(-a, 0) != c:
            raise ModelError(f"squares are not symmetric: {c} at {a}, {squares.get(-a, 0)} at {-a}")
    gens, horiz, vert = _thin_staircase(tau)
    idx = 0
    for a in sorted(squares):
        for _ in range(squares[a]):
            s = [f"s{i}#{idx}" for i in (1, 2, 3, 4)]
            m = a - tau
            gens += [
                Generator(s[0], a, m),
                Generator(s[1], a + 1, m + 1),
                Generator(s[2], a - 1, m - 1),
                Generator(s[3], a, m),
            ]
            horiz += [Arrow(s[0], s[1], 1), Arrow(s[2], s[3], 1)]
            vert += [Arrow(s[0], s[2], 1), Arrow(s[1], s[3], 1)]
            idx += 1
    xi0 = "xi0" if tau else "eta0"
    sq = tuple(sorted(squares.items()))
    label = f"thin(tau={tau}" + (f", squares={dict(sq)})" if sq else ")")
    return CfkModel(tuple(gens), tuple(horiz), tuple(vert), tau, _sgn(tau), xi0, "eta0",
                    kind="thin", squares=sq, label=label)


def build_lspace_model(spec: LspaceSpec) -> CfkModel:
    r = list(spec.r)
    k = spec.k
    As = r + [0] + [-x for x in reversed(r)]
    names = (["xi0"] + [f"omega{i}" for i in range(1, k + 2)]
             + [f"theta{i}" for i in range(k, 0, -1)] + ["eta0"])
    gens, horiz, vert = _staircase_from_A(names, As, first_source=1)
    g = spec.genus
    if spec.sign < 0:
        # mirror: (A, M) -> (-A, -M), arrows reversed; omega_i and theta_i trade places
        swap = {f"omega{i}": f"theta{i}" for i in range(1, k + 1)}
        swap.update({v: u for u, v in swap.items()})
        rn = lambda s: swap.get(s, s)  # noqa: E731
        gens = [Generator(rn(x.name), -x.A, -x.M) for x in gens]
        horiz = [Arrow(rn(a.dst), rn(a.src), a.length) for a in horiz]
        vert = [Arrow(rn(a.dst), rn(a.src), a.length) for a in vert]
    label = f"lspace(sign={spec.sign:+d}, r={r})"
    return CfkModel(tuple(gens), tuple(horiz), tuple(vert), spec.sign * g, spec.sign,
                    "xi0", "eta0", kind="lspace", lspace=spec, label=label)


# ---------------------------------------------------------------------------
# validation and Euler characteristic


def validate(model: CfkModel) -> list[str]:
    out: list[str] = []
    names = [g.name for g in model.generators]
    if len(set(names)) != len(names):
        out.append("duplicate generator names")
    idx = {g.name: g for g in model.generators}
    for kind, arrows in (("vertical", model.vertical), ("horizontal", model.horizontal)):
        for a in arrows:
            if a.src not in idx or a.dst not in idx:
                out.append(f"{kind} arrow {a.src}->{a.dst} names an unknown generator")
                continue
            s, d = idx[a.src], idx[a.dst]
            if a.length < 1:
                out.append(f"{kind} arrow {a.src}->{a.dst} has length {a.length} < 1")
            if kind == "vertical":
                if d.M != s.M - 1:
                    out.append(f"vertical Maslov violation on {a.src}->{a.dst}: M(dst) != M(src) - 1")
                if d.A != s.A - a.length:
                    out.append(f"vertical Alexander violation on {a.src}->{a.dst}: A drops {s.A - d.A}, length {a.length}")
            else:
                if d.M != s.M + 2 * a.length - 1:
                    out.append(f"horizontal Maslov violation on {a.src}->{a.dst}: M(dst) != M(src) + 2l - 1")
                if d.A != s.A + a.length:
                    out.append(f"horizontal Alexander violation on {a.src}->{a.dst}: A rises {d.A - s.A}, length {a.length}")
        touched = Counter(x for a in arrows for x in (a.src, a.dst))
        if any(c > 1 for c in touched.values()):
            out.append(f"{kind} arrows are not a simplified basis (some generator meets two arrows)")
        unmatched = [nm for nm in names if nm not in touched]
        want = model.xi0 if kind == "vertical" else model.eta0
        if unmatched != [want]:
            out.append(f"{kind} survivor should be exactly {want}, found {unmatched}")
    if model.xi0 in idx:
        x = idx[model.xi0]
        if x.A != model.tau:
            out.append(f"anchor violation A(xi0)=tau: A={x.A}, tau={model.tau}")
        if x.M != 0:
            out.append(f"anchor violation M(xi0)=0: M={x.M}")
    else:
        out.append(f"xi0 generator {model.xi0!r} missing")
    if model.eta0 in idx:
        y = idx[model.eta0]
        if y.A != -model.tau:
            out.append(f"anchor violation A(eta0)=-tau: A={y.A}, tau={model.tau}")
        if y.M != -2 * model.tau:
            out.append(f"anchor violation M(eta0)=-2tau: M={y.M}, tau={model.tau}")
    else:
        out.append(f"eta0 generator {model.eta0!r} missing")
    alex = Counter(g.A for g in model.generators)
    if any(alex[a] != alex[-a] for a in alex):
        out.append("Alexander gradings are not symmetric")
    if len(names) % 2 == 0:
        out.append("even number of generators")
    if model.epsilon not in (-1, 0, 1):
        out.append(f"epsilon must be -1, 0 or 1, got {model.epsilon}")
    elif not out:
        # the aliases the type-D construction relies on
        h_dst = {a.dst for a in model.horizontal}
        v_src = {a.src for a in model.vertical}
        if model.epsilon == 0 and model.xi0 != model.eta0:
            out.append("epsilon = 0 requires xi0 and eta0 to be the same generator")
        if model.epsilon == 1 and model.xi0 not in h_dst:
            out.append("epsilon = 1 requires xi0 to be the end of a horizontal arrow")
        if model.epsilon == -1 and model.eta0 not in v_src:
            out.append("epsilon = -1 requires eta0 to start a vertical arrow")
    return out


def alexander_polynomial(model: CfkModel) -> LaurentPoly:
    d: Counter = Counter()
    for g in model.generators:
        d[g.A] += -1 if g.M % 2 else 1
    p = LaurentPoly.from_dict(d)
    if p.at_one() not in (1, -1):
        raise ModelError(f"Euler characteristic {p} has p(1) = {p.at_one()}")
    return p


def mirror(model: CfkModel) -> CfkModel:
    gens = tuple(Generator(g.name, -g.A, -g.M) for g in model.generators)
    h = tuple(Arrow(a.dst, a.src, a.length) for a in model.horizontal)
    v = tuple(Arrow(a.dst, a.src, a.length) for a in model.vertical)
    return CfkModel(gens, h, v, -model.tau, -model.epsilon, model.xi0, model.eta0,
                    kind=model.kind if model.kind == "thin" else "explicit",
                    squares=tuple(sorted((-a, c) for a, c in model.squares)),
                    label=f"mirror({model.label})")


# ---------------------------------------------------------------------------
# JSON input


def model_from_json(data: dict) -> CfkModel:
    if not isinstance(data, dict) or len(data) != 1:
        raise ModelError('model JSON must have exactly one of "thin", "lspace", "explicit"')
    (kind, body), = data.items()
    try:
        model = _build(kind, body)
    except ModelError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelError(f"malformed {kind!r} model: {exc!r}") from exc
    problems = validate(model)
    if problems:
        raise ModelError("; ".join(problems))
    return model


def _build(kind: str, body: dict) -> CfkModel:
    if kind == "thin":
        squares: Counter = Counter()
        for sq in body.get("squares", []):
            squares[int(sq["center"])] += int(sq.get("count", 1))
        model = build_thin_model(int(body["tau"]), squares)
    elif kind == "lspace":
        model = build_lspace_model(LspaceSpec(int(body["sign"]), tuple(int(x) for x in body["r"])))
    elif kind == "explicit":
        model = _explicit(body)
    else:
        raise ModelError(f"unknown model kind {kind!r}")
    return model


def _explicit(body: dict) -> CfkModel:
    gens = tuple(Generator(str(g["name"]), int(g["A"]), int(g["M"])) for g in body["generators"])
    horiz, vert = [], []
    for a in body.get("arrows", []):
        arrow = Arrow(str(a["src"]), str(a["dst"]), int(a.get("length", 1)))
        if a["kind"] == "horizontal":
            horiz.append(arrow)
        elif a["kind"] == "vertical":
            vert.append(arrow)
        else:
            raise ModelError(f"arrow kind must be horizontal or vertical, got {a['kind']!r}")
    names = [g.name for g in gens]

    def survivor(arrows: Iterable[Arrow]) -> str:
        hit = {x for a in arrows for x in (a.src, a.dst)}
        free = [nm for nm in names if nm not in hit]
        if len(free) != 1:
            raise ModelError(f"cannot infer a unique survivor among {free}")
        return free[0]

    xi0 = body.get("xi0") or survivor(vert)
    eta0 = body.get("eta0") or survivor(horiz)
    return CfkModel(gens, tuple(horiz), tuple(vert), int(body["tau"]), int(body["epsilon"]),
                    xi0, eta0, kind="explicit", label=str(body.get("label", "explicit")))


def load_model(path: str | Path) -> CfkModel:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ModelError(f"{path}: invalid JSON ({exc})") from exc
    except OSError as exc:
        raise ModelError(f"{path}: {exc.strerror}") from exc
    return model_from_json(data)
