"""F2 homology of bigraded complexes and the symmetrized rank table."""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass

from .cfk import LaurentPoly
from .tensor import BigradedComplex, CGen


class HomologyError(RuntimeError):
    pass


def d_squared(C: BigradedComplex) -> list[tuple[str, str]]:
    """Nonzero entries of the square of the differential."""
    out = defaultdict(list)
    for s, t in C.arrows:
        out[s].append(t)
    sq = Counter()
    for s, ts in out.items():
        for t in ts:
            for u in out.get(t, ()):
                sq[(s, u)] += 1
    return sorted(k for k, v in sq.items() if v % 2)


def _cancel(names: list[str], arrows: set[tuple[str, str]]) -> list[str]:
    """Gaussian elimination by cancelling arrows, smallest (src, dst) first."""
    out = defaultdict(set)
    inc = defaultdict(set)
    for s, t in arrows:
        out[s].add(t)
        inc[t].add(s)
    alive = set(names)
    live = set(arrows)
    while live:
        s, t = min(live)
        sources = inc[t] - {s}
        targets = out[s] - {t}
        for w in sources:
            for z in targets:
                if z in out[w]:
                    out[w].discard(z)
                    inc[z].discard(w)
                    live.discard((w, z))
                else:
                    out[w].add(z)
                    inc[z].add(w)
                    live.add((w, z))
        for x in (s, t):
            for z in out.pop(x, set()):
                inc[z].discard(x)
                live.discard((x, z))
            for w in inc.pop(x, set()):
                out[w].discard(x)
                live.discard((w, x))
            alive.discard(x)
    return sorted(alive)


def homology(C: BigradedComplex) -> BigradedComplex:
    bad = d_squared(C)
    if bad:
        raise HomologyError(f"differential does not square to zero, e.g. {bad[0]}")
    cols = defaultdict(list)
    for g in C.generators:
        cols[g.A_rel].append(g.name)
    arrows_by_col = defaultdict(set)
    for s, t in C.arrows:
        arrows_by_col[C.gen(s).A_rel].add((s, t))
    keep = set()
    for a, names in cols.items():
        keep.update(_cancel(names, arrows_by_col[a]))
    return BigradedComplex(tuple(g for g in C.generators if g.name in keep))


def f2_rank(rows: list[int]) -> int:
    """Rank over F2 of a matrix given as integer bit rows."""
    rank = 0
    rows = [r for r in rows if r]
    while rows:
        pivot = rows.pop()
        rank += 1
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
        rows = [r for r in rows if r]
    return rank


def homology_rank_by_matrix(C: BigradedComplex, reverse: bool = False) -> int:
    """Total homology rank, dim C - 2 rank(d), from a dense F2 matrix."""
    order = sorted((g.name for g in C.generators), reverse=reverse)
    col = {nm: i for i, nm in enumerate(order)}
    rows = defaultdict(int)
    for s, t in C.arrows:
        rows[s] ^= 1 << col[t]
    return len(order) - 2 * f2_rank([rows[nm] for nm in order])


@dataclass(frozen=True)
class HfkEntry:
    name: str
    A: int
    N: int
    delta_rel: int


@dataclass(frozen=True)
class HfkTable:
    entries: tuple[HfkEntry, ...]
    shift_applied: int

    @property
    def ranks(self) -> dict[tuple[int, int], int]:
        return dict(sorted(Counter((e.A, e.delta_rel) for e in self.entries).items()))

    @property
    def total_rank(self) -> int:
        return len(self.entries)

    def alexander_ranks(self) -> dict[int, int]:
        return dict(sorted(Counter(e.A for e in self.entries).items()))

    def euler_characteristic(self) -> LaurentPoly:
        d = Counter()
        for e in self.entries:
            d[e.A] += -1 if e.N % 2 else 1
        return LaurentPoly.from_dict(d)

    def rows(self) -> list[tuple[int, int, int]]:
        return [(a, dl, r) for (a, dl), r in self.ranks.items()]


def symmetrize(H: BigradedComplex) -> HfkTable:
    if H.arrows:
        raise HomologyError("symmetrize expects a complex with zero differential")
    if not H.generators:
        raise HomologyError("empty homology")
    col = Counter(g.A_rel for g in H.generators)
    lo, hi = min(col), max(col)
    if (lo + hi) % 2:
        raise HomologyError(f"Alexander width {hi - lo} is odd, no integral centre")
    s = -(lo + hi) // 2
    if any(col[a] != col.get(-a - 2 * s, 0) for a in col):
        raise HomologyError(f"no shift makes the Alexander ranks symmetric: {dict(col)}")
    entries = tuple(
        HfkEntry(g.name, g.A_rel + s, g.N, g.delta_rel)
        for g in sorted(H.generators, key=lambda g: (g.A_rel, g.N, g.name))
    )
    return HfkTable(entries, s)
