"""Surjective pretableaux of shape (BBA)^n and Dumont's six statistics.

Rows of (BBA)^n are numbered from 1 at the bottom (row r has length
2(n - r + 1)) and columns from 1 at the left. The k-th corner is the top
cell of column 2k, at row n - k + 1; the k-th co-corner is its left
neighbour, the top cell of column 2k - 1.
"""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass
from typing import NamedTuple

from .polyring import MultiPoly
from .tableaux import ShapeWord


class EscStatVector(NamedTuple):
    mi: int
    fd: int
    snd: int
    mp: int
    fnd: int
    sd: int

    def monomial(self) -> tuple[int, ...]:
        """Exponents of x^mi y^fd z^snd xb^mp yb^fnd zb^sd."""
        return tuple(self)


def row_length(n: int, r: int) -> int:
    return 2 * (n - r + 1)


def col_height(n: int, c: int) -> int:
    return n - (c + 1) // 2 + 1


@dataclass(frozen=True)
class SurjPretableau:
    n: int
    crosses: frozenset[tuple[int, int]]

    def row_counts(self) -> list[int]:
        counts = [0] * (self.n + 1)
        for r, _ in self.crosses:
            counts[r] += 1
        return counts

    def col_rows(self) -> dict[int, int]:
        return {c: r for r, c in self.crosses}

    def to_json_obj(self) -> dict:
        cells = sorted(self.crosses, key=lambda rc: (rc[1], rc[0]))
        return {"n": self.n, "crosses": [{"r": r, "c": c} for r, c in cells]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> SurjPretableau:
        return cls(int(obj["n"]), frozenset((int(d["r"]), int(d["c"])) for d in obj["crosses"]))

    def __str__(self) -> str:
        cols = self.col_rows()
        lines = []
        for r in range(self.n, 0, -1):
            lines.append("".join("x" if cols.get(c) == r else "." for c in range(1, row_length(self.n, r) + 1)))
        return "\n".join(lines)


def is_pretableau(t: SurjPretableau) -> bool:
    """Cells inside (BBA)^n, every row hit, no column hit twice."""
    n = t.n
    seen_cols = set()
    for r, c in t.crosses:
        if not (1 <= r <= n and 1 <= c <= row_length(n, r)):
            return False
        if c in seen_cols:
            return False
        seen_cols.add(c)
    rows = {r for r, _ in t.crosses}
    return rows == set(range(1, n + 1))


def enumerate_pretableaux(n: int) -> Iterator[SurjPretableau]:
    """Every element of S_n, each once.

    Columns are decided left to right; each column is either left empty or
    given a cross in one of its rows (bottom first). Row n - k + 1 ends at
    column 2k, so it must be covered once that column is decided.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    covered = [0] * (n + 2)
    chosen: list[tuple[int, int]] = []

    def rec(k: int) -> Iterator[SurjPretableau]:
        if k > n:
            yield SurjPretableau(n, frozenset(chosen))
            return
        h = n - k + 1
        c_odd, c_even = 2 * k - 1, 2 * k
        for ra in range(h + 1):
            if ra:
                covered[ra] += 1
                chosen.append((ra, c_odd))
            for rb in range(h + 1):
                if rb:
                    covered[rb] += 1
                    chosen.append((rb, c_even))
                if covered[h]:
                    yield from rec(k + 1)
                if rb:
                    covered[rb] -= 1
                    chosen.pop()
            if ra:
                covered[ra] -= 1
                chosen.pop()

    yield from rec(1)


def count_pretableaux(n: int) -> int:
    return sum(1 for _ in enumerate_pretableaux(n))


def _pairs(t: SurjPretableau):
    # (row of k-th corner/co-corner, cross in co-corner?, cross in corner?)
    cols = t.col_rows()
    for k in range(1, t.n + 1):
        r = t.n - k + 1
        yield r, cols.get(2 * k - 1) == r, cols.get(2 * k) == r


def esc_stats(t: SurjPretableau) -> EscStatVector:
    """(mi, fd, snd, mp, fnd, sd); a cross is doubled when its row holds another."""
    cols = t.col_rows()
    counts = t.row_counts()
    mi = sum(1 for c in range(1, 2 * t.n + 1, 2) if c not in cols)
    mp = sum(1 for c in range(2, 2 * t.n + 1, 2) if c not in cols)
    fd = snd = fnd = sd = 0
    for r, co, corner in _pairs(t):
        doubled = counts[r] >= 2
        if corner:
            if doubled:
                fd += 1
            else:
                fnd += 1
        if co:
            if doubled:
                sd += 1
            else:
                snd += 1
    return EscStatVector(mi, fd, snd, mp, fnd, sd)


def esc_profile(t: SurjPretableau) -> tuple[int, ...]:
    """Case label 1..6 of each (co-corner, corner) pair, top pair first."""
    counts = t.row_counts()
    out = []
    for r, co, corner in _pairs(t):
        doubled = counts[r] >= 2
        if co and corner:
            out.append(2)
        elif co:
            out.append(4 if doubled else 3)
        elif corner:
            out.append(6 if doubled else 5)
        else:
            out.append(1)
    return tuple(out)


def gamma_by_escaliers(n: int) -> MultiPoly:
    """Sum over S_{n-1} of x^mi y^fd z^snd xb^mp yb^fnd zb^sd."""
    if n < 1:
        raise ValueError("n must be >= 1")
    counts = Counter(esc_stats(t) for t in enumerate_pretableaux(n - 1))
    return MultiPoly({sv.monomial(): k for sv, k in counts.items()})


def esc_profile_weight_sums(n: int) -> dict[tuple[int, ...], MultiPoly]:
    """Map each profile of length n to the statistic-weighted sum over S_n."""
    buckets: dict[tuple[int, ...], Counter] = {}
    for t in enumerate_pretableaux(n):
        buckets.setdefault(esc_profile(t), Counter())[esc_stats(t)] += 1
    return {p: MultiPoly({sv.monomial(): k for sv, k in cnt.items()}) for p, cnt in buckets.items()}


# -- general surjective tableaux ----------------------------------------


@dataclass(frozen=True)
class SurjTableau:
    """Exactly one cross per column, at least one per row; rows counted from the top."""

    shape: ShapeWord
    crosses: frozenset[tuple[int, int]]


def enumerate_surjective(shape: ShapeWord) -> Iterator[SurjTableau]:
    """All surjective tableaux of a shape given over {B, A} (or {D, E})."""
    lengths = shape.row_lengths
    heights = shape.col_heights
    nrows = len(lengths)
    ncols = len(heights)
    if any(ln == 0 for ln in lengths) or any(h == 0 for h in heights):
        return
    # row r (top = 1) has cells in columns 1..lengths[r-1];
    # column c has cells in rows nrows-h+1..nrows.
    covered = [0] * (nrows + 1)
    chosen: list[tuple[int, int]] = []

    def rec(c: int) -> Iterator[SurjTableau]:
        if c > ncols:
            if all(covered[1:]):
                yield SurjTableau(shape, frozenset(chosen))
            return
        h = heights[c - 1]
        for r in range(nrows - h + 1, nrows + 1):
            covered[r] += 1
            chosen.append((r, c))
            # rows ending at column c must be covered now
            if all(covered[q] for q in range(1, nrows + 1) if lengths[q - 1] == c):
                yield from rec(c + 1)
            covered[r] -= 1
            chosen.pop()

    yield from rec(1)


def count_surjective(shape: ShapeWord) -> int:
    return sum(1 for _ in enumerate_surjective(shape))


def is_surjective(t: SurjTableau) -> bool:
    shape = t.shape
    cols = [c for _, c in t.crosses]
    if sorted(cols) != list(range(1, shape.n_cols + 1)):
        return False
    if any(not shape.has_cell(r, c) for r, c in t.crosses):
        return False
    return {r for r, _ in t.crosses} == set(range(1, shape.n_rows + 1))
