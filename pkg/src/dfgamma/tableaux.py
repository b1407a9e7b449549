"""Young diagrams as boundary words, alternative tableaux and their statistics.

Diagrams are drawn in French convention and encoded by the NW-to-SE walk
along their upper-right boundary: ``D`` is a step right, ``E`` a step down.
Rows are numbered from 1 at the top and columns from 1 at the left, so the
row lengths weakly *increase* going down (``DDEDE`` has rows 2 and 3).
A down-arrow needs empty cells below it in its column and a left-arrow needs
empty cells to its left in its row.
"""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from .polyring import ONE, MultiPoly, poly_sum, x, xb, y, yb

EMPTY = "."
LEFT = "L"
DOWN = "D"
_CONJ = {EMPTY: EMPTY, LEFT: DOWN, DOWN: LEFT}

_ALPHABETS = {"D": "D", "E": "E", "B": "D", "A": "E"}


@dataclass(frozen=True)
class ShapeWord:
    """Boundary word over {D, E}; letters B and A are accepted as D and E."""

    word: str

    def __post_init__(self):
        if any(ch not in "DE" for ch in self.word):
            raise ValueError(f"shape word must be over {{D, E}}, got {self.word!r}")

    @classmethod
    def parse(cls, text: str) -> ShapeWord:
        text = text.strip()
        letters = set(text)
        if letters - set(_ALPHABETS):
            raise ValueError(f"invalid shape word {text!r}")
        if letters & set("DE") and letters & set("BA"):
            raise ValueError(f"shape word mixes D/E with B/A: {text!r}")
        return cls("".join(_ALPHABETS[ch] for ch in text))

    @classmethod
    def staircase(cls, n: int) -> ShapeWord:
        return cls("DE" * n)

    def as_letters(self, right: str = "D", down: str = "E") -> str:
        return self.word.replace("D", "\0").replace("E", down).replace("\0", right)

    @cached_property
    def row_lengths(self) -> tuple[int, ...]:
        """Lengths of the rows from top to bottom."""
        rights = 0
        out = []
        for ch in self.word:
            if ch == "D":
                rights += 1
            else:
                out.append(rights)
        return tuple(out)

    @cached_property
    def col_heights(self) -> tuple[int, ...]:
        """Heights of the columns from left to right."""
        downs = self.word.count("E")
        out = []
        for ch in self.word:
            if ch == "E":
                downs -= 1
            else:
                out.append(downs)
        return tuple(out)

    @property
    def n_rows(self) -> int:
        return len(self.row_lengths)

    @property
    def n_cols(self) -> int:
        return len(self.col_heights)

    def has_cell(self, r: int, c: int) -> bool:
        return 1 <= r <= self.n_rows and 1 <= c <= self.row_lengths[r - 1]

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, ln in enumerate(self.row_lengths, 1) for c in range(1, ln + 1)]

    def n_cells(self) -> int:
        return sum(self.row_lengths)

    def corners(self) -> list[tuple[int, int]]:
        """Cells with neither a right nor an upper neighbour, top to bottom."""
        out = []
        prev = 0
        for r, ln in enumerate(self.row_lengths, 1):
            if ln > prev:
                out.append((r, ln))
            prev = ln
        return out

    def transpose(self) -> ShapeWord:
        return ShapeWord("".join("E" if ch == "D" else "D" for ch in reversed(self.word)))

    def is_staircase(self) -> bool:
        n = len(self.word) // 2
        return self.word == "DE" * n

    def __str__(self) -> str:
        return self.word


class StatVector(NamedTuple):
    emr: int
    fnc: int
    dco: int
    fnr: int
    emc: int
    lco: int

    def monomial(self) -> tuple[int, ...]:
        """Exponent vector of x^emr y^fnc z^dco xb^fnr yb^emc zb^lco."""
        return tuple(self)


@dataclass(frozen=True)
class AltTableau:
    """Arrow filling of a shape; ``rows[r-1][c-1]`` is one of '.', 'L', 'D'."""

    shape: ShapeWord
    rows: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != self.shape.row_lengths:
            raise ValueError("filling does not match the shape")

    @classmethod
    def from_cells(cls, shape: ShapeWord, arrows: dict[tuple[int, int], str]) -> AltTableau:
        """Build from a sparse ``{(r, c): 'L' | 'D'}`` map; other cells stay empty."""
        grid = [[EMPTY] * ln for ln in shape.row_lengths]
        for (r, c), v in arrows.items():
            if not shape.has_cell(r, c):
                raise ValueError(f"cell {(r, c)} is not in shape {shape}")
            grid[r - 1][c - 1] = v
        return cls(shape, tuple(tuple(row) for row in grid))

    def get(self, r: int, c: int) -> str:
        return self.rows[r - 1][c - 1]

    def column(self, c: int) -> list[str]:
        return [row[c - 1] for row in self.rows if len(row) >= c]

    def to_json_obj(self) -> dict:
        return {
            "shape": self.shape.word,
            "cells": [
                {"r": r, "c": c, "v": v}
                for r, row in enumerate(self.rows, 1)
                for c, v in enumerate(row, 1)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> AltTableau:
        shape = ShapeWord.parse(obj["shape"])
        arrows = {(int(d["r"]), int(d["c"])): d["v"] for d in obj["cells"] if d["v"] != EMPTY}
        return cls.from_cells(shape, arrows)

    def __str__(self) -> str:
        return "\n".join("".join(row) if row else "|" for row in self.rows)


def is_alternative(t: AltTableau) -> bool:
    """Independent clear-view check, scanning every row and every column."""
    for row in t.rows:
        for c, v in enumerate(row):
            if v not in _CONJ:
                return False
            if v == LEFT and any(w != EMPTY for w in row[:c]):
                return False
    for c in range(1, t.shape.n_cols + 1):
        col = t.column(c)
        for i, v in enumerate(col):
            if v == DOWN and any(w != EMPTY for w in col[i + 1:]):
                return False
    return True


def _row_fillings(length: int, blocked: tuple[bool, ...]) -> Iterator[tuple[str, ...]]:
    # blocked[c] is True when column c+1 has a down-arrow higher up
    free = [c for c in range(length) if not blocked[c]]

    def tails(start: int, prefix: list[str]) -> Iterator[tuple[str, ...]]:
        # cells start.. hold '.' or (if unblocked) 'D'
        idx = [c for c in free if c >= start]
        k = len(idx)
        for mask in range(1 << k):
            cells = prefix + [EMPTY] * (length - start)
            for b, c in enumerate(idx):
                if mask >> b & 1:
                    cells[c] = DOWN
            yield tuple(cells)

    yield from tails(0, [])
    for p in free:
        yield from tails(p + 1, [EMPTY] * p + [LEFT])


def _fillings(shape: ShapeWord) -> Iterator[tuple[tuple[str, ...], ...]]:
    lengths = shape.row_lengths
    nrows = len(lengths)
    ncols = shape.n_cols
    rows: list[tuple[str, ...]] = []

    def rec(r: int, blocked: tuple[bool, ...]) -> Iterator[tuple[tuple[str, ...], ...]]:
        if r == nrows:
            yield tuple(rows)
            return
        for row in _row_fillings(lengths[r], blocked):
            nb = tuple(b or (c < len(row) and row[c] == DOWN) for c, b in enumerate(blocked))
            rows.append(row)
            yield from rec(r + 1, nb)
            rows.pop()

    yield from rec(0, (False,) * ncols)


def enumerate_tableaux(shape: ShapeWord) -> Iterator[AltTableau]:
    """Every alternative tableau of ``shape``, each exactly once.

    Rows are filled top to bottom; within a row the no-left-arrow fillings
    come first, then the left-arrow position moves right.
    """
    for rows in _fillings(shape):
        yield AltTableau(shape, rows)


def count_tableaux(shape: ShapeWord) -> int:
    return sum(1 for _ in _fillings(shape))


def _stats_rows(shape: ShapeWord, rows: tuple[tuple[str, ...], ...]) -> StatVector:
    emr = fnr = 0
    for row in rows:
        if LEFT in row:
            continue
        if DOWN in row:
            fnr += 1
        else:
            emr += 1
    emc = fnc = 0
    for c in range(shape.n_cols):
        has_l = has_d = False
        for row in rows:
            if len(row) > c:
                v = row[c]
                if v == LEFT:
                    has_l = True
                elif v == DOWN:
                    has_d = True
        if not has_d:
            if has_l:
                fnc += 1
            else:
                emc += 1
    dco = lco = 0
    for r, c in shape.corners():
        v = rows[r - 1][c - 1]
        if v == DOWN:
            dco += 1
        elif v == LEFT:
            lco += 1
    return StatVector(emr, fnc, dco, fnr, emc, lco)


def stats(t: AltTableau) -> StatVector:
    """(emr, fnc, dco, fnr, emc, lco). Rows and columns of size 0 count as empty."""
    return _stats_rows(t.shape, t.rows)


def free_rows(t: AltTableau) -> int:
    s = stats(t)
    return s.emr + s.fnr


def free_cols(t: AltTableau) -> int:
    s = stats(t)
    return s.emc + s.fnc


def conjugate(t: AltTableau) -> AltTableau:
    """Mirror through the SW-NE diagonal: rows become columns, L and D swap.

    Cell (r, c) goes to (C - c + 1, R - r + 1) where R, C are the number of
    rows and columns of the original shape.
    """
    shape = t.shape
    nr, nc = shape.n_rows, shape.n_cols
    new_shape = shape.transpose()
    grid = [[EMPTY] * ln for ln in new_shape.row_lengths]
    for r, row in enumerate(t.rows, 1):
        for c, v in enumerate(row, 1):
            grid[nc - c][nr - r] = _CONJ[v]
    return AltTableau(new_shape, tuple(tuple(row) for row in grid))


def stat_counts(shape: ShapeWord) -> Counter:
    """Multiset of statistic vectors over all tableaux of ``shape``."""
    return Counter(_stats_rows(shape, rows) for rows in _fillings(shape))


def gamma_by_tableaux(n: int) -> MultiPoly:
    """Sum over staircase tableaux of size n-1 of x^emr y^fnc z^dco xb^fnr yb^emc zb^lco."""
    if n < 1:
        raise ValueError("n must be >= 1")
    counts = stat_counts(ShapeWord.staircase(n - 1))
    return MultiPoly({sv.monomial(): k for sv, k in counts.items()})


def ansatz_weight_sum(shape: ShapeWord) -> MultiPoly:
    """Brute-force sum of xb^fr y^fc over the tableaux of ``shape``."""
    counts: Counter = Counter()
    for sv, k in stat_counts(shape).items():
        counts[(0, sv.emc + sv.fnc, 0, sv.emr + sv.fnr, 0, 0)] += k
    return MultiPoly(dict(counts))


# -- extended tableaux ---------------------------------------------------


@dataclass(frozen=True)
class ExtAltTableau:
    base: AltTableau
    dashed_rows: frozenset[int] = field(default_factory=frozenset)
    dashed_cols: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        er = set(empty_rows(self.base))
        ec = set(empty_cols(self.base))
        if not set(self.dashed_rows) <= er or not set(self.dashed_cols) <= ec:
            raise ValueError("only empty rows and columns may be dashed")

    @property
    def hr(self) -> int:
        return len(self.dashed_rows)

    @property
    def hc(self) -> int:
        return len(self.dashed_cols)

    def to_json_obj(self) -> dict:
        obj = self.base.to_json_obj()
        obj["dashed_rows"] = sorted(self.dashed_rows)
        obj["dashed_cols"] = sorted(self.dashed_cols)
        return obj


def empty_rows(t: AltTableau) -> list[int]:
    return [r for r, row in enumerate(t.rows, 1) if all(v == EMPTY for v in row)]


def empty_cols(t: AltTableau) -> list[int]:
    return [c for c in range(1, t.shape.n_cols + 1) if all(v == EMPTY for v in t.column(c))]


def decorations(t: AltTableau) -> Iterator[ExtAltTableau]:
    """All 2^(emr+emc) dashings of ``t``: row subsets outer, column subsets inner."""
    er = empty_rows(t)
    ec = empty_cols(t)
    for rm in range(1 << len(er)):
        rows = frozenset(r for i, r in enumerate(er) if rm >> i & 1)
        for cm in range(1 << len(ec)):
            cols = frozenset(c for i, c in enumerate(ec) if cm >> i & 1)
            yield ExtAltTableau(t, rows, cols)


def enumerate_extended(n: int) -> Iterator[ExtAltTableau]:
    """Extended tableaux whose base is a staircase tableau with n rows."""
    for t in enumerate_tableaux(ShapeWord.staircase(n)):
        yield from decorations(t)


def ext_weight(u: ExtAltTableau) -> MultiPoly:
    """y^(fc-hc) z^dco xb^(fr-hr) zb^lco (x-xb)^hr (yb-y)^hc."""
    s = stats(u.base)
    fr = s.emr + s.fnr
    fc = s.emc + s.fnc
    plain = MultiPoly.monomial((0, fc - u.hc, s.dco, fr - u.hr, 0, s.lco))
    return plain * (x - xb) ** u.hr * (yb - y) ** u.hc


def ext_profile(u: ExtAltTableau) -> tuple[int, ...]:
    """Case label 1..6 of each corner, from the upper-left corner down."""
    shape = u.base.shape
    if not shape.is_staircase():
        raise ValueError(f"profiles are defined for staircase shapes only, got {shape}")
    out = []
    for r, c in shape.corners():
        v = u.base.get(r, c)
        if v == LEFT:
            out.append(2)
        elif v == DOWN:
            out.append(4)
        else:
            in_row = r in u.dashed_rows
            in_col = c in u.dashed_cols
            out.append(6 if in_row and in_col else 3 if in_row else 5 if in_col else 1)
    return tuple(out)


def profile_weight_sums(n: int) -> dict[tuple[int, ...], MultiPoly]:
    """Map each profile of length n to the weight sum of its extended tableaux."""
    buckets: dict[tuple[int, ...], list[MultiPoly]] = {}
    for u in enumerate_extended(n):
        buckets.setdefault(ext_profile(u), []).append(ext_weight(u))
    return {p: poly_sum(ws) for p, ws in buckets.items()}


def extended_weight_total(n: int) -> MultiPoly:
    if n == 0:
        return ONE
    return poly_sum(ext_weight(u) for u in enumerate_extended(n))


def tableau_monomial(t: AltTableau) -> MultiPoly:
    return MultiPoly.monomial(stats(t).monomial())


def iter_words(length: int, letters: str = "DE") -> Iterable[str]:
    """All words of exactly ``length`` letters, in lexicographic order of ``letters``."""
    if length == 0:
        yield ""
        return
    for w in iter_words(length - 1, letters):
        for ch in letters:
            yield w + ch
