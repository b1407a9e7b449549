"""Truncated polynomial matrices for the two matrix Ansaetze.

Indices are 0-based. Every generator matrix moves the index by at most one,
so ``<W| L_1 ... L_k |V>`` (entry (0, 0) of the product) only sees indices
up to k and a truncation of dimension k + 1 computes it exactly.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .polyring import ONE, ZERO, MultiPoly, poly_sum, x, xb, y, yb, z, zb


class PolyMatrix:
    """Square matrix with MultiPoly entries, stored densely."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows: Sequence[Sequence[MultiPoly | int]]):
        dim = len(rows)
        if dim < 1 or any(len(r) != dim for r in rows):
            raise ValueError("matrix must be square with dim >= 1")
        self.dim = dim
        self.rows: tuple[tuple[MultiPoly, ...], ...] = tuple(
            tuple(MultiPoly(e) if isinstance(e, int) else e for e in r) for r in rows
        )

    @classmethod
    def zeros(cls, dim: int) -> PolyMatrix:
        return cls([[ZERO] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, dim: int) -> PolyMatrix:
        return cls([[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)])

    @classmethod
    def from_entries(cls, dim: int, entries: dict[tuple[int, int], MultiPoly | int]) -> PolyMatrix:
        grid = [[ZERO] * dim for _ in range(dim)]
        for (i, j), v in entries.items():
            if 0 <= i < dim and 0 <= j < dim:
                grid[i][j] = MultiPoly(v) if isinstance(v, int) else v
        return cls(grid)

    def __getitem__(self, ij: tuple[int, int]) -> MultiPoly:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def _same(self, other: PolyMatrix) -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        self._same(other)
        return PolyMatrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        self._same(other)
        return PolyMatrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def scale(self, p: MultiPoly | int) -> PolyMatrix:
        return PolyMatrix([[e * p for e in r] for r in self.rows])

    __mul__ = scale
    __rmul__ = scale

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        self._same(other)
        d = self.dim
        out = []
        for i in range(d):
            row = self.rows[i]
            nz = [(k, a) for k, a in enumerate(row) if a]
            out.append([
                poly_sum(a * other.rows[k][j] for k, a in nz if other.rows[k][j])
                for j in range(d)
            ])
        return PolyMatrix(out)

    def block(self, size: int) -> PolyMatrix:
        """Top-left ``size`` x ``size`` block."""
        return PolyMatrix([r[:size] for r in self.rows[:size]])

    def bandwidth(self) -> int:
        """Largest |i - j| over nonzero entries (0 for diagonal, -1 for zero)."""
        return max((abs(i - j) for i, r in enumerate(self.rows) for j, e in enumerate(r) if e), default=-1)

    def __repr__(self) -> str:
        return f"PolyMatrix(dim={self.dim})"


def _bidiagonal(dim: int, diag, off, upper: bool) -> PolyMatrix:
    entries = {}
    for i in range(dim):
        entries[(i, i)] = diag(i)
        if upper:
            entries[(i, i + 1)] = off(i)
        else:
            entries[(i + 1, i)] = off(i)
    return PolyMatrix.from_entries(dim, entries)


def make_D(dim: int) -> PolyMatrix:
    """D[i][i] = y + i, D[i][i+1] = i + 1."""
    return _bidiagonal(dim, lambda i: y + i, lambda i: MultiPoly(i + 1), upper=True)


def make_E(dim: int) -> PolyMatrix:
    """E[i][i] = xb + i, E[i+1][i] = y + xb + i."""
    return _bidiagonal(dim, lambda i: xb + i, lambda i: y + xb + i, upper=False)


def make_B(dim: int) -> PolyMatrix:
    """B[i][i] = i, B[i][i+1] = i + 1."""
    return _bidiagonal(dim, lambda i: MultiPoly(i), lambda i: MultiPoly(i + 1), upper=True)


def make_A(dim: int) -> PolyMatrix:
    """A[i+1][i] = 1, zero elsewhere."""
    return _bidiagonal(dim, lambda i: ZERO, lambda i: ONE, upper=False)


def make_I(dim: int) -> PolyMatrix:
    return PolyMatrix.identity(dim)


def make_Mi(i: int, dim: int) -> PolyMatrix:
    D, E = make_D(dim), make_E(dim)
    if i == 1:
        return E @ D
    if i == 2:
        return D * zb
    if i == 3:
        return D * (x - xb)
    if i == 4:
        return E * z
    if i == 5:
        return E * (yb - y)
    if i == 6:
        return make_I(dim) * ((yb - y) * (x - xb))
    raise ValueError(f"M_i index must be in 1..6, got {i}")


def make_Ni(i: int, dim: int) -> PolyMatrix:
    A, B, I = make_A(dim), make_B(dim), make_I(dim)
    Bx = B + I * x
    Bxb = B + I * xb
    if i == 1:
        return A @ Bx @ Bxb
    if i == 2:
        return (A + I) * (y * zb)
    if i == 3:
        return Bxb * z
    if i == 4:
        return (A @ Bxb) * zb
    if i == 5:
        return Bx * yb
    if i == 6:
        return (A @ Bx) * y
    raise ValueError(f"N_i index must be in 1..6, got {i}")


def make_M(dim: int) -> PolyMatrix:
    """M = ED + (zb + x - xb) D + (z + yb - y) E + (yb - y)(x - xb) I."""
    D, E, I = make_D(dim), make_E(dim), make_I(dim)
    return E @ D + D * (zb + x - xb) + E * (z + yb - y) + I * ((yb - y) * (x - xb))


def make_N(dim: int) -> PolyMatrix:
    """N = A(B+xI)(B+xbI) + y zb (A+I) + (zI + zb A)(B+xbI) + (yb I + y A)(B+xI)."""
    A, B, I = make_A(dim), make_B(dim), make_I(dim)
    Bx = B + I * x
    Bxb = B + I * xb
    return (A @ Bx @ Bxb + (A + I) * (y * zb) + (I * z + A * zb) @ Bxb
            + (I * yb + A * y) @ Bx)


class TruncationError(ValueError):
    pass


def braket_word(letters: Sequence[PolyMatrix]) -> MultiPoly:
    """<W| L_1 ... L_k |V> for W = V = (1, 0, 0, ...), product in word order."""
    if not letters:
        return ONE
    dim = letters[0].dim
    if any(m.dim != dim for m in letters):
        raise ValueError("all matrices must share one dimension")
    if dim < len(letters) + 1:
        raise TruncationError(f"dim {dim} too small for a word of length {len(letters)}")
    return _row_walk(letters, dim)


def _row_walk(letters: Iterable[PolyMatrix], dim: int) -> MultiPoly:
    # propagate the row vector <W| from the left; only the support matters
    vec: dict[int, MultiPoly] = {0: ONE}
    for m in letters:
        nxt: dict[int, list[MultiPoly]] = {}
        for i, v in vec.items():
            for j, e in enumerate(m.rows[i]):
                if e:
                    nxt.setdefault(j, []).append(v * e)
        vec = {j: s for j, terms in nxt.items() if (s := poly_sum(terms))}
    return vec.get(0, ZERO)


def word_matrices(word: str, dim: int | None = None) -> list[PolyMatrix]:
    """Matrices for a word over {D, E} or {B, A}."""
    dim = dim if dim is not None else len(word) + 1
    table = {}
    for ch in set(word):
        if ch == "D":
            table[ch] = make_D(dim)
        elif ch == "E":
            table[ch] = make_E(dim)
        elif ch == "B":
            table[ch] = make_B(dim)
        elif ch == "A":
            table[ch] = make_A(dim)
        else:
            raise ValueError(f"unknown letter {ch!r}")
    return [table[ch] for ch in word]


def braket_string(word: str, dim: int | None = None) -> MultiPoly:
    if not word:
        return ONE
    return braket_word(word_matrices(word, dim))


def gamma_by_matrix(mat: PolyMatrix, n: int) -> MultiPoly:
    return braket_word([mat] * n) if n else ONE


def gamma_by_M(n: int, dim: int | None = None) -> MultiPoly:
    """Gamma_{n+1} as <W| M^n |V>."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return gamma_by_matrix(make_M(dim or n + 1), n)


def gamma_by_N(n: int, dim: int | None = None) -> MultiPoly:
    """Gamma_{n+1} as <W| N^n |V>."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return gamma_by_matrix(make_N(dim or n + 1), n)


def profile_braket(kind: str, profile: Sequence[int], dim: int | None = None) -> MultiPoly:
    """<W| M_{i1} ... M_{in} |V> (kind 'M') or the same with N_i (kind 'N')."""
    maker = {"M": make_Mi, "N": make_Ni}[kind]
    dim = dim or len(profile) + 1
    cache = {i: maker(i, dim) for i in set(profile)}
    return braket_word([cache[i] for i in profile]) if profile else ONE
