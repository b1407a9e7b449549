"""J-fraction coefficients, weighted Motzkin paths and the truncated fraction.

A level step at height h weighs b_h, an up step from h-1 to h weighs
lambda_h and down steps weigh 1.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import lru_cache

from .polyring import ONE, ZERO, MultiPoly, TruncSeries, poly_sum, series_reciprocal, x, xb, y, yb, z, zb

UP, LEVEL, DOWN = "U", "L", "D"


@lru_cache(maxsize=None)
def b_coeff(n: int) -> MultiPoly:
    """b_n = (x+n)(yb+n) + (y+n)(zb+n) + (z+n)(xb+n) - n(n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return (x + n) * (yb + n) + (y + n) * (zb + n) + (z + n) * (xb + n) - n * (n + 1)


@lru_cache(maxsize=None)
def lambda_coeff(n: int) -> MultiPoly:
    """lambda_n = n (xb+y+n-1)(yb+z+n-1)(zb+x+n-1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (xb + y + (n - 1)) * (yb + z + (n - 1)) * (zb + x + (n - 1)) * n


@dataclass(frozen=True)
class JCoeffs:
    index: int
    b: MultiPoly
    lam: MultiPoly | None  # lambda_0 is undefined


def jcoeffs(n: int) -> JCoeffs:
    return JCoeffs(n, b_coeff(n), lambda_coeff(n) if n >= 1 else None)


@dataclass(frozen=True)
class MotzkinPath:
    steps: str

    def __post_init__(self):
        h = 0
        for s in self.steps:
            h += {UP: 1, LEVEL: 0, DOWN: -1}[s]
            if h < 0:
                raise ValueError(f"path {self.steps!r} goes below zero")
        if h:
            raise ValueError(f"path {self.steps!r} does not return to zero")

    def heights(self) -> list[int]:
        hs = [0]
        for s in self.steps:
            hs.append(hs[-1] + {UP: 1, LEVEL: 0, DOWN: -1}[s])
        return hs


def enumerate_motzkin_paths(k: int) -> Iterator[MotzkinPath]:
    """All Motzkin paths with k steps, by explicit listing."""

    def rec(prefix: list[str], h: int) -> Iterator[str]:
        left = k - len(prefix)
        if left == 0:
            if h == 0:
                yield "".join(prefix)
            return
        for s, dh in ((UP, 1), (LEVEL, 0), (DOWN, -1)):
            nh = h + dh
            # must be able to come back down in the steps that remain
            if 0 <= nh <= left - 1:
                prefix.append(s)
                yield from rec(prefix, nh)
                prefix.pop()

    for steps in rec([], 0):
        yield MotzkinPath(steps)


def path_weight(path: MotzkinPath,
                level: Callable[[int], MultiPoly] = b_coeff,
                up: Callable[[int], MultiPoly] = lambda_coeff) -> MultiPoly:
    w = ONE
    h = 0
    for s in path.steps:
        if s == UP:
            h += 1
            w = w * up(h)
        elif s == LEVEL:
            w = w * level(h)
        else:
            h -= 1
    return w


def motzkin_sum(k: int,
                level: Callable[[int], MultiPoly] = b_coeff,
                up: Callable[[int], MultiPoly] = lambda_coeff) -> MultiPoly:
    """Weighted sum over Motzkin paths of k steps, by dynamic programming on height."""
    if k < 0:
        raise ValueError("k must be >= 0")
    row: dict[int, MultiPoly] = {0: ONE}
    for step in range(k):
        remaining = k - step - 1
        nxt: dict[int, list[MultiPoly]] = {}
        for h, w in row.items():
            if h + 1 <= remaining:
                nxt.setdefault(h + 1, []).append(w * up(h + 1))
            if h <= remaining:
                nxt.setdefault(h, []).append(w * level(h))
            if h >= 1:
                nxt.setdefault(h - 1, []).append(w)
        row = {h: s for h, ws in nxt.items() if (s := poly_sum(ws))}
    return row.get(0, ZERO)


def gamma_by_motzkin(n: int, explicit: bool = False) -> MultiPoly:
    """Gamma_n as the weighted sum over Motzkin paths of n - 1 steps."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if explicit:
        return poly_sum(path_weight(p) for p in enumerate_motzkin_paths(n - 1))
    return motzkin_sum(n - 1)


def motzkin_numbers(kmax: int) -> list[int]:
    """Path counts for k = 0..kmax, from explicit listing."""
    return [sum(1 for _ in enumerate_motzkin_paths(k)) for k in range(kmax + 1)]


def cfrac_series(order: int, depth: int) -> TruncSeries:
    """1 / (1 - b_0 t - lambda_1 t^2 / (1 - b_1 t - ...)) with ``depth`` levels, to t^order.

    The innermost level is 1 / (1 - b_{depth-1} t); levels are folded from
    the inside out so every denominator has constant term 1.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    inner: TruncSeries | None = None
    for k in range(depth - 1, -1, -1):
        # level k is multiplied by t^(2k) on the way out, so it only needs t^(order - 2k)
        ord_k = max(order - 2 * k, 0)
        denom = [ONE, -b_coeff(k)] + [ZERO] * ord_k
        if inner is not None:
            lam = lambda_coeff(k + 1)
            for j in range(2, ord_k + 1):
                c = inner[j - 2]
                if c:
                    denom[j] = denom[j] - lam * c
        inner = series_reciprocal(TruncSeries(denom[: ord_k + 1], ord_k))
    assert inner is not None
    return TruncSeries(inner.coeffs, order)


def gamma_by_cfrac(nmax: int, depth: int | None = None) -> list[MultiPoly]:
    """Coefficients of t^0..t^nmax of t * (J-fraction); entry n is Gamma_n.

    Entry 0 is the zero polynomial. The default depth nmax // 2 + 1 already
    covers every path that reaches t^nmax.
    """
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    depth = depth if depth is not None else nmax // 2 + 1
    s = cfrac_series(nmax - 1, depth)
    return [ZERO] + list(s.coeffs)
