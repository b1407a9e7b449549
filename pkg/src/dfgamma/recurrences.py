"""Defining recurrences for F_n(x, y, z) and Gamma_n(x, y, z, xb, yb, zb).

These are the reference values every other route is checked against.
"""

from __future__ import annotations

import threading

from .polyring import ONE, MultiPoly, x, xb, y, yb, z, zb

_lock = threading.Lock()
_gamma_memo: dict[int, MultiPoly] = {1: ONE}
_df_memo: dict[int, MultiPoly] = {1: ONE}


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def dumont_foata(n: int) -> MultiPoly:
    """F_n with F_1 = 1 and F_n = (x+y)(x+z) F_{n-1}(x+1,y,z) - x^2 F_{n-1}."""
    _check_n(n)
    with _lock:
        if n in _df_memo:
            return _df_memo[n]
        k = max(_df_memo)
        prev = _df_memo[k]
    lead = (x + y) * (x + z)
    x2 = x * x
    while k < n:
        prev = lead * prev.shift_plus_one(("x",)) - x2 * prev
        k += 1
        with _lock:
            _df_memo.setdefault(k, prev)
    return prev


def gamma(n: int) -> MultiPoly:
    """Gamma_n from Gamma_1 = 1 and

    Gamma_n = (x+zb)(y+xb) Gamma_{n-1}^+ + (x(yb-y) + xb(z-zb) - x xb) Gamma_{n-1},

    where ^+ substitutes x -> x+1 and xb -> xb+1.
    """
    _check_n(n)
    with _lock:
        if n in _gamma_memo:
            return _gamma_memo[n]
        k = max(_gamma_memo)
        prev = _gamma_memo[k]
    lead = (x + zb) * (y + xb)
    tail = x * (yb - y) + xb * (z - zb) - x * xb
    while k < n:
        prev = lead * prev.shift_plus_one(("x", "xb")) + tail * prev
        k += 1
        with _lock:
            _gamma_memo.setdefault(k, prev)
    return prev


def genocchi(n: int) -> int:
    """G_{2n+2}, read off as F_n(1, 1, 1)."""
    return dumont_foata(n).evaluate((1, 1, 1, 0, 0, 0))


def diagonal(p: MultiPoly) -> MultiPoly:
    """p(x, y, z, x, y, z): identify each barred variable with its plain twin."""
    return p.substitute_vars(("x", "y", "z", "x", "y", "z"))


BAR_SWAP = ("xb", "yb", "zb", "x", "y", "z")
# p(xb, zb, yb, x, z, y), visible on the recurrence
REC_SYMMETRY = ("xb", "zb", "yb", "x", "z", "y")
# p(yb, xb, zb, y, x, z), visible through conjugation of tableaux
CONJ_SYMMETRY = ("yb", "xb", "zb", "y", "x", "z")


def _sign(perm: tuple[int, ...]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def permutation_symmetries() -> list[tuple[str, tuple[str, ...], tuple[str, ...]]]:
    """(label, left images, right images) for each permutation u, v, w of x, y, z.

    Gamma(u, v, w, ub, vb, wb) equals Gamma itself for even permutations and
    Gamma(xb, yb, zb, x, y, z) for odd ones.
    """
    from itertools import permutations

    plain = ("x", "y", "z")
    out = []
    for perm in permutations(range(3)):
        names = tuple(plain[i] for i in perm)
        left = names + tuple(n + "b" for n in names)
        right = ("x", "y", "z", "xb", "yb", "zb") if _sign(perm) == 1 else BAR_SWAP
        out.append(("".join(names), left, right))
    return out
