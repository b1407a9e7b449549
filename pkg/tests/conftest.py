"""Shared strategies and independent oracles for the test suite."""

from itertools import product

from hypothesis import strategies as st

from dfgamma.escaliers import SurjPretableau, is_pretableau, row_length
from dfgamma.polyring import MultiPoly
from dfgamma.tableaux import DOWN, EMPTY, LEFT, AltTableau, ShapeWord, is_alternative

# total degree at most 6, coefficients up to a million in size
small_exps = st.tuples(*[st.integers(0, 3)] * 6).filter(lambda e: sum(e) <= 6)
small_coeffs = st.integers(-10**6, 10**6)


@st.composite
def polys(draw, max_terms=5):
    terms = draw(st.dictionaries(small_exps, small_coeffs, max_size=max_terms))
    return MultiPoly(terms)


points = st.tuples(*[st.integers(-6, 6)] * 6)

shape_words = st.text(alphabet="DE", max_size=7)


def tangent_numbers(kmax):
    """tan^(k)(0) for k = 0..kmax, from P_0 = t and P_{k+1} = (1 + t^2) P_k'."""
    poly = [0, 1]
    out = []
    for _ in range(kmax + 1):
        out.append(poly[0])
        deriv = [i * poly[i] for i in range(1, len(poly))] or [0]
        nxt = [0] * (len(deriv) + 2)
        for i, c in enumerate(deriv):
            nxt[i] += c
            nxt[i + 2] += c
        poly = nxt
    return out


def genocchi_from_tangent(m):
    """G_{2m} read off the expansion of x tan(x/2)."""
    t = tangent_numbers(2 * m)
    return 2 * m * t[2 * m - 1] // 2 ** (2 * m - 1)


def brute_tableaux(shape: ShapeWord):
    """Every 3^cells filling of ``shape`` kept when the clear-view checker accepts it."""
    cells = shape.cells()
    for vals in product((EMPTY, LEFT, DOWN), repeat=len(cells)):
        t = AltTableau.from_cells(shape, {c: v for c, v in zip(cells, vals) if v != EMPTY})
        if is_alternative(t):
            yield t


def brute_pretableaux(n: int):
    """Each column of (BBA)^n gets no cross or one cross in any of its rows."""
    width = 2 * n
    options = []
    for c in range(1, width + 1):
        rows = [r for r in range(1, n + 1) if c <= row_length(n, r)]
        options.append([None] + rows)
    for choice in product(*options):
        t = SurjPretableau(n, frozenset((r, c) for c, r in enumerate(choice, 1) if r is not None))
        if is_pretableau(t):
            yield t
