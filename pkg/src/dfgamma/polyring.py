"""Exact sparse polynomials in the six variables x, y, z, xb, yb, zb.

Coefficients are Python ints (arbitrary precision). Monomials are stored as
packed integers, 10 bits per variable with x in the most significant field,
so monomial multiplication is integer addition and integer comparison of
keys is lexicographic comparison of exponent vectors.

Also provides ``TruncSeries``, truncated power series in an auxiliary
variable t whose coefficients are ``MultiPoly`` values.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from math import comb
from typing import Union

VARS = ("x", "y", "z", "xb", "yb", "zb")
NVARS = len(VARS)

_BITS = 10
_MASK = (1 << _BITS) - 1
_MAXEXP = _MASK
_SHIFTS = tuple(_BITS * (NVARS - 1 - i) for i in range(NVARS))

ExponentVector = tuple[int, int, int, int, int, int]


def pack(exps: Iterable[int]) -> int:
    exps = tuple(exps)
    if len(exps) != NVARS:
        raise ValueError(f"exponent vector must have {NVARS} entries, got {len(exps)}")
    key = 0
    for e, s in zip(exps, _SHIFTS):
        if not 0 <= e <= _MAXEXP:
            raise ValueError(f"exponent {e} out of range [0, {_MAXEXP}]")
        key |= e << s
    return key


def unpack(key: int) -> ExponentVector:
    return tuple((key >> s) & _MASK for s in _SHIFTS)  # type: ignore[return-value]


def _degree(key: int) -> int:
    d = 0
    while key:
        d += key & _MASK
        key >>= _BITS
    return d


Coercible = Union["MultiPoly", int]


class MultiPoly:
    """Immutable sparse polynomial with integer coefficients.

    Build from a mapping ``{exponent_tuple: coeff}``, from an int, or with
    the module constants ``x, y, z, xb, yb, zb`` and ordinary operators.
    The zero polynomial has no terms.
    """

    __slots__ = ("_terms", "_hash", "_deg")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | int | None = None):
        if terms is None:
            packed = {}
        elif isinstance(terms, int):
            packed = {0: terms} if terms else {}
        else:
            packed = {}
            for exps, c in terms.items():
                if c:
                    k = pack(exps)
                    packed[k] = packed.get(k, 0) + int(c)
            packed = {k: c for k, c in packed.items() if c}
        self._terms: dict[int, int] = packed
        self._hash: int | None = None
        self._deg: int | None = None

    @classmethod
    def _raw(cls, packed: dict[int, int]) -> MultiPoly:
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = packed
        p._hash = None
        p._deg = None
        return p

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        exps = [0] * NVARS
        exps[VARS.index(name)] = 1
        return cls({tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> MultiPoly:
        return cls({tuple(exps): coeff})

    # -- inspection -------------------------------------------------------

    def terms(self) -> dict[ExponentVector, int]:
        """Term map keyed by exponent vectors."""
        return {unpack(k): c for k, c in self._terms.items()}

    def sorted_terms(self) -> list[tuple[ExponentVector, int]]:
        """Terms in canonical order: total degree descending, then lex descending."""
        keys = sorted(self._terms, key=lambda k: (_degree(k), k), reverse=True)
        return [(unpack(k), self._terms[k]) for k in keys]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_term(self) -> int:
        return self._terms.get(0, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self._deg is None:
            self._deg = max((_degree(k) for k in self._terms), default=-1)
        return self._deg

    def coefficients(self) -> list[int]:
        return list(self._terms.values())

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other: Coercible) -> MultiPoly:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly(other)
        return NotImplemented

    def __add__(self, other: Coercible) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for k, c in small.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Coercible) -> MultiPoly:
        if isinstance(other, int):
            if not other:
                return ZERO
            return MultiPoly._raw({k: c * other for k, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if self.degree() + other.degree() > _MAXEXP:
            raise OverflowError("product degree exceeds exponent field width")
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return MultiPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution and evaluation -------------------------------------

    def shift_plus_one(self, names: Iterable[str] = ("x", "xb")) -> MultiPoly:
        """Substitute v -> v + 1 for every listed variable v in {x, xb}."""
        idx = []
        for name in names:
            if name not in ("x", "xb"):
                raise ValueError(f"shift only supported for x and xb, got {name!r}")
            idx.append(VARS.index(name))
        result = self
        for i in sorted(set(idx)):
            result = result._shift_one(i)
        return result

    def _shift_one(self, i: int) -> MultiPoly:
        s = _SHIFTS[i]
        unit = 1 << s
        out: dict[int, int] = {}
        get = out.get
        for k, c in self._terms.items():
            e = (k >> s) & _MASK
            base = k - e * unit
            for j in range(e + 1):
                kk = base + j * unit
                out[kk] = get(kk, 0) + c * comb(e, j)
        return MultiPoly._raw({k: c for k, c in out.items() if c})

    def substitute_vars(self, images: Iterable[str]) -> MultiPoly:
        """Rename variables: the i-th variable of ``VARS`` becomes ``images[i]``.

        ``p.substitute_vars(("xb", "zb", "yb", "x", "z", "y"))`` is
        p(xb, zb, yb, x, z, y).
        """
        target = [VARS.index(n) for n in images]
        if len(target) != NVARS:
            raise ValueError("need one image per variable")
        out: dict[int, int] = {}
        for k, c in self._terms.items():
            exps = unpack(k)
            new = [0] * NVARS
            for e, t in zip(exps, target):
                new[t] += e
            kk = pack(new)
            out[kk] = out.get(kk, 0) + c
        return MultiPoly._raw({k: c for k, c in out.items() if c})

    def evaluate(self, point: Iterable[int]) -> int:
        point = tuple(int(v) for v in point)
        if len(point) != NVARS:
            raise ValueError(f"need {NVARS} values, got {len(point)}")
        total = 0
        for k, c in self._terms.items():
            term = c
            for e, v in zip(unpack(k), point):
                if e:
                    term *= v**e
            total += term
        return total

    # -- rendering --------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(VARS, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"coeff": str(c), "exps": list(exps)} for exps, c in self.sorted_terms()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> MultiPoly:
        terms: dict[tuple[int, ...], int] = {}
        for t in obj["terms"]:
            exps = tuple(int(e) for e in t["exps"])
            terms[exps] = terms.get(exps, 0) + int(t["coeff"])
        return cls(terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()!r})"


ZERO = MultiPoly._raw({})
ONE = MultiPoly._raw({0: 1})

x = MultiPoly.var("x")
y = MultiPoly.var("y")
z = MultiPoly.var("z")
xb = MultiPoly.var("xb")
yb = MultiPoly.var("yb")
zb = MultiPoly.var("zb")


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def poly_shift_plus_one(p: MultiPoly, names: Iterable[str] = ("x", "xb")) -> MultiPoly:
    return p.shift_plus_one(names)


def poly_eval_int(p: MultiPoly, point: Iterable[int]) -> int:
    return p.evaluate(point)


def poly_sum(polys: Iterable[MultiPoly]) -> MultiPoly:
    """Sum many polynomials with a single accumulator dict."""
    out: dict[int, int] = {}
    get = out.get
    for p in polys:
        for k, c in p._terms.items():
            out[k] = get(k, 0) + c
    return MultiPoly._raw({k: c for k, c in out.items() if c})


def monomial_sum(counts: Mapping[tuple[int, ...], int]) -> MultiPoly:
    """Polynomial sum_{e} counts[e] * (monomial with exponents e)."""
    return MultiPoly(counts)


class SeriesOrderError(ValueError):
    pass


class TruncSeries:
    """Power series sum_{k<=order} coeffs[k] t^k with MultiPoly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Coercible], order: int | None = None):
        cs = [MultiPoly._coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = cs[: order + 1] + [ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs: tuple[MultiPoly, ...] = tuple(cs)

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls([ONE], order)

    def __getitem__(self, k: int) -> MultiPoly:
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def _check(self, other: TruncSeries) -> None:
        if self.order != other.order:
            raise SeriesOrderError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        return TruncSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        return series_mul(self, other)

    def scale(self, p: Coercible) -> TruncSeries:
        return TruncSeries([c * p for c in self.coeffs], self.order)

    def shift(self, k: int) -> TruncSeries:
        """Multiply by t^k, keeping the order."""
        return TruncSeries([ZERO] * k + list(self.coeffs[: self.order + 1 - k]), self.order)

    def __repr__(self) -> str:
        return f"TruncSeries(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    a._check(b)
    n = a.order
    out = []
    for k in range(n + 1):
        out.append(poly_sum(a.coeffs[i] * b.coeffs[k - i] for i in range(k + 1)
                            if a.coeffs[i] and b.coeffs[k - i]))
    return TruncSeries(out, n)


def series_reciprocal(a: TruncSeries) -> TruncSeries:
    """Inverse of a series whose constant coefficient is exactly 1."""
    if a.coeffs[0] != ONE:
        raise ValueError(f"constant coefficient must be 1, got {a.coeffs[0]}")
    out = [ONE]
    for k in range(1, a.order + 1):
        acc = poly_sum(a.coeffs[i] * out[k - i] for i in range(1, k + 1) if a.coeffs[i])
        out.append(-acc)
    return TruncSeries(out, a.order)
