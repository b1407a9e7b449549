"""Cross-route verification harness.

A check is a named pair of values that must be equal. Checks are described
by plain tuples ``(name, function name, kwargs)`` so they can be shipped to
worker processes; the report lists them sorted by name whatever order they
finished in.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product

from . import ansatz, cfrac, escaliers, recurrences, tableaux
from .polyring import MultiPoly, poly_sum

SUITES = ("routes", "symmetry", "ansatz", "profiles", "tridiag")

ENUM_LIMIT = 8


@dataclass
class VerifyConfig:
    nmax: int = 5
    jobs: int = 1
    seed: int = 1729
    enum_limit: int = ENUM_LIMIT
    word_exhaustive: int = 5
    word_random: int = 50
    word_random_max: int = 8
    profile_random: int = 30


@dataclass
class CheckResult:
    name: str
    params: dict
    status: str
    left: str
    right: str
    ms: int


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status != "pass"]

    def to_json_obj(self) -> dict:
        return {"checks": [asdict(c) for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)


def render(value) -> str:
    """Canonical text of a check value."""
    if isinstance(value, MultiPoly):
        return value.to_text()
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(render(v) for v in value) + "]"
    return str(value)


def digest(value) -> str:
    return hashlib.sha256(render(value).encode()).hexdigest()


# -- check bodies: each returns (left, right) -------------------------------

ROUTES = {
    "tableaux": tableaux.gamma_by_tableaux,
    "escaliers": escaliers.gamma_by_escaliers,
    "M": lambda n: ansatz.gamma_by_M(n - 1),
    "N": lambda n: ansatz.gamma_by_N(n - 1),
    "motzkin": cfrac.gamma_by_motzkin,
    "cfrac": lambda n: cfrac.gamma_by_cfrac(n)[n],
}


def _route(n, route):
    return recurrences.gamma(n), ROUTES[route](n)


def _genocchi_counts(n):
    g = recurrences.gamma(n).evaluate([1] * 6)
    return (g, g, recurrences.genocchi(n)), (
        tableaux.count_tableaux(tableaux.ShapeWord.staircase(n - 1)),
        escaliers.count_pretableaux(n - 1),
        g,
    )


def _symmetry(n, left, right):
    g = recurrences.gamma(n)
    return g.substitute_vars(left), g.substitute_vars(right)


def _df_symmetric(n):
    f = recurrences.dumont_foata(n)
    images = [("y", "x", "z"), ("x", "z", "y"), ("z", "y", "x")]
    return [f] * 3, [f.substitute_vars(p + ("xb", "yb", "zb")) for p in images]


def _diagonal(n):
    return recurrences.diagonal(recurrences.gamma(n)), recurrences.dumont_foata(n)


def _nonnegative(n):
    return True, all(c > 0 for c in recurrences.gamma(n).coefficients())


def _coeff_symmetry(n, images):
    b = cfrac.b_coeff(n)
    lam = cfrac.lambda_coeff(n + 1)
    return (b, lam), (b.substitute_vars(images), lam.substitute_vars(images))


def _conjugation(n):
    shape = tableaux.ShapeWord.staircase(n)
    bad_involution = bad_stats = 0
    count = 0
    for t in tableaux.enumerate_tableaux(shape):
        count += 1
        c = tableaux.conjugate(t)
        if tableaux.conjugate(c) != t:
            bad_involution += 1
        s, sc = tableaux.stats(t), tableaux.stats(c)
        if sc != (s.emc, s.fnr, s.lco, s.fnc, s.emr, s.dco):
            bad_stats += 1
    return (count, 0, 0), (count, bad_involution, bad_stats)


def _commutation(dim, kind):
    if kind == "DE":
        D, E = ansatz.make_D(dim), ansatz.make_E(dim)
        lhs, rhs = D @ E - E @ D, D + E
    else:
        B, A, I = ansatz.make_B(dim), ansatz.make_A(dim), ansatz.make_I(dim)
        lhs, rhs = B @ A - A @ B, A + I
    k = dim - 1
    return [e for r in rhs.block(k).rows for e in r], [e for r in lhs.block(k).rows for e in r]


def _alt_ansatz(word):
    return tableaux.ansatz_weight_sum(tableaux.ShapeWord(word)), ansatz.braket_string(word)


def _surj_ansatz(word):
    shape = tableaux.ShapeWord.parse(word) if word else tableaux.ShapeWord("")
    return MultiPoly(escaliers.count_surjective(shape)), ansatz.braket_string(word)


def _truncation(n, kind):
    f = ansatz.gamma_by_M if kind == "M" else ansatz.gamma_by_N
    return f(n, n + 1), f(n, n + 3)


def _extended_sum(n):
    return tableaux.extended_weight_total(n), tableaux.gamma_by_tableaux(n + 1)


def _profile_M(profile):
    n = len(profile)
    sums = _profile_cache("M", n)
    return sums.get(tuple(profile), MultiPoly()), ansatz.profile_braket("M", profile)


def _profile_N(profile):
    n = len(profile)
    sums = _profile_cache("N", n)
    return sums.get(tuple(profile), MultiPoly()), ansatz.profile_braket("N", profile)


_PROFILE_SUMS: dict[tuple[str, int], dict] = {}


def _profile_cache(kind, n):
    key = (kind, n)
    if key not in _PROFILE_SUMS:
        if kind == "M":
            _PROFILE_SUMS[key] = tableaux.profile_weight_sums(n)
        else:
            _PROFILE_SUMS[key] = escaliers.esc_profile_weight_sums(n)
    return _PROFILE_SUMS[key]


def _profile_total(kind, n):
    sums = _profile_cache(kind, n)
    return recurrences.gamma(n + 1), poly_sum(sums.values())


def _tridiag(dim, kind, imax):
    m = ansatz.make_M(dim) if kind == "M" else ansatz.make_N(dim)
    inner = m.block(dim - 1)
    left = [inner.bandwidth() <= 1]
    right = [True]
    for i in range(imax + 1):
        left += [m[i, i], m[i, i + 1] * m[i + 1, i]]
        right += [cfrac.b_coeff(i), cfrac.lambda_coeff(i + 1)]
    return right, left


def _motzkin_counts(kmax):
    # explicit path listing against the height DP with unit weights
    ones = lambda h: MultiPoly(1)  # noqa: E731
    dp = [cfrac.motzkin_sum(k, ones, ones).constant_term() for k in range(kmax + 1)]
    return cfrac.motzkin_numbers(kmax), dp


def _cfrac_depth(nmax):
    return cfrac.gamma_by_cfrac(nmax), cfrac.gamma_by_cfrac(nmax, depth=nmax // 2 + 3)


REGISTRY = {
    f.__name__: f
    for f in (
        _route, _genocchi_counts, _symmetry, _df_symmetric, _diagonal, _nonnegative,
        _coeff_symmetry, _conjugation, _commutation, _alt_ansatz, _surj_ansatz,
        _truncation, _extended_sum, _profile_M, _profile_N, _profile_total, _tridiag,
        _motzkin_counts, _cfrac_depth,
    )
}


# -- suite planning ---------------------------------------------------------


def random_words(cfg: VerifyConfig, letters: str) -> list[str]:
    rng = random.Random(cfg.seed)
    lo = min(cfg.word_exhaustive + 1, cfg.word_random_max)
    pool = [w for k in range(lo, cfg.word_random_max + 1) for w in tableaux.iter_words(k, letters)]
    return rng.sample(pool, min(cfg.word_random, len(pool)))


def random_profiles(cfg: VerifyConfig, n: int) -> list[tuple[int, ...]]:
    rng = random.Random(cfg.seed + n)
    allp = list(product(range(1, 7), repeat=n))
    return sorted(rng.sample(allp, min(cfg.profile_random, len(allp))))


def word_sample(cfg: VerifyConfig, letters: str) -> list[str]:
    words = [w for k in range(cfg.word_exhaustive + 1) for w in tableaux.iter_words(k, letters)]
    return words + random_words(cfg, letters)


def plan(suite: str, cfg: VerifyConfig) -> list[tuple[str, str, dict]]:
    """Check descriptors for one suite, or for every suite when ``suite == 'all'``."""
    if suite == "all":
        return [c for s in SUITES for c in plan(s, cfg)]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    nmax = cfg.nmax
    enum_max = min(nmax, cfg.enum_limit)
    out: list[tuple[str, str, dict]] = []
    add = lambda name, fn, **kw: out.append((name, fn, kw))  # noqa: E731

    if suite == "routes":
        for n in range(1, nmax + 1):
            for route in ROUTES:
                if route in ("tableaux", "escaliers") and n > enum_max:
                    continue
                add(f"routes/recurrence=={route}/n={n:02d}", "_route", n=n, route=route)
            if n <= min(enum_max, 7):
                add(f"routes/genocchi-counts/n={n:02d}", "_genocchi_counts", n=n)
        add(f"routes/cfrac-depth/nmax={nmax:02d}", "_cfrac_depth", nmax=nmax)
        add("routes/motzkin-path-counts", "_motzkin_counts", kmax=min(max(nmax, 6), 10))

    elif suite == "symmetry":
        for n in range(1, nmax + 1):
            for label, left, right in recurrences.permutation_symmetries():
                add(f"symmetry/permutation-{label}/n={n:02d}", "_symmetry", n=n, left=left, right=right)
            add(f"symmetry/recurrence-swap/n={n:02d}", "_symmetry", n=n,
                left=("x", "y", "z", "xb", "yb", "zb"), right=recurrences.REC_SYMMETRY)
            add(f"symmetry/conjugation-swap/n={n:02d}", "_symmetry", n=n,
                left=("x", "y", "z", "xb", "yb", "zb"), right=recurrences.CONJ_SYMMETRY)
            add(f"symmetry/dumont-foata-symmetric/n={n:02d}", "_df_symmetric", n=n)
            add(f"symmetry/diagonal-is-dumont-foata/n={n:02d}", "_diagonal", n=n)
            add(f"symmetry/nonnegative/n={n:02d}", "_nonnegative", n=n)
            for label, images in (("recurrence", recurrences.REC_SYMMETRY),
                                  ("conjugation", recurrences.CONJ_SYMMETRY)):
                add(f"symmetry/jfraction-coeffs-{label}/i={n - 1:02d}", "_coeff_symmetry",
                    n=n - 1, images=images)
        for n in range(0, min(nmax, 5) + 1):
            add(f"symmetry/conjugation-involution/n={n:02d}", "_conjugation", n=n)

    elif suite == "ansatz":
        for dim in range(2, max(nmax, 12) + 1):
            add(f"ansatz/commutation-DE/dim={dim:02d}", "_commutation", dim=dim, kind="DE")
            add(f"ansatz/commutation-BA/dim={dim:02d}", "_commutation", dim=dim, kind="BA")
        for w in word_sample(cfg, "DE"):
            add(f"ansatz/alternative-tableaux/{w or '-'}", "_alt_ansatz", word=w)
        for w in word_sample(cfg, "BA"):
            add(f"ansatz/surjective-tableaux/{w or '-'}", "_surj_ansatz", word=w)
        for n in range(0, nmax + 1):
            for kind in ("M", "N"):
                add(f"ansatz/truncation-{kind}/n={n:02d}", "_truncation", n=n, kind=kind)

    elif suite == "profiles":
        for n in range(0, min(nmax, 4) + 1):
            add(f"profiles/extended-weight-sum/n={n:02d}", "_extended_sum", n=n)
        for n in range(1, min(nmax, 3) + 1):
            profs = list(product(range(1, 7), repeat=n)) if n <= 2 else random_profiles(cfg, n)
            for p in profs:
                tag = "".join(map(str, p))
                add(f"profiles/M/{tag}", "_profile_M", profile=p)
                add(f"profiles/N/{tag}", "_profile_N", profile=p)
            add(f"profiles/M-total/n={n:02d}", "_profile_total", kind="M", n=n)
            add(f"profiles/N-total/n={n:02d}", "_profile_total", kind="N", n=n)

    elif suite == "tridiag":
        imax = max(nmax, 1)
        for kind in ("M", "N"):
            add(f"tridiag/{kind}/imax={imax:02d}", "_tridiag", dim=imax + 3, kind=kind, imax=imax)
    return out


def run_check(desc: tuple[str, str, dict]) -> CheckResult:
    name, fn, kwargs = desc
    t0 = time.perf_counter()
    try:
        left, right = REGISTRY[fn](**kwargs)
        status = "pass" if left == right else "fail"
        ld, rd = digest(left), digest(right)
    except Exception as exc:  # a crashing check is a failed check
        status, ld, rd = "fail", f"error: {exc!r}", ""
    ms = int((time.perf_counter() - t0) * 1000)
    params = {k: list(v) if isinstance(v, tuple) else v for k, v in kwargs.items()}
    return CheckResult(name, params, status, ld, rd, ms)


def run_suite(suite: str, cfg: VerifyConfig) -> VerifyReport:
    descs = plan(suite, cfg)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(run_check, descs, chunksize=8))
    else:
        results = [run_check(d) for d in descs]
    return VerifyReport(sorted(results, key=lambda c: c.name))
