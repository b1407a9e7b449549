"""Time every route to Gamma_n and check it against the recurrence.

Prints one row per n: the value at all-ones, the number of monomials, and
the wall time of each route (a dash where a route is skipped or the size
exceeds its limit).
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, fields

from dfgamma.recurrences import gamma
from dfgamma.verify import ROUTES


@dataclass
class RouteTableConfig:
    nmax: int = 8
    enum_nmax: int = 6  # tableaux and escaliers enumerate |T_(n-1)| objects


def timed(fn, n):
    t0 = time.perf_counter()
    value = fn(n)
    return value, time.perf_counter() - t0


def main(cfg: RouteTableConfig) -> int:
    names = list(ROUTES)
    print(f"{'n':>3} {'Gamma_n(1..1)':>14} {'terms':>7} " + " ".join(f"{r:>10}" for r in names))
    bad = 0
    for n in range(1, cfg.nmax + 1):
        ref = gamma(n)
        cells = []
        for r in names:
            if r in ("tableaux", "escaliers") and n > cfg.enum_nmax:
                cells.append(f"{'-':>9} ")
                continue
            value, secs = timed(ROUTES[r], n)
            ok = value == ref
            bad += not ok
            cells.append(f"{secs:9.3f}{' ' if ok else '!'}")
        print(f"{n:>3} {ref.evaluate([1] * 6):>14} {len(ref):>7} " + " ".join(cells))
    print("all routes agree" if not bad else f"{bad} disagreements (marked !)")
    return 1 if bad else 0


def parse_args() -> RouteTableConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(RouteTableConfig):
        ap.add_argument(f"--{f.name.replace('_', '-')}", type=int, default=f.default)
    return RouteTableConfig(**vars(ap.parse_args()))


if __name__ == "__main__":
    raise SystemExit(main(parse_args()))
