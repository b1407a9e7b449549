"""Census of profiles for extended tableaux and surjective pretableaux.

For each n, counts how many of the 6^n possible profiles occur, and checks
each per-profile weight sum against the matching matrix product.
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from dfgamma.ansatz import profile_braket
from dfgamma.escaliers import enumerate_pretableaux, esc_profile, esc_profile_weight_sums
from dfgamma.tableaux import enumerate_extended, ext_profile, profile_weight_sums


@dataclass
class CensusConfig:
    nmax: int = 3
    top: int = 5


def census(n: int, cfg: CensusConfig) -> bool:
    ext = Counter(ext_profile(u) for u in enumerate_extended(n))
    esc = Counter(esc_profile(t) for t in enumerate_pretableaux(n))
    ok = True
    for kind, sums in (("M", profile_weight_sums(n)), ("N", esc_profile_weight_sums(n))):
        mism = [p for p, w in sums.items() if w != profile_braket(kind, p)]
        ok &= not mism
        print(f"  {kind}: {len(sums)} profiles with nonzero sum, {len(mism)} mismatches")
    print(f"  extended tableaux: {sum(ext.values())} objects over {len(ext)} profiles")
    for p, k in ext.most_common(cfg.top):
        print(f"    {''.join(map(str, p)) or '-'}: {k}")
    print(f"  pretableaux: {sum(esc.values())} objects over {len(esc)} profiles")
    for p, k in esc.most_common(cfg.top):
        print(f"    {''.join(map(str, p)) or '-'}: {k}")
    return ok


def main(cfg: CensusConfig) -> int:
    ok = True
    for n in range(1, cfg.nmax + 1):
        print(f"n = {n} ({6 ** n} possible profiles)")
        ok &= census(n, cfg)
    return 0 if ok else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=CensusConfig.nmax)
    ap.add_argument("--top", type=int, default=CensusConfig.top)
    raise SystemExit(main(CensusConfig(**vars(ap.parse_args()))))
