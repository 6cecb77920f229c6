"""Locate zeros of xi_a on the critical line and confirm each one through
the minimum of |eta(1/2 + it)| from the quartet sum.

The critical-line gamma series has an absolute error floor near 1e-18
while xi_a(1/2 + it) shrinks like exp(-pi t/4), so the sign-change zeros
lose accuracy as t grows (about 1e-6 by t = 33).  The last column shows the
series error bound at each zero for comparison.

    python3 scripts/scan_zeros.py --t-max 50 --step 0.1 --workers 4
"""

import argparse
import time
from dataclasses import dataclass

from altxi.errors import DomainError
from altxi.settings import EvalSettings
from altxi.zeta_family import locate_zero_by_eta_modulus, scan_critical_line, xi_a_critical


@dataclass(frozen=True)
class ScanConfig:
    t_min: float = 10.0
    t_max: float = 40.0
    step: float = 0.1
    workers: int = 1
    bracket: float = 0.1  # half-width around each zero for the |eta| search
    rel_tol: float = 1e-14


def run(cfg: ScanConfig):
    settings = EvalSettings(rel_tol=cfg.rel_tol)
    t0 = time.perf_counter()
    res = scan_critical_line(cfg.t_min, cfg.t_max, cfg.step, settings, workers=cfg.workers)
    elapsed = time.perf_counter() - t0
    print(f"{len(res.records)} grid points in [{cfg.t_min}, {cfg.t_max}], {len(res.zeros)} zeros, {elapsed:.2f}s")
    print(f"{'xi_a sign change':>18}  {'|eta| minimum':>18}  {'difference':>10}  {'series bound':>12}")
    for z in res.zeros:
        bound = xi_a_critical(z, settings).est_error
        try:
            other = locate_zero_by_eta_modulus(z - cfg.bracket, z + cfg.bracket, settings)
        except DomainError:
            print(f"{z:18.10f}  {'no minimum':>18}  {'':>10}  {bound:12.1e}")
            continue
        print(f"{z:18.10f}  {other:18.10f}  {abs(z - other):10.1e}  {bound:12.1e}")
    return res


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    d = ScanConfig()
    p.add_argument("--t-min", type=float, default=d.t_min)
    p.add_argument("--t-max", type=float, default=d.t_max)
    p.add_argument("--step", type=float, default=d.step)
    p.add_argument("--workers", type=int, default=d.workers)
    a = p.parse_args()
    run(ScanConfig(a.t_min, a.t_max, a.step, a.workers))


if __name__ == "__main__":
    main()
