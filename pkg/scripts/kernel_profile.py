"""Profile of the kernel varphi: values on a log grid (CSV on stdout), its
minimum, the slope at 1 and the three closed-form integrals.

    python3 scripts/kernel_profile.py > varphi.csv
"""

import math
import sys

import numpy as np

from altxi.mellin_oracle import SCHEMES, QuadratureSpec, special_integrals
from altxi.theta_kernel import phi_difference, varphi, varphi_derivative, varphi_from_theta, varphi_log, varphi_minimum


def main(n=121):
    print("x,varphi,log_abs_varphi,theta_route_minus_quartet,phi_difference_minus_quartet")
    for x in np.geomspace(1e-2, 1e2, n):
        x = float(x)
        v = varphi(x)
        _, log_abs = varphi_log(x)
        print(f"{x!r},{v!r},{log_abs!r},{varphi_from_theta(x) - v:.3e},{phi_difference(x) - v:.3e}")

    x_min, v_min = varphi_minimum()
    d1 = varphi_derivative(1.0)
    info = [
        f"minimum varphi({x_min:.10f}) = {v_min:.12f}",
        f"varphi(1) = {varphi(1.0):.12f}, varphi'(1) = {d1:.10f}, -varphi(1)/4 = {-varphi(1.0) / 4:.10f}",
    ]
    for scheme in SCHEMES:
        over_x, over_sqrt, plain = special_integrals(QuadratureSpec(scheme=scheme))
        info.append(
            f"[{scheme}] int varphi/x + ln2 = {over_x + math.log(2):+.1e}, "
            f"int varphi/sqrt(x) + ln2 = {over_sqrt + math.log(2):+.1e}, int varphi + pi/4 = {plain + math.pi / 4:+.1e}"
        )
    print("\n".join(info), file=sys.stderr)


if __name__ == "__main__":
    main()
