"""Lower and upper incomplete gamma at omega = 1/4 + 6i on the A/B/C_m grid.

Prints our values next to the published table and the per-component
differences, plus the route each upper value took.

    python3 scripts/reproduce_table2.py
"""

from altxi.checks import GAMMA_OMEGA, OMEGA, TABLE2
from altxi.complex_gamma import gamma
from altxi.incomplete_gamma import check_additivity, lower_gamma, upper_gamma


def fmt(z):
    return f"{z.real:+.12f} {z.imag:+.12f}i"


def main():
    g = gamma(OMEGA)
    print(f"Gamma(omega)      ours {fmt(g)}   published {fmt(GAMMA_OMEGA)}   |diff| {abs(g - GAMMA_OMEGA):.1e}")
    print()
    print(f"{'z':>7}  {'gamma(omega, z)':>34}  {'|diff|':>8}  {'Gamma(omega, z)':>34}  {'|diff|':>8}  route  additivity")
    for label, z, low, up in TABLE2:
        lo = lower_gamma(OMEGA, z)
        hi = upper_gamma(OMEGA, z)
        print(
            f"{label:>7}  {fmt(lo.value):>34}  {abs(lo.value - low):8.1e}  "
            f"{fmt(hi.value):>34}  {abs(hi.value - up):8.1e}  {hi.method[:5]}  {check_additivity(OMEGA, z):.1e}"
        )


if __name__ == "__main__":
    main()
