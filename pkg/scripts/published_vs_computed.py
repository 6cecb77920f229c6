"""How far the published worked-example figures sit from double-precision
evaluation, and how the small error in the published xi_a propagates
through the conversions to xi and eta.

    python3 scripts/published_vs_computed.py
"""

from altxi.checks import PUBLISHED, S_EXAMPLE
from altxi.zeta_family import eta, eta_from_xi_a, pow2, xi, xi_a_gamma_series, xi_from_xi_a, zeta


def row(name, ours, published, chained=None):
    line = f"{name:>15}  ours {complex(ours):.13g}  published {complex(published):.11g}  |diff| {abs(ours - published):.2e}"
    if chained is not None:
        line += f"  |published-chain diff| {abs(chained - published):.2e}"
    print(line)


def main():
    s = S_EXAMPLE
    xa = xi_a_gamma_series(s).value.real
    xa_pub = PUBLISHED["xi_a(0.5+12i)"]
    eta_chain = eta_from_xi_a(s, xa_pub)
    row("xi_a(0.5+12i)", xa, xa_pub)
    row("xi(0.5+12i)", xi(s).value.real, PUBLISHED["xi(0.5+12i)"], xi_from_xi_a(s, xa_pub).real)
    row("eta(0.5+12i)", eta(s).value, PUBLISHED["eta(0.5+12i)"], eta_chain)
    row("zeta(0.5+12i)", zeta(s).value, PUBLISHED["zeta(0.5+12i)"], eta_chain / (1 - pow2(1 - s)))
    print(f"{'':>15}  amplification of a xi_a error: xi x{abs(xi_from_xi_a(s, 1.0)):.0f}, eta x{abs(eta_from_xi_a(s, 1.0)):.0f}")
    xa_half = xi_a_gamma_series(0.5).value.real
    row("xi_a(1/2)", xa_half, PUBLISHED["xi_a(1/2)"])
    row("eta(1/2)", eta(0.5).value.real, PUBLISHED["eta(1/2)"])
    row("zeta(1/2)", zeta(0.5).value.real, PUBLISHED["zeta(1/2)"])
    row("xi(1/2)", xi_from_xi_a(0.5, xa_half).real, PUBLISHED["xi(1/2)"])


if __name__ == "__main__":
    main()
