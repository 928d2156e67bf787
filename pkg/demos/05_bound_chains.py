"""Machine-checked inequality chains behind the growth estimates.

Each derivation step becomes a BoundCheck record: a named inequality with
its two sides evaluated by certified quadrature and a signed margin.
Identities (integral partitions, the integration-by-parts step) are checked
to 1e-8; one-sided estimates must hold with nonnegative margin.
"""

from imbq.bounds import bounded_chain_nd, lower_chain_2d, upper_chain_1d
from imbq.presets import get_preset


def show(title, checks):
    print(title)
    print(f"  {'check':30s} {'dir':3s} {'lhs':>14s} {'rhs':>14s} {'margin':>12s} ok")
    for c in checks:
        print(
            f"  {c.name:30s} {c.direction:3s} {c.lhs:14.6g} {c.rhs:14.6g} "
            f"{c.margin:12.3g} {'yes' if c.passed else 'NO'}"
        )
    print()


show("1D upper bound chain (Gaussian, t = 1e3):", upper_chain_1d(get_preset("gaussian", 1), 1e3))
show("2D lower bound chain (Gaussian, t = 1e4):", lower_chain_2d(get_preset("gaussian", 2), 1e4))
show("3D boundedness chain (Gaussian, t = 1e6):", bounded_chain_nd(get_preset("gaussian", 3), 1e6))

print("the CLI runs full sweeps of these chains and writes one CSV row per check:")
print("  imbq bounds --dim 2 --preset bump --tmin 100 --tmax 100000 --count 4 --out bounds.csv")
