"""The oscillation-aware quadrature oracle.

The squared norm integrand sin^2(t f(r))/f(r)^2 |w1(r)|^2 oscillates with
wavelength ~pi/t near r = 0; by t = 10^6 a naive adaptive quadrature
silently misses most of the oscillations.  The oracle substitutes s = f(r)
and aligns panels with the quarter-period lattice s = k pi/(2t), then
certifies every value by panel halving.
"""

from imbq.oracle import norm_sq_exact_detailed
from imbq.presets import get_preset
from imbq.quadrature import QuadratureConfig

preset = get_preset("gaussian", 1)

print("1D Gaussian, certified values of the squared frequency-side norm:")
print(f"{'t':>10} {'norm_sq':>20} {'norm_sq / t':>14} {'err bound':>12} {'panels':>9}")
for t in (1e1, 1e2, 1e3, 1e4, 1e5, 1e6):
    res = norm_sq_exact_detailed(preset, t)
    print(
        f"{t:10g} {res.value:20.10f} {res.value / t:14.10f} "
        f"{res.error_bound:12.2e} {res.panel_count:9d}"
    )
print("\nthe ratio norm_sq/t stabilizes: linear growth of the squared norm\n")

print("same value at three tolerances (self-convergence of the oracle):")
for tol in (1e-6, 1e-8, 1e-10):
    res = norm_sq_exact_detailed(preset, 1e4, QuadratureConfig(rel_tol=tol))
    print(f"  tol {tol:8.0e}: {res.value:.14f}  ({res.panel_count} panels)")

bump = get_preset("bump", 1)
print("\ncompactly supported bump (tabulated transform, cached on disk):")
for t in (1e2, 1e4):
    res = norm_sq_exact_detailed(bump, t)
    print(f"  t = {t:6g}: norm_sq = {res.value:.12f}  err <= {res.error_bound:.2e}")
print(f"  tabulation error estimate: {bump.table_error:.2e}")
