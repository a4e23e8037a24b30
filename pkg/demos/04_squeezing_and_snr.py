"""Squeezing, signal-to-noise, and the deformed-boson sector.

Real labels z = sqrt(x) squeeze the X quadrature below the vacuum variance
1/2 while the signal-to-quantum-noise ratio beats the coherent-state value
4<N>.  Rewriting the same states with the deformed ladder operators b, b†
changes the story: they saturate the deformed uncertainty relation
(intelligent states) but never squeeze, and their SNR loses to 4<N>.

Run:  python demos/04_squeezing_and_snr.py
"""

import pathlib

import numpy as np

from qcoherent import (
    Deformation,
    deformed_snr,
    deformed_squeezing_ratio,
    deformed_variance,
    observable_set,
    quadrature_variances,
    snr,
    squeezing_ratio,
)

# ----------------------------------------------------- quadrature variances
print("quadrature variances at z = 1 (vacuum value is 0.5 each)")
for q in (1.0, 0.9, 0.8, 0.7):
    vx, vp = quadrature_variances(1.0, Deformation(q))
    print(f"  q={q:g}: (dX)^2 = {vx:.6f}  (dP)^2 = {vp:.6f}  product = {vx*vp:.6f}")
print("X is squeezed for q < 1; the product stays above the bound 1/4")
print()

# --------------------------------------------------------- squeezing ratio
print("squeezing ratio R_q = 2 (dX)^2 at real z = sqrt(x)")
print(f"{'x':>5} " + " ".join(f"{'q='+str(q):>10}" for q in (0.9, 0.8, 0.7)))
for x in (0.5, 1.0, 2.0, 5.0):
    row = [squeezing_ratio(x, Deformation(q)) for q in (0.9, 0.8, 0.7)]
    print(f"{x:>5.1f} " + " ".join(f"{v:>10.6f}" for v in row))
print()

# ------------------------------------------------------------ SNR ordering
print("signal-to-quantum-noise at q = 0.7: 4<N> <= sigma <= 4<N>(<N>+1), "
      "deformed sigma_b <= 4<N>")
d = Deformation(0.7)
print(f"{'x':>5} {'sigma':>10} {'4<N>':>10} {'Yuen':>12} {'sigma_b':>10}")
for x in (0.5, 1.0, 2.0, 5.0):
    sigma, lower, upper = snr(x, d)
    print(f"{x:>5.1f} {sigma:>10.5f} {lower:>10.5f} {upper:>12.5f} {deformed_snr(x, d):>10.5f}")
print()

# ------------------------------------------------------- deformed quadrature
print("deformed-sector variance and ratio (no squeezing ever):")
for q in (0.9, 0.7):
    d = Deformation(q)
    print(f"  q={q}: vacuum (dX_b)^2 = {deformed_variance(0.0, d):.5f} = 1/(2q); "
          f"R_bq(2) = {deformed_squeezing_ratio(2.0, d):.5f}")
print()

# ---------------------------------------------------------------- full bundle
bundle = observable_set(1.0, Deformation(0.8))
print("observable bundle at q = 0.8, z = 1:")
for name in ("mean_n", "metric", "mandel", "var_x", "var_p", "r_ratio",
             "snr", "snr_lower", "snr_upper", "var_xb", "r_b_ratio", "snr_b"):
    print(f"  {name:>10} = {getattr(bundle, name):+.6f}")

# ------------------------------------------------------------------- plots
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out_dir = pathlib.Path(__file__).parent / "output"
    out_dir.mkdir(exist_ok=True)

    xs = np.linspace(0.0, 5.0, 201)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    for q, style in ((1.0, "-"), (0.9, "--"), (0.8, ":"), (0.7, "-.")):
        dq = Deformation(q)
        ax1.plot(xs, [squeezing_ratio(float(v), dq) for v in xs], style, label=f"q={q:g}")
    ax1.set_xlabel("x")
    ax1.set_ylabel("$R_q$")
    ax1.set_title("squeezing ratio, real z")
    ax1.legend()

    d = Deformation(0.7)
    trip = np.array([snr(float(v), d) for v in xs])
    ax2.plot(xs, trip[:, 0], "-", label=r"$\sigma_q$")
    ax2.plot(xs, trip[:, 1], "--", label=r"$4\langle N\rangle$")
    ax2.plot(xs, trip[:, 2], ":", label="squeezed-state bound")
    ax2.plot(xs, [deformed_snr(float(v), d) for v in xs], "-.", label=r"$\sigma_{bq}$")
    ax2.set_xlabel("x")
    ax2.set_title("signal-to-noise, q = 0.7")
    ax2.legend()
    fig.tight_layout()
    fig.savefig(out_dir / "squeezing_snr.png", dpi=120)
    print(f"\nwrote {out_dir / 'squeezing_snr.png'}")
except ImportError:
    print("\nmatplotlib not installed; skipped the plot")
