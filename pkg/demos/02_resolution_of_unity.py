"""Resolution of unity: weight functions and the moment problem.

The states resolve the identity against a weight W_q(x) that is known in
closed form through the Jackson exponential.  The companion weight
Wt_q = pi W_q / N_q must reproduce the deformed factorials as its power
moments; this script verifies the first eleven moments by quadrature and
runs the Carleman/logarithmic-test diagnostic that shows the moment problem
admits non-unique solutions for q < 1 (so uniqueness is never claimed).

Run:  python demos/02_resolution_of_unity.py
"""

import math
import pathlib

import numpy as np

from qcoherent import (
    Deformation,
    carleman_diagnostic,
    moment_integral,
    weight,
    weight_tilde,
)

# ------------------------------------------------------------- weight shapes
print("weights at a few points (q = 0.8)")
d = Deformation(0.8)
print(f"{'x':>5} {'Wt_q':>12} {'W_q':>12} {'e^-x':>12} {'1/pi':>12}")
for x in (0.0, 0.5, 1.0, 2.0, 5.0):
    print(
        f"{x:>5.1f} {float(weight_tilde(x, d)):>12.6f} {float(weight(x, d)):>12.6f}"
        f" {math.exp(-x):>12.6f} {1/math.pi:>12.6f}"
    )
print()

# ------------------------------------------------------- moment verification
print("moment check: quadrature of x^n Wt_q(x) vs [n]_q!  (q = 0.8)")
print(f"{'n':>3} {'numeric':>16} {'rel error':>12} {'domain':>9}")
for n in range(11):
    rep = moment_integral(n, d)
    print(f"{n:>3} {rep.numeric:>16.6e} {rep.rel_error:>12.2e} {rep.domain_used:>9.0f}")
print()

# ------------------------------------------------------- Carleman diagnostic
# a_n = ([n]_q!)^{-1/(2n)}; if sum a_n converges, other weights with the same
# moments may exist.  The logarithmic test ln(a_n)/ln(n) < -1 certifies
# convergence for q < 1; classically the ratio tends to -1/2 instead.
for q in (0.7, 0.9, 1.0):
    diag = carleman_diagnostic(Deformation(q), 200)
    tag = f"q={q}" if q < 1 else "classical"
    if diag.threshold is None:
        print(f"{tag:>10}: log-ratio never drops below -1 "
              f"(min {np.nanmin(diag.log_ratio):.3f}); series diverges, weight unique")
    else:
        print(f"{tag:>10}: log-ratio < -1 from n = {diag.threshold}; "
              f"series converges, uniqueness not guaranteed")
print()

print("partial sums after 100 terms (stronger deformation, faster decay):")
for q in (0.7, 0.8, 0.9):
    s = carleman_diagnostic(Deformation(q), 100).partial_sums[-1]
    print(f"  q={q}: sum = {s:.4f}")

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
        ax1.plot(xs, weight_tilde(xs, dq), style, label=f"q={q:g}")
        ax2.plot(xs, weight(xs, dq), style, label=f"q={q:g}")
    ax1.set_title(r"$\tilde W_q(x)$")
    ax2.set_title(r"$W_q(x)$")
    for ax in (ax1, ax2):
        ax.set_xlabel("x")
        ax.legend()
    fig.tight_layout()
    fig.savefig(out_dir / "weights.png", dpi=120)
    print(f"\nwrote {out_dir / 'weights.png'}")
except ImportError:
    print("\nmatplotlib not installed; skipped the plot")
