"""Tour of the deformed special functions.

The whole package is built on the deformed integer [n]_q = sum_{k<=n} q^{-k},
which exceeds n for q < 1, and on factorials assembled from it in the log
domain.  This script shows how fast those factorials outgrow n!, checks the
Jackson product exponential against its series form, and watches everything
collapse back to the classical objects as q -> 1.

Run:  python demos/01_q_special_functions.py
"""

import math
import pathlib

import numpy as np

from qcoherent import (
    Deformation,
    SeriesControl,
    jackson_e,
    log_q_factorial,
    log_q_factorial_via_gamma,
    q_factorial_ratio,
    q_number,
)

# ---------------------------------------------------------------- q-numbers
print("deformed integers [n]_q vs n")
print(f"{'n':>3} {'q=0.9':>12} {'q=0.7':>12} {'q=0.5':>12}")
for n in (1, 2, 5, 10, 20):
    row = [q_number(n, Deformation(q)) for q in (0.9, 0.7, 0.5)]
    print(f"{n:>3} {row[0]:>12.4f} {row[1]:>12.4f} {row[2]:>12.4g}")
print()

# --------------------------------------------- factorial enhancement d_q(n)
# d_q(n) = [n]_q!/n! is always >= 1, grows with n, and grows as q drops;
# it measures how much faster the deformed normalization series converges
print("factorial enhancement d_q(n) = [n]_q!/n!")
ns = np.arange(0, 31)
for q in (0.98, 0.96, 0.94):
    d = Deformation(q)
    vals = [q_factorial_ratio(int(n), d) for n in ns]
    print(f"  q={q}: d(10)={vals[10]:.4f}  d(20)={vals[20]:.4f}  d(30)={vals[30]:.4f}")
print()

# ----------------------------------------------- log-domain self-consistency
# two accumulation routes for ln [n]_q!: direct ln[k] increments vs the
# split n(n+1)/2 ln(1/q) + ln {n}_q!
d = Deformation(0.7)
worst = max(
    abs(log_q_factorial(n, d) - log_q_factorial_via_gamma(n, d))
    / max(log_q_factorial(n, d), 1.0)
    for n in range(1, 201)
)
print(f"log-factorial route agreement, n <= 200, q=0.7: rel gap {worst:.2e}")
print()

# -------------------------------------------------- Jackson E_q(w) two ways
def jackson_series(w, q, terms=200):
    total, term = 0.0, 1.0
    for n in range(terms):
        total += term
        maths = (1.0 - q ** (n + 1)) / (1.0 - q)
        term = term * q**n * w / (maths * (1.0 - q))
    return total


print("Jackson product vs series, q=0.5")
for w in (0.25, 1.0, 4.0):
    prod = jackson_e(w, Deformation(0.5)).real
    ser = jackson_series(w, 0.5)
    print(f"  E(w={w:<4}) product {prod:.12f}  series {ser:.12f}  rel gap {abs(prod/ser-1):.2e}")
print()

# ----------------------------------------------------------- classical limit
# the number of product factors scales like ln(1/tol)/ln(1/q), so q close to 1
# needs a larger term cap than the default control provides
print("classical limit: E_q[(1-q) z] -> exp(z) as q -> 1")
slow = SeriesControl(rel_tol=1e-12, max_terms=200_000)
for q in (0.9, 0.99, 0.999):
    val = jackson_e((1 - q) * 2.0, Deformation(q), slow).real
    print(f"  q={q}: E_q[(1-q)*2] = {val:.6f}   exp(2) = {math.exp(2):.6f}")

# ------------------------------------------------------------------- plots
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out_dir = pathlib.Path(__file__).parent / "output"
    out_dir.mkdir(exist_ok=True)

    fig, ax = plt.subplots(figsize=(6, 4))
    for q, marker in ((0.98, "D"), (0.96, "*"), (0.94, "s")):
        d = Deformation(q)
        ax.plot(ns, [q_factorial_ratio(int(n), d) for n in ns], marker, label=f"q={q}", ms=4)
    ax.set_xlabel("n")
    ax.set_ylabel("$[n]_q!/n!$")
    ax.set_title("factorial enhancement")
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_dir / "qfunctions.png", dpi=120)
    print(f"\nwrote {out_dir / 'qfunctions.png'}")
except ImportError:
    print("\nmatplotlib not installed; skipped the plot")
