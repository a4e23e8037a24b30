"""Deterministic CSV datasets for the nine standard figures.

Each dataset has the abscissa (n or x) in the first column and one series per
column after that.  Values are written in fixed 17-significant-digit
scientific notation with comma separators and LF line endings, so repeated
runs with the same flags produce byte-identical files.  Axis ranges are not
dictated by the source material and are therefore configurable; the defaults
below are chosen to display each curve's behavior.

    1  factorial enhancement d_q(n) vs n        q in {0.98, 0.96, 0.94}
    2  normalization N_q(x)                     q in {1, 0.9, 0.8, 0.7}
    3  moment weight Wt_q(x)                    same q set
    4  unity-resolution weight W_q(x)           same q set
    5  metric factor                            same q set
    6  Mandel parameter                         same q set
    7  squeezing ratio at real z = sqrt(x)      same q set
    8  SNR bundle at q = 0.7: sigma, 4<N>, 4<N>(<N>+1), deformed sigma
    9  deformed squeezing ratio                 q in {1, 0.9, 0.8, 0.7}
"""

from __future__ import annotations

import io
from dataclasses import dataclass, replace

import numpy as np

from .moments import weight, weight_tilde
from .observables import (
    deformed_snr,
    deformed_squeezing_ratio,
    mandel_q,
    metric_factor,
    snr,
    squeezing_ratio,
)
from .qspecial import DEFAULT_CONTROL, Deformation, SeriesControl, q_factorial_ratio
from .states import normalization

__all__ = ["FigureSpec", "figure_spec", "figure_dataset", "render_csv", "emit_figure"]

_CLASSIC_FOUR = (1.0, 0.9, 0.8, 0.7)


@dataclass(frozen=True)
class FigureSpec:
    """Abscissa grid and q values for one figure dataset."""

    figure_id: int
    q_list: tuple[float, ...]
    x_range: tuple[float, float, int]  # (lo, hi, points)
    notes: str


_DEFAULTS: dict[int, FigureSpec] = {
    1: FigureSpec(1, (0.98, 0.96, 0.94), (0.0, 30.0, 31), "factorial enhancement over integer n"),
    2: FigureSpec(2, _CLASSIC_FOUR, (0.0, 5.0, 201), "normalization vs x"),
    3: FigureSpec(3, _CLASSIC_FOUR, (0.0, 5.0, 201), "moment-problem weight vs x"),
    4: FigureSpec(4, _CLASSIC_FOUR, (0.0, 5.0, 201), "unity-resolution weight vs x"),
    5: FigureSpec(5, _CLASSIC_FOUR, (0.0, 5.0, 201), "metric factor vs x"),
    6: FigureSpec(6, _CLASSIC_FOUR, (0.0, 10.0, 201), "Mandel parameter vs x"),
    7: FigureSpec(7, _CLASSIC_FOUR, (0.0, 5.0, 201), "squeezing ratio vs x, real z"),
    8: FigureSpec(8, (0.7,), (0.0, 5.0, 201), "SNR with bounds and deformed SNR, real z"),
    9: FigureSpec(9, _CLASSIC_FOUR, (0.0, 5.0, 201), "deformed squeezing ratio vs x"),
}

_PER_Q_COLUMNS = {
    1: ("d", lambda x, d, ctrl: q_factorial_ratio(int(round(x)), d)),
    2: ("norm", lambda x, d, ctrl: normalization(x, d, ctrl)),
    3: ("wtilde", lambda x, d, ctrl: float(weight_tilde(x, d, ctrl))),
    4: ("w", lambda x, d, ctrl: float(weight(x, d, ctrl))),
    5: ("metric", lambda x, d, ctrl: metric_factor(x, d, ctrl)),
    6: ("mandel", lambda x, d, ctrl: mandel_q(x, d, ctrl)),
    7: ("rq", lambda x, d, ctrl: squeezing_ratio(x, d, ctrl)),
    9: ("rbq", lambda x, d, ctrl: deformed_squeezing_ratio(x, d, ctrl)),
}


def figure_spec(
    figure_id: int,
    q_list=None,
    points: int | None = None,
    x_max: float | None = None,
) -> FigureSpec:
    """Default FigureSpec with optional overrides."""
    if figure_id not in _DEFAULTS:
        raise ValueError(f"figure_id must be 1..9, got {figure_id!r}")
    spec = _DEFAULTS[figure_id]
    if q_list:
        spec = replace(spec, q_list=tuple(float(q) for q in q_list))
    lo, hi, n = spec.x_range
    if x_max is not None:
        hi = float(x_max)
    if points is not None:
        if points < 2:
            raise ValueError(f"points must be >= 2, got {points}")
        n = int(points)
    if figure_id == 1:
        n = int(hi) + 1 if points is None else n  # integer abscissa
    return replace(spec, x_range=(lo, hi, n))


def figure_dataset(
    spec: FigureSpec, ctrl: SeriesControl = DEFAULT_CONTROL
) -> tuple[list[str], np.ndarray]:
    """Evaluate one figure; returns (headers, rows)."""
    lo, hi, n_points = spec.x_range
    if spec.figure_id == 1:
        xs = np.round(np.linspace(lo, hi, n_points))
        headers = ["n"]
    else:
        xs = np.linspace(lo, hi, n_points)
        headers = ["x"]

    columns = [xs]
    if spec.figure_id == 8:
        q = spec.q_list[0]
        d = Deformation(q)
        headers += [f"sigma[q={q:g}]", "four_mean_n", "yuen_bound", f"sigma_b[q={q:g}]"]
        sig = np.empty_like(xs)
        lower = np.empty_like(xs)
        upper = np.empty_like(xs)
        sig_b = np.empty_like(xs)
        for i, x in enumerate(xs):
            sig[i], lower[i], upper[i] = snr(float(x), d, ctrl)
            sig_b[i] = deformed_snr(float(x), d, ctrl)
        columns += [sig, lower, upper, sig_b]
    else:
        name, fun = _PER_Q_COLUMNS[spec.figure_id]
        for q in spec.q_list:
            d = Deformation(q)
            headers.append(f"{name}[q={q:g}]")
            columns.append(np.array([fun(float(x), d, ctrl) for x in xs]))
    return headers, np.column_stack(columns)


def render_csv(headers: list[str], data: np.ndarray) -> str:
    """Fixed-format CSV text: %.16e cells, comma separator, LF endings."""
    buf = io.StringIO()
    buf.write(",".join(headers))
    buf.write("\n")
    for row in data:
        buf.write(",".join(f"{v:.16e}" for v in row))
        buf.write("\n")
    return buf.getvalue()


def emit_figure(
    figure_id: int,
    out_path: str,
    q_list=None,
    points: int | None = None,
    x_max: float | None = None,
    ctrl: SeriesControl = DEFAULT_CONTROL,
) -> FigureSpec:
    """Write one figure CSV; returns the spec actually used."""
    spec = figure_spec(figure_id, q_list=q_list, points=points, x_max=x_max)
    headers, data = figure_dataset(spec, ctrl)
    text = render_csv(headers, data)
    with open(out_path, "w", newline="\n") as fh:
        fh.write(text)
    return spec
