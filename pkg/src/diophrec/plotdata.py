"""Grid samples of the (t, s) plane map, for drawing its vector field."""
from __future__ import annotations

import io

import numpy as np

from .errors import InvalidInputError
from .invariant import Recurrence
from .reduction import fixed_point

EPS = 1e-9


def _fmt(v: float) -> str:
    if v == 0:
        return "0"
    return format(float(v), ".12g")


def vector_field(a: int, b: int, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Columns t, s, dt, ds on an n x n lattice of [0, 1]^2, t-major; NaN where undefined."""
    if n < 2:
        raise InvalidInputError("grid size must be at least 2")
    u = np.linspace(0.0, 1.0, n)
    t, s = (g.ravel() for g in np.meshgrid(u, u, indexing="ij"))
    den = a + b * s + t
    bad = np.abs(den) < EPS
    safe = np.where(bad, 1.0, den)
    dt = np.where(bad, np.nan, s / safe - t)
    ds = np.where(bad, np.nan, 1.0 / safe - s)
    return t, s, dt, ds


def plot_csv(rec: Recurrence, n: int) -> str:
    if rec.order != 3:
        raise InvalidInputError("plot data needs a recurrence (a, b, 1)")
    a, b, _ = rec.coeffs
    t, s, dt, ds = vector_field(a, b, n)
    buf = io.StringIO()
    buf.write("t,s,dt,ds\n")
    for row in zip(t, s, dt, ds):
        buf.write(",".join("" if np.isnan(v) else _fmt(v) for v in row) + "\n")
    ft, fs = fixed_point(rec)
    buf.write(f"# fixed_point,{_fmt(ft.approx)},{_fmt(fs.approx)}\n")
    return buf.getvalue()
