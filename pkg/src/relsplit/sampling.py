"""Reproducible sampling: Sobol points in boxes, seeded random smooth fields."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import qmc

from .dual import cos, sin
from .exterior import CoForm, multi_indices
from .fields import Chart, Field


@dataclass(frozen=True)
class Box:
    lows: tuple
    highs: tuple

    def __post_init__(self):
        if len(self.lows) != len(self.highs):
            raise ValueError("box bounds of different lengths")


def sobol_points(box: Box, n: int, seed: int, exclude=None, max_tries=64):
    """n Sobol points in the box, skipping an excluded (singular) set."""
    dim = len(box.lows)
    eng = qmc.Sobol(d=dim, scramble=True, seed=seed)
    lo = np.asarray(box.lows)
    hi = np.asarray(box.highs)
    batch = 1
    while batch < max(8, n):
        batch *= 2
    out = []
    tries = 0
    while len(out) < n and tries < max_tries:
        raw = eng.random(batch)
        pts = lo + raw * (hi - lo)
        for row in pts:
            p = [float(v) for v in row]
            if exclude is not None and exclude(p):
                continue
            out.append(p)
            if len(out) == n:
                break
        tries += 1
    if len(out) < n:
        raise RuntimeError("could not sample enough points outside the "
                           "excluded set")
    return out


def smooth_fn(rng: np.random.Generator, nvars: int, amp: float = 0.5):
    """Random smooth scalar function: quadratic polynomial plus one
    trigonometric term, with bounded coefficients."""
    c0 = float(rng.uniform(-amp, amp))
    lin = [float(v) for v in rng.uniform(-amp, amp, nvars)]
    quad = [[float(v) for v in row]
            for row in rng.uniform(-amp, amp, (nvars, nvars))]
    tsel = int(rng.integers(0, nvars))
    csel = int(rng.integers(0, nvars))
    ta = float(rng.uniform(-amp, amp))

    def fn(p):
        acc = c0
        for i in range(nvars):
            acc = acc + lin[i] * p[i]
            for j in range(i, nvars):
                acc = acc + quad[i][j] * p[i] * p[j]
        return acc + ta * sin(p[tsel]) * cos(0.7 * p[csel])

    return fn


def random_field(rng: np.random.Generator, chart: Chart, axes, degree: int,
                 kind=CoForm, **meta) -> Field:
    nvars = chart.dim
    comp_map = {K: smooth_fn(rng, nvars)
                for K in multi_indices(len(axes), degree)}
    return Field.from_comps(chart, axes, degree, comp_map, kind=kind, **meta)


def random_gamma(rng: np.random.Generator, chart: Chart, total_axes,
                 fiber_axis: int, slot: str = "g", amp: float = 0.5):
    """Random smooth Christoffel form for exercising generic structures."""
    from . import splitting as sp
    base = tuple(a for a in total_axes if a != fiber_axis)
    comp_map = {K: smooth_fn(rng, chart.dim, amp)
                for K in multi_indices(len(base), 1)}
    gam = Field.from_comps(chart, base, 1, comp_map,
                           **{("wg" if slot == "g" else "wu"): 1})
    return sp.SplittingStructure(chart, total_axes, fiber_axis, gam, slot,
                                 name="random")
