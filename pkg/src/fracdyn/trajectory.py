"""Uniformly sampled scalar trajectories."""

import math
from dataclasses import dataclass

import numpy as np

from fracdyn.errors import OutOfDomainError


@dataclass(frozen=True)
class Trajectory:
    """Samples x_0..x_N of a scalar signal on the uniform grid n * dt.

    order_path, when present, holds the fractional order used to advance
    into each sample (length N, entry n-1 belongs to the step that
    produced values[n]).
    """

    dt: float
    values: np.ndarray
    order_path: np.ndarray = None

    @property
    def times(self):
        return np.arange(len(self.values)) * self.dt

    @property
    def t_end(self):
        return (len(self.values) - 1) * self.dt

    def at(self, t):
        """Linear interpolation; exact at grid nodes."""
        if t < 0.0 or t > self.t_end:
            raise OutOfDomainError(f"t={t!r} outside [0, {self.t_end!r}]")
        return float(np.interp(t, self.times, self.values))


def rk4_solve(rhs, y0, dt, t_end):
    """Classical fixed-step 4th-order integration of y' = rhs(t, y).

    Returns the Trajectory of y on [0, N*dt] with N = floor(t_end/dt),
    snapped so the final sample lands on the grid.
    """
    n_steps = num_steps(dt, t_end)
    y = np.empty(n_steps + 1)
    y[0] = y0
    for n in range(n_steps):
        t = n * dt
        yn = y[n]
        k1 = rhs(t, yn)
        k2 = rhs(t + 0.5 * dt, yn + 0.5 * dt * k1)
        k3 = rhs(t + 0.5 * dt, yn + 0.5 * dt * k2)
        k4 = rhs(t + dt, yn + dt * k3)
        y[n + 1] = yn + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return Trajectory(dt=dt, values=y)


def num_steps(dt, t_end):
    """Number of whole steps fitting in [0, t_end]; requires t_end >= dt > 0."""
    if not dt > 0.0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    if t_end < dt:
        raise ValueError(f"t_end={t_end!r} shorter than one step dt={dt!r}")
    return max(1, int(math.floor(t_end / dt + 1.0e-9)))
