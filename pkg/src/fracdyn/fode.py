"""Implicit L1 time stepping for scalar fractional ODEs.

Solves D^alpha x = lin_coeff * x + f(t) where the order alpha may be
constant, an explicit function of time, or supplied by another system's
trajectory, plus the jointly-coupled form where each subsystem's order
is a function of the other subsystems' lagged states.

At step n with frozen order a_n and r_n = dt^(-a_n) / gamma(2 - a_n) the
update is the closed-form solve of the linear implicit step:

    x_n = (r_n * (x_{n-1} - H_n) + f(t_n)) / (r_n - lin_coeff),
    H_n = sum_{j=1}^{n-1} b_j (x_{n-j} - x_{n-j-1}).
"""

import math
from dataclasses import dataclass

import numpy as np

from fracdyn import kernels, special_fn
from fracdyn.errors import ConfigError, SingularSystemError, StabilityError
from fracdyn.trajectory import Trajectory, num_steps, rk4_solve
from fracdyn.vo_caputo import (
    ConstantOrder,
    DriverSystemOrder,
    OrderSource,
    clamp_order,
)

_STABILITY_GRID = 257


@dataclass(frozen=True)
class ScalarFodeProblem:
    """D^alpha x = lin_coeff * x + forcing(t), x(0) = x0, on [0, t_end]."""

    order: OrderSource
    lin_coeff: float
    forcing: object
    x0: float
    t_end: float

    def __post_init__(self):
        if not self.t_end > 0.0:
            raise ConfigError(f"t_end must be positive, got {self.t_end!r}")
        if not isinstance(self.order, OrderSource):
            raise ConfigError("order must be an OrderSource")
        if not math.isfinite(self.lin_coeff) or not math.isfinite(self.x0):
            raise ConfigError("lin_coeff and x0 must be finite")


@dataclass(frozen=True)
class CoupledSubsystem:
    """One row of a coupled system: D^alpha_i x_i = lin_coeff * x_i + forcing(t)."""

    lin_coeff: float
    x0: float
    forcing: object = None


@dataclass(frozen=True)
class CoupledSystem:
    """Subsystems whose only coupling path is through their orders.

    order_fns[i](states, t) receives the vector of all subsystem states
    at the previous step and the current step time, and returns the raw
    order for subsystem i (clamped by the solver).
    """

    subsystems: tuple
    order_fns: tuple
    clamp: tuple = (0.001, 0.999999)

    def __post_init__(self):
        if len(self.subsystems) != len(self.order_fns):
            raise ConfigError("need one order function per subsystem")
        if len(self.subsystems) == 0:
            raise ConfigError("need at least one subsystem")


def _step_coefficient(dt, alpha):
    return dt ** (-alpha) / special_fn.gamma(2.0 - alpha)


def _check_stability(dt, lin_coeff, bounds):
    """Growth coefficients need r_n > lin_coeff for every reachable order."""
    if lin_coeff <= 0.0:
        return
    lo, hi = bounds
    alphas = np.linspace(lo, hi, _STABILITY_GRID)
    r_min = min(_step_coefficient(dt, float(a)) for a in alphas)
    if not r_min > lin_coeff:
        raise StabilityError(
            f"dt={dt!r} too large for growth coefficient {lin_coeff!r}: "
            f"min step coefficient {r_min:.6g} must exceed it; reduce dt"
        )


def _l1_scalar_step(x_prev, dx_hist, n, alpha, dt, lin_coeff, f_n):
    """One implicit L1 step; dx_hist holds the n-1 known first differences."""
    r = _step_coefficient(dt, alpha)
    b = kernels.l1_weight_vector(alpha, n)
    hist = kernels.weighted_history(b[1:], dx_hist) if n > 1 else 0.0
    denom = r - lin_coeff
    if not denom > 0.0 or not math.isfinite(denom):
        raise SingularSystemError(
            f"step denominator r - lin_coeff = {denom!r} not positive at step {n}"
        )
    return (r * (x_prev - hist) + f_n) / denom


def solve_scalar_fode(problem, dt):
    """Integrate a ScalarFodeProblem on its uniform grid.

    Returns a Trajectory whose order_path records the frozen order of
    every step.  The full history sum is recomputed each step, so a run
    of N steps costs O(N^2).
    """
    n_steps = num_steps(dt, problem.t_end)
    order = problem.order
    if isinstance(order, DriverSystemOrder):
        # lagged sampling reads the driver up to (n_steps - 1) * dt
        if order.driver.t_end < (n_steps - 1) * dt - 1.0e-12:
            raise ConfigError(
                f"driver trajectory ends at {order.driver.t_end!r}, "
                f"before the last sampled step time {(n_steps - 1) * dt!r}"
            )
    _check_stability(dt, problem.lin_coeff, order.bounds())

    x = np.empty(n_steps + 1)
    dx = np.empty(n_steps)
    orders = np.empty(n_steps)
    x[0] = problem.x0
    forcing = problem.forcing
    for n in range(1, n_steps + 1):
        t_prev = (n - 1) * dt
        t_n = n * dt
        alpha = order.order_for_step(t_prev, t_n)
        f_n = forcing(t_n) if forcing is not None else 0.0
        x[n] = _l1_scalar_step(x[n - 1], dx[: n - 1], n, alpha, dt,
                               problem.lin_coeff, f_n)
        dx[n - 1] = x[n] - x[n - 1]
        orders[n - 1] = alpha
    return Trajectory(dt=dt, values=x, order_path=orders)


def temperature_forcing(t):
    """Decaying heat input 10 / (1.3 t + 1) of the bundled temperature model."""
    return 10.0 / (1.3 * t + 1.0)


def solve_temperature(beta, dt, t_end):
    """Bundled temperature model D^beta T = 0.1 T + 10/(1.3 t + 1), T(0) = 10.

    beta in (0, 1]; beta = 1 exactly is routed to classical 4th-order
    stepping instead of the fractional scheme.
    """
    if not 0.0 < beta <= 1.0:
        raise ConfigError(f"beta must lie in (0, 1], got {beta!r}")
    if beta == 1.0:
        traj = rk4_solve(
            lambda t, temp: 0.1 * temp + temperature_forcing(t), 10.0, dt, t_end
        )
        return Trajectory(dt=traj.dt, values=traj.values,
                          order_path=np.ones(len(traj.values) - 1))
    problem = ScalarFodeProblem(
        order=ConstantOrder(beta),
        lin_coeff=0.1,
        forcing=temperature_forcing,
        x0=10.0,
        t_end=t_end,
    )
    return solve_scalar_fode(problem, dt)


def solve_coupled(system, dt, t_end):
    """Advance all subsystems with staggered (lagged) order coupling.

    At step n every order is evaluated from the state snapshot of step
    n-1, then each subsystem takes one implicit L1 step with its frozen
    order.  Updates read only the shared lagged snapshot, so the result
    does not depend on subsystem ordering.
    """
    n_steps = num_steps(dt, t_end)
    k = len(system.subsystems)
    lo, hi = system.clamp
    for sub in system.subsystems:
        _check_stability(dt, sub.lin_coeff, (lo, hi))

    xs = np.empty((k, n_steps + 1))
    dxs = np.empty((k, n_steps))
    orders = np.empty((k, n_steps))
    for i, sub in enumerate(system.subsystems):
        xs[i, 0] = sub.x0
    for n in range(1, n_steps + 1):
        t_n = n * dt
        snapshot = xs[:, n - 1].copy()
        for i, sub in enumerate(system.subsystems):
            alpha = clamp_order(system.order_fns[i](snapshot, t_n), lo, hi)
            f_n = sub.forcing(t_n) if sub.forcing is not None else 0.0
            xs[i, n] = _l1_scalar_step(
                xs[i, n - 1], dxs[i, : n - 1], n, alpha, dt, sub.lin_coeff, f_n
            )
            dxs[i, n - 1] = xs[i, n] - xs[i, n - 1]
            orders[i, n - 1] = alpha
    return [
        Trajectory(dt=dt, values=xs[i].copy(), order_path=orders[i].copy())
        for i in range(k)
    ]
