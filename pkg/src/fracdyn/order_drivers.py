"""Systems and maps that produce the fractional order of another system.

An AffineOrderMap turns a scalar signal (a state, a temperature) into an
order in (0, 1).  The Takagi-Sugeno fuzzy system is a scalar rule-based
ODE whose output can drive such a map.
"""

import math
from dataclasses import dataclass

import numpy as np

from fracdyn.errors import ValidityError
from fracdyn.trajectory import Trajectory, num_steps, rk4_solve
from fracdyn.vo_caputo import ALPHA_MAX, ALPHA_MIN, clamp_order

_H_TOL = 1.0e-12


@dataclass(frozen=True)
class AffineOrderMap:
    """signal -> clamp(intercept + slope * signal)."""

    intercept: float
    slope: float
    clamp: tuple = (ALPHA_MIN, ALPHA_MAX)

    def __call__(self, signal):
        return clamp_order(self.intercept + self.slope * signal, *self.clamp)


def affine_order(order_map, signal):
    """Apply an AffineOrderMap to a scalar signal value."""
    return order_map(signal)


@dataclass(frozen=True)
class TSFuzzySystem:
    """Takagi-Sugeno system with state-dependent memberships.

    The inferred dynamics are y' = sum_i h_i(y) * A_i * y with the
    memberships forming a partition of unity on the validity interval.
    """

    coeffs: tuple
    memberships: tuple
    y0: float
    validity: tuple = (-1.0, 1.0)

    def __post_init__(self):
        if len(self.coeffs) != len(self.memberships):
            raise ValueError("need one membership function per rule coefficient")
        if len(self.coeffs) == 0:
            raise ValueError("need at least one rule")


def two_rule_linear_system(a1=0.0, a2=-1.0, y0=1.0):
    """Two rules with complementary linear memberships, valid on [-1, 1].

    h1(y) = 1/2 - y/2 and h2(y) = 1/2 + y/2.
    """
    return TSFuzzySystem(
        coeffs=(a1, a2),
        memberships=(lambda y: 0.5 - 0.5 * y, lambda y: 0.5 + 0.5 * y),
        y0=y0,
        validity=(-1.0, 1.0),
    )


def fuzzy_rhs(system, y):
    """Inferred right-hand side sum_i h_i(y) * A_i * y.

    Raises ValidityError if any membership evaluates negative at y.
    """
    total = 0.0
    for a_i, h_i in zip(system.coeffs, system.memberships):
        h = h_i(y)
        if h < 0.0:
            raise ValidityError(f"membership negative at y={y!r}: h={h!r}")
        total += h * a_i * y
    return total


def fuzzy_solve(system, dt, t_end):
    """Integrate the inferred dynamics with the classical 4th-order method.

    Fixed step dt; every accepted state must stay inside the membership
    validity interval.
    """
    lo, hi = system.validity
    n_steps = num_steps(dt, t_end)

    def rhs(t, y):
        return fuzzy_rhs(system, y)

    traj = rk4_solve(rhs, system.y0, dt, n_steps * dt)
    bad = (traj.values < lo - _H_TOL) | (traj.values > hi + _H_TOL)
    if bad.any():
        n_bad = int(np.argmax(bad))
        raise ValidityError(
            f"state left validity interval [{lo}, {hi}] at t={n_bad * dt!r} "
            f"(y={traj.values[n_bad]!r})"
        )
    return traj


def fuzzy_exact(t):
    """Closed-form output of two_rule_linear_system(0, -1, 1): 1/(2 e^(t/2) - 1)."""
    if t < 0.0:
        raise ValueError(f"t must be nonnegative, got {t!r}")
    return 1.0 / (2.0 * math.exp(0.5 * t) - 1.0)
