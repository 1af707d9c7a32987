"""Variable-order Caputo derivative of order alpha(t) in (0, 1).

Two evaluation paths for the defining integral

    D^a f(t) = (1 / gamma(1 - a)) * integral_0^t f'(tau) (t - tau)^(-a) dtau:

caputo_l1 discretizes it with the standard L1 finite-difference scheme on
a uniform grid (the solver path), caputo_quadrature integrates it
adaptively after an exact substitution that removes the endpoint
singularity (the reference path).  The order is always a single frozen
number at evaluation time; the memory kernel does not retain past orders.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from fracdyn import kernels, special_fn
from fracdyn.errors import ConfigError, DomainError, QuadratureError
from fracdyn.trajectory import Trajectory

# Orders are clamped to this interval everywhere.  Excluding 1.0 keeps
# the weights j^(1-a) single-valued; the classical limit is recovered
# numerically at ALPHA_MAX.
ALPHA_MIN = 0.001
ALPHA_MAX = 0.999999

_QUAD_LIMIT = 200


def clamp_order(value, lo=ALPHA_MIN, hi=ALPHA_MAX):
    return min(max(value, lo), hi)


def _check_alpha(alpha):
    if not (0.0 < alpha < 1.0) or math.isnan(alpha):
        raise DomainError(f"order must lie in (0, 1), got {alpha!r}")


@dataclass(frozen=True)
class L1Weights:
    """L1 weight vector for a step with frozen order alpha_n.

    b[j] = (j+1)^(1-alpha_n) - j^(1-alpha_n) for j = 0..n-1; b[0] is
    exactly 1 and the entries telescope to sum n^(1-alpha_n).
    """

    alpha_n: float
    n: int
    b: np.ndarray


def l1_weights(alpha_n, n):
    _check_alpha(alpha_n)
    if n < 1:
        raise DomainError(f"need step index n >= 1, got {n!r}")
    return L1Weights(alpha_n=alpha_n, n=n, b=kernels.l1_weight_vector(alpha_n, n))


def caputo_l1(history, dt, alpha_n):
    """L1 approximation of D^alpha_n at the last sample of `history`.

    history holds x_0..x_n on a uniform grid with spacing dt.  Returns

        dt^(-alpha_n) / gamma(2 - alpha_n)
            * sum_j b_j (x_{n-j} - x_{n-j-1}),  j = 0..n-1,

    recomputing the full history sum (O(n) per call).
    """
    _check_alpha(alpha_n)
    if not dt > 0.0:
        raise DomainError(f"dt must be positive, got {dt!r}")
    x = np.ascontiguousarray(history, dtype=np.float64)
    if x.ndim != 1 or x.shape[0] < 2:
        raise ValueError("history needs at least two samples x_0, x_1")
    n = x.shape[0] - 1
    b = kernels.l1_weight_vector(alpha_n, n)
    s = kernels.weighted_history(b, np.diff(x))
    return dt ** (-alpha_n) / special_fn.gamma(2.0 - alpha_n) * s


def caputo_quadrature(f, f_prime, alpha_at_t, t):
    """Adaptive quadrature of the Caputo integral with frozen order.

    The substitution s = (t - tau)^(1 - a) removes the kernel
    singularity exactly:

        D^a f(t) = 1 / (gamma(1 - a) (1 - a))
                   * integral_0^{t^(1-a)} f'(t - s^(1/(1-a))) ds.

    Targets absolute error 1e-8 for smooth f; raises QuadratureError if
    the adaptive refinement budget is exhausted.
    """
    _check_alpha(alpha_at_t)
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t!r}")
    one_m_a = 1.0 - alpha_at_t
    exponent = 1.0 / one_m_a
    upper = t**one_m_a

    def integrand(s):
        return f_prime(t - s**exponent)

    value, abserr, info, *rest = quad(
        integrand,
        0.0,
        upper,
        epsabs=1.0e-12,
        epsrel=1.0e-12,
        limit=_QUAD_LIMIT,
        full_output=True,
    )
    if rest:
        raise QuadratureError(f"quadrature did not converge: {rest[0]}")
    scale = 1.0 / (special_fn.gamma(1.0 - alpha_at_t) * one_m_a)
    if abserr * scale > 1.0e-8:
        raise QuadratureError(
            f"quadrature error estimate {abserr * scale:.3e} above 1e-8 budget"
        )
    return scale * value


class OrderSource:
    """How the fractional order of a solve is produced.

    Subclasses return the frozen order for the step that advances the
    state from t_prev to t_new.  Signal-driven sources sample their
    input at t_prev (staggered coupling); explicit time functions are
    evaluated at t_new, where the operator is frozen.
    """

    def bounds(self):
        """Declared reachable order interval (used by stability guards)."""
        raise NotImplementedError

    def order_for_step(self, t_prev, t_new, signal=None):
        raise NotImplementedError


@dataclass(frozen=True)
class ConstantOrder(OrderSource):
    alpha: float
    clamp: tuple = (ALPHA_MIN, ALPHA_MAX)

    def bounds(self):
        a = clamp_order(self.alpha, *self.clamp)
        return (a, a)

    def order_for_step(self, t_prev, t_new, signal=None):
        return clamp_order(self.alpha, *self.clamp)


@dataclass(frozen=True)
class TimeFunctionOrder(OrderSource):
    fn: object
    clamp: tuple = (ALPHA_MIN, ALPHA_MAX)

    def bounds(self):
        return self.clamp

    def order_for_step(self, t_prev, t_new, signal=None):
        return clamp_order(self.fn(t_new), *self.clamp)


@dataclass(frozen=True)
class AffineSignalOrder(OrderSource):
    """intercept + slope * signal, for signals supplied by the caller."""

    intercept: float
    slope: float
    clamp: tuple = (ALPHA_MIN, ALPHA_MAX)

    def bounds(self):
        return self.clamp

    def order_for_step(self, t_prev, t_new, signal=None):
        if signal is None:
            raise ConfigError("AffineSignalOrder needs a signal value per step")
        return clamp_order(self.intercept + self.slope * signal, *self.clamp)


@dataclass(frozen=True)
class DriverSystemOrder(OrderSource):
    """Affine map of a precomputed driver trajectory, sampled lagged.

    The driver value is read at the start of each step (t_prev) by
    linear interpolation, so a system driven by another system's output
    advances exactly like the equivalent jointly-coupled solve.
    """

    driver: Trajectory
    intercept: float
    slope: float
    clamp: tuple = (ALPHA_MIN, ALPHA_MAX)

    def bounds(self):
        return self.clamp

    def order_for_step(self, t_prev, t_new, signal=None):
        return clamp_order(
            self.intercept + self.slope * self.driver.at(t_prev), *self.clamp
        )
