"""Model parameters, coordinate transforms, and regime classification.

The driven two-level system has constant coupling f (Rabi frequency) and a
detuning that varies quadratically in time, Delta(t) = alpha t + beta t^2 / 2.
The amplitude equation in Schroedinger form maps onto the second canonical
tri-confluent Heun equation under z = (t + alpha/beta) / h; this module owns
the parameter bookkeeping for that map and for the regime-local scaled
variables used by the Airy and parabolic-cylinder approximations.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

_OMEGA = cmath.exp(1j * math.pi / 3.0)


@dataclass(frozen=True)
class ModelParams:
    """Physical triple (f, alpha, beta).

    f is the coupling (complex allowed, only |f| enters the dynamics),
    alpha the linear chirp slope, beta the parabolic chirp curvature.
    """

    f: complex
    alpha: float
    beta: float

    def __post_init__(self) -> None:
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")
        fz = complex(self.f)
        if not (math.isfinite(fz.real) and math.isfinite(fz.imag)):
            raise ValueError("f must be finite")

    @property
    def f_abs(self) -> float:
        return abs(self.f)

    @property
    def lam(self) -> float:
        """Quartic strength lambda = beta/4."""
        return self.beta / 4.0

    @property
    def tau_offset(self) -> float:
        """Shift between t and the symmetric variable tau = t + alpha/beta."""
        if self.beta == 0.0:
            raise ValueError("tau offset undefined for beta = 0 (linear model)")
        return self.alpha / self.beta


@dataclass(frozen=True)
class HeunParams:
    """Parameters (mu, nu, xi, h, omega) of the tri-confluent Heun canonical forms."""

    mu: complex
    nu: complex
    xi: complex
    h: complex
    omega: complex = field(default=_OMEGA)


class RegimeKind(enum.Enum):
    SHORT_SMALL_RATIO = "short-small-ratio"   # Airy basis
    SHORT_LARGE_RATIO = "short-large-ratio"   # parabolic-cylinder basis
    LONG = "long"                             # Bessel basis


@dataclass(frozen=True)
class RegimeTag:
    kind: RegimeKind
    t_star: float

    def __post_init__(self) -> None:
        if not self.t_star > 0:
            raise ValueError("t_star must be positive")


def detuning(params: ModelParams, t: float) -> float:
    """Delta(t) = alpha t + beta t^2 / 2."""
    return params.alpha * t + 0.5 * params.beta * t * t


def detuning_phase(params: ModelParams, t: float) -> float:
    """Integral of the detuning from 0 to t."""
    return 0.5 * params.alpha * t * t + params.beta * t ** 3 / 6.0


def heun_params(params: ModelParams) -> HeunParams:
    """Canonical tri-confluent Heun parameters of the amplitude equation.

    h = e^{i pi/6} (3/(2 lambda))^{1/3} (defined for lambda > 0 only),
    xi = -3 (alpha/(h beta))^2, nu = 3, and
    mu = (|f|^2 + alpha^4/(16 beta^2)) h^2 + xi^2/4.
    """
    if params.beta == 0.0:
        raise ValueError("beta = 0 is the Landau-Zener degenerate case; "
                         "the Heun map needs beta != 0")
    lam = params.lam
    if lam <= 0.0:
        raise ValueError("h is defined for lambda = beta/4 > 0 only; "
                         "lambda < 0 has no stated branch")
    h = cmath.exp(1j * math.pi / 6.0) * (3.0 / (2.0 * lam)) ** (1.0 / 3.0)
    xi = -3.0 * (params.alpha / (h * params.beta)) ** 2
    mu = (params.f_abs ** 2 + params.alpha ** 4 / (16.0 * params.beta ** 2)) * h * h \
        + 0.25 * xi * xi
    return HeunParams(mu=mu, nu=3.0 + 0.0j, xi=xi, h=h)


def cbrt_i_beta_half(beta: float) -> complex:
    """The fixed cube-root branch of i*beta/2: e^{+-i pi/6} (|beta|/2)^{1/3}."""
    if beta == 0.0:
        raise ValueError("beta must be nonzero")
    mag = (abs(beta) / 2.0) ** (1.0 / 3.0)
    return mag * cmath.exp(1j * math.copysign(math.pi / 6.0, beta))


def airy_z(params: ModelParams, t: float) -> complex:
    """Scaled Airy-regime variable.

    z = (i beta/2)^{1/3} [tau + (2i/beta)(|f|^2 + alpha^4/(16 beta^2))],
    tau = t + alpha/beta, with the cube root fixed so that arg z stays in
    (pi/6, 7pi/6) for beta > 0 and its mirror for beta < 0.
    """
    if params.beta == 0.0:
        raise ValueError("airy_z needs beta != 0")
    tau = t + params.tau_offset
    shift = 2j / params.beta * (params.f_abs ** 2
                                + params.alpha ** 4 / (16.0 * params.beta ** 2))
    return cbrt_i_beta_half(params.beta) * (tau + shift)


def pcf_z(params: ModelParams, t: float) -> complex:
    """Scaled parabolic-cylinder variable e^{-+ i pi/4} |alpha|^{1/2} t for alpha = +-|alpha|."""
    if params.alpha == 0.0:
        raise ValueError("pcf_z needs alpha != 0")
    return cmath.exp(-1j * math.copysign(math.pi / 4.0, params.alpha)) \
        * math.sqrt(abs(params.alpha)) * t


def classify_regime(params: ModelParams, t: float) -> RegimeTag:
    """Short/long-time regime of the instant t, with the boundary used.

    Large chirp ratio (|alpha| > sqrt(2) |beta|^{2/3}): the quadratic term
    dominates the quartic for |t| <= t* ~ |alpha/beta| (parabolic-cylinder
    basis).  Small ratio: the linear term dominates for |tau| <= 2 |beta|^{-1/3}
    (Airy basis).  Outside either boundary the quartic dominates (Bessel).
    The inequalities are applied sharply at the stated thresholds; t_star is
    returned so callers can override.
    """
    if params.beta == 0.0:
        raise ValueError("classify_regime needs beta != 0 (parabolic model)")
    b23 = abs(params.beta) ** (2.0 / 3.0)
    if abs(params.alpha) > math.sqrt(2.0) * b23:
        t_star = abs(params.alpha / params.beta)
        kind = RegimeKind.SHORT_LARGE_RATIO if abs(t) <= t_star else RegimeKind.LONG
        return RegimeTag(kind=kind, t_star=t_star)
    t_star = 2.0 * abs(params.beta) ** (-1.0 / 3.0)
    tau = t + params.tau_offset
    kind = RegimeKind.SHORT_SMALL_RATIO if abs(tau) <= t_star else RegimeKind.LONG
    return RegimeTag(kind=kind, t_star=t_star)
