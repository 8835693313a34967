"""Evaluation policies for the special-function kernels.

Each function family switches between a convergent power series and an
asymptotic (divergent, optimally truncated) expansion at a fixed radius.
Inside the series region, summation runs in double precision with Kahan
compensation up to ``series_double_radius``; past that radius cancellation
exceeds what double precision can absorb and the same series is summed in
mpmath arbitrary precision with a working precision scaled to the known
cancellation bound of the family.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EvalPolicy:
    """Series/asymptotics switching parameters for one function family."""

    series_tol: float = 1e-17          # term-ratio stop threshold
    asymptotic_switch_radius: float = 8.0
    series_double_radius: float = 4.6  # double precision trusted below this |z|
    max_terms: int = 500

    def __post_init__(self) -> None:
        if self.series_tol <= 0:
            raise ValueError("series_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


AIRY_POLICY = EvalPolicy(asymptotic_switch_radius=8.0, series_double_radius=4.6,
                         max_terms=600)
BESSEL_POLICY = EvalPolicy(asymptotic_switch_radius=12.0, series_double_radius=12.0,
                           max_terms=400)
PCF_POLICY = EvalPolicy(asymptotic_switch_radius=7.4, series_double_radius=4.8,
                        max_terms=900)
ERFC_POLICY = EvalPolicy(asymptotic_switch_radius=5.0, series_double_radius=2.55,
                         max_terms=400)
HYP2F3_POLICY = EvalPolicy(asymptotic_switch_radius=3000.0, series_double_radius=85.0,
                           max_terms=6000)
