"""Parameter containers, symmetry reduction, and accuracy vocabulary.

Everything downstream standardizes to the (mu, sigma) = (0, 1) case and
evaluates at z = (x - mu)/sigma >= 0, using parity to recover z < 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

# Characteristic-exponent floors for supported evaluation.  The density is
# reliable down to 0.1; its derivatives only down to 0.2 (with a degraded
# band on [0.1, 0.2)).
ALPHA_FLOOR_DENSITY = 0.1
ALPHA_FLOOR_DERIVS = 0.2


class AccuracyClass(Enum):
    FULL = "full"
    DEGRADED = "degraded"
    UNSUPPORTED = "unsupported"


# Quantity labels used across dispatch tables, CLI, and accuracy rules.
QUANTITIES = ("f", "df_dx", "d2f_dx2", "df_dalpha", "d2f_dalpha2")


@dataclass(frozen=True)
class EvalMethod:
    """Which representation produced a value."""

    kind: str  # integral_rep | series_zero | series_tail | cauchy_taylor | gauss_boundary | closed_form
    terms: int | None = None

    def __str__(self) -> str:
        if self.terms is not None:
            return f"{self.kind}[k={self.terms}]"
        return self.kind


INTEGRAL_REP = EvalMethod("integral_rep")
CAUCHY_TAYLOR = EvalMethod("cauchy_taylor")
GAUSS_BOUNDARY = EvalMethod("gauss_boundary")
CLOSED_FORM = EvalMethod("closed_form")


def series_zero(k: int) -> EvalMethod:
    return EvalMethod("series_zero", k)


def series_tail(k: int) -> EvalMethod:
    return EvalMethod("series_tail", k)


@dataclass(frozen=True)
class StableParams:
    """Location mu, scale sigma > 0, characteristic exponent alpha in (0, 2]."""

    mu: float
    sigma: float
    alpha: float

    def __post_init__(self):
        for name, v in (("mu", self.mu), ("sigma", self.sigma), ("alpha", self.alpha)):
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")
        if self.sigma <= 0:
            raise ValueError(f"sigma must be > 0, got {self.sigma!r}")
        if not 0 < self.alpha <= 2:
            raise ValueError(f"alpha must be in (0, 2], got {self.alpha!r}")


@dataclass(frozen=True)
class StandardPoint:
    z: float
    alpha: float


def standardize(x: float, p: StableParams) -> StandardPoint:
    """Map x to the standard (mu=0, sigma=1) coordinate."""
    return StandardPoint((x - p.mu) / p.sigma, p.alpha)


def reduce_by_symmetry(z: float) -> tuple[float, bool]:
    """Return (|z|, parity_flip).  Odd quantities change sign when flipped."""
    if z < 0:
        return -z, True
    return z, False


def accuracy_class(quantity: str, alpha: float) -> AccuracyClass:
    """Supported accuracy of a quantity at a given alpha.

    The density is fully supported on [0.1, 2]; all derivatives only on
    [0.2, 2], with best-effort (degraded) values on [0.1, 0.2).
    """
    if quantity not in QUANTITIES:
        raise ValueError(f"unknown quantity {quantity!r}")
    if alpha < ALPHA_FLOOR_DENSITY:
        return AccuracyClass.UNSUPPORTED
    if quantity == "f":
        return AccuracyClass.FULL
    if alpha < ALPHA_FLOOR_DERIVS:
        return AccuracyClass.DEGRADED
    return AccuracyClass.FULL
