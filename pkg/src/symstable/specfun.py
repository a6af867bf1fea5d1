"""Gamma-family and Fresnel special functions used by the expansions.

Thin validated wrappers over scipy.special; the series and Taylor code needs
gamma derivatives up to second order, polygamma up to psi'', and the Fresnel
pair S, C in the sin/cos(pi t^2 / 2) convention.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import scipy.special as sc


@dataclass(frozen=True)
class GammaDerivs:
    gamma: float
    dgamma: float
    d2gamma: float


@dataclass(frozen=True)
class FresnelPair:
    s: float
    c: float


def polygamma(order: int, nu: float) -> float:
    """psi (order 0), psi' (1), psi'' (2) at nu > 0."""
    if order not in (0, 1, 2):
        raise ValueError(f"order must be 0, 1 or 2, got {order!r}")
    if nu <= 0:
        raise ValueError(f"polygamma requires nu > 0, got {nu!r}")
    if order == 0:
        return float(sc.psi(nu))
    return float(sc.polygamma(order, nu))


def gamma_derivs(nu: float) -> GammaDerivs:
    """Gamma and its first two derivatives at a common argument nu > 0."""
    if nu <= 0:
        raise ValueError(f"gamma_derivs requires nu > 0, got {nu!r}")
    g = float(sc.gamma(nu))
    psi0 = float(sc.psi(nu))
    psi1 = float(sc.polygamma(1, nu))
    return GammaDerivs(g, g * psi0, g * (psi0 * psi0 + psi1))


def fresnel(x: float) -> FresnelPair:
    """Fresnel integrals S(x) = int_0^x sin(pi t^2/2) dt and the cosine analogue."""
    if x < 0:
        raise ValueError(f"fresnel requires x >= 0, got {x!r}")
    if math.isinf(x):
        return FresnelPair(0.5, 0.5)
    s, c = sc.fresnel(x)
    return FresnelPair(float(s), float(c))
