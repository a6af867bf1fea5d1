"""The monotone integral-representation kernel and its alpha-derivative.

For alpha != 1 and x > 0 the density is an integral over phi in (0, pi/2) of
u*exp(-u) with u = g(phi).  g is strictly monotone (increasing for alpha < 1,
decreasing for alpha > 1), so level sets g = c give robust quadrature
breakpoints.  All kernel arithmetic runs in log space: the exponent
alpha/(alpha-1) grows like 1/(alpha-1) near alpha = 1 and would overflow a
direct power.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

_LOG_MAX = 709.0  # exp overflow threshold for float64

# Level values at which integrands driven by g change character: extrema of
# u*e^-u-type factors at 1, (3 -+ sqrt 5)/2, 2, 4; the rest bracket the
# exp(-g) cutoff so adaptive panels never straddle a dead zone.
SPLIT_LEVELS_CORE = (1.0,)
SPLIT_LEVELS_D1 = ((3.0 - math.sqrt(5.0)) / 2.0, 1.0, (3.0 + math.sqrt(5.0)) / 2.0)
SPLIT_LEVELS_D2 = (1.0, 2.0, 4.0)
SPLIT_LEVELS_GUARD = (0.05, 0.25, 4.0, 10.0, 30.0, 80.0)


@dataclass(frozen=True)
class Kernel:
    """g(phi; alpha, x) for fixed alpha != 1 and x > 0."""

    alpha: float
    x: float
    exponent: float = field(init=False)
    sign: float = field(init=False)
    log_x: float = field(init=False)

    def __post_init__(self):
        if not (0 < self.alpha <= 2) or self.alpha == 1:
            raise ValueError(f"alpha must be in (0,2], != 1; got {self.alpha!r}")
        if not self.x > 0:
            raise ValueError(f"x must be > 0, got {self.x!r}")
        object.__setattr__(self, "exponent", self.alpha / (self.alpha - 1.0))
        object.__setattr__(self, "sign", math.copysign(1.0, self.alpha - 1.0))
        object.__setattr__(self, "log_x", math.log(self.x))

    # -- kernel values -----------------------------------------------------

    def log_base(self, phi):
        """log(x cos(phi) / sin(alpha phi)), the monotone core of log g."""
        phi = np.asarray(phi, dtype=float)
        return self.log_x + np.log(np.cos(phi)) - np.log(np.sin(self.alpha * phi))

    def log_g(self, phi):
        phi = np.asarray(phi, dtype=float)
        a = self.alpha
        return (self.exponent * self.log_base(phi)
                + np.log(np.cos((a - 1.0) * phi)) - np.log(np.cos(phi)))

    def g(self, phi):
        """Kernel value; +inf on overflow, 0 on underflow."""
        lg = self.log_g(phi)
        with np.errstate(over="ignore"):
            out = np.exp(lg)
        return out

    def h_components(self, phi):
        """(h1, h2, h3): the three log-derivative pieces of g in alpha.

        h1 = log_base/(alpha-1)^2, h2 = (alpha phi/(alpha-1)) cot(alpha phi),
        h3 = phi tan((alpha-1) phi); d(log g)/d(alpha) = -(h1 + h2 + h3).
        """
        phi = np.asarray(phi, dtype=float)
        a = self.alpha
        h1 = self.log_base(phi) / (a - 1.0) ** 2
        ap = a * phi
        h2 = (ap / (a - 1.0)) * (np.cos(ap) / np.sin(ap))
        h3 = phi * np.tan((a - 1.0) * phi)
        return h1, h2, h3

    def g_alpha(self, phi):
        h1, h2, h3 = self.h_components(phi)
        return -self.g(phi) * (h1 + h2 + h3)

    # -- level-set roots -----------------------------------------------------

    def solve_g(self, c: float) -> float | None:
        """Angle with g(phi) = c, or None when the level is out of range.

        Bisection on log(phi) against log g - log c; monotonicity of g makes
        this unconditionally convergent.  Roots can sit at phi ~ x or at
        pi/2 - eps scales, so the log grid is essential.
        """
        if not c > 0:
            raise ValueError(f"level must be positive, got {c!r}")
        log_c = math.log(c)
        lo_phi, hi_phi = 1e-280, math.pi / 2.0 - 1e-12

        def rel(phi):
            return float(self.log_g(phi)) - log_c

        f_lo, f_hi = rel(lo_phi), rel(hi_phi)
        # level attained at (or numerically pinned to) an endpoint
        if abs(f_hi) < 1e-9:
            return hi_phi
        if abs(f_lo) < 1e-9:
            return lo_phi
        if f_lo * f_hi > 0:
            return None
        wlo, whi = math.log(lo_phi), math.log(hi_phi)
        for _ in range(200):
            wm = 0.5 * (wlo + whi)
            fm = rel(math.exp(wm))
            if fm == 0.0:
                break
            if fm * f_lo < 0:
                whi = wm
            else:
                wlo = wm
            if whi - wlo < 1e-15:
                break
        return math.exp(0.5 * (wlo + whi))

    def solve_base_one(self) -> float | None:
        """Angle where x cos(phi) = sin(alpha phi), i.e. h1 = 0."""
        lo_phi, hi_phi = 1e-280, math.pi / 2.0 - 1e-12
        f_lo = float(self.log_base(lo_phi))
        f_hi = float(self.log_base(hi_phi))
        if f_lo * f_hi > 0:
            return None
        wlo, whi = math.log(lo_phi), math.log(hi_phi)
        for _ in range(200):
            wm = 0.5 * (wlo + whi)
            fm = float(self.log_base(math.exp(wm)))
            if fm == 0.0:
                break
            if fm * f_lo < 0:
                whi = wm
            else:
                wlo = wm
            if whi - wlo < 1e-15:
                break
        return math.exp(0.5 * (wlo + whi))

    def split_points(self, targets) -> "SplitPoints":
        phis = {c: self.solve_g(c) for c in targets}
        found = [(c, p) for c, p in phis.items() if p is not None]
        found.sort()
        angles = [p for _, p in found]
        ordered = sorted(angles) if self.sign < 0 else sorted(angles, reverse=True)
        if not np.allclose(angles, ordered, rtol=0, atol=1e-9):
            raise ValueError(f"split ordering violated for alpha={self.alpha}, x={self.x}")
        return SplitPoints(phis)

    def breakpoints(self, levels) -> list[float]:
        """In-range level-set angles, sorted, for quadrature splitting."""
        out = [p for c in levels if (p := self.solve_g(c)) is not None]
        return sorted(out)


@dataclass(frozen=True)
class SplitPoints:
    _phis: dict

    def phi_at(self, c: float) -> float | None:
        return self._phis[c]

    def in_range(self) -> list[float]:
        return sorted(p for p in self._phis.values() if p is not None)
