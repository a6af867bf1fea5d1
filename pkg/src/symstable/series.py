"""Power series at x -> 0 and asymptotic series at x -> infinity.

Every sum is evaluated with log-space coefficients and compensated addition.
The x -> 0 sums alternate and, near alpha = 2 with x of a few units, cancel
down to ~1e-10 of their largest term; when the float64 path loses more than
twelve digits to cancellation the sum is redone in mpmath at whatever
precision the overshoot requires.  Asymptotic sums always use the fixed term
counts of the dispatch tables, never adaptive truncation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp
import scipy.special as _sc

_LGAMMA = math.lgamma
_CANCEL_LIMIT = 1e12


def _PSI_F(n: int, v: float) -> float:
    return float(_sc.psi(v)) if n == 0 else float(_sc.polygamma(n, v))


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    last_term_magnitude: float


def _sum_terms(terms: list[float], mp_term, k: int) -> SeriesResult:
    total = math.fsum(terms)
    peak = max((abs(t) for t in terms), default=0.0)
    last = abs(terms[-1]) if terms else 0.0
    if peak > 0.0 and (total == 0.0 or peak / max(abs(total), 5e-324) > _CANCEL_LIMIT):
        overshoot = math.log10(peak / max(abs(total), peak * 1e-300)) if total else 40.0
        with mp.workdps(int(overshoot) + 25):
            total = float(mp.fsum(mp_term(j) for j in range(k)))
    return SeriesResult(total, k, last)


def _check_alpha(alpha: float):
    if not 0 < alpha <= 2:
        raise ValueError(f"alpha must be in (0, 2], got {alpha!r}")


def _check_x_pos(x: float):
    if not x > 0:
        raise ValueError(f"tail series requires x > 0, got {x!r}")


# ---------------------------------------------------------------------------
# density

def f_series_zero(x: float, alpha: float, k: int) -> SeriesResult:
    """Sum_j Gamma((2j+1)/a + 1)/(2j+1)! (-1)^j x^(2j) / pi, j < k."""
    _check_alpha(alpha)
    if x == 0.0:
        v = math.exp(_LGAMMA(1.0 / alpha + 1.0)) / math.pi
        return SeriesResult(v, k, 0.0 if k > 1 else v)
    lx = math.log(x)
    terms = [(-1.0) ** j * math.exp(_LGAMMA((2 * j + 1) / alpha + 1.0) - _LGAMMA(2 * j + 2) + 2 * j * lx) / math.pi
             for j in range(k)]

    def mp_term(j):
        return (-1) ** j * mp.gamma((2 * j + 1) / mp.mpf(alpha) + 1) / mp.factorial(2 * j + 1) * mp.mpf(x) ** (2 * j) / mp.pi

    return _sum_terms(terms, mp_term, k)


def f_series_tail(x: float, alpha: float, k: int) -> SeriesResult:
    """Sum_j Gamma(j a + 1)/j! (-1)^(j-1) sin(pi a j/2) x^(-ja-1) / pi, 1 <= j <= k."""
    _check_alpha(alpha)
    _check_x_pos(x)
    if alpha == 2.0:
        # every sine factor vanishes; the normal tail is exponentially small
        return SeriesResult(0.0, k, 0.0)
    lx = math.log(x)
    terms = [(-1.0) ** (j - 1) * math.sin(math.pi * alpha * j / 2.0)
             * math.exp(_LGAMMA(j * alpha + 1.0) - _LGAMMA(j + 1) - (j * alpha + 1.0) * lx) / math.pi
             for j in range(1, k + 1)]

    def mp_term(i):
        j = i + 1
        a = mp.mpf(alpha)
        return ((-1) ** (j - 1) * mp.sin(mp.pi * a * j / 2) * mp.gamma(j * a + 1)
                / mp.factorial(j) * mp.mpf(x) ** (-j * a - 1) / mp.pi)

    return _sum_terms(terms, mp_term, k)


# ---------------------------------------------------------------------------
# first x-derivative

def fp_series_zero(x: float, alpha: float, k: int) -> SeriesResult:
    """Sum_j Gamma((2j+1)/a)/(2j-1)! (-1)^j x^(2j-1) / (pi a), 1 <= j <= k."""
    _check_alpha(alpha)
    if x == 0.0:
        return SeriesResult(0.0, k, 0.0)
    lx = math.log(x)
    lead = -math.log(math.pi * alpha)
    terms = [(-1.0) ** j * math.exp(_LGAMMA((2 * j + 1) / alpha) - _LGAMMA(2 * j) + (2 * j - 1) * lx + lead)
             for j in range(1, k + 1)]

    def mp_term(i):
        j = i + 1
        a = mp.mpf(alpha)
        return ((-1) ** j * mp.gamma((2 * j + 1) / a) / mp.factorial(2 * j - 1)
                * mp.mpf(x) ** (2 * j - 1) / (mp.pi * a))

    return _sum_terms(terms, mp_term, k)


def fp_series_tail(x: float, alpha: float, k: int) -> SeriesResult:
    """Sum_j Gamma(a j + 2)/j! (-1)^j sin(pi a j/2) x^(-ja-2) / pi."""
    _check_alpha(alpha)
    _check_x_pos(x)
    if alpha == 2.0:
        return SeriesResult(0.0, k, 0.0)
    lx = math.log(x)
    terms = [(-1.0) ** j * math.sin(math.pi * alpha * j / 2.0)
             * math.exp(_LGAMMA(j * alpha + 2.0) - _LGAMMA(j + 1) - (j * alpha + 2.0) * lx) / math.pi
             for j in range(1, k + 1)]

    def mp_term(i):
        j = i + 1
        a = mp.mpf(alpha)
        return ((-1) ** j * mp.sin(mp.pi * a * j / 2) * mp.gamma(j * a + 2)
                / mp.factorial(j) * mp.mpf(x) ** (-j * a - 2) / mp.pi)

    return _sum_terms(terms, mp_term, k)


# ---------------------------------------------------------------------------
# second x-derivative

def fpp_series_zero(x: float, alpha: float, k: int) -> SeriesResult:
    """Sum_j Gamma((2j+1)/a)/(2j-2)! (-1)^j x^(2j-2) / (pi a); j=1 is the x^0 term."""
    _check_alpha(alpha)
    lead = -math.log(math.pi * alpha)
    if x == 0.0:
        v = -math.exp(_LGAMMA(3.0 / alpha) + lead)
        return SeriesResult(v, k, abs(v) if k == 1 else 0.0)
    lx = math.log(x)
    terms = [(-1.0) ** j * math.exp(_LGAMMA((2 * j + 1) / alpha) - _LGAMMA(2 * j - 1) + (2 * j - 2) * lx + lead)
             for j in range(1, k + 1)]

    def mp_term(i):
        j = i + 1
        a = mp.mpf(alpha)
        return ((-1) ** j * mp.gamma((2 * j + 1) / a) / mp.factorial(2 * j - 2)
                * mp.mpf(x) ** (2 * j - 2) / (mp.pi * a))

    return _sum_terms(terms, mp_term, k)


def fpp_series_tail(x: float, alpha: float, k: int) -> SeriesResult:
    """Sum_j Gamma(a j + 3)/j! (-1)^(j-1) sin(pi a j/2) x^(-ja-3) / pi."""
    _check_alpha(alpha)
    _check_x_pos(x)
    if alpha == 2.0:
        return SeriesResult(0.0, k, 0.0)
    lx = math.log(x)
    terms = [(-1.0) ** (j - 1) * math.sin(math.pi * alpha * j / 2.0)
             * math.exp(_LGAMMA(j * alpha + 3.0) - _LGAMMA(j + 1) - (j * alpha + 3.0) * lx) / math.pi
             for j in range(1, k + 1)]

    def mp_term(i):
        j = i + 1
        a = mp.mpf(alpha)
        return ((-1) ** (j - 1) * mp.sin(mp.pi * a * j / 2) * mp.gamma(j * a + 3)
                / mp.factorial(j) * mp.mpf(x) ** (-j * a - 3) / mp.pi)

    return _sum_terms(terms, mp_term, k)


# ---------------------------------------------------------------------------
# first alpha-derivative

def fa_series_zero(x: float, alpha: float, k: int) -> SeriesResult:
    """-Sum_j Gamma'((2j+1)/a + 1)/(2j)! (-x^2)^j / (pi a^2)."""
    _check_alpha(alpha)
    a2 = alpha * alpha
    if x == 0.0:
        m = 1.0 / alpha + 1.0
        v = -math.exp(_LGAMMA(m)) * _PSI_F(0, m) / (math.pi * a2)
        return SeriesResult(v, k, 0.0 if k > 1 else abs(v))
    lx2 = 2.0 * math.log(x)
    terms = []
    for j in range(k):
        m = (2 * j + 1) / alpha + 1.0
        psi0 = _PSI_F(0, m)  # > 0 for every argument arising here
        t = -((-1.0) ** j) * math.copysign(1.0, psi0) * math.exp(
            _LGAMMA(m) + math.log(abs(psi0)) - _LGAMMA(2 * j + 1) + j * lx2) / (math.pi * a2)
        terms.append(t)

    def mp_term(j):
        a = mp.mpf(alpha)
        m = (2 * j + 1) / a + 1
        return (-mp.gamma(m) * mp.psi(0, m) / mp.factorial(2 * j)
                * (-mp.mpf(x) ** 2) ** j / (mp.pi * a ** 2))

    return _sum_terms(terms, mp_term, k)


def fa_series_tail(x: float, alpha: float, k: int) -> SeriesResult:
    """d/d(alpha) of the tail expansion: gamma' and log-x corrections included."""
    _check_alpha(alpha)
    _check_x_pos(x)
    lx = math.log(x)
    terms = []
    for j in range(1, k + 1):
        m = j * alpha + 1.0
        s = math.sin(math.pi * alpha * j / 2.0)
        c = math.cos(math.pi * alpha * j / 2.0)
        gam = math.exp(_LGAMMA(m) - _LGAMMA(j) - (m) * lx)
        bracket = _PSI_F(0, m) * s + (math.pi / 2.0) * c - lx * s
        terms.append((-1.0) ** (j - 1) * gam * bracket / math.pi)

    def mp_term(i):
        j = i + 1
        a = mp.mpf(alpha)
        m = j * a + 1
        s = mp.sin(mp.pi * a * j / 2)
        c = mp.cos(mp.pi * a * j / 2)
        gam = mp.gamma(m) / mp.factorial(j - 1) * mp.mpf(x) ** (-m)
        return (-1) ** (j - 1) * gam * (mp.psi(0, m) * s + mp.pi / 2 * c - mp.log(x) * s) / mp.pi

    return _sum_terms(terms, mp_term, k)


# ---------------------------------------------------------------------------
# second alpha-derivative

def faa_series_zero(x: float, alpha: float, k: int) -> SeriesResult:
    """2/(pi a^3) Sum Gamma' (..)/(2j)! (-x^2)^j + 1/(pi a^4) Sum Gamma'' (..) (2j+1)/(2j)! (-x^2)^j."""
    _check_alpha(alpha)
    a3 = alpha ** 3
    a4 = alpha ** 4
    if x == 0.0:
        m = 1.0 / alpha + 1.0
        g = math.exp(_LGAMMA(m))
        p0, p1 = _PSI_F(0, m), _PSI_F(1, m)
        v = 2.0 * g * p0 / (math.pi * a3) + g * (p0 * p0 + p1) / (math.pi * a4)
        return SeriesResult(v, k, 0.0 if k > 1 else abs(v))
    lx2 = 2.0 * math.log(x)
    terms = []
    for j in range(k):
        m = (2 * j + 1) / alpha + 1.0
        g = _LGAMMA(m)
        p0, p1 = _PSI_F(0, m), _PSI_F(1, m)
        body = 2.0 * p0 / a3 + (p0 * p0 + p1) * (2 * j + 1) / a4
        terms.append((-1.0) ** j * math.exp(g - _LGAMMA(2 * j + 1) + j * lx2) * body / math.pi)

    def mp_term(j):
        a = mp.mpf(alpha)
        m = (2 * j + 1) / a + 1
        g = mp.gamma(m)
        p0, p1 = mp.psi(0, m), mp.psi(1, m)
        xx = (-mp.mpf(x) ** 2) ** j / mp.factorial(2 * j)
        return (2 * g * p0 / a ** 3 + g * (p0 ** 2 + p1) * (2 * j + 1) / a ** 4) * xx / mp.pi

    return _sum_terms(terms, mp_term, k)


def faa_series_tail(x: float, alpha: float, k: int) -> SeriesResult:
    """Second alpha-derivative of the tail expansion (gamma'', gamma', log^2 x terms)."""
    _check_alpha(alpha)
    _check_x_pos(x)
    lx = math.log(x)
    terms = []
    for j in range(1, k + 1):
        m = j * alpha + 1.0
        s = math.sin(math.pi * alpha * j / 2.0)
        c = math.cos(math.pi * alpha * j / 2.0)
        p0, p1 = _PSI_F(0, m), _PSI_F(1, m)
        gam = math.exp(_LGAMMA(m) - _LGAMMA(j) - m * lx) * j
        bracket = ((p0 * p0 + p1) * s
                   + 2.0 * p0 * (math.pi / 2.0 * c - lx * s)
                   + (lx * lx - math.pi ** 2 / 4.0) * s - math.pi * lx * c)
        terms.append((-1.0) ** (j - 1) * gam * bracket / math.pi)

    def mp_term(i):
        j = i + 1
        a = mp.mpf(alpha)
        m = j * a + 1
        s = mp.sin(mp.pi * a * j / 2)
        c = mp.cos(mp.pi * a * j / 2)
        p0, p1 = mp.psi(0, m), mp.psi(1, m)
        L = mp.log(x)
        gam = mp.gamma(m) / mp.factorial(j - 1) * mp.mpf(x) ** (-m) * j
        return ((-1) ** (j - 1) * gam * ((p0 ** 2 + p1) * s + 2 * p0 * (mp.pi / 2 * c - L * s)
                                         + (L ** 2 - mp.pi ** 2 / 4) * s - mp.pi * L * c) / mp.pi)

    return _sum_terms(terms, mp_term, k)
