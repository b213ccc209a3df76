"""Vectorized dilogarithm and trilogarithm on the closed unit disk.

Piecewise-linear density parts of a boundary measure integrate against
log(1 - exp(-i*t)z) in closed form through Li_2 and Li_3 evaluated at
points u with |u| <= 1.  Two regimes: the defining power series for
|u| <= 1/2, and the zeta-series expansion of Li_n(exp(w)) around w = 0
otherwise (|w| = |Log u| <= sqrt(log(2)^2 + pi^2) < 2*pi, so the
expansion converges geometrically with ratio below 0.52).
"""

import numpy as np
from scipy.special import bernoulli, zeta

from .errors import DomainError

_DIRECT_TERMS = 56
_EXPANSION_TERMS = 72
_ABS_TOL = 1e-12


def _zeta_at(s):
    """Riemann zeta at integer s <= 3, s != 1, including negative arguments."""
    if s >= 2:
        return float(zeta(s))
    if s == 0:
        return -0.5
    m = -s
    # zeta(-m) = (-1)^m * B_{m+1} / (m+1); odd Bernoulli numbers > 1 vanish.
    b = bernoulli(m + 1)[m + 1]
    return (-1.0) ** m * b / (m + 1.0)


def _expansion_coefficients(n):
    """Coefficients c_k = zeta(n - k)/k! of Li_n(e^w), skipping k = n - 1."""
    coefs = np.zeros(_EXPANSION_TERMS + 1)
    fact = 1.0
    for k in range(_EXPANSION_TERMS + 1):
        if k > 0:
            fact *= k
        if k != n - 1:
            coefs[k] = _zeta_at(n - k) / fact
    return coefs


_COEFS = {2: _expansion_coefficients(2), 3: _expansion_coefficients(3)}
_HARMONIC = {2: 1.0, 3: 1.5}
_FACT = {2: 1.0, 3: 2.0}


def _direct_series(n, u):
    acc = np.zeros_like(u)
    for m in range(_DIRECT_TERMS, 0, -1):
        acc = acc * u + 1.0 / m**n
    return acc * u


def _zeta_expansion(n, u):
    w = np.log(u)
    acc = np.zeros_like(w)
    coefs = _COEFS[n]
    for k in range(_EXPANSION_TERMS, -1, -1):
        acc = acc * w + coefs[k]
    # The k = n - 1 term carries the logarithmic singularity at u = 1.
    acc = acc + w ** (n - 1) / _FACT[n] * (_HARMONIC[n] - np.log(-w))
    return acc


def _polylog(n, u):
    u = np.asarray(u, dtype=complex)
    scalar = u.ndim == 0
    u = np.atleast_1d(u)
    if np.any(np.abs(u) > 1.0 + _ABS_TOL):
        raise DomainError("polylogarithms evaluated only for |u| <= 1")
    out = np.empty_like(u)
    at_one = u == 1.0
    small = (np.abs(u) <= 0.5) & ~at_one
    large = ~small & ~at_one
    if np.any(small):
        out[small] = _direct_series(n, u[small])
    if np.any(large):
        out[large] = _zeta_expansion(n, u[large])
    if np.any(at_one):
        out[at_one] = _zeta_at(n)
    return complex(out[0]) if scalar else out


def li2(u):
    """Dilogarithm, sum of u^m / m^2, for |u| <= 1."""
    return _polylog(2, u)


def li3(u):
    """Trilogarithm, sum of u^m / m^3, for |u| <= 1."""
    return _polylog(3, u)
