"""Geometry of logarithmic spirals in the punctured plane.

A spiral of inclination lam through the unit-circle point exp(i*theta0) is
the curve t -> exp(exp(i*lam) * t + i*theta0).  Two nonzero points lie on
the same spiral exactly when their spiral arguments

    arg_lam(w) = Arg(w) - tan(lam) * log|w|

agree modulo 2*pi.  Inclination 0 degenerates to rays from the origin and
arg_0 is the ordinary principal argument.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RefinementRequiredError

TWO_PI = 2.0 * np.pi


def principal_angle(x):
    """Reduce angles to the interval (-pi, pi].

    Exact passthrough for inputs already inside the interval; accepts
    scalars or arrays.
    """
    x = np.asarray(x, dtype=float)
    r = x - TWO_PI * np.round(x / TWO_PI)
    r = np.where(r <= -np.pi, r + TWO_PI, r)
    return r if r.ndim else float(r)


@dataclass(frozen=True)
class SpiralAngle:
    """Spiral inclination lam in (-pi/2, pi/2) with cached derived constants.

    mu = exp(i*lam)*cos(lam) is the exponent weight that converts a
    starlike logarithmic derivative into a spirallike one.
    """

    lam: float

    def __post_init__(self):
        lam = float(self.lam)
        if not np.isfinite(lam) or not (-np.pi / 2 < lam < np.pi / 2):
            raise DomainError(f"inclination must lie in (-pi/2, pi/2), got {self.lam!r}")
        object.__setattr__(self, "lam", lam)
        c = np.cos(lam)
        object.__setattr__(self, "mu", complex(c * c, np.sin(lam) * c))
        object.__setattr__(self, "tan_lambda", np.tan(lam))

    @property
    def cos_lambda(self):
        return np.cos(self.lam)

    @property
    def is_starlike(self):
        return self.lam == 0.0


STARLIKE = SpiralAngle(0.0)


@dataclass(frozen=True)
class SpiralSector:
    """Open bundle of spirals: all w with |arg_lam(w) - center| < opening/2 mod 2*pi."""

    center_angle: float
    opening: float
    angle: SpiralAngle

    def __post_init__(self):
        if not np.isfinite(self.center_angle):
            raise DomainError("sector center must be finite")
        if not (0.0 < self.opening <= TWO_PI):
            raise DomainError(f"sector opening must lie in (0, 2*pi], got {self.opening!r}")


def arg_lambda(w, angle):
    """Spiral argument Arg(w) - tan(lam)*log|w| of nonzero points w.

    Vectorized; raises DomainError if any entry is zero.  For lam = 0 this
    is numpy.angle exactly.
    """
    w = np.asarray(w, dtype=complex)
    if np.any(w == 0):
        raise DomainError("spiral argument is undefined at the origin")
    out = np.angle(w) - angle.tan_lambda * np.log(np.abs(w))
    return out if out.ndim else float(out)


def spiral_point(theta0, angle, t):
    """Point exp(i*theta0 + exp(i*lam)*t) on the spiral labeled theta0.

    t = 0 gives the unit-circle point; t < 0 moves toward the origin.
    """
    t = np.asarray(t, dtype=float)
    w = np.exp(np.exp(1j * angle.lam) * t + 1j * theta0)
    return w if w.ndim else complex(w)


def spiral_segment_sample(w, angle, n, t_min):
    """Sample the inward spiral arc ending at w.

    Returns the n points w * exp(exp(i*lam)*t) for t on a uniform grid
    [t_min, 0]; the last entry is w exactly.  Requires t_min < 0 and n >= 2.
    """
    if not (t_min < 0):
        raise DomainError(f"t_min must be negative, got {t_min!r}")
    if n < 2:
        raise DomainError(f"need at least two sample points, got {n!r}")
    w = complex(w)
    if w == 0:
        raise DomainError("spiral arcs through the origin are degenerate")
    t = np.linspace(t_min, 0.0, int(n))
    pts = w * np.exp(np.exp(1j * angle.lam) * t)
    pts[-1] = w
    return pts


def sector_contains(sector, w):
    """Strict membership of w in the open spiral sector."""
    offs = principal_angle(np.asarray(arg_lambda(w, sector.angle)) - sector.center_angle)
    inside = np.abs(offs) < sector.opening / 2.0
    return inside if np.ndim(inside) else bool(inside)


def continuous_arg_lambda(path, angle):
    """Continuous branch of the spiral argument along a discrete path.

    path: complex samples of a curve starting at exactly 1, where the
        branch is pinned to arg_lam = 0.
    Consecutive turning increments must stay below pi in magnitude or the
    branch is ambiguous; then RefinementRequiredError reports the first
    offending step so the caller can resample.
    """
    path = np.asarray(path, dtype=complex)
    if path.ndim != 1 or path.size == 0:
        raise DomainError("path must be a nonempty 1-d array")
    if path[0] != 1:
        raise DomainError("path must start at 1, where the branch is pinned")
    if np.any(path == 0):
        raise DomainError("path passes through the origin")
    inc = np.angle(path[1:] / path[:-1])
    bad = np.abs(inc) >= np.pi
    if np.any(bad):
        k = int(np.argmax(bad))
        raise RefinementRequiredError(
            f"argument step {k}->{k + 1} reaches pi; refine the path", where=k
        )
    arg = np.concatenate(([0.0], np.cumsum(inc)))
    return arg - angle.tan_lambda * np.log(np.abs(path))
