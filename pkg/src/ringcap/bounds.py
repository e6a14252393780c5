"""Closed-form two-sided capacity estimates for metric rings.

For a ring with inner radius r, outer radius R, exponent p and pointwise
dimension q at the center, the capacity admits matching lower and upper
envelopes whose shape switches at the critical exponent p = q:

* below (1 < p < q): both sides scale like ``mu(B) / r^p``;
* critical (p = q): both sides carry the factor ``log(R/r)^(1-q)``;
* above (p > q): both sides follow ``|(2R)^a - r^a|^(1-p)`` with
  ``a = (p - q)/(p - 1)``, approaching a positive constant as r -> 0.

Each envelope is a scale statement: it pins the exponents of r, R and the
ball mass but holds only up to a multiplicative structure constant, which
is normalized to 1 here.  All remaining factors are written out exactly,
so values are reproducible numbers rather than order estimates.  A pointwise Riesz-type potential of the gradient and a
singleton (capacity of a shrinking ball) helper complete the module.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "regime",
    "lower_bound",
    "upper_bound",
    "RegimeEstimate",
    "estimate_ring",
    "riesz_potential",
    "SingletonLimit",
    "singleton_capacity_limit",
]

REGIME_TOL = 1e-9


def _check_ring(r, R, p):
    if not (np.isfinite(r) and np.isfinite(R) and np.isfinite(p)):
        raise ValueError("ring parameters must be finite")
    if r <= 0:
        raise ValueError("inner radius must be positive")
    if R <= r:
        raise ValueError("outer radius must exceed inner radius")
    if p <= 1:
        raise ValueError("exponent p must exceed 1")


def regime(p, q_center, tol=REGIME_TOL) -> str:
    """Classify the exponent against the pointwise dimension.

    Returns "below", "critical" or "above"; ties within ``tol`` are
    critical.
    """
    if p <= 1:
        raise ValueError("exponent p must exceed 1")
    if not np.isfinite(q_center) or q_center < 1:
        raise ValueError("pointwise dimension must be finite and at least 1")
    if abs(p - q_center) <= tol:
        return "critical"
    return "below" if p < q_center else "above"


def lower_bound(r, R, p, q_center, mass_inner) -> float:
    """Lower capacity envelope of the ring (structure constant 1).

    ``mass_inner`` is the measure of the inner ball B(center, r).  The
    below and above branches vanish as r -> R because of the
    ``(1 - r/R)^(p(p-1))`` factor; the critical branch carries
    ``(1 - r/R)^(q(q-1))`` and ``log(R/r)^(1-q)``.
    """
    _check_ring(r, R, p)
    if mass_inner < 0:
        raise ValueError("inner ball mass must be nonnegative")
    which = regime(p, q_center)
    gap = 1.0 - r / R
    if which == "below":
        c1 = (1.0 - 2.0 ** (-(q_center - p) / (p - 1.0))) ** (p - 1.0)
        return c1 * gap ** (p * (p - 1.0)) * mass_inner / r**p
    if which == "critical":
        q = q_center
        return (mass_inner / r**q) * gap ** (q * (q - 1.0)) \
            * np.log(R / r) ** (1.0 - q)
    a = (p - q_center) / (p - 1.0)
    c3 = (mass_inner / r**q_center) * (2.0**a - 1.0) ** (p - 1.0)
    return c3 * gap ** (p * (p - 1.0)) \
        * abs((2.0 * R) ** a - r**a) ** (1.0 - p)


def upper_bound(r, R, p, q_center, mass_inner, q_local=None) -> float:
    """Upper capacity envelope of the ring (structure constant 1).

    The below branch is driven by the local dimension ``q_local`` (default:
    ``q_center``) through the exponent ``(p - q)/(p - 1)``; the critical
    branch by ``log(R/r)^(1-q)``; the above branch is the pure radial term
    ``|(2R)^a - r^a|^(1-p)`` without a mass factor.
    """
    _check_ring(r, R, p)
    if mass_inner < 0:
        raise ValueError("inner ball mass must be nonnegative")
    if q_local is None:
        q_local = q_center
    which = regime(p, q_center)
    if which == "below":
        a = (p - q_local) / (p - 1.0)
        return abs(1.0 - (R / r) ** a) ** (-p) * mass_inner / r**p
    if which == "critical":
        q = q_center
        return (mass_inner / r**q) * np.log(R / r) ** (1.0 - q)
    a = (p - q_center) / (p - 1.0)
    return (2.0**a - 1.0) ** (-1.0) * abs((2.0 * R) ** a - r**a) ** (1.0 - p)


@dataclass
class RegimeEstimate:
    """Both envelopes of one ring plus the constants that entered them."""

    regime: str
    lower: float
    upper: float
    r: float
    R: float
    p: float
    q_center: float
    q_local: float
    mass_inner: float
    constants: dict = field(default_factory=dict)


def estimate_ring(r, R, p, q_center, mass_inner, q_local=None) -> RegimeEstimate:
    """Evaluate both envelopes and record the branch constants."""
    if q_local is None:
        q_local = q_center
    which = regime(p, q_center)
    lo = lower_bound(r, R, p, q_center, mass_inner)
    hi = upper_bound(r, R, p, q_center, mass_inner, q_local)
    constants = {}
    if which == "below":
        constants["c_lower"] = (1.0 - 2.0 ** (-(q_center - p) / (p - 1.0))) ** (p - 1.0)
        constants["c_upper"] = abs(1.0 - (R / r) ** ((p - q_local) / (p - 1.0))) ** (-p)
    elif which == "critical":
        constants["c_lower"] = constants["c_upper"] = mass_inner / r**q_center
    else:
        a = (p - q_center) / (p - 1.0)
        constants["c_lower"] = (mass_inner / r**q_center) * (2.0**a - 1.0) ** (p - 1.0)
        constants["c_upper"] = (2.0**a - 1.0) ** (-1.0)
    return RegimeEstimate(which, lo, hi, r, R, p, q_center, q_local,
                          mass_inner, constants)


def riesz_potential(space, field, node, center, r, p) -> float:
    """Riesz-type potential of the gradient surrogate at one node.

    For a field supported in the open ball B(center, r) and a node x in
    that ball, evaluates

        ( r^(p-1) * sum_y lip(y)^p * d(x,y) / mu(B(x, d(x,y))) * m(y) )^(1/p)

    over ball nodes y != x.  Doubling the field doubles the result.
    """
    if p <= 1:
        raise ValueError("exponent p must exceed 1")
    node, center = int(node), int(center)
    d_center = space.distances_from(center)
    if d_center[node] >= r:
        raise ValueError("evaluation node must lie in the open ball")
    support = np.abs(field.u) > 1e-12
    if np.any(support & (d_center >= r)):
        raise ValueError("field must be supported in the open ball")
    ball = np.nonzero(d_center < r)[0]
    ball = ball[ball != node]
    if ball.size == 0:
        return 0.0
    dx = space.distances_from(node)
    order = np.argsort(dx, kind="stable")
    cummass = np.cumsum(space.mass[order])
    idx = np.searchsorted(dx[order], dx[ball], side="left") - 1
    ball_mass_at = cummass[idx]
    if np.any(ball_mass_at <= 0):
        raise ValueError("zero-mass ball encountered in the potential sum")
    terms = field.lip[ball] ** p * dx[ball] / ball_mass_at * space.mass[ball]
    return float((r ** (p - 1.0) * terms.sum()) ** (1.0 / p))


@dataclass
class SingletonLimit:
    """Capacity of a shrinking inner ball at fixed outer radius."""

    radii: np.ndarray
    capacities: np.ndarray
    limit_estimate: float
    last_relative_change: float

    @property
    def decreasing(self) -> bool:
        return bool(np.all(np.diff(self.capacities) <= 1e-12))


def singleton_capacity_limit(space, center, p, R, radii, tol=1e-8) -> SingletonLimit:
    """Solve the ring capacity along a decreasing sequence of inner radii.

    The radii must be strictly decreasing and below R.  The limit estimate
    is the last capacity; ``last_relative_change`` quantifies how settled
    the tail is.
    """
    from .solver import relative_capacity

    radii = np.asarray(radii, dtype=float)
    if radii.size < 2:
        raise ValueError("need at least two radii")
    if np.any(np.diff(radii) >= 0):
        raise ValueError("radii must be strictly decreasing")
    if radii[0] >= R:
        raise ValueError("inner radii must stay below the outer radius")
    h = float(space.params.resolution)
    if np.any(radii < 5.0 * h * (1.0 - 1e-12)):
        raise ValueError(
            "inner radii below 5 grid spacings cannot resolve the ring; "
            "refine the grid instead"
        )
    caps = np.array([
        relative_capacity(space, center, float(r), R, p, tol=tol).value
        for r in radii
    ])
    change = abs(caps[-1] - caps[-2]) / max(caps[-1], 1e-300)
    return SingletonLimit(radii, caps, float(caps[-1]), float(change))
