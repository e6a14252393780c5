"""Radial test potentials and their discrete p-energies.

A radial profile is a scalar shape ``t -> h(t)`` equal to 1 up to the
inner radius and 0 beyond the outer radius.  Composed with the distance
from a center node it yields an admissible condenser potential whose
energy upper-bounds the capacity.  Two shapes cover the three exponent
regimes:

* a power shape driven by the exponent ``(p - q) / (p - 1)`` (used both
  below and above the critical exponent, with the appropriate dimension
  plugged in), and
* a logarithmic shape for the critical case ``p = q``.

Energies come in two discrete forms: the edge form sums
``edge_mass * |du/len|^p`` over edges (this is the solver's objective),
the node form sums ``mass * lip^p`` with the node Lipschitz surrogate
``lip(x) = max incident |du| / len``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "RadialProfile",
    "power_profile",
    "log_profile",
    "PotentialField",
    "field_from_values",
    "radialize",
    "EnergySplit",
    "p_energy",
    "ShellEnergies",
    "dyadic_shell_energy",
]


class RadialProfile:
    """Piecewise radial shape: 1 on [0, r], interpolating on (r, R), 0 beyond.

    Instances are callable on scalars or arrays; ``deriv`` evaluates the
    derivative of the interpolating branch (zero outside the open ring).
    """

    def __init__(self, kind, r, R, value_fn, deriv_fn):
        if r <= 0 or R <= r:
            raise ValueError("need 0 < r < R")
        self.kind = kind
        self.r = float(r)
        self.R = float(R)
        self._value = value_fn
        self._deriv = deriv_fn

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros(t.shape)
        out[t <= self.r] = 1.0
        ring = (t > self.r) & (t < self.R)
        out[ring] = np.clip(self._value(t[ring]), 0.0, 1.0)
        return out if out.ndim else float(out)

    def deriv(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros(t.shape)
        ring = (t > self.r) & (t < self.R)
        out[ring] = self._deriv(t[ring])
        return out if out.ndim else float(out)

    def __repr__(self):
        return f"RadialProfile({self.kind}, r={self.r:g}, R={self.R:g})"


def power_profile(r, R, p, q) -> RadialProfile:
    """Power-law ring profile for exponent p against dimension q, p != q.

    On the ring the shape is ``(t^a - R^a) / (r^a - R^a)`` with
    ``a = (p - q) / (p - 1)``; for p < q it decays like the fundamental
    radial solution, for p > q it is the increasing-exponent analogue.
    """
    if p <= 1:
        raise ValueError("exponent p must exceed 1")
    if abs(p - q) <= 1e-12:
        raise ValueError("power profile degenerates at p = q; use log_profile")
    a = (p - q) / (p - 1.0)
    denom = r**a - R**a

    def value(t):
        return (t**a - R**a) / denom

    def deriv(t):
        return a * t ** (a - 1.0) / denom

    return RadialProfile("power", r, R, value, deriv)


def log_profile(r, R) -> RadialProfile:
    """Logarithmic ring profile log(R/t) / log(R/r), the critical-case shape."""
    if r <= 0 or R <= r:
        raise ValueError("need 0 < r < R")
    scale = np.log(R / r)

    def value(t):
        return np.log(R / t) / scale

    def deriv(t):
        return -1.0 / (t * scale)

    return RadialProfile("log", r, R, value, deriv)


@dataclass
class PotentialField:
    """Node potential with derived edge and node gradient surrogates.

    u      : node values
    g_edge : |u_i - u_j| / length per edge
    lip    : per node, the largest incident edge quotient
    gbar   : optional analytic upper-gradient bound (radial profiles only)
    """

    u: np.ndarray
    g_edge: np.ndarray
    lip: np.ndarray
    gbar: np.ndarray | None = None


def field_from_values(space, u, gbar=None) -> PotentialField:
    """Wrap node values, computing edge quotients and node Lipschitz bounds."""
    u = np.asarray(u, dtype=float)
    if u.shape != (space.n_nodes,):
        raise ValueError("u must have one value per node")
    i, j = space.edges[:, 0], space.edges[:, 1]
    g = np.abs(u[i] - u[j]) / space.edge_lengths
    lip = np.zeros(space.n_nodes)
    np.maximum.at(lip, i, g)
    np.maximum.at(lip, j, g)
    return PotentialField(u, g, lip, gbar)


def radialize(space, center, profile) -> PotentialField:
    """Compose a radial profile with the distance from a center node.

    Since the distance function is 1-Lipschitz, |profile.deriv| evaluated
    at the node distance is an analytic bound for the local gradient; it is
    stored as ``gbar``.
    """
    d = space.distances_from(int(center))
    u = profile(d)
    gbar = np.abs(profile.deriv(d))
    return field_from_values(space, u, gbar=gbar)


@dataclass
class EnergySplit:
    """Edge-form and node-form discrete p-energies of one field."""

    edge: float
    node: float


def p_energy(space, field, p) -> EnergySplit:
    """Discrete p-energy of a potential field, both forms.

    The edge form is the solver's objective and the reported value in all
    capacity comparisons; the node form (Lipschitz surrogate) is the one
    that partitions exactly over node sets.
    """
    if p <= 1:
        raise ValueError("exponent p must exceed 1")
    edge = float((space.edge_masses() * field.g_edge**p).sum())
    node = float((space.mass * field.lip**p).sum())
    return EnergySplit(edge, node)


@dataclass
class ShellEnergies:
    """Node-form energy of a ring split over dyadic shells."""

    k0: int
    counts: np.ndarray
    energies: np.ndarray

    @property
    def total(self) -> float:
        return float(self.energies.sum())


def dyadic_shell_energy(space, field, center, r, R, p) -> ShellEnergies:
    """Split the node-form ring energy over dyadic shells [2^k r, 2^(k+1) r).

    The shell count is k0 = floor(log2(R / r)); shell k collects ring nodes
    with 2^k r <= d < min(2^(k+1) r, R) (shell 0 starts strictly above r).
    The shell energies sum exactly to the node-form energy of the open ring.
    """
    if p <= 1:
        raise ValueError("exponent p must exceed 1")
    if r <= 0 or R <= r:
        raise ValueError("need 0 < r < R")
    k0 = int(np.floor(np.log2(R / r)))
    while 2.0 ** (k0 + 1) * r <= R:
        k0 += 1
    while 2.0**k0 * r > R:
        k0 -= 1
    d = space.distances_from(int(center))
    ring = (d > r) & (d < R)
    contrib = space.mass * field.lip**p
    shell_of = np.floor(np.log2(np.where(ring, d, r) / r)).astype(int)
    shell_of = np.clip(shell_of, 0, k0)
    counts = np.zeros(k0 + 1, dtype=np.int64)
    energies = np.zeros(k0 + 1)
    np.add.at(counts, shell_of[ring], 1)
    np.add.at(energies, shell_of[ring], contrib[ring])
    return ShellEnergies(k0, counts, energies)
