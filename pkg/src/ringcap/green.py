"""Singular functions: discrete analogues of p-harmonic Green functions.

A singular function with pole x0 on a domain is built from the condenser
potential u of (closed ball B(x0, rho), domain) by the normalization

    G = cap^(1 / (1 - p)) * u,

which makes the level-set capacity identity

    cap({G >= b}, {G > a}) * (b - a)^(p - 1) = 1

hold exactly in the continuum.  On a grid the identity survives up to a
bounded band, and the pole value max G scales with resolution in a
regime-dependent way: growing like a power of 1/h below the critical
exponent, like log(1/h) at it, and staying bounded above it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import regime
from .dimension import fit_power_law
from .solver import CapacityResult, Condenser, solve_condenser

__all__ = [
    "SingularFunction",
    "build_green",
    "LevelSetReport",
    "check_level_sets",
    "TrendReport",
    "blowup_trend",
    "MaxPrincipleReport",
    "maximum_principle_check",
]


@dataclass
class SingularFunction:
    """Normalized condenser potential with its pole data."""

    values: np.ndarray
    center: int
    p: float
    rho: float
    cap_inner: float
    domain: np.ndarray
    result: CapacityResult

    @property
    def max_value(self) -> float:
        return float(self.values.max())


def build_green(space, domain, center, p, rho=None, tol=1e-6) -> SingularFunction:
    """Construct the singular function with pole ``center`` on ``domain``.

    ``rho`` is the radius of the inner plate standing in for the pole;
    the default, three grid steps, keeps the plate a few nodes wide at
    every resolution so the normalizing capacity stays stable.
    """
    if p <= 1:
        raise ValueError("exponent p must exceed 1")
    domain = np.asarray(domain, dtype=np.int64)
    center = int(center)
    if rho is None:
        rho = 3.0 * space.params.resolution
    if rho <= 0:
        raise ValueError("pole radius must be positive")
    in_domain = np.zeros(space.n_nodes, dtype=bool)
    in_domain[domain] = True
    if not in_domain[center]:
        raise ValueError("pole must lie in the domain")
    inner = space.closed_ball(center, rho)
    if not in_domain[inner].all():
        raise ValueError("pole ball spills out of the domain; shrink rho")
    if inner.size == domain.size:
        raise ValueError("pole ball fills the domain; shrink rho")
    res = solve_condenser(space, Condenser(inner, domain, center=center, r=rho),
                          p, tol=tol)
    cap = res.value
    if cap <= 0:
        raise ValueError("condenser capacity vanished; domain has no boundary")
    values = cap ** (1.0 / (1.0 - p)) * res.field.u
    return SingularFunction(values, center, float(p), float(rho), cap, domain, res)


@dataclass
class LevelSetReport:
    """Capacity identity checks across level-set pairs.

    ``entries`` rows are (a, b, capacity, ratio) with ratio =
    cap * (b - a)^(p - 1), or (a, b, None, None) for pairs whose level
    sets were empty on the grid; those are listed in ``notices``.
    """

    entries: list
    notices: list
    band: float
    passed: bool


def check_level_sets(space, sf: SingularFunction, pairs, tol=1e-6,
                     band_limit=4.0) -> LevelSetReport:
    """Test cap({G >= b}, {G > a}) * (b - a)^(p-1) across value pairs.

    The pair (0, max G) reproduces the defining condenser up to the
    discrete plate, so its ratio is forced to 1; other pairs must stay in
    a band of width ``band_limit`` around it.
    """
    g = sf.values
    entries, notices, ratios = [], [], []
    for a, b in pairs:
        a, b = float(a), float(b)
        if not 0.0 <= a < b:
            raise ValueError("need 0 <= a < b in each level pair")
        upper = np.nonzero(g >= b * (1.0 - 1e-12))[0]
        lower = np.nonzero(g > a)[0]
        if upper.size == 0:
            notices.append(f"level {b:g} above the pole value; pair skipped")
            entries.append((a, b, None, None))
            continue
        if lower.size == upper.size:
            notices.append(f"levels {a:g}..{b:g} leave no free nodes; pair skipped")
            entries.append((a, b, None, None))
            continue
        res = solve_condenser(space, Condenser(upper, lower), sf.p, tol=tol)
        ratio = res.value * (b - a) ** (sf.p - 1.0)
        entries.append((a, b, res.value, ratio))
        ratios.append(ratio)
    if ratios:
        band = float(max(ratios) / min(ratios))
        passed = band <= band_limit
    else:
        band, passed = np.inf, False
    return LevelSetReport(entries, notices, band, passed)


@dataclass
class TrendReport:
    """Pole values across resolutions with regime-appropriate fits."""

    regime: str
    resolutions: np.ndarray
    max_values: np.ndarray
    power_slope: float  # slope of log(max G) against log(1/h)
    log_slope: float    # slope of max G against log(1/h)
    log_residual: float
    bounded_change: float  # relative spread of max G across levels

    @property
    def bounded(self) -> bool:
        return self.bounded_change <= 0.1


def blowup_trend(levels, p, q_center, rho_steps=3.0, tol=1e-6) -> TrendReport:
    """Track the pole value of the singular function as the grid refines.

    ``levels`` is a sequence of (space, domain, center) triples ordered by
    decreasing resolution; at least three are required.  Each level gets a
    pole plate of ``rho_steps`` grid steps so the construction shrinks
    with h.
    """
    levels = list(levels)
    if len(levels) < 3:
        raise ValueError("need at least three resolution levels")
    hs, gmax = [], []
    for space, domain, center in levels:
        h = space.params.resolution
        sf = build_green(space, domain, center, p, rho=rho_steps * h, tol=tol)
        hs.append(h)
        gmax.append(sf.max_value)
    hs = np.asarray(hs)
    gmax = np.asarray(gmax)
    if not np.all(np.diff(hs) < 0):
        raise ValueError("resolution levels must be strictly refining")
    which = regime(p, q_center)
    inv = 1.0 / hs
    power = fit_power_law(inv, gmax)
    log_slope, log_icept = np.polyfit(np.log(inv), gmax, 1)
    fitted = log_slope * np.log(inv) + log_icept
    spread = gmax.max() - gmax.min()
    log_residual = float(np.abs(gmax - fitted).max() / max(spread, 1e-300))
    bounded_change = float(spread / max(abs(gmax).max(), 1e-300))
    return TrendReport(which, hs, gmax, power.slope, float(log_slope),
                       log_residual, bounded_change)


@dataclass
class MaxPrincipleReport:
    worst_excess: float      # max over interior nodes of G - max(neighbor G)
    min_component_value: float
    positive_ok: bool
    passed: bool


def maximum_principle_check(space, sf: SingularFunction, tol=1e-9) -> MaxPrincipleReport:
    """No interior node of a singular function may top all its neighbors.

    Interior means: in the domain but outside the pole plate.  Also checks
    strict positivity on the pole's connected component of the domain.
    """
    g = sf.values
    n = space.n_nodes
    in_domain = np.zeros(n, dtype=bool)
    in_domain[sf.domain] = True
    plate = np.zeros(n, dtype=bool)
    plate[space.closed_ball(sf.center, sf.rho)] = True
    interior = in_domain & ~plate

    nbr_max = np.full(n, -np.inf)
    ei, ej = space.edges[:, 0], space.edges[:, 1]
    np.maximum.at(nbr_max, ei, g[ej])
    np.maximum.at(nbr_max, ej, g[ei])
    has_nbr = nbr_max > -np.inf
    check = interior & has_nbr
    scale = max(1.0, sf.max_value)
    worst = float((g[check] - nbr_max[check]).max()) if check.any() else -np.inf

    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components

    keep = in_domain[ei] & in_domain[ej]
    sub = coo_matrix((np.ones(int(keep.sum())), (ei[keep], ej[keep])), shape=(n, n))
    _, labels = connected_components(sub, directed=False)
    comp = in_domain & (labels == labels[sf.center])
    min_val = float(g[comp].min())
    positive_ok = min_val > 0.0
    passed = worst <= tol * scale and positive_ok
    return MaxPrincipleReport(worst, min_val, positive_ok, passed)
