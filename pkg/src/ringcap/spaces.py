"""Discrete metric measure spaces on regular grids.

A :class:`DiscreteSpace` is a finite metric measure space: nodes with
coordinates, a positive node measure (cell masses), a symmetric metric, and
a neighbor graph whose edge lengths agree with the metric.  Generators are
provided for

* weighted Euclidean grids (node mass ``|x|^alpha * h^n``),
* a discretization of the first Heisenberg group under the Koranyi gauge,
* a double cone (grid restricted to ``x_1^2 + ... + x_{n-1}^2 <= x_n^2``),
* two unit balls glued along a line segment, carrying the shortest-path
  metric of the glued complex.

Metrics are evaluated lazily: closed-form for the Euclidean and gauge
cases, Dijkstra over the edge graph (cached per source) for glued spaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import dijkstra

__all__ = [
    "SpaceParams",
    "DiscreteSpace",
    "build_euclidean_grid",
    "build_heisenberg_grid",
    "build_double_cone",
    "build_glued_balls",
    "koranyi_distance",
    "verify_metric",
    "MetricReport",
    "save_space",
    "load_space",
]

# Numbers are written with 17 significant digits so float64 values survive a
# text round trip exactly.
_FMT = "%.17g"


@dataclass
class SpaceParams:
    """Structural constants attached to a space.

    doubling_constant : seed estimate for max mu(B(x,2r))/mu(B(x,r))
    doubling_radius   : radius scale up to which doubling is expected to hold
    poincare_dilation : dilation factor metadata for Poincare-type inequalities
    resolution        : grid step h
    """

    doubling_constant: float = 2.0
    doubling_radius: float = 1.0
    poincare_dilation: float = 1.0
    resolution: float = 1.0

    def __post_init__(self):
        if self.doubling_constant < 1.0:
            raise ValueError("doubling_constant must be >= 1")
        if self.doubling_radius <= 0 or self.resolution <= 0:
            raise ValueError("doubling_radius and resolution must be positive")
        if self.poincare_dilation < 1.0:
            raise ValueError("poincare_dilation must be >= 1")


class DiscreteSpace:
    """Finite metric measure space with a neighbor graph.

    Parameters
    ----------
    coords : (n, k) array
        Node coordinates.
    mass : (n,) array
        Nonnegative node masses (cell measure); total mass must be positive.
    edges : (m, 2) int array
        Neighbor pairs (i, j), i != j.
    edge_lengths : (m,) array
        Metric length of each edge; must equal the node distance of the pair
        to within 1e-12 relative (checked for closed-form metrics).
    metric : {"euclidean", "koranyi", "path"}
        Closed-form metrics are evaluated from coordinates; "path" uses
        shortest paths over the weighted edge graph.
    params : SpaceParams
    """

    def __init__(self, coords, mass, edges, edge_lengths, metric, params):
        coords = np.atleast_2d(np.asarray(coords, dtype=float))
        mass = np.asarray(mass, dtype=float)
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        edge_lengths = np.asarray(edge_lengths, dtype=float)
        n = coords.shape[0]
        if mass.shape != (n,):
            raise ValueError("mass must have one entry per node")
        if not np.all(np.isfinite(mass)) or np.any(mass < 0):
            raise ValueError("node masses must be finite and nonnegative")
        if mass.sum() <= 0:
            raise ValueError("total mass must be positive")
        if edges.size and (edges.min() < 0 or edges.max() >= n):
            raise ValueError("edge endpoint out of range")
        if np.any(edges[:, 0] == edges[:, 1]):
            raise ValueError("self-loops are not allowed")
        if edge_lengths.shape != (edges.shape[0],):
            raise ValueError("edge_lengths must have one entry per edge")
        if np.any(edge_lengths <= 0):
            raise ValueError("edge lengths must be positive")
        if metric not in ("euclidean", "koranyi", "path"):
            raise ValueError(f"unknown metric kind {metric!r}")
        self.coords = coords
        self.mass = mass
        self.edges = edges
        self.edge_lengths = edge_lengths
        self.metric = metric
        self.params = params
        self._path_rows: dict[int, np.ndarray] = {}
        self._adjacency = None
        self._edge_mass = None
        if metric != "path" and edges.size:
            d = self._pair_distance(edges[:, 0], edges[:, 1])
            err = np.abs(d - edge_lengths) / np.maximum(1.0, np.abs(d))
            if err.max() > 1e-12:
                raise ValueError("edge lengths disagree with the metric")

    # ------------------------------------------------------------------
    # basic queries
    # ------------------------------------------------------------------

    @property
    def n_nodes(self) -> int:
        return self.coords.shape[0]

    @property
    def n_edges(self) -> int:
        return self.edges.shape[0]

    @property
    def total_mass(self) -> float:
        return float(self.mass.sum())

    def mass_of(self, nodes) -> float:
        """Total measure of a node set (empty set has mass 0)."""
        nodes = np.asarray(nodes, dtype=np.int64)
        if nodes.size == 0:
            return 0.0
        if nodes.size and (nodes.min() < 0 or nodes.max() >= self.n_nodes):
            raise ValueError("node id out of range")
        return float(self.mass[nodes].sum())

    def edge_masses(self) -> np.ndarray:
        """Mass attached to each edge: mean of the endpoint node masses."""
        if self._edge_mass is None:
            m = self.mass
            self._edge_mass = 0.5 * (m[self.edges[:, 0]] + m[self.edges[:, 1]])
        return self._edge_mass

    # ------------------------------------------------------------------
    # metric
    # ------------------------------------------------------------------

    def _pair_distance(self, i, j):
        if self.metric == "euclidean":
            diff = self.coords[i] - self.coords[j]
            return np.sqrt((diff * diff).sum(axis=-1))
        if self.metric == "koranyi":
            return koranyi_distance(self.coords[i], self.coords[j])
        raise RuntimeError("path metric has no closed form")

    def distances_from(self, center: int) -> np.ndarray:
        """Distances from one node to every node (cached for path metrics)."""
        center = int(center)
        if not 0 <= center < self.n_nodes:
            raise ValueError("node id out of range")
        if self.metric == "path":
            row = self._path_rows.get(center)
            if row is None:
                graph = self._graph()
                row = dijkstra(graph, directed=False, indices=center)
                self._path_rows[center] = row
            return row
        idx = np.arange(self.n_nodes)
        return self._pair_distance(np.full(self.n_nodes, center), idx)

    def distance(self, i: int, j: int) -> float:
        if self.metric == "path":
            return float(self.distances_from(i)[j])
        return float(self._pair_distance(np.array([i]), np.array([j]))[0])

    def _graph(self):
        if self._adjacency is None:
            i, j = self.edges[:, 0], self.edges[:, 1]
            self._adjacency = coo_matrix(
                (self.edge_lengths, (i, j)), shape=(self.n_nodes, self.n_nodes)
            ).tocsr()
        return self._adjacency

    def ball(self, center: int, r: float) -> np.ndarray:
        """Open metric ball: ids of nodes with d(center, node) < r."""
        if r < 0:
            raise ValueError("radius must be nonnegative")
        return np.nonzero(self.distances_from(center) < r)[0]

    def closed_ball(self, center: int, r: float) -> np.ndarray:
        """Closed metric ball: ids of nodes with d(center, node) <= r."""
        if r < 0:
            raise ValueError("radius must be nonnegative")
        return np.nonzero(self.distances_from(center) <= r)[0]

    def ball_mass(self, center: int, r: float) -> float:
        return self.mass_of(self.ball(center, r))

    def nearest_node(self, point) -> int:
        """Id of the node nearest to a coordinate point.

        Uses the space's own metric for gauge spaces and the Euclidean
        coordinate distance otherwise.
        """
        point = np.asarray(point, dtype=float)
        if point.shape != (self.coords.shape[1],):
            raise ValueError("point dimension mismatch")
        if self.metric == "koranyi":
            d = koranyi_distance(np.broadcast_to(point, self.coords.shape), self.coords)
        else:
            diff = self.coords - point
            d = np.sqrt((diff * diff).sum(axis=1))
        return int(np.argmin(d))


# ----------------------------------------------------------------------
# Koranyi gauge
# ----------------------------------------------------------------------


def koranyi_norm(xyt) -> np.ndarray:
    """Gauge (|z|^4 + 16 t^2)^(1/4) of points (x, y, t) in the group."""
    xyt = np.asarray(xyt, dtype=float)
    z2 = xyt[..., 0] ** 2 + xyt[..., 1] ** 2
    return (z2 * z2 + 16.0 * xyt[..., 2] ** 2) ** 0.25


def koranyi_distance(a, b) -> np.ndarray:
    """Left-invariant gauge distance ||a^{-1} b|| on the Heisenberg group.

    Group law: (z, t) (z', t') = (z + z', t + t' - Im(z conj(z'))/2) with
    z = x + iy, so a^{-1} b has planar part z' - z and vertical part
    t' - t + (y x' - x y')/2.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    dx = b[..., 0] - a[..., 0]
    dy = b[..., 1] - a[..., 1]
    dt = b[..., 2] - a[..., 2] + 0.5 * (a[..., 1] * b[..., 0] - a[..., 0] * b[..., 1])
    z2 = dx * dx + dy * dy
    return (z2 * z2 + 16.0 * dt * dt) ** 0.25


# ----------------------------------------------------------------------
# generators
# ----------------------------------------------------------------------


def _axis_cell_widths(count: int, step: float) -> np.ndarray:
    """Cell widths along one axis; extreme cells are cut in half so the
    cells tile exactly the declared extent."""
    w = np.full(count, step)
    w[0] *= 0.5
    w[-1] *= 0.5
    return w


def _grid_edges(index_shape):
    """Edges between axis neighbors of a full rectangular index grid."""
    n_axes = len(index_shape)
    ids = np.arange(int(np.prod(index_shape))).reshape(index_shape)
    pairs = []
    for ax in range(n_axes):
        a = np.moveaxis(ids, ax, 0)
        pairs.append(np.stack([a[:-1].ravel(), a[1:].ravel()], axis=1))
    return np.concatenate(pairs, axis=0)


def build_euclidean_grid(n, half_extent, h, alpha=0.0):
    """Uniform grid on [-E, E]^n with node mass |x|^alpha * cell volume.

    Parameters
    ----------
    n : int
        Dimension, 1 <= n <= 4.
    half_extent : float
        E above; nodes sit at integer multiples of h with |x_i| <= E.
    h : float
        Grid step.
    alpha : float
        Radial weight exponent; must satisfy alpha > -n so the weight is
        locally integrable.  The origin cell mass averages the weight over
        the midpoints of its 2^n quadrants instead of evaluating |0|^alpha.

    Returns
    -------
    DiscreteSpace
        Euclidean metric, axis-neighbor edges of length h, boundary cells
        truncated to the declared extent.
    """
    n = int(n)
    if n not in (1, 2, 3, 4):
        raise ValueError("dimension n must be in {1, 2, 3, 4}")
    if h <= 0:
        raise ValueError("grid step h must be positive")
    if half_extent < h:
        raise ValueError("half_extent must be at least one grid step")
    if alpha <= -n:
        raise ValueError(f"alpha must exceed -n = {-n} for an integrable weight")
    m = int(round(half_extent / h))
    axis = h * np.arange(-m, m + 1)
    count = axis.size
    mesh = np.meshgrid(*([axis] * n), indexing="ij")
    coords = np.stack([g.ravel() for g in mesh], axis=1)

    widths = _axis_cell_widths(count, h)
    cell = widths
    for _ in range(n - 1):
        cell = np.multiply.outer(cell, widths)
    cell = cell.ravel()

    radius = np.sqrt((coords * coords).sum(axis=1))
    if alpha == 0.0:
        weight = np.ones_like(radius)
    else:
        weight = np.zeros_like(radius)
        nz = radius > 0
        weight[nz] = radius[nz] ** alpha
        # quadrant-midpoint average for the origin cell: all 2^n midpoints
        # (+-h/4, ..., +-h/4) share the radius sqrt(n) h / 4
        weight[~nz] = (np.sqrt(n) * h / 4.0) ** alpha
    mass = weight * cell

    edges = _grid_edges((count,) * n)
    lengths = np.full(edges.shape[0], h)
    params = SpaceParams(
        doubling_constant=2.0**n,
        doubling_radius=half_extent / 2.0,
        poincare_dilation=1.0,
        resolution=h,
    )
    return DiscreteSpace(coords, mass, edges, lengths, "euclidean", params)


def build_heisenberg_grid(half_extent, h, t_half_extent=None, t_step=None,
                          with_edges=True):
    """Lattice discretization of the first Heisenberg group.

    Nodes sit at (i h, j h, k s) for a vertical step s (default h^2 / 2) on
    [-E, E]^2 x [-T, T] with T defaulting to E^2.  With the default step the
    unit group steps land on lattice nodes, so the edge set consists of

    * horizontal x-steps  (i, j, k) -> (i+1, j, k-j)   of gauge length h,
    * horizontal y-steps  (i, j, k) -> (i, j+1, k+i)   of gauge length h,
    * vertical steps      (i, j, k) -> (i, j, k+1)     of gauge length
      (16 s^2)^(1/4).

    Node mass is the cell volume h * h * s (the Haar measure), truncated at
    the boundary; the metric is the Koranyi gauge distance, under which
    ball volumes scale like r^4.

    Parameters
    ----------
    half_extent : float
        Planar extent E; must exceed h.
    h : float
        Planar grid step.
    t_half_extent : float, optional
        Vertical extent; default E^2.  Gauge balls of radius R only need
        T >= R^2 / 4, so trimming this cuts node count for solver runs.
    t_step : float, optional
        Vertical step; default h^2 / 2 (required for horizontal edges to
        close up).  A coarser value gives a volume-probe grid; horizontal
        edges are only created when the default step is used.
    with_edges : bool
        Set False for measure-only grids (dimension estimation) to skip
        edge construction.
    """
    if h <= 0:
        raise ValueError("grid step h must be positive")
    if h >= half_extent:
        raise ValueError("h must be smaller than half_extent")
    default_step = 0.5 * h * h
    if t_step is None:
        t_step = default_step
    if t_step <= 0:
        raise ValueError("t_step must be positive")
    if t_half_extent is None:
        t_half_extent = half_extent * half_extent
    if t_half_extent < t_step:
        raise ValueError("t_half_extent must be at least one vertical step")

    m = int(round(half_extent / h))
    mk = int(round(t_half_extent / t_step))
    axis = h * np.arange(-m, m + 1)
    taxis = t_step * np.arange(-mk, mk + 1)
    nxy = axis.size
    nt = taxis.size
    ii, jj, kk = np.meshgrid(
        np.arange(-m, m + 1), np.arange(-m, m + 1), np.arange(-mk, mk + 1),
        indexing="ij",
    )
    coords = np.stack(
        [h * ii.ravel(), h * jj.ravel(), t_step * kk.ravel()], axis=1
    )

    wx = _axis_cell_widths(nxy, h)
    wt = _axis_cell_widths(nt, t_step)
    cell = (
        wx[ii.ravel() + m] * wx[jj.ravel() + m] * wt[kk.ravel() + mk]
    )

    def node_id(i, j, k):
        return (i + m) * (nxy * nt) + (j + m) * nt + (k + mk)

    edges = np.zeros((0, 2), dtype=np.int64)
    lengths = np.zeros(0)
    if with_edges:
        i, j, k = ii.ravel(), jj.ravel(), kk.ravel()
        pair_list = []
        len_list = []
        exact = abs(t_step - default_step) <= 1e-15 * max(1.0, default_step)
        if exact:
            # x-step: (i, j, k) -> (i + 1, j, k - j)
            ok = (i + 1 <= m) & (np.abs(k - j) <= mk)
            pair_list.append(
                np.stack([node_id(i[ok], j[ok], k[ok]),
                          node_id(i[ok] + 1, j[ok], k[ok] - j[ok])], axis=1)
            )
            len_list.append(np.full(ok.sum(), h))
            # y-step: (i, j, k) -> (i, j + 1, k + i)
            ok = (j + 1 <= m) & (np.abs(k + i) <= mk)
            pair_list.append(
                np.stack([node_id(i[ok], j[ok], k[ok]),
                          node_id(i[ok], j[ok] + 1, k[ok] + i[ok])], axis=1)
            )
            len_list.append(np.full(ok.sum(), h))
        # vertical step
        ok = k + 1 <= mk
        pair_list.append(
            np.stack([node_id(i[ok], j[ok], k[ok]),
                      node_id(i[ok], j[ok], k[ok] + 1)], axis=1)
        )
        len_list.append(np.full(ok.sum(), (16.0 * t_step * t_step) ** 0.25))
        edges = np.concatenate(pair_list, axis=0)
        lengths = np.concatenate(len_list)

    params = SpaceParams(
        doubling_constant=16.0,
        doubling_radius=half_extent / 2.0,
        poincare_dilation=1.0,
        resolution=h,
    )
    return DiscreteSpace(coords, cell, edges, lengths, "koranyi", params)


def build_double_cone(n, half_extent, h):
    """Grid restricted to the double cone x_1^2 + ... + x_{n-1}^2 <= x_n^2.

    Ambient Euclidean metric, Lebesgue cell masses, axis-neighbor edges
    between nodes that both lie in the cone.  The two cone halves meet only
    at the apex, which connects them through the x_n axis.
    """
    n = int(n)
    if n < 2 or n > 4:
        raise ValueError("double cone requires 2 <= n <= 4")
    if h <= 0:
        raise ValueError("grid step h must be positive")
    if half_extent < h:
        raise ValueError("half_extent must be at least one grid step")
    full = build_euclidean_grid(n, half_extent, h, alpha=0.0)
    c = full.coords
    inside = (c[:, :-1] ** 2).sum(axis=1) <= c[:, -1] ** 2 + 1e-12 * h * h
    keep = np.nonzero(inside)[0]
    remap = -np.ones(full.n_nodes, dtype=np.int64)
    remap[keep] = np.arange(keep.size)
    e = full.edges
    e_ok = inside[e[:, 0]] & inside[e[:, 1]]
    edges = remap[e[e_ok]]
    lengths = full.edge_lengths[e_ok]
    params = SpaceParams(
        doubling_constant=2.0**n,
        doubling_radius=half_extent / 2.0,
        poincare_dilation=1.0,
        resolution=h,
    )
    return DiscreteSpace(c[keep], full.mass[keep], edges, lengths, "euclidean", params)


def build_glued_balls(n, h, segment_length):
    """Two unit-ball grids joined by a segment, with shortest-path metric.

    The balls are centered a distance 2 + segment_length apart along the
    first axis; the segment attaches at the axis boundary point of each
    ball.  Ball nodes carry n-dimensional cell mass h^n, segment nodes the
    one-dimensional cell mass given by the chain spacing (~h).  The grid
    step is snapped to 1/round(1/h) so the attachment points are nodes.

    Returns a space whose metric is the Dijkstra distance over the edge
    graph.  ``space.extras`` records the ids of the two ball centers and
    the mid-segment node.
    """
    n = int(n)
    if n < 2 or n > 4:
        raise ValueError("glued balls require 2 <= n <= 4 (n >= 3 matches the "
                         "continuum construction; n = 2 is allowed for tests)")
    if h <= 0 or h > 0.5:
        raise ValueError("grid step must satisfy 0 < h <= 0.5")
    if segment_length < h:
        raise ValueError("segment_length must be at least one grid step")
    k = int(round(1.0 / h))
    h = 1.0 / k
    L = float(segment_length)

    axis = h * np.arange(-k, k + 1)
    mesh = np.meshgrid(*([axis] * n), indexing="ij")
    cube = np.stack([g.ravel() for g in mesh], axis=1)
    r2 = (cube * cube).sum(axis=1)
    in_ball = r2 <= 1.0 + 1e-12
    ball = cube[in_ball]
    nb = ball.shape[0]

    cube_edges = _grid_edges((axis.size,) * n)
    keep = in_ball[cube_edges[:, 0]] & in_ball[cube_edges[:, 1]]
    remap = -np.ones(cube.shape[0], dtype=np.int64)
    remap[in_ball] = np.arange(nb)
    ball_edges = remap[cube_edges[keep]]

    shift = np.zeros(n)
    shift[0] = 2.0 + L
    coords = [ball, ball + shift]
    edges = [ball_edges, ball_edges + nb]
    lengths = [np.full(ball_edges.shape[0], h)] * 2
    masses = [np.full(nb, h**n)] * 2

    m_seg = int(round(L / h))
    hs = L / m_seg
    seg_x = 1.0 + hs * np.arange(1, m_seg)
    seg = np.zeros((seg_x.size, n))
    seg[:, 0] = seg_x
    coords.append(seg)
    masses.append(np.full(seg_x.size, hs))

    def find(block, point):
        d = np.abs(block - point).sum(axis=1)
        i = int(np.argmin(d))
        if d[i] > 1e-9:
            raise RuntimeError("attachment point missing from grid")
        return i

    attach_a = find(ball, np.eye(n)[0])
    attach_b = nb + find(ball, -np.eye(n)[0])  # local frame of the shifted copy
    seg_ids = 2 * nb + np.arange(seg_x.size)
    chain = np.concatenate([[attach_a], seg_ids, [attach_b]])
    chain_edges = np.stack([chain[:-1], chain[1:]], axis=1)
    edges.append(chain_edges)
    lengths.append(np.full(chain_edges.shape[0], hs))

    params = SpaceParams(
        doubling_constant=2.0**n,
        doubling_radius=0.5,
        poincare_dilation=1.0,
        resolution=h,
    )
    space = DiscreteSpace(
        np.concatenate(coords, axis=0),
        np.concatenate(masses),
        np.concatenate(edges, axis=0),
        np.concatenate(lengths),
        "path",
        params,
    )
    center_a = find(ball, np.zeros(n))
    mid = 2 * nb + (seg_x.size // 2) if seg_x.size else attach_a
    space.extras = {
        "center_a": int(center_a),
        "center_b": int(nb + center_a),
        "attach_a": int(attach_a),
        "attach_b": int(attach_b),
        "mid_segment": int(mid),
    }
    return space


# ----------------------------------------------------------------------
# metric verification
# ----------------------------------------------------------------------


@dataclass
class MetricReport:
    samples: int
    max_symmetry_error: float
    max_triangle_violation: float
    passed: bool
    failures: list = field(default_factory=list)


def verify_metric(space, samples=200, seed=0, pool_size=24, tol=1e-9):
    """Spot-check metric axioms on random node triples.

    Draws a pool of source nodes (so path-metric rows are reused), then
    random triples (a, b, c) from the pool, and checks identity, symmetry
    and the triangle inequality up to ``tol``.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = np.random.default_rng(seed)
    pool = rng.choice(space.n_nodes, size=min(pool_size, space.n_nodes), replace=False)
    rows = {int(i): space.distances_from(int(i)) for i in pool}

    max_sym = 0.0
    max_tri = 0.0
    failures = []
    for i in pool:
        row = rows[int(i)]
        if abs(row[int(i)]) > tol:
            failures.append(("identity", int(i), float(row[int(i)])))
        if np.any(row < -tol):
            failures.append(("negative", int(i), float(row.min())))
    for _ in range(samples):
        a, b, c = (int(x) for x in rng.choice(pool, size=3))
        dab, dba = rows[a][b], rows[b][a]
        max_sym = max(max_sym, abs(dab - dba))
        gap = rows[a][c] - (rows[a][b] + rows[b][c])
        max_tri = max(max_tri, gap)
        if gap > tol:
            failures.append(("triangle", (a, b, c), float(gap)))
    passed = max_sym <= tol and max_tri <= tol and not failures
    return MetricReport(samples, float(max_sym), float(max_tri), passed, failures)


# ----------------------------------------------------------------------
# flat-file export / import
# ----------------------------------------------------------------------


def save_space(space, path):
    """Write a space to a whitespace-separated text file.

    Line 1: node count and edge count.  Then one line per node
    (``id x1 ... xk mass``) and one line per edge (``i j length``), with 17
    significant digits so values round-trip exactly.
    """
    with open(path, "w") as f:
        f.write(f"{space.n_nodes} {space.n_edges}\n")
        for i in range(space.n_nodes):
            xs = " ".join(_FMT % v for v in space.coords[i])
            f.write(f"{i} {xs} {_FMT % space.mass[i]}\n")
        for e in range(space.n_edges):
            i, j = space.edges[e]
            f.write(f"{i} {j} {_FMT % space.edge_lengths[e]}\n")


def load_space(path, metric="path", params=None):
    """Read a space written by :func:`save_space`.

    The file stores no metric kind; by default the loaded space uses the
    shortest-path metric of its edge graph, which is the only metric
    recoverable from the file.  Pass ``metric="euclidean"`` or
    ``"koranyi"`` when the coordinates are known to carry that structure.
    """
    with open(path) as f:
        tokens = f.read().split("\n")
    head = tokens[0].split()
    if len(head) != 2:
        raise ValueError("malformed header line")
    n, m = int(head[0]), int(head[1])
    if len(tokens) < 1 + n + m:
        raise ValueError("file shorter than header declares")
    coords, mass = None, np.zeros(n)
    for line in tokens[1 : 1 + n]:
        parts = line.split()
        i = int(parts[0])
        if coords is None:
            coords = np.zeros((n, len(parts) - 2))
        coords[i] = [float(v) for v in parts[1:-1]]
        mass[i] = float(parts[-1])
    edges = np.zeros((m, 2), dtype=np.int64)
    lengths = np.zeros(m)
    for e, line in enumerate(tokens[1 + n : 1 + n + m]):
        parts = line.split()
        edges[e] = (int(parts[0]), int(parts[1]))
        lengths[e] = float(parts[2])
    if params is None:
        params = SpaceParams()
    return DiscreteSpace(coords, mass, edges, lengths, metric, params)
