"""
Down-closed polygons in the ``(Rs, Rp)`` quadrant.

A region is described by half-planes ``a*Rs + b*Rp <= c`` with
``a, b >= 0`` intersected with ``Rs >= 0, Rp >= 0``. Because every such
region is down-closed, a union of regions is fully described by its upper
boundary ``Rp(Rs)``, which is what :class:`Envelope` samples.
"""

from dataclasses import dataclass
import itertools
import math

import numpy as np

__all__ = ['GEOM_TOL', 'RateRegion', 'Envelope', 'polygon_from_constraints',
           'support', 'contains_region', 'max_rp', 'union_envelope',
           'upper_hull']

GEOM_TOL = 1e-9


def _normalize(constraints):
    out = []
    for con in constraints:
        try:
            a, b, c = (float(v) for v in con)
        except (TypeError, ValueError):
            raise ValueError(f"constraint must be (a, b, c), got {con!r}")
        if not all(math.isfinite(v) for v in (a, b, c)):
            raise ValueError(f"non-finite constraint {con!r}")
        if a < 0 or b < 0 or (a == 0 and b == 0):
            raise ValueError(f"constraint normal must be >= 0 and nonzero, "
                             f"got {con!r}")
        out.append((a, b, c))
    return tuple(out)


def _feasible(point, constraints, tol):
    x, y = point
    return (x >= -tol and y >= -tol
            and all(a * x + b * y <= c + tol for a, b, c in constraints))


def polygon_from_constraints(constraints, tol=GEOM_TOL):
    """Vertices of the constraint polygon, counterclockwise from the origin.

    Duplicate vertices and vertices lying on a straight edge (both within
    `tol`) are dropped. The result is empty only when some ``c < 0``.

    Raises
    ------
    ValueError
        On a malformed constraint (negative or zero normal, non-finite
        entries), or if no constraint bounds ``Rs`` or none bounds ``Rp``.
    """
    cons = _normalize(constraints)
    if not any(a > 0 for a, _, _ in cons) or not any(b > 0 for _, b, _ in cons):
        raise ValueError("constraints leave the region unbounded")
    if any(c < 0 for _, _, c in cons):
        return []
    lines = list(cons) + [(-1.0, 0.0, 0.0), (0.0, -1.0, 0.0)]
    candidates = []
    for (a1, b1, c1), (a2, b2, c2) in itertools.combinations(lines, 2):
        det = a1 * b2 - a2 * b1
        if det == 0.0:
            continue
        x = (c1 * b2 - c2 * b1) / det
        y = (a1 * c2 - a2 * c1) / det
        if _feasible((x, y), cons, tol):
            candidates.append((max(x, 0.0) + 0.0, max(y, 0.0) + 0.0))

    unique = []
    for p in candidates:
        if not any(abs(p[0] - q[0]) <= tol and abs(p[1] - q[1]) <= tol
                   for q in unique):
            unique.append(p)

    # The origin is always feasible here, so it heads the ring; the rest is
    # convex and is ordered by angle about the centroid.
    cx = sum(p[0] for p in unique) / len(unique)
    cy = sum(p[1] for p in unique) / len(unique)
    ring = sorted(unique, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
    start = min(range(len(ring)), key=lambda k: ring[k][0] + ring[k][1])
    ring = ring[start:] + ring[:start]
    ring[0] = (0.0, 0.0)
    return _drop_collinear(ring, tol)


def _drop_collinear(ring, tol):
    if len(ring) < 3:
        return ring
    changed = True
    while changed and len(ring) >= 3:
        changed = False
        n = len(ring)
        for k in range(n):
            p, q, r = ring[k - 1], ring[k], ring[(k + 1) % n]
            cross = ((q[0] - p[0]) * (r[1] - p[1])
                     - (q[1] - p[1]) * (r[0] - p[0]))
            # distance of q from the chord p -> r
            if abs(cross) <= tol * math.hypot(r[0] - p[0], r[1] - p[1]):
                del ring[k]
                changed = True
                break
    return ring


@dataclass(frozen=True)
class RateRegion:
    """Half-plane description plus its vertex polygon.

    Use :meth:`from_constraints` rather than the constructor so that the
    vertices always match the constraints.
    """
    constraints: tuple
    vertices: tuple

    @classmethod
    def from_constraints(cls, constraints):
        cons = _normalize(constraints)
        verts = polygon_from_constraints(cons)
        return cls(constraints=cons, vertices=tuple(verts))

    @property
    def is_empty(self):
        return not self.vertices

    def bound(self, a, b):
        """Right-hand side of the first constraint with normal ``(a, b)``."""
        for ca, cb, c in self.constraints:
            if ca == a and cb == b:
                return c
        raise KeyError((a, b))

    def contains_point(self, rs, rp, tol=GEOM_TOL):
        return _feasible((rs, rp), self.constraints, tol)

    def area(self):
        v = self.vertices
        if len(v) < 3:
            return 0.0
        return 0.5 * abs(sum(v[k - 1][0] * v[k][1] - v[k][0] * v[k - 1][1]
                             for k in range(len(v))))


def support(region, direction):
    """Maximum of ``a*Rs + b*Rp`` over the region for ``direction=(a, b)``."""
    if region.is_empty:
        raise ValueError("support of an empty region is undefined")
    a, b = direction
    return max(a * x + b * y for x, y in region.vertices)


def contains_region(inner, outer, tol=GEOM_TOL):
    """True iff every vertex of `inner` satisfies every constraint of `outer`.
    """
    return all(_feasible(v, outer.constraints, tol) for v in inner.vertices)


def max_rp(region, rs):
    """Largest feasible ``Rp`` at each ``Rs`` in `rs`; 0 where infeasible."""
    rs = np.asarray(rs, dtype=float)
    top = np.full(rs.shape, np.inf)
    feasible = np.ones(rs.shape, dtype=bool)
    for a, b, c in region.constraints:
        if b > 0:
            top = np.minimum(top, (c - a * rs) / b)
        else:
            feasible &= a * rs <= c + GEOM_TOL
    feasible &= top >= -GEOM_TOL
    return np.where(feasible, np.clip(top, 0.0, None), 0.0)


@dataclass(frozen=True)
class Envelope:
    """Sampled upper boundary of a union of down-closed regions."""
    rs_grid: np.ndarray
    rp_max: np.ndarray

    def __post_init__(self):
        rs = np.asarray(self.rs_grid, dtype=float)
        rp = np.asarray(self.rp_max, dtype=float)
        if rs.shape != rp.shape or rs.ndim != 1:
            raise ValueError("rs_grid and rp_max must be 1-D, same length")
        if np.any(np.diff(rs) <= 0):
            raise ValueError("rs_grid must be strictly increasing")
        object.__setattr__(self, 'rs_grid', rs)
        object.__setattr__(self, 'rp_max', rp)

    def hull(self):
        """Concave majorant of the sampled boundary (time sharing)."""
        return Envelope(self.rs_grid, upper_hull(self.rs_grid, self.rp_max))

    def dominates(self, other, tol=GEOM_TOL):
        """Pointwise ``self >= other - tol`` on a shared grid."""
        if not np.array_equal(self.rs_grid, other.rs_grid):
            raise ValueError("envelopes are sampled on different grids")
        return bool(np.all(self.rp_max >= other.rp_max - tol))


def union_envelope(regions, rs_grid):
    """Upper boundary of the union of `regions` sampled at `rs_grid`."""
    regions = list(regions)
    if not regions:
        raise ValueError("union_envelope needs at least one region")
    rs = np.asarray(rs_grid, dtype=float)
    rp = np.zeros(rs.shape)
    for region in regions:
        rp = np.maximum(rp, max_rp(region, rs))
    return Envelope(rs, rp)


def upper_hull(x, y):
    """Values of the least concave majorant of ``(x, y)`` at `x`."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    hull = []
    for k in range(len(x)):
        while len(hull) >= 2:
            i, j = hull[-2], hull[-1]
            # drop j if it lies on or below the chord i -> k
            if ((x[j] - x[i]) * (y[k] - y[i])
                    - (y[j] - y[i]) * (x[k] - x[i])) >= 0:
                hull.pop()
            else:
                break
        hull.append(k)
    return np.interp(x, x[hull], y[hull])
