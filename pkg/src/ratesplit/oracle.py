"""
Independent check of the closed-form regions by linear programming.

The four-rate sets are small polytopes in ``(r1, r2, s, t) >= 0`` with at
most fourteen rows, so their vertices are found exhaustively: every choice
of four hyperplanes (rows plus coordinate planes) is solved and the
feasible solutions are kept. The support of the projected region in
direction ``(a, b)`` is then the maximum of ``a*(s + t) + b*(r1 + r2)``
over those vertices. No pivoting, no cycling, no tolerance on optimality.
"""

from dataclasses import dataclass
import itertools

import numpy as np

from .regions import delta_o_relaxed_rows, delta_o_rows, delta_r_rows

__all__ = ['ModelError', 'LinearProgram', 'delta_program', 'project_delta',
           'quadrant_directions']

FEAS_TOL = 1e-9
N_VARS = 4


class ModelError(RuntimeError):
    """The four-rate program is unbounded (a rate appears in no row)."""


@dataclass(frozen=True)
class LinearProgram:
    """Polytope ``{x >= 0 : A x <= b}`` over ``x = (r1, r2, s, t)``."""
    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.A, dtype=float)
        b = np.asarray(self.b, dtype=float)
        if A.ndim != 2 or A.shape[1] != N_VARS or b.shape != A.shape[:1]:
            raise ValueError("A must be (m, 4) and b of length m")
        if np.any(A < 0):
            raise ValueError("rows must have nonnegative coefficients")
        unbounded = np.flatnonzero(~np.any(A > 0, axis=0))
        if unbounded.size:
            raise ModelError(f"variables {unbounded.tolist()} are unbounded")
        object.__setattr__(self, 'A', A)
        object.__setattr__(self, 'b', b)

    def vertices(self, tol=FEAS_TOL):
        """All vertices, as rows of an ``(n, 4)`` array (possibly repeated).
        """
        A_full = np.vstack([self.A, -np.eye(N_VARS)])
        b_full = np.concatenate([self.b, np.zeros(N_VARS)])
        combos = np.array(list(itertools.combinations(range(len(A_full)),
                                                      N_VARS)))
        M = A_full[combos]
        # 0/1 matrices have integer determinants
        keep = np.abs(np.linalg.det(M)) > 0.5
        M, rhs = M[keep], b_full[combos[keep]]
        x = np.linalg.solve(M, rhs[..., None])[..., 0]
        feasible = np.all(x @ A_full.T <= b_full + tol, axis=1)
        return np.clip(x[feasible], 0.0, None)

    def maximize(self, objective, tol=FEAS_TOL):
        verts = self.vertices(tol)
        return float(np.max(verts @ np.asarray(objective, dtype=float)))


def delta_program(mi, mode):
    """Four-rate program for ``mode`` in ``'no_decode'``, ``'decode'`` or
    ``'no_decode_relaxed'``; ``'decode'`` uses ``mi.decoded_user``."""
    rows = {'no_decode': delta_o_rows, 'decode': delta_r_rows,
            'no_decode_relaxed': delta_o_relaxed_rows}
    if mode not in rows:
        raise ValueError(f"unknown mode {mode!r}")
    return LinearProgram(*rows[mode](mi))


def quadrant_directions(n=64):
    """`n` unit directions spread evenly over the closed first quadrant."""
    theta = np.linspace(0.0, np.pi / 2, n)
    return [(float(np.cos(t)), float(np.sin(t))) for t in theta]


def project_delta(mi, mode, directions):
    """Support of the projected four-rate set for each direction.

    Parameters
    ----------
    mi : MiBundle
    mode : {'no_decode', 'decode', 'no_decode_relaxed'}
    directions : sequence of (a, b)
        Each with ``a, b >= 0`` and not both zero; the objective is
        ``a*(s + t) + b*(r1 + r2)``.

    Returns
    -------
    list of float
    """
    directions = list(directions)
    if not directions:
        raise ValueError("need at least one direction")
    for a, b in directions:
        if a < 0 or b < 0 or (a == 0 and b == 0):
            raise ValueError(f"invalid direction {(a, b)!r}")
    verts = delta_program(mi, mode).vertices()
    rs = verts[:, 2] + verts[:, 3]
    rp = verts[:, 0] + verts[:, 1]
    return [float(np.max(a * rs + b * rp)) for a, b in directions]
