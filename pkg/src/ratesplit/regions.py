"""
Achievable rate regions of the rate-splitting secondary link.

Two decoding schemes are covered:

* *no-decode*: the secondary receiver treats both primary signals as noise.
  The four-rate set is :func:`delta_o_rows` and its projection onto
  ``(Rs, Rp) = (S + T, R1 + R2)`` is :func:`region_no_decode`.
* *decode-i*: the secondary receiver also decodes primary user ``i``
  (``mi.decoded_user``). Four-rate set :func:`delta_r_rows`, projection
  :func:`region_decode`.

Here ``S`` is the rate of the private part ``U``, ``T`` the rate of the
public part ``W``, and ``R1``/``R2`` the primary rates.
"""

from dataclasses import astuple, dataclass
import itertools
import math

import numpy as np

from .geometry import GEOM_TOL, RateRegion

__all__ = ['DeltaTuple', 'delta_o_rows', 'delta_o_relaxed_rows',
           'delta_r_rows', 'delta_o_contains', 'delta_r_contains',
           'sigma_star', 'sigma_s_star', 'sigma_p_star',
           'rho_no_decode', 'rho_decode', 'region_no_decode',
           'corners_no_decode', 'region_decode', 'corners_decode',
           'region_no_decode_relaxed', 'corner_witness']

DELTA_TOL = 1e-12


def pos(x):
    """``[x]^+ = max(0, x)``."""
    return max(0.0, x)


@dataclass(frozen=True)
class DeltaTuple:
    """Rates ``(R1, R2, S, T)``; ``Rs = S + T`` and ``Rp = R1 + R2``."""
    r1: float
    r2: float
    s: float
    t: float

    def __post_init__(self):
        for name, v in zip(('r1', 'r2', 's', 't'), astuple(self)):
            if not math.isfinite(v) or v < 0:
                raise ValueError(f"{name} must be finite and >= 0, got {v!r}")

    @property
    def rs(self):
        return self.s + self.t

    @property
    def rp(self):
        return self.r1 + self.r2

    def as_array(self):
        return np.array(astuple(self))


# Rows act on the vector (r1, r2, s, t), r1/r2 being users 1 and 2.

def _user_index(mi):
    # column of the decoded user's rate and of the other user's rate
    return (0, 1) if mi.decoded_user == 1 else (1, 0)


def _row(*columns):
    r = [0, 0, 0, 0]
    for k in columns:
        r[k] = 1
    return r


def delta_o_rows(mi):
    """Inequalities of the no-decode four-rate set as ``(A, b)``."""
    ci, cj = _user_index(mi)
    rows = [
        (_row(ci), mi.yp_xi_given_wxj),
        (_row(cj), mi.yp_xj_given_wxi),
        (_row(3), mi.yp_w_given_x1x2),
        (_row(0, 1), mi.yp_x1x2_given_w),
        (_row(3, ci), mi.yp_wxi_given_xj),
        (_row(3, cj), mi.yp_wxj_given_xi),
        (_row(3, 0, 1), mi.yp_wx1x2),
        (_row(2), mi.ys_u_given_w),
        (_row(3), mi.ys_w_given_u),
        (_row(2, 3), mi.ys_uw),
    ]
    return (np.array([r for r, _ in rows], dtype=float),
            np.array([c for _, c in rows], dtype=float))


def delta_o_relaxed_rows(mi):
    """No-decode inequalities without the bound on ``T`` at the primary
    receiver given both primary signals."""
    A, b = delta_o_rows(mi)
    return np.delete(A, 2, axis=0), np.delete(b, 2)


def delta_r_rows(mi):
    """Inequalities of the decode-``mi.decoded_user`` four-rate set."""
    ci, cj = _user_index(mi)
    rows = [
        (_row(ci), mi.yp_xi_given_wxj),
        (_row(cj), mi.yp_xj_given_wxi),
        (_row(3), mi.yp_w_given_x1x2),
        (_row(0, 1), mi.yp_x1x2_given_w),
        (_row(ci, 3), mi.yp_wxi_given_xj),
        (_row(cj, 3), mi.yp_wxj_given_xi),
        (_row(0, 1, 3), mi.yp_wx1x2),
        (_row(2), mi.ys_u_given_wxi),
        (_row(3), mi.ys_w_given_uxi),
        (_row(ci), mi.ys_xi_given_uw),
        (_row(2, 3), mi.ys_uw_given_xi),
        (_row(ci, 2), mi.ys_uxi_given_w),
        (_row(ci, 3), mi.ys_wxi_given_u),
        (_row(ci, 2, 3), mi.ys_uwxi),
    ]
    return (np.array([r for r, _ in rows], dtype=float),
            np.array([c for _, c in rows], dtype=float))


def _satisfies(rows, t, tol):
    A, b = rows
    return bool(np.all(A @ t.as_array() <= b + tol))


def delta_o_contains(mi, t, tol=DELTA_TOL):
    """Whether ``t`` meets all ten no-decode inequalities."""
    return _satisfies(delta_o_rows(mi), t, tol)


def delta_r_contains(mi, t, tol=DELTA_TOL):
    """Whether ``t`` meets all fourteen decode-``i`` inequalities."""
    return _satisfies(delta_r_rows(mi), t, tol)


def sigma_star(mi):
    """Largest public rate both receivers support when nothing is cancelled.
    """
    return min(mi.yp_w_given_x1x2, mi.ys_w)


def sigma_s_star(mi):
    return min(mi.ys_w_given_xi, mi.yp_w_given_x1x2)


def sigma_p_star(mi):
    return min(mi.yp_xi_given_w, mi.ys_xi_given_uw)


def rho_no_decode(mi):
    """Bounds ``(rho_p, rho_s, rho_sp)`` of the no-decode region."""
    rho_p = mi.yp_x1x2_given_w
    rho_s = mi.ys_u_given_w + sigma_star(mi)
    rho_sp = rho_p + mi.ys_u_given_w + min(mi.ys_w, mi.yp_w)
    return rho_p, rho_s, rho_sp


def region_no_decode(mi):
    rho_p, rho_s, rho_sp = rho_no_decode(mi)
    return RateRegion.from_constraints(
        [(0, 1, rho_p), (1, 0, rho_s), (1, 1, rho_sp)])


def corners_no_decode(mi):
    """Corner points ``A``-``D`` of the no-decode region.

    ``B`` and ``C`` sit on the sum-rate line; ``A`` and ``D`` on the axes.
    """
    rho_p, rho_s, _ = rho_no_decode(mi)
    return {
        'A': (0.0, rho_p),
        'B': (mi.ys_u_given_w + min(mi.yp_w, mi.ys_w), rho_p),
        'C': (rho_s, mi.yp_x1x2_given_w - pos(sigma_star(mi) - mi.yp_w)),
        'D': (rho_s, 0.0),
    }


def region_no_decode_relaxed(mi):
    """No-decode region with the public-rate bound at the primary receiver
    (given both primary signals) removed."""
    rho_p = mi.yp_x1x2_given_w
    rho_s = mi.ys_u_given_w + min(mi.ys_w, mi.yp_wxi_given_xj,
                                  mi.yp_wxj_given_xi)
    rho_sp = rho_p + mi.ys_u_given_w + min(mi.ys_w, mi.yp_w)
    return RateRegion.from_constraints(
        [(0, 1, rho_p), (1, 0, rho_s), (1, 1, rho_sp)])


def _min_public_s2(mi, sp):
    # shared tail of the Rs + 2Rp bound and of corner B
    return min(mi.yp_w_given_xi,
               mi.yp_wxi - sp,
               mi.ys_w + pos(mi.ys_xi_given_w - sp),
               mi.ys_w_given_xi)


def _min_public_2p(mi, ss):
    # shared tail of the 2Rs + Rp bound and of corner E
    return min(mi.ys_xi_given_w,
               mi.ys_wxi - ss,
               mi.yp_xi + pos(mi.yp_w_given_xi - ss),
               mi.yp_xi_given_w)


def rho_decode(mi):
    """Bounds of the decode-``i`` region as a dict keyed by normal ``(a, b)``.
    """
    ss = sigma_s_star(mi)
    sp = sigma_p_star(mi)
    u = mi.ys_u_given_wxi
    xj = mi.yp_xj_given_wxi
    rho_s = u + ss
    rho_p = xj + sp
    rho_sp = u + xj + min(mi.yp_wxi,
                          mi.ys_wxi,
                          mi.yp_w_given_xi + mi.ys_xi_given_w,
                          mi.yp_xi_given_w + mi.ys_w_given_xi)
    rho_2p = (2 * u + 2 * ss + xj - pos(ss - mi.yp_w_given_xi)
              + _min_public_2p(mi, ss))
    rho_s2 = (2 * xj + 2 * sp + u - pos(sp - mi.ys_xi_given_w)
              + _min_public_s2(mi, sp))
    return {(1, 0): rho_s, (0, 1): rho_p, (1, 1): rho_sp,
            (2, 1): rho_2p, (1, 2): rho_s2}


def region_decode(mi):
    rho = rho_decode(mi)
    return RateRegion.from_constraints([(a, b, c) for (a, b), c in
                                        rho.items()])


def corners_decode(mi):
    """Corner points ``A``-``F`` of the decode-``i`` region.

    Walking clockwise from ``A`` on the ``Rp`` axis: ``A``-``B`` bounded by
    ``Rp``, ``B``-``C`` by ``Rs + 2Rp``, ``C``-``D`` by the sum rate,
    ``D``-``E`` by ``2Rs + Rp`` and ``E``-``F`` by ``Rs``. ``D`` is the
    intersection of the ``2Rs + Rp`` and sum-rate lines.
    """
    rho = rho_decode(mi)
    rho_s, rho_p = rho[1, 0], rho[0, 1]
    rho_sp, rho_2p, rho_s2 = rho[1, 1], rho[2, 1], rho[1, 2]
    ss = sigma_s_star(mi)
    sp = sigma_p_star(mi)
    rs_b = (mi.ys_u_given_wxi - pos(sp - mi.ys_xi_given_w)
            + _min_public_s2(mi, sp))
    rp_e = (mi.yp_xj_given_wxi - pos(ss - mi.yp_w_given_xi)
            + _min_public_2p(mi, ss))
    return {
        'A': (0.0, rho_p),
        'B': (rs_b, rho_p),
        'C': (2 * rho_sp - rho_s2, rho_s2 - rho_sp),
        'D': (rho_2p - rho_sp, 2 * rho_sp - rho_2p),
        'E': (rho_s, rp_e),
        'F': (rho_s, 0.0),
    }


def corner_witness(mi, point, scheme, tol=GEOM_TOL):
    """A four-rate tuple projecting onto `point` inside the chosen set.

    Parameters
    ----------
    mi : MiBundle
    point : (float, float)
        Target ``(Rs, Rp)``.
    scheme : {'no_decode', 'decode'}

    Returns
    -------
    DeltaTuple or None
        ``None`` when no tuple within `tol` of the set projects onto
        `point`.

    Notes
    -----
    With ``Rs`` and ``Rp`` fixed only ``(R_i, T)`` are free, so the fibre
    over `point` is a planar polygon; its vertices are enumerated and the
    one with the largest worst-case slack is returned.
    """
    rows = {'no_decode': delta_o_rows, 'decode': delta_r_rows}
    if scheme not in rows:
        raise ValueError(f"unknown scheme {scheme!r}")
    rs, rp = (max(0.0, float(v)) for v in point)
    A, b = rows[scheme](mi)
    ci, cj = _user_index(mi)
    # r_i = x, r_j = rp - x, t = y, s = rs - y
    lin = np.column_stack([A[:, ci] - A[:, cj], A[:, 3] - A[:, 2]])
    rhs = b - A[:, cj] * rp - A[:, 2] * rs
    box = np.array([[-1, 0], [1, 0], [0, -1], [0, 1]], dtype=float)
    lin = np.vstack([lin, box])
    rhs = np.concatenate([rhs, [0.0, rp, 0.0, rs]])

    pairs = np.array(list(itertools.combinations(range(len(lin)), 2)))
    M = lin[pairs]
    keep = np.abs(np.linalg.det(M)) > 0.5  # integer matrices
    pts = np.linalg.solve(M[keep], rhs[pairs[keep]][..., None])[..., 0]
    slack = np.min(rhs[None, :] - pts @ lin.T, axis=1)
    k = int(np.argmax(slack))
    if slack[k] < -tol:
        return None
    x = min(max(pts[k, 0], 0.0), rp)
    y = min(max(pts[k, 1], 0.0), rs)
    ri, rj = x, rp - x
    r1, r2 = (ri, rj) if mi.decoded_user == 1 else (rj, ri)
    return DeltaTuple(r1=r1, r2=max(r2, 0.0), s=max(rs - y, 0.0), t=y)
