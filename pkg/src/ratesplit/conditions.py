"""
Closed-form conditions on the Gaussian channel.

* :func:`pdc` - decoding primary user ``i`` at the secondary receiver does
  not shrink the no-decode region, for one input law.
* :func:`pdcg` - the same for every power split; depends on gains only.
* :func:`no_split_condition_o` / :func:`no_split_condition_r` - sending the
  whole secondary signal as the public part (``lam = 0``) already gives the
  union over all splits.

Every ``*_sides`` helper returns ``(lhs, rhs)`` and the condition holds iff
``lhs <= rhs``; boundary equality counts as satisfied.
"""

__all__ = ['pdc', 'pdcg', 'pdcg_sides', 'pdcg_holds',
           'no_split_condition_o', 'no_split_o_sides',
           'no_split_condition_r', 'no_split_r_sides']

PDC_TOL = 1e-12


def _other(i):
    if i not in (1, 2):
        raise ValueError(f"primary user must be 1 or 2, got {i!r}")
    return 3 - i


def pdc(mi, i=None, tol=PDC_TOL):
    """``I(Yp; Xi | W) <= I(Ys; Xi | U W)`` for the bundle's decoded user.

    Raises
    ------
    ValueError
        If `i` is given and differs from ``mi.decoded_user``.
    """
    if i is not None and i != mi.decoded_user:
        raise ValueError(f"bundle was built for user {mi.decoded_user}, "
                         f"not {i}")
    return mi.yp_xi_given_w <= mi.ys_xi_given_uw + tol


def pdcg_holds(g_ip, g_jp, g_is, g_js, p_j, n0):
    """Vectorized decodability test for user ``i``.

    Compares ``g_ip / (g_jp p_j + n0)`` with ``g_is / (g_js p_j + n0)``
    in cross-multiplied form, so arrays of samples can be passed.
    """
    return g_ip * (g_js * p_j + n0) <= g_is * (g_jp * p_j + n0)


def pdcg_sides(gains, power, i):
    j = _other(i)
    g = gains.to_dict()
    p_j = getattr(power, f'p{j}')
    lhs = g[f'g{i}p'] / (g[f'g{j}p'] * p_j + power.n0)
    rhs = g[f'g{i}s'] / (g[f'g{j}s'] * p_j + power.n0)
    return lhs, rhs


def pdcg(gains, power, i):
    """Whether primary user ``i`` meets the Gaussian decodability condition.
    """
    j = _other(i)
    g = gains.to_dict()
    return bool(pdcg_holds(g[f'g{i}p'], g[f'g{j}p'], g[f'g{i}s'],
                           g[f'g{j}s'], getattr(power, f'p{j}'), power.n0))


def no_split_o_sides(gains, power):
    lhs = gains.gss * power.n0
    rhs = gains.gsp * (gains.g1s * power.p1 + gains.g2s * power.p2
                       + power.n0)
    return lhs, rhs


def no_split_condition_o(gains, power):
    """No-decode scheme: ``lam = 0`` dominates every other split."""
    lhs, rhs = no_split_o_sides(gains, power)
    return bool(lhs <= rhs)


def no_split_r_sides(gains, power, i):
    j = _other(i)
    lhs = gains.gss * power.n0
    rhs = gains.gsp * (getattr(gains, f'g{j}s') * getattr(power, f'p{j}')
                       + power.n0)
    return lhs, rhs


def no_split_condition_r(gains, power, i):
    """Decode-``i`` scheme: ``lam = 0`` dominates every other split."""
    lhs, rhs = no_split_r_sides(gains, power, i)
    return bool(lhs <= rhs)
