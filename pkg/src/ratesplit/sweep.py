"""Unions of regions over a sweep of the power split."""

import numpy as np

from .gaussian import mi_bundle_gaussian
from .geometry import Envelope, union_envelope
from .regions import region_decode, region_no_decode

__all__ = ['SCHEMES', 'default_lambdas', 'regions_at', 'sweep_regions',
           'rs_grid_for', 'sweep_envelopes']

N_LAMBDA = 101
N_GRID = 512
SCHEMES = ('o', 'r1', 'r2')


def default_lambdas(n=N_LAMBDA):
    if n < 2:
        raise ValueError(f"a sweep needs at least 2 split values, got {n}")
    return np.linspace(0.0, 1.0, n)


def regions_at(gains, power, lam):
    """The three scheme regions at one split, keyed ``'o'``, ``'r1'``, ``'r2'``.
    """
    mi1 = mi_bundle_gaussian(gains, power, lam, decoded_user=1)
    mi2 = mi_bundle_gaussian(gains, power, lam, decoded_user=2)
    return {'o': region_no_decode(mi1), 'r1': region_decode(mi1),
            'r2': region_decode(mi2)}


def sweep_regions(gains, power, lambdas):
    out = {s: [] for s in SCHEMES}
    for lam in lambdas:
        for scheme, region in regions_at(gains, power, float(lam)).items():
            out[scheme].append(region)
    return out


def rs_grid_for(regions, n=N_GRID):
    """Uniform grid from 0 to the largest ``Rs`` reached by any region."""
    rs_max = max((v[0] for r in regions for v in r.vertices), default=0.0)
    if rs_max <= 0:
        return np.zeros(1)
    return np.linspace(0.0, rs_max, n)


def sweep_envelopes(gains, power, lambdas=None, n_grid=N_GRID, hull=False):
    """Envelopes of each scheme and of their union on a common grid.

    Returns
    -------
    dict
        Keys ``'o'``, ``'r1'``, ``'r2'`` and ``'union'``, each an
        :class:`~ratesplit.geometry.Envelope`. With ``hull=True`` every
        envelope is replaced by its concave majorant.
    """
    lambdas = default_lambdas() if lambdas is None else np.asarray(lambdas)
    if len(lambdas) < 2:
        raise ValueError("a sweep needs at least 2 split values")
    regions = sweep_regions(gains, power, lambdas)
    grid = rs_grid_for([r for rs in regions.values() for r in rs], n_grid)
    env = {s: union_envelope(regions[s], grid) for s in SCHEMES}
    env['union'] = Envelope(grid, np.max([env[s].rp_max for s in SCHEMES],
                                         axis=0))
    if hull:
        env = {k: e.hull() for k, e in env.items()}
    return env
