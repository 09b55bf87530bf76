import numpy as np
import pytest

from ratesplit import PRESETS, mi_bundle_gaussian
from ratesplit.geometry import max_rp
from ratesplit.regions import region_no_decode
from ratesplit.sweep import default_lambdas, rs_grid_for, sweep_envelopes

from strategies import PRESET_POWER


def test_default_lambdas():
    lam = default_lambdas()
    assert len(lam) == 101 and lam[0] == 0.0 and lam[-1] == 1.0
    with pytest.raises(ValueError):
        default_lambdas(1)


def test_nested_sweep_equals_zero_split():
    env = sweep_envelopes(PRESETS['no-split-o'], PRESET_POWER)
    r0 = region_no_decode(mi_bundle_gaussian(PRESETS['no-split-o'],
                                             PRESET_POWER, 0.0))
    assert np.allclose(env['o'].rp_max, max_rp(r0, env['o'].rs_grid),
                       atol=1e-12)


def test_crossing_sweep_beats_each_split():
    g = PRESETS['split-o']
    lambdas = default_lambdas(11)
    env = sweep_envelopes(g, PRESET_POWER, lambdas)
    grid = env['o'].rs_grid
    for lam in lambdas:
        single = max_rp(region_no_decode(mi_bundle_gaussian(g, PRESET_POWER,
                                                            lam)), grid)
        assert np.any(env['o'].rp_max > single + 1e-9)


def test_two_point_sweep_is_pointwise_max():
    g = PRESETS['split-o']
    env = sweep_envelopes(g, PRESET_POWER, [0.0, 1.0])
    grid = env['o'].rs_grid
    a, b = (max_rp(region_no_decode(mi_bundle_gaussian(g, PRESET_POWER, x)),
                   grid) for x in (0.0, 1.0))
    assert np.array_equal(env['o'].rp_max, np.maximum(a, b))


def test_union_and_hull():
    env = sweep_envelopes(PRESETS['pdcg-user1'], PRESET_POWER,
                          default_lambdas(11), n_grid=128)
    for k in ('o', 'r1', 'r2'):
        assert env['union'].dominates(env[k], tol=0.0)
    hull = sweep_envelopes(PRESETS['pdcg-user1'], PRESET_POWER,
                           default_lambdas(11), n_grid=128, hull=True)
    for k in env:
        assert hull[k].dominates(env[k], tol=0.0)


def test_grid_degenerate():
    assert rs_grid_for([]).tolist() == [0.0]
