import math

import numpy as np
import pytest
from hypothesis import given, settings

from ratesplit import ChannelGains, PowerConfig, PRESETS, mi_bundle_gaussian
from ratesplit.gaussian import check_split, gaussian_mi, tau
from ratesplit.mi import MI_TERMS, MiBundle, chain_rule_residuals, \
    resolve_term

from strategies import PRESET_POWER, bundles, gains_st, powers_st, split, \
    random_setups


def _variance_oracle(gains, power, lam, receiver, measured, conditioned):
    # I(Y;S|C) = h(Y|C) - h(Y|S,C) for jointly Gaussian, independent parts
    g = gains.to_dict()
    pw = {'x1': g[f'g1{receiver}'] * power.p1,
          'x2': g[f'g2{receiver}'] * power.p2,
          'u': g[f'gs{receiver}'] * lam * power.ps,
          'w': g[f'gs{receiver}'] * (1 - lam) * power.ps}
    var_c = power.n0 + sum(v for k, v in pw.items() if k not in conditioned)
    var_sc = power.n0 + sum(v for k, v in pw.items()
                            if k not in conditioned and k not in measured)
    return 0.5 * math.log2(var_c / var_sc)


def test_tau_values():
    assert tau(0) == 0.0
    assert tau(1) == 0.5
    assert tau(3) == 1.0


@pytest.mark.parametrize('bad', [-1e-3, math.inf, math.nan])
def test_tau_domain(bad):
    with pytest.raises(ValueError):
        tau(bad)


def test_public_part_empty_at_full_private_split():
    ones = ChannelGains(*[1.0] * 6)
    mi = mi_bundle_gaussian(ones, PowerConfig(1, 1, 1, 1), 1.0)
    assert mi.yp_w_given_x1x2 == 0.0


def test_private_part_empty_at_zero_split():
    ones = ChannelGains(*[1.0] * 6)
    mi = mi_bundle_gaussian(ones, PowerConfig(1, 1, 1, 1), 0.0)
    assert mi.ys_u_given_w == 0.0


def test_no_split_gains_primary_sum_rate():
    # both primary signals over noise only: (2.5664 + 3.7653) * 10 = 63.317
    mi = mi_bundle_gaussian(PRESETS['no-split-o'], PRESET_POWER, 0.0)
    assert mi.yp_x1x2_given_w == pytest.approx(0.5 * math.log2(64.317),
                                               abs=1e-12)
    assert mi.yp_x1x2_given_w == pytest.approx(3.004, abs=5e-4)


def test_listed_closed_forms():
    g, p, lam = random_setups(1, 11)[0]
    mi = mi_bundle_gaussian(g, p, lam, 1)
    lb = 1 - lam
    n0 = p.n0
    assert mi.yp_w_given_x1x2 == pytest.approx(
        tau(g.gsp * lb * p.ps / (g.gsp * lam * p.ps + n0)), abs=1e-12)
    assert mi.ys_xi_given_uw == pytest.approx(
        tau(g.g1s * p.p1 / (g.g2s * p.p2 + n0)), abs=1e-12)
    assert mi.ys_u_given_wxi == pytest.approx(
        tau(g.gss * lam * p.ps / (g.g2s * p.p2 + n0)), abs=1e-12)
    assert mi.ys_w_given_u == pytest.approx(
        tau(g.gss * lb * p.ps / (g.g1s * p.p1 + g.g2s * p.p2 + n0)),
        abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(gains_st, powers_st, split)
def test_every_field_matches_variance_oracle(gains, power, lam):
    for i in (1, 2):
        mi = mi_bundle_gaussian(gains, power, lam, i)
        for name in MI_TERMS:
            rx, meas, cond = resolve_term(name, i)
            want = _variance_oracle(gains, power, lam, rx, meas, cond)
            assert getattr(mi, name) == pytest.approx(want, abs=1e-12)


def test_chain_rules_on_random_draws():
    for g, p, lam in random_setups(1000, 2):
        for i in (1, 2):
            res = chain_rule_residuals(mi_bundle_gaussian(g, p, lam, i))
            assert max(res.values()) <= 1e-9


@settings(max_examples=100, deadline=None)
@given(gains_st, powers_st, split)
def test_swap_user_relabels_fields(gains, power, lam):
    a = mi_bundle_gaussian(gains, power, lam, 2)
    b = mi_bundle_gaussian(gains.swap_users(), power.swap_users(), lam, 1)
    for name in MI_TERMS:
        assert getattr(a, name) == pytest.approx(getattr(b, name),
                                                 abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(gains_st, powers_st)
def test_decodability_term_free_of_split(gains, power):
    vals = [mi_bundle_gaussian(gains, power, lam, 1).ys_xi_given_uw
            for lam in np.linspace(0, 1, 11)]
    assert max(vals) - min(vals) <= 1e-12


@settings(max_examples=100, deadline=None)
@given(gains_st, powers_st)
def test_private_rate_grows_with_split(gains, power):
    vals = [mi_bundle_gaussian(gains, power, lam, 1).ys_u_given_wxi
            for lam in np.linspace(0, 1, 11)]
    assert np.all(np.diff(vals) >= -1e-12)
    assert vals[-1] == pytest.approx(max(vals), abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(bundles())
def test_fields_nonnegative(mi):
    assert all(v >= 0 for k, v in mi.to_dict().items() if k != 'decoded_user')


@pytest.mark.parametrize('lam', [-0.01, 1.01, math.nan])
def test_split_range(lam):
    with pytest.raises(ValueError):
        check_split(lam)


@pytest.mark.parametrize('kwargs', [
    dict(p1=-1, p2=1, ps=1), dict(p1=1, p2=1, ps=1, n0=0),
    dict(p1=1, p2=math.inf, ps=1)])
def test_power_validation(kwargs):
    with pytest.raises(ValueError):
        PowerConfig(**kwargs)


def test_gain_validation():
    with pytest.raises(ValueError):
        ChannelGains(1, 1, 1, 1, 1, -0.5)


def test_gaussian_mi_rejects_overlap():
    with pytest.raises(ValueError):
        gaussian_mi({'x1': 1.0, 'x2': 1.0, 'u': 0.0, 'w': 0.0}, 1.0,
                    ('x1',), ('x1',))


def test_bundle_roundtrip_and_validation():
    mi = mi_bundle_gaussian(PRESETS['split-o'], PRESET_POWER, 0.4, 2)
    assert MiBundle.from_dict(mi.to_dict()) == mi
    with pytest.raises(ValueError):
        mi.replace(ys_w=-1.0)
    with pytest.raises(ValueError):
        MiBundle.from_dict({**mi.to_dict(), 'not_a_field': 1.0})
    with pytest.raises(ValueError):
        MiBundle.zeros(decoded_user=3)
