"""Shared hypothesis strategies and random-instance helpers."""

import numpy as np
from hypothesis import strategies as st

from ratesplit import ChannelGains, PowerConfig, mi_bundle_gaussian

GAIN_NAMES = ('g1p', 'g2p', 'gsp', 'g1s', 'g2s', 'gss')

gain = st.floats(min_value=0.0, max_value=20.0, allow_nan=False)
power = st.floats(min_value=0.0, max_value=100.0, allow_nan=False)
split = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)

gains_st = st.builds(ChannelGains, *[gain] * 6)
powers_st = st.builds(PowerConfig, power, power, power,
                      st.floats(min_value=0.1, max_value=10.0))
user_st = st.sampled_from([1, 2])


@st.composite
def bundles(draw):
    return mi_bundle_gaussian(draw(gains_st), draw(powers_st), draw(split),
                              draw(user_st))


def random_setup(rng):
    """Exponential gains, log-uniform powers on [0.1, 100], uniform split.
    """
    g = ChannelGains(*map(float, rng.exponential(1.0, 6)))
    p = PowerConfig(*map(float, 10.0 ** rng.uniform(-1, 2, 3)), n0=1.0)
    return g, p, float(rng.uniform())


def random_setups(n, seed):
    rng = np.random.default_rng(seed)
    return [random_setup(rng) for _ in range(n)]


PRESET_POWER = PowerConfig(10.0, 10.0, 10.0, 1.0)
