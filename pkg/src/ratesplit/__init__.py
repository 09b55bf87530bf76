"""Achievable rate regions for a rate-splitting cognitive secondary link
sharing the band of a two-user primary multiple-access channel."""

from .conditions import (no_split_condition_o, no_split_condition_r, pdc,
                         pdcg)
from .discrete import Dmc, InputDistribution, mi_bundle_discrete
from .gaussian import PRESETS, ChannelGains, PowerConfig, mi_bundle_gaussian
from .geometry import (Envelope, RateRegion, contains_region,
                       polygon_from_constraints, support, union_envelope)
from .mi import MiBundle
from .montecarlo import FadingModel, McConfig, McEstimate, pdcg_probability
from .oracle import project_delta
from .regions import (DeltaTuple, corners_decode, corners_no_decode,
                      region_decode, region_no_decode,
                      region_no_decode_relaxed)

__version__ = '0.1.0'

__all__ = ['MiBundle', 'ChannelGains', 'PowerConfig', 'PRESETS',
           'mi_bundle_gaussian', 'Dmc', 'InputDistribution',
           'mi_bundle_discrete', 'RateRegion', 'Envelope',
           'polygon_from_constraints', 'support', 'contains_region',
           'union_envelope', 'DeltaTuple', 'region_no_decode',
           'region_decode', 'region_no_decode_relaxed', 'corners_no_decode',
           'corners_decode', 'pdc', 'pdcg', 'no_split_condition_o',
           'no_split_condition_r', 'project_delta', 'FadingModel',
           'McConfig', 'McEstimate', 'pdcg_probability']
