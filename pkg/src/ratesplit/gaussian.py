"""
Gaussian system model and its mutual-information bundle.

The two receivers see

    y_p = sqrt(g1p) x1 + sqrt(g2p) x2 + sqrt(gsp) xs + n_p
    y_s = sqrt(g1s) x1 + sqrt(g2s) x2 + sqrt(gss) xs + n_s

with independent Gaussian inputs of powers ``p1``, ``p2`` and ``ps`` and
noise variance ``n0``. The secondary signal is ``xs = U + W`` where the
private part ``U`` carries ``lam * ps`` and the public part ``W`` carries
``(1 - lam) * ps``.
"""

from dataclasses import asdict, dataclass
import math
import numbers

from .mi import MI_TERMS, MiBundle, resolve_term

__all__ = ['ChannelGains', 'PowerConfig', 'tau', 'check_split',
           'received_powers', 'gaussian_mi', 'mi_bundle_gaussian',
           'PRESETS']


def _check_nonneg(name, value, strict=False):
    if not isinstance(value, numbers.Real) or not math.isfinite(value):
        raise ValueError(f"{name} must be a finite number, got {value!r}")
    if value < 0 or (strict and value == 0):
        bound = "> 0" if strict else ">= 0"
        raise ValueError(f"{name} must be {bound}, got {value!r}")


@dataclass(frozen=True)
class ChannelGains:
    """Power gains into the primary (``*p``) and secondary (``*s``) receiver.
    """
    g1p: float
    g2p: float
    gsp: float
    g1s: float
    g2s: float
    gss: float

    def __post_init__(self):
        for name, value in asdict(self).items():
            _check_nonneg(name, value)

    def swap_users(self):
        """Relabel primary users 1 and 2."""
        return ChannelGains(g1p=self.g2p, g2p=self.g1p, gsp=self.gsp,
                            g1s=self.g2s, g2s=self.g1s, gss=self.gss)

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class PowerConfig:
    """Transmit powers and noise variance, linear units."""
    p1: float
    p2: float
    ps: float
    n0: float = 1.0

    def __post_init__(self):
        for name in ('p1', 'p2', 'ps'):
            _check_nonneg(name, getattr(self, name))
        _check_nonneg('n0', self.n0, strict=True)

    def swap_users(self):
        return PowerConfig(p1=self.p2, p2=self.p1, ps=self.ps, n0=self.n0)

    def to_dict(self):
        return asdict(self)


def tau(x):
    """Gaussian rate ``0.5 * log2(1 + x)`` for a nonnegative SNR `x`."""
    if not math.isfinite(x) or x < 0:
        raise ValueError(f"tau is defined for finite x >= 0, got {x!r}")
    return 0.5 * math.log2(1.0 + x)


def check_split(lam):
    """Validate the private-power fraction and return it as a float."""
    if not isinstance(lam, numbers.Real) or not 0.0 <= lam <= 1.0:
        raise ValueError(f"lambda must lie in [0, 1], got {lam!r}")
    return float(lam)


def received_powers(gains, power, lam):
    """Per-component received powers at each receiver.

    Returns
    -------
    dict
        ``{'p': {...}, 's': {...}}`` mapping ``'x1'``, ``'x2'``, ``'u'``,
        ``'w'`` to received power.
    """
    lam = check_split(lam)
    private = lam * power.ps
    public = (1.0 - lam) * power.ps
    return {
        'p': {'x1': gains.g1p * power.p1, 'x2': gains.g2p * power.p2,
              'u': gains.gsp * private, 'w': gains.gsp * public},
        's': {'x1': gains.g1s * power.p1, 'x2': gains.g2s * power.p2,
              'u': gains.gss * private, 'w': gains.gss * public},
    }


def gaussian_mi(rx_powers, n0, measured, conditioned=()):
    """``I(Y; S | C)`` for independent Gaussian components.

    The measured powers form the signal; every component outside
    ``S`` and ``C`` is treated as noise together with `n0`.
    """
    overlap = set(measured) & set(conditioned)
    if overlap:
        raise ValueError(f"measured and conditioned sets overlap: {overlap}")
    signal = sum(rx_powers[k] for k in measured)
    interference = sum(p for k, p in rx_powers.items()
                       if k not in measured and k not in conditioned)
    return tau(signal / (interference + n0))


def mi_bundle_gaussian(gains, power, lam, decoded_user=1):
    """Evaluate every :class:`~ratesplit.mi.MiBundle` field in closed form.

    Parameters
    ----------
    gains : ChannelGains
    power : PowerConfig
    lam : float
        Fraction of the secondary power put on the private part, in [0, 1].
    decoded_user : {1, 2}
        Primary user whose signal the secondary receiver decodes.

    Returns
    -------
    MiBundle
    """
    rx = received_powers(gains, power, lam)
    values = {}
    for name in MI_TERMS:
        receiver, measured, conditioned = resolve_term(name, decoded_user)
        values[name] = gaussian_mi(rx[receiver], power.n0, measured,
                                   conditioned)
    return MiBundle(**values, decoded_user=decoded_user)


# Gain sets exhibiting each regime of interest, all used with
# p1 = p2 = ps = 10 and n0 = 1.
PRESETS = {
    # primary receiver can absorb the whole secondary signal: no split needed
    'no-split-o': ChannelGains(g1p=2.5664, g2p=3.7653, gsp=2.3620,
                               g1s=0.1812, g2s=0.1784, gss=8.6065),
    # regions for different splits cross
    'split-o': ChannelGains(g1p=1.5066, g2p=0.8290, gsp=1.1953,
                            g1s=0.1902, g2s=0.0122, gss=10.3229),
    # decoding user 1, no split needed
    'no-split-r1': ChannelGains(g1p=5.5303, g2p=4.2865, gsp=3.9334,
                                g1s=0.6542, g2s=0.8121, gss=8.1575),
    # decoding user 1, split matters
    'split-r1': ChannelGains(g1p=9.566, g2p=14.5045, gsp=0.7032,
                             g1s=0.0808, g2s=0.2894, gss=16.6226),
    # user 1 meets the Gaussian decodability condition, user 2 does not
    'pdcg-user1': ChannelGains(g1p=0.3413, g2p=10.2047, gsp=0.2495,
                               g1s=0.2821, g2s=0.3782, gss=6.3337),
}
