"""
Named mutual-information quantities shared by every region and condition.

Each field of :class:`MiBundle` is a conditional mutual information
``I(Y; S | C Q)`` in bits per channel use, measured at one of the two
receivers. Field names encode the receiver (``yp``/``ys``), the measured
set and the conditioning set, with ``xi`` the primary user whose signal is
decoded at the secondary receiver and ``xj`` the other one.

:data:`MI_TERMS` is the single table from field name to
``(receiver, measured, conditioned)``. Both the Gaussian evaluator and the
brute-force discrete evaluator are driven by it.
"""

from dataclasses import asdict, dataclass, fields
import math

__all__ = ['MI_TERMS', 'CHAIN_RULES', 'MiBundle', 'chain_rule_residuals',
           'resolve_term']


# field -> (receiver, measured set, conditioned set); 'xi'/'xj' are bound
# to concrete users when a bundle is evaluated.
MI_TERMS = {
    # primary receiver
    'yp_xi_given_wxj': ('p', ('xi',), ('w', 'xj')),
    'yp_xj_given_wxi': ('p', ('xj',), ('w', 'xi')),
    'yp_w_given_x1x2': ('p', ('w',), ('x1', 'x2')),
    'yp_x1x2_given_w': ('p', ('x1', 'x2'), ('w',)),
    'yp_wxi_given_xj': ('p', ('w', 'xi'), ('xj',)),
    'yp_wxj_given_xi': ('p', ('w', 'xj'), ('xi',)),
    'yp_wx1x2': ('p', ('w', 'x1', 'x2'), ()),
    'yp_w': ('p', ('w',), ()),
    'yp_w_given_xi': ('p', ('w',), ('xi',)),
    'yp_xi_given_w': ('p', ('xi',), ('w',)),
    'yp_xi': ('p', ('xi',), ()),
    'yp_wxi': ('p', ('w', 'xi'), ()),
    'yp_x1x2': ('p', ('x1', 'x2'), ()),
    # secondary receiver
    'ys_u_given_w': ('s', ('u',), ('w',)),
    'ys_w_given_u': ('s', ('w',), ('u',)),
    'ys_uw': ('s', ('u', 'w'), ()),
    'ys_w': ('s', ('w',), ()),
    'ys_u_given_wxi': ('s', ('u',), ('w', 'xi')),
    'ys_w_given_uxi': ('s', ('w',), ('u', 'xi')),
    'ys_xi_given_uw': ('s', ('xi',), ('u', 'w')),
    'ys_uw_given_xi': ('s', ('u', 'w'), ('xi',)),
    'ys_uxi_given_w': ('s', ('u', 'xi'), ('w',)),
    'ys_wxi_given_u': ('s', ('w', 'xi'), ('u',)),
    'ys_uwxi': ('s', ('u', 'w', 'xi'), ()),
    'ys_xi_given_w': ('s', ('xi',), ('w',)),
    'ys_wxi': ('s', ('w', 'xi'), ()),
    'ys_w_given_xi': ('s', ('w',), ('xi',)),
    'ys_xi': ('s', ('xi',), ()),
}

# (total, part_a, part_b) with total = part_a + part_b, each a chain rule
# I(Y; AB | C) = I(Y; A | C) + I(Y; B | AC).
CHAIN_RULES = (
    ('yp_wx1x2', 'yp_w', 'yp_x1x2_given_w'),
    ('yp_wx1x2', 'yp_x1x2', 'yp_w_given_x1x2'),
    ('yp_wx1x2', 'yp_wxi', 'yp_xj_given_wxi'),
    ('yp_wx1x2', 'yp_xi', 'yp_wxj_given_xi'),
    ('yp_x1x2_given_w', 'yp_xi_given_w', 'yp_xj_given_wxi'),
    ('yp_wxi', 'yp_w', 'yp_xi_given_w'),
    ('yp_wxi', 'yp_xi', 'yp_w_given_xi'),
    ('ys_uw', 'ys_w', 'ys_u_given_w'),
    ('ys_uwxi', 'ys_wxi', 'ys_u_given_wxi'),
    ('ys_uwxi', 'ys_uw', 'ys_xi_given_uw'),
    ('ys_uwxi', 'ys_xi', 'ys_uw_given_xi'),
    ('ys_wxi', 'ys_w', 'ys_xi_given_w'),
    ('ys_wxi', 'ys_xi', 'ys_w_given_xi'),
    ('ys_uxi_given_w', 'ys_xi_given_w', 'ys_u_given_wxi'),
    ('ys_uw_given_xi', 'ys_w_given_xi', 'ys_u_given_wxi'),
    ('ys_wxi_given_u', 'ys_w_given_u', 'ys_xi_given_uw'),
)


def resolve_term(name, decoded_user):
    """Return ``(receiver, measured, conditioned)`` with users made concrete.

    ``'xi'``/``'xj'`` become ``'x1'``/``'x2'`` according to
    `decoded_user`.
    """
    if decoded_user not in (1, 2):
        raise ValueError(f"decoded_user must be 1 or 2, got {decoded_user!r}")
    other = 3 - decoded_user
    bind = {'xi': f'x{decoded_user}', 'xj': f'x{other}'}
    receiver, measured, conditioned = MI_TERMS[name]
    return (receiver,
            tuple(bind.get(v, v) for v in measured),
            tuple(bind.get(v, v) for v in conditioned))


@dataclass(frozen=True)
class MiBundle:
    """Mutual-information quantities for one input law and decoded user.

    All values are in bits per channel use. Construction checks that every
    value is finite and nonnegative; chain-rule consistency is *not*
    enforced here so that inconsistent bundles can be built and reported
    by :func:`chain_rule_residuals`.
    """
    yp_xi_given_wxj: float
    yp_xj_given_wxi: float
    yp_w_given_x1x2: float
    yp_x1x2_given_w: float
    yp_wxi_given_xj: float
    yp_wxj_given_xi: float
    yp_wx1x2: float
    yp_w: float
    yp_w_given_xi: float
    yp_xi_given_w: float
    yp_xi: float
    yp_wxi: float
    yp_x1x2: float
    ys_u_given_w: float
    ys_w_given_u: float
    ys_uw: float
    ys_w: float
    ys_u_given_wxi: float
    ys_w_given_uxi: float
    ys_xi_given_uw: float
    ys_uw_given_xi: float
    ys_uxi_given_w: float
    ys_wxi_given_u: float
    ys_uwxi: float
    ys_xi_given_w: float
    ys_wxi: float
    ys_w_given_xi: float
    ys_xi: float
    decoded_user: int = 1

    def __post_init__(self):
        if self.decoded_user not in (1, 2):
            raise ValueError(
                f"decoded_user must be 1 or 2, got {self.decoded_user!r}")
        for name in MI_TERMS:
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be finite and >= 0, "
                                 f"got {value!r}")

    @classmethod
    def zeros(cls, decoded_user=1):
        return cls(**dict.fromkeys(MI_TERMS, 0.0), decoded_user=decoded_user)

    @classmethod
    def from_dict(cls, data):
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown MiBundle fields: {sorted(unknown)}")
        values = {k: float(v) for k, v in data.items() if k != 'decoded_user'}
        return cls(**values, decoded_user=int(data.get('decoded_user', 1)))

    def to_dict(self):
        return asdict(self)

    def replace(self, **changes):
        data = self.to_dict()
        data.update(changes)
        return type(self)(**data)


def chain_rule_residuals(mi):
    """Absolute residual of every identity in :data:`CHAIN_RULES`.

    Returns a dict keyed by ``"total=a+b"``.
    """
    out = {}
    for total, a, b in CHAIN_RULES:
        lhs = getattr(mi, total)
        rhs = getattr(mi, a) + getattr(mi, b)
        out[f"{total}={a}+{b}"] = abs(lhs - rhs)
    return out
