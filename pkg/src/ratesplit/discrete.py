"""
Brute-force mutual information for small discrete memoryless channels.

The joint law of ``(Q, U, W, X1, X2, Xs, Yp, Ys)`` is materialized as a
dense array and every :class:`~ratesplit.mi.MiBundle` field is computed
from entropies of its marginals, conditioned on the time-sharing variable
``Q``. Intended as a verification aid on alphabets of a handful of
symbols, not as a capacity optimizer.
"""

from dataclasses import dataclass

import numpy as np

from .mi import MI_TERMS, MiBundle, resolve_term

__all__ = ['CapacityError', 'Dmc', 'InputDistribution', 'AXES',
           'joint_distribution', 'conditional_mi', 'conditional_entropy',
           'mi_bundle_discrete']

AXES = ('q', 'u', 'w', 'x1', 'x2', 'xs', 'yp', 'ys')
_AXIS = {name: k for k, name in enumerate(AXES)}

MAX_CELLS = 10 ** 7
MAX_ALPHABET = 4
PMF_TOL = 1e-12


class CapacityError(ValueError):
    """The requested joint distribution is too large to materialize."""


def _check_pmf(name, p, axis=-1):
    p = np.asarray(p, dtype=float)
    if np.any(~np.isfinite(p)) or np.any(p < 0):
        raise ValueError(f"{name} has negative or non-finite entries")
    if np.any(np.abs(p.sum(axis=axis) - 1.0) > PMF_TOL):
        raise ValueError(f"{name} does not sum to 1")
    return p


@dataclass(frozen=True)
class Dmc:
    """Channel law ``omega[x1, x2, xs, yp, ys] = P(yp, ys | x1, x2, xs)``."""
    omega: np.ndarray

    def __post_init__(self):
        omega = np.asarray(self.omega, dtype=float)
        if omega.ndim != 5:
            raise ValueError("omega must have axes (x1, x2, xs, yp, ys)")
        flat = omega.reshape(omega.shape[:3] + (-1,))
        _check_pmf('omega', flat)
        object.__setattr__(self, 'omega', omega)

    @property
    def sizes(self):
        return dict(zip(('x1', 'x2', 'xs', 'yp', 'ys'), self.omega.shape))


@dataclass(frozen=True)
class InputDistribution:
    """Input law with ``X1, X2, U, W`` independent given ``Q``.

    Only marginals are stored, so conditional independence holds by
    construction. ``f[q, u, w]`` is the secondary symbol sent for
    ``(u, w)`` at time-sharing state ``q``.
    """
    p_q: np.ndarray
    p_u: np.ndarray   # [q, u]
    p_w: np.ndarray   # [q, w]
    p_x1: np.ndarray  # [q, x1]
    p_x2: np.ndarray  # [q, x2]
    f: np.ndarray     # [q, u, w] -> xs index

    def __post_init__(self):
        object.__setattr__(self, 'p_q', _check_pmf('p_q', self.p_q))
        nq = self.p_q.shape[0]
        for name in ('p_u', 'p_w', 'p_x1', 'p_x2'):
            p = _check_pmf(name, getattr(self, name))
            if p.ndim != 2 or p.shape[0] != nq:
                raise ValueError(f"{name} must have shape (|Q|, n)")
            object.__setattr__(self, name, p)
        f = np.asarray(self.f)
        if f.shape != (nq, self.p_u.shape[1], self.p_w.shape[1]):
            raise ValueError("f must have shape (|Q|, |U|, |W|)")
        if not np.issubdtype(f.dtype, np.integer) or np.any(f < 0):
            raise ValueError("f must map to nonnegative integer symbols")
        object.__setattr__(self, 'f', f)


def joint_distribution(dmc, z, max_alphabet=MAX_ALPHABET,
                       max_cells=MAX_CELLS):
    """Joint pmf over ``AXES`` implied by the channel and the input law.

    Raises
    ------
    CapacityError
        If an input-side alphabet exceeds `max_alphabet` or the joint
        array would exceed `max_cells` entries.
    ValueError
        If ``z.f`` emits a symbol outside the channel's ``Xs`` alphabet or
        the two disagree on ``|X1|``/``|X2|``.
    """
    sizes = dmc.sizes
    if z.p_x1.shape[1] != sizes['x1'] or z.p_x2.shape[1] != sizes['x2']:
        raise ValueError("input and channel disagree on |X1| or |X2|")
    if z.f.max() >= sizes['xs']:
        raise ValueError("f emits a symbol outside the Xs alphabet")
    nq, nu, nw = z.f.shape
    inputs = {'q': nq, 'u': nu, 'w': nw, 'x1': sizes['x1'],
              'x2': sizes['x2'], 'xs': sizes['xs']}
    too_big = {k: n for k, n in inputs.items() if n > max_alphabet}
    if too_big:
        raise CapacityError(f"alphabets above {max_alphabet}: {too_big}")
    shape = (nq, nu, nw, sizes['x1'], sizes['x2'], sizes['xs'],
             sizes['yp'], sizes['ys'])
    if int(np.prod(shape)) > max_cells:
        raise CapacityError(f"joint array of shape {shape} exceeds "
                            f"{max_cells} cells")

    # P(q, u, w, x1, x2)
    prior = np.einsum('q,qu,qw,qa,qb->quwab', z.p_q, z.p_u, z.p_w,
                      z.p_x1, z.p_x2)
    # deterministic xs: one-hot over the xs axis
    onehot = np.zeros((nq, nu, nw, sizes['xs']))
    q_idx, u_idx, w_idx = np.indices((nq, nu, nw))
    onehot[q_idx, u_idx, w_idx, z.f] = 1.0
    return np.einsum('quwab,quws,absyz->quwabsyz', prior, onehot, dmc.omega)


def _entropy(joint, keep):
    axes = tuple(k for k in range(joint.ndim) if k not in keep)
    p = joint.sum(axis=axes) if axes else joint
    p = p[p > 0]
    return float(-(p * np.log2(p)).sum())


def conditional_entropy(joint, target, given=()):
    """``H(target | given)`` in bits, with ``0 log 0 = 0``."""
    t = {_AXIS[v] for v in target}
    g = {_AXIS[v] for v in given}
    return _entropy(joint, t | g) - _entropy(joint, g)


def conditional_mi(joint, y, measured, conditioned=()):
    """``I(Y; S | C)`` computed as ``H(Y | C) - H(Y | S, C)``."""
    return (conditional_entropy(joint, (y,), conditioned)
            - conditional_entropy(joint, (y,), tuple(measured)
                                  + tuple(conditioned)))


def mi_bundle_discrete(dmc, z, decoded_user=1, joint=None):
    """MiBundle of a discrete channel, every term conditioned on ``Q``.

    Tiny negative values from cancellation (down to ``-1e-9``) are clamped
    to zero; anything more negative indicates a bug and raises.
    """
    if joint is None:
        joint = joint_distribution(dmc, z)
    values = {}
    for name in MI_TERMS:
        receiver, measured, conditioned = resolve_term(name, decoded_user)
        y = 'yp' if receiver == 'p' else 'ys'
        value = conditional_mi(joint, y, measured, conditioned + ('q',))
        if value < -1e-9:
            raise ArithmeticError(f"{name} evaluated to {value}")
        values[name] = max(value, 0.0)
    return MiBundle(**values, decoded_user=decoded_user)
