"""
Monte Carlo probability that at least one primary user meets the Gaussian
decodability condition under exponential fading.

Samples are drawn in fixed-size blocks, each with its own generator seeded
from ``(seed, block index)``. The estimate is therefore a pure function of
``(model, config)``: it does not depend on how many worker threads process
the blocks or in which order they finish.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import math
import os

import numpy as np

from .conditions import pdcg_holds

__all__ = ['FadingModel', 'McConfig', 'McEstimate', 'BLOCK_SIZE',
           'worker_count', 'sample_gains', 'pdcg_probability',
           'db_to_linear']

BLOCK_SIZE = 1 << 14
THREADS_ENV = 'RATE_REGION_THREADS'


@dataclass(frozen=True)
class FadingModel:
    """Means of the i.i.d. exponential gains into each receiver."""
    mu_p: float = 1.0
    mu_s: float = 1.0

    def __post_init__(self):
        for name in ('mu_p', 'mu_s'):
            v = getattr(self, name)
            if not math.isfinite(v) or v <= 0:
                raise ValueError(f"{name} must be finite and > 0, got {v!r}")


@dataclass(frozen=True)
class McConfig:
    """Sample count, RNG seed and primary SNR ``P1/N0 = P2/N0`` (linear).
    """
    samples: int = 100_000
    seed: int = 0
    snr_p: float = 10.0

    def __post_init__(self):
        if int(self.samples) != self.samples or self.samples < 1:
            raise ValueError(f"samples must be a positive integer, "
                             f"got {self.samples!r}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if not math.isfinite(self.snr_p) or self.snr_p < 0:
            raise ValueError(f"snr_p must be finite and >= 0, "
                             f"got {self.snr_p!r}")


@dataclass(frozen=True)
class McEstimate:
    estimate: float
    std_err: float
    samples: int
    hits: int


def db_to_linear(db):
    return 10.0 ** (db / 10.0)


def worker_count():
    """Thread cap from ``RATE_REGION_THREADS``, else the CPU count."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw == '':
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, "
                         f"got {raw!r}")
    if n < 1:
        raise ValueError(f"{THREADS_ENV} must be >= 1, got {n}")
    return n


def sample_gains(model, seed, block, size):
    """Gains ``(g1p, g2p, g1s, g2s)`` for one block, as a ``(size, 4)`` array.

    Exponential variates come from the inverse CDF ``-mu * log(1 - u)``.
    """
    rng = np.random.Generator(np.random.PCG64(
        np.random.SeedSequence([seed, block])))
    u = rng.random((size, 4))
    mu = np.array([model.mu_p, model.mu_p, model.mu_s, model.mu_s])
    return -mu * np.log1p(-u)


def _block_hits(model, cfg, block):
    start = block * BLOCK_SIZE
    size = min(BLOCK_SIZE, cfg.samples - start)
    g = sample_gains(model, cfg.seed, block, size)
    g1p, g2p, g1s, g2s = g.T
    p, n0 = cfg.snr_p, 1.0
    user1 = pdcg_holds(g1p, g2p, g1s, g2s, p, n0)
    user2 = pdcg_holds(g2p, g1p, g2s, g1s, p, n0)
    return int(np.count_nonzero(user1 | user2))


def pdcg_probability(model, cfg, workers=None):
    """Fraction of fading draws for which user 1 or user 2 is decodable.

    Parameters
    ----------
    model : FadingModel
    cfg : McConfig
    workers : int, optional
        Thread count; defaults to :func:`worker_count`. Has no effect on
        the result.

    Returns
    -------
    McEstimate
        Estimate with binomial standard error ``sqrt(p (1 - p) / n)``.
    """
    n_blocks = -(-cfg.samples // BLOCK_SIZE)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or n_blocks == 1:
        hits = sum(_block_hits(model, cfg, b) for b in range(n_blocks))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(lambda b: _block_hits(model, cfg, b),
                                range(n_blocks)))
    p = hits / cfg.samples
    return McEstimate(estimate=p,
                      std_err=math.sqrt(p * (1.0 - p) / cfg.samples),
                      samples=cfg.samples, hits=hits)

