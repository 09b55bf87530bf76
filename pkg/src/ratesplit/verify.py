"""
Randomized self-check of the closed forms against independent routes.

For each Gaussian instance (exponential gains, log-uniform powers, uniform
split) and each decoded user the suite checks

* ``chain_rule`` - chain-rule identities of the bundle,
* ``oracle_no_decode`` / ``oracle_decode`` - closed-form support equals the
  vertex-enumerated projection of the four-rate set in 64 directions,
* ``corner_lines`` - the sum-rate corners lie on the sum-rate line,
* ``corner_witness`` - every corner lifts to an admissible four-rate tuple,
* ``pdc_iff`` - region inclusion holds exactly when the decodability test
  passes,

and, per instance, ``relaxed_containment`` - the relaxed no-decode region
lies in the union of the no-decode regions at the same split and at
``lam = 1``.
"""

from dataclasses import dataclass, field
import json

import numpy as np

from . import regions as rg
from .conditions import pdc
from .gaussian import ChannelGains, PowerConfig, mi_bundle_gaussian
from .geometry import contains_region, max_rp, support, union_envelope
from .mi import MiBundle, chain_rule_residuals
from .oracle import project_delta, quadrant_directions

__all__ = ['CHECKS', 'Instance', 'VerifyReport', 'random_instance',
           'random_instances', 'bundle_checks', 'relaxed_contained',
           'run_verify', 'replay', 'format_report']

CHECKS = ('chain_rule', 'oracle_no_decode', 'oracle_decode', 'corner_lines',
          'corner_witness', 'pdc_iff', 'relaxed_containment')

CHAIN_TOL = 1e-9
ORACLE_TOL = 1e-6
LINE_TOL = 1e-9
ENVELOPE_TOL = 1e-9
N_DIRECTIONS = 64
N_GRID = 512


@dataclass(frozen=True)
class Instance:
    gains: ChannelGains
    power: PowerConfig
    lam: float

    def to_dict(self):
        return {'kind': 'gaussian', 'gains': self.gains.to_dict(),
                'power': self.power.to_dict(), 'lambda': self.lam}

    @classmethod
    def from_dict(cls, data):
        return cls(ChannelGains(**data['gains']), PowerConfig(**data['power']),
                   float(data['lambda']))


def random_instance(rng):
    """Gains ~ Exp(1), powers log-uniform on [0.1, 100], ``lam`` ~ U[0, 1]."""
    g = rng.exponential(1.0, size=6)
    p = 10.0 ** rng.uniform(-1.0, 2.0, size=3)
    lam = float(rng.uniform())
    return Instance(ChannelGains(*map(float, g)),
                    PowerConfig(*map(float, p), n0=1.0), lam)


def random_instances(n, seed):
    rng = np.random.default_rng(seed)
    return [random_instance(rng) for _ in range(n)]


def _support_gap(region, mi, mode, directions):
    lp = project_delta(mi, mode, directions)
    closed = [support(region, d) for d in directions]
    return max(abs(a - b) for a, b in zip(closed, lp))


def bundle_checks(mi, directions=None):
    """Run the per-bundle checks; returns ``{name: (passed, detail)}``."""
    directions = directions or quadrant_directions(N_DIRECTIONS)
    out = {}
    worst = max(chain_rule_residuals(mi).values())
    out['chain_rule'] = (worst <= CHAIN_TOL, f"max residual {worst:.3g}")

    r_o = rg.region_no_decode(mi)
    r_d = rg.region_decode(mi)
    gap = _support_gap(r_o, mi, 'no_decode', directions)
    out['oracle_no_decode'] = (gap <= ORACLE_TOL, f"max gap {gap:.3g}")
    gap = _support_gap(r_d, mi, 'decode', directions)
    out['oracle_decode'] = (gap <= ORACLE_TOL, f"max gap {gap:.3g}")

    c_o = rg.corners_no_decode(mi)
    c_d = rg.corners_decode(mi)
    sum_o = rg.rho_no_decode(mi)[2]
    sum_d = rg.rho_decode(mi)[1, 1]
    errs = [abs(sum(c_o[k]) - sum_o) for k in 'BC']
    errs += [abs(sum(c_d[k]) - sum_d) for k in 'CD']
    out['corner_lines'] = (max(errs) <= LINE_TOL,
                           f"max line error {max(errs):.3g}")

    missing = []
    for scheme, corners, accept in (
            ('no_decode', c_o, rg.delta_o_contains),
            ('decode', c_d, rg.delta_r_contains)):
        for label, point in corners.items():
            t = rg.corner_witness(mi, point, scheme)
            if t is None or not accept(mi, t, tol=1e-9):
                missing.append(f"{scheme}:{label}")
    out['corner_witness'] = (not missing,
                             f"no witness for {missing}" if missing else "ok")

    inclusion = contains_region(r_o, r_d)
    cond = pdc(mi)
    out['pdc_iff'] = (inclusion == cond,
                      f"inclusion={inclusion} condition={cond}")
    return out


def relaxed_contained(gains, power, lam, n_grid=N_GRID):
    """Compare the relaxed region with ``R(lam) | R(1)`` on a grid.

    Returns ``(passed, worst excess)``.
    """
    relaxed = rg.region_no_decode_relaxed(
        mi_bundle_gaussian(gains, power, lam))
    here = rg.region_no_decode(mi_bundle_gaussian(gains, power, lam))
    full = rg.region_no_decode(mi_bundle_gaussian(gains, power, 1.0))
    rs_max = max(v[0] for r in (relaxed, here, full) for v in r.vertices)
    grid = np.linspace(0.0, rs_max, n_grid) if rs_max > 0 else np.zeros(1)
    union = union_envelope([here, full], grid)
    excess = float(np.max(max_rp(relaxed, grid) - union.rp_max))
    return excess <= ENVELOPE_TOL, excess


@dataclass
class VerifyReport:
    counts: dict = field(default_factory=lambda: {c: [0, 0] for c in CHECKS})
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def record(self, name, passed, instance, detail):
        self.counts[name][1] += 1
        if passed:
            self.counts[name][0] += 1
        else:
            self.failures.append({'check': name, 'detail': detail,
                                  'instance': instance})


def _check_bundle(report, mi, payload, directions):
    for name, (passed, detail) in bundle_checks(mi, directions).items():
        report.record(name, passed, payload, detail)


def _check_instance(report, inst, directions):
    payload = inst.to_dict()
    for i in (1, 2):
        mi = mi_bundle_gaussian(inst.gains, inst.power, inst.lam, i)
        _check_bundle(report, mi, payload, directions)
    passed, excess = relaxed_contained(inst.gains, inst.power, inst.lam)
    report.record('relaxed_containment', passed, payload,
                  f"max excess {excess:.3g}")


def run_verify(n=200, seed=0):
    """Run every check on `n` random instances drawn from `seed`."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    directions = quadrant_directions(N_DIRECTIONS)
    report = VerifyReport()
    for inst in random_instances(n, seed):
        _check_instance(report, inst, directions)
    return report


def replay(payload):
    """Re-run the checks on one serialized instance.

    `payload` is either a Gaussian instance (``{"kind": "gaussian", ...}``
    as printed by a failing run) or a raw bundle
    (``{"kind": "mi", "mi": {...}}``).
    """
    directions = quadrant_directions(N_DIRECTIONS)
    report = VerifyReport()
    kind = payload.get('kind')
    if kind == 'gaussian':
        _check_instance(report, Instance.from_dict(payload), directions)
    elif kind == 'mi':
        _check_bundle(report, MiBundle.from_dict(payload['mi']), payload,
                      directions)
    else:
        raise ValueError(f"unknown instance kind {kind!r}")
    return report


def format_report(report):
    lines = []
    for name in CHECKS:
        passed, total = report.counts[name]
        if total:
            lines.append(f"{name}: {passed}/{total}")
    for failure in report.failures:
        lines.append(f"FAIL {failure['check']}: {failure['detail']}")
        lines.append("  instance: " + json.dumps(failure['instance'],
                                                  sort_keys=True))
    lines.append("PASS" if report.ok else "FAIL")
    return "\n".join(lines) + "\n"
