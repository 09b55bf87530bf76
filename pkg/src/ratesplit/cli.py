"""
Command-line frontend.

Every command writes plot-ready CSV or JSON. Floats are printed with 12
significant digits, JSON keys are sorted and NaN/Inf are rejected. Exit
codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import io
import json
import math
import sys

from . import conditions as cond
from .gaussian import PRESETS, ChannelGains, PowerConfig, check_split
from .gaussian import mi_bundle_gaussian
from .montecarlo import FadingModel, McConfig, db_to_linear, pdcg_probability
from .regions import (corners_decode, corners_no_decode, region_decode,
                      region_no_decode)
from .sweep import default_lambdas, sweep_envelopes
from .verify import format_report, replay, run_verify

__all__ = ['main', 'build_parser', 'fmt', 'rounded']

GAIN_FLAGS = ('g1p', 'g2p', 'gsp', 'g1s', 'g2s', 'gss')
DEFAULT_FORMAT = {'region': 'json', 'sweep': 'csv', 'conditions': 'json',
                  'pdcg-prob': 'csv', 'verify': 'text'}
ALLOWED_FORMATS = {'region': ('csv', 'json'), 'sweep': ('csv',),
                   'conditions': ('json',), 'pdcg-prob': ('csv',),
                   'verify': ('text',)}


class UsageError(Exception):
    pass


def fmt(x):
    """A float as a 12-significant-digit decimal string."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"refusing to print non-finite value {x!r}")
    return f"{x + 0.0:.12g}"  # + 0.0 folds -0.0 into 0


def rounded(x):
    """The float that :func:`fmt` prints, so CSV and JSON agree."""
    return float(fmt(x))


def _csv(header, rows):
    lines = [",".join(header)]
    lines += [",".join(row) for row in rows]
    return "\n".join(lines) + "\n"


def _json(obj):
    return json.dumps(obj, sort_keys=True, allow_nan=False, indent=2) + "\n"


# ---------------------------------------------------------------- parsing

def _add_channel(p):
    g = p.add_argument_group("channel")
    g.add_argument('--preset', choices=sorted(PRESETS),
                   help="named gain set; explicit gain flags override it")
    for name in GAIN_FLAGS:
        g.add_argument(f'--{name}', type=float, help="linear power gain")
    for name in ('p1', 'p2', 'ps'):
        g.add_argument(f'--{name}', type=float, default=10.0,
                       help="transmit power, linear (default 10)")
    g.add_argument('--n0', type=float, default=1.0,
                   help="noise variance (default 1)")


def _add_output(p):
    p.add_argument('--format', choices=('csv', 'json'),
                   help="output format")
    p.add_argument('-o', '--output', help="write to this file, not stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog='ratesplit',
        description="Rate regions of a cognitive secondary link sharing a "
                    "two-user multiple-access channel.")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('region', help="one region at a fixed split")
    _add_channel(p)
    p.add_argument('--lambda', dest='lam', type=float, default=0.0,
                   help="private power fraction in [0, 1] (default 0)")
    p.add_argument('--mode', choices=('none', '1', '2', 'all'),
                   default='none',
                   help="decoded primary user; 'none' is the no-decode "
                        "scheme")
    _add_output(p)

    p = sub.add_parser('sweep', help="envelopes over a sweep of the split")
    _add_channel(p)
    p.add_argument('--sweep', type=int, default=101,
                   help="number of uniform split values (default 101)")
    p.add_argument('--grid', type=int, default=512,
                   help="number of Rs grid points (default 512)")
    p.add_argument('--hull', action='store_true',
                   help="convexify each envelope (time sharing)")
    _add_output(p)

    p = sub.add_parser('conditions', help="closed-form conditions")
    _add_channel(p)
    _add_output(p)

    p = sub.add_parser('pdcg-prob',
                       help="Monte Carlo probability that some primary user "
                            "is decodable")
    p.add_argument('--mu-p', type=float, default=1.0,
                   help="mean gain into the primary receiver")
    p.add_argument('--mu-s', type=float, default=1.0,
                   help="mean gain into the secondary receiver")
    p.add_argument('--snr-db', type=float, nargs='+',
                   default=[0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0],
                   help="primary SNR grid in dB")
    p.add_argument('--zero-power', action='store_true',
                   help="evaluate only at zero primary power")
    p.add_argument('--samples', type=int, default=100_000)
    p.add_argument('--seed', type=int, default=0)
    _add_output(p)

    p = sub.add_parser('verify', help="randomized self-check")
    p.add_argument('-n', type=int, default=200, help="number of instances")
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--replay', metavar='FILE',
                   help="re-check one serialized instance ('-' for stdin)")
    p.add_argument('-o', '--output', help="write to this file, not stdout")
    return parser


def _channel(args):
    base = PRESETS[args.preset].to_dict() if args.preset else {}
    for name in GAIN_FLAGS:
        v = getattr(args, name)
        if v is not None:
            base[name] = v
    missing = [n for n in GAIN_FLAGS if n not in base]
    if missing:
        raise UsageError("missing gains: "
                         + ", ".join(f"--{n}" for n in missing)
                         + " (or pass --preset)")
    gains = ChannelGains(**base)
    power = PowerConfig(args.p1, args.p2, args.ps, args.n0)
    return gains, power


# --------------------------------------------------------------- commands

def _region_json(region, corners):
    return {
        'constraints': [{'a': rounded(a), 'b': rounded(b), 'c': rounded(c)}
                        for a, b, c in region.constraints],
        'vertices': [[rounded(x), rounded(y)] for x, y in region.vertices],
        'corners': {k: [rounded(x), rounded(y)]
                    for k, (x, y) in corners.items()},
    }


def _regions(gains, power, lam, mode):
    out = {}
    if mode in ('none', 'all'):
        mi = mi_bundle_gaussian(gains, power, lam, 1)
        out['o'] = (region_no_decode(mi), corners_no_decode(mi))
    for i in (1, 2):
        if mode in (str(i), 'all'):
            mi = mi_bundle_gaussian(gains, power, lam, i)
            out[f'r{i}'] = (region_decode(mi), corners_decode(mi))
    return out


def cmd_region(args, fmt_name):
    gains, power = _channel(args)
    check_split(args.lam)
    regions = _regions(gains, power, args.lam, args.mode)
    if fmt_name == 'json':
        if args.mode == 'all':
            return _json({k: _region_json(*v) for k, v in regions.items()})
        (region, corners), = regions.values()
        return _json(_region_json(region, corners))
    if args.mode == 'all':
        rows = [[k, str(n), fmt(x), fmt(y)]
                for k, (region, _) in regions.items()
                for n, (x, y) in enumerate(region.vertices)]
        return _csv(['region', 'vertex', 'rs', 'rp'], rows)
    (region, _), = regions.values()
    rows = [[str(n), fmt(x), fmt(y)] for n, (x, y) in
            enumerate(region.vertices)]
    return _csv(['vertex', 'rs', 'rp'], rows)


def cmd_sweep(args, fmt_name):
    gains, power = _channel(args)
    if args.sweep < 2:
        raise UsageError("--sweep needs at least 2 split values")
    if args.grid < 2:
        raise UsageError("--grid needs at least 2 points")
    env = sweep_envelopes(gains, power, default_lambdas(args.sweep),
                          n_grid=args.grid, hull=args.hull)
    cols = ['o', 'r1', 'r2', 'union']
    rows = [[fmt(rs)] + [fmt(env[c].rp_max[k]) for c in cols]
            for k, rs in enumerate(env['o'].rs_grid)]
    return _csv(['rs'] + [f'rp_{c}' for c in cols], rows)


def cmd_conditions(args, fmt_name):
    gains, power = _channel(args)

    def sides(pair):
        return {'lhs': rounded(pair[0]), 'rhs': rounded(pair[1])}

    report = {
        'no_split_o': cond.no_split_condition_o(gains, power),
        'no_split_r': {str(i): cond.no_split_condition_r(gains, power, i)
                       for i in (1, 2)},
        'pdcg': {str(i): cond.pdcg(gains, power, i) for i in (1, 2)},
        'sides': {
            'no_split_o': sides(cond.no_split_o_sides(gains, power)),
            'no_split_r': {str(i): sides(cond.no_split_r_sides(gains, power,
                                                              i))
                           for i in (1, 2)},
            'pdcg': {str(i): sides(cond.pdcg_sides(gains, power, i))
                     for i in (1, 2)},
        },
    }
    return _json(report)


def cmd_pdcg_prob(args, fmt_name):
    model = FadingModel(args.mu_p, args.mu_s)
    grid = [-math.inf] if args.zero_power else args.snr_db
    rows = []
    for db in grid:
        snr = 0.0 if db == -math.inf else db_to_linear(db)
        est = pdcg_probability(model, McConfig(args.samples, args.seed, snr))
        label = '-inf' if db == -math.inf else fmt(db)
        rows.append([label, fmt(est.estimate), fmt(est.std_err)])
    return _csv(['snr_db', 'estimate', 'std_err'], rows)


def cmd_verify(args, fmt_name):
    if args.replay:
        if args.replay == '-':
            payload = json.load(sys.stdin)
        else:
            with open(args.replay, encoding='utf-8') as f:
                payload = json.load(f)
        try:
            report = replay(payload)
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed replay instance: {exc!r}")
    else:
        if args.n < 1:
            raise UsageError("-n must be >= 1")
        report = run_verify(args.n, args.seed)
    return format_report(report), (0 if report.ok else 1)


COMMANDS = {'region': cmd_region, 'sweep': cmd_sweep,
            'conditions': cmd_conditions, 'pdcg-prob': cmd_pdcg_prob,
            'verify': cmd_verify}


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on bad flags
    fmt_name = getattr(args, 'format', None) or DEFAULT_FORMAT[args.command]
    if fmt_name not in ALLOWED_FORMATS[args.command]:
        parser.error(f"{args.command} does not support --format {fmt_name}")
    try:
        result = COMMANDS[args.command](args, fmt_name)
    except (UsageError, ValueError, OSError) as exc:
        print(f"ratesplit {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text, code = result if isinstance(result, tuple) else (result, 0)
    _write(text, args.output)
    return code


if __name__ == '__main__':
    sys.exit(main())
