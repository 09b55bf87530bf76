import json

from ratesplit import PRESETS, mi_bundle_gaussian
from ratesplit.verify import (CHECKS, Instance, format_report, replay,
                              run_verify)

from strategies import PRESET_POWER


def test_small_run_passes_and_is_deterministic():
    a = run_verify(10, 5)
    assert a.ok
    assert format_report(a) == format_report(run_verify(10, 5))
    assert a.counts['oracle_decode'] == [20, 20]
    assert a.counts['relaxed_containment'] == [10, 10]


def test_injected_chain_rule_violation():
    mi = mi_bundle_gaussian(PRESETS['split-o'], PRESET_POWER, 0.3)
    bad = mi.to_dict()
    bad['ys_uw'] += 0.25
    report = replay({'kind': 'mi', 'mi': bad})
    assert not report.ok
    assert report.failures[0]['check'] == 'chain_rule'
    text = format_report(report)
    assert text.rstrip().endswith('FAIL')
    line = next(l for l in text.splitlines() if 'instance:' in l)
    payload = json.loads(line.split('instance:', 1)[1])
    assert payload['mi']['ys_uw'] == bad['ys_uw']


def test_gaussian_replay_round_trip():
    inst = Instance(PRESETS['pdcg-user1'], PRESET_POWER, 0.3)
    payload = json.loads(json.dumps(inst.to_dict()))
    assert Instance.from_dict(payload) == inst
    report = replay(payload)
    assert report.ok
    assert set(report.counts) == set(CHECKS)
