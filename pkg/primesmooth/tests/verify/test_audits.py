import csv

import pytest

from primesmooth.arith.primes import small_primes
from primesmooth.config import get_settings
from primesmooth.errors import CertificateViolation, RangeError
from primesmooth.verify import AuditReport, audit_l1_claim, audit_lemma, audit_weil


def test_lemma_audit():
    report = audit_lemma(trials=60, seed=1)
    assert report.passed
    assert report.checks == 60
    assert 0 < report.max_ratio <= 1 + 1e-9
    assert all(31 <= row['m'] <= 257 for row in report.rows)


def test_lemma_audit_range():
    with pytest.raises(RangeError):
        audit_lemma(trials=0)
    with pytest.raises(RangeError):
        audit_lemma(trials=5, moduli=(10, 5))


def test_weil_audit_exhaustive():
    report = audit_weil([3, 5, 7])
    assert report.passed
    # p - 1 zero-row checks plus (p - 1) p pairs per prime
    assert report.checks == 8 + 24 + 48
    assert report.max_ratio <= 1 + 1e-6
    assert [row['mode'] for row in report.rows] == ['exhaustive'] * 3


def test_weil_audit_sampled(monkeypatch):
    monkeypatch.setattr(get_settings(), 'weil_exhaustive_cap', 5)
    report = audit_weil([7, 11], samples=50, seed=2)
    assert report.passed
    assert [row['mode'] for row in report.rows] == ['sampled', 'sampled']
    assert report.checks == (6 + 50) + (10 + 50)


def test_l1_audit(tmp_path):
    report = audit_l1_claim([101])
    assert report.passed
    by_length = {row['T']: float(row['l1']) for row in report.rows}
    assert sorted(by_length) == [1, 25, 50, 101]
    assert by_length[1] == pytest.approx(100)
    assert by_length[101] == pytest.approx(0, abs=1e-9)
    report.write(tmp_path / 'l1.csv')
    with open(tmp_path / 'l1.csv', newline='') as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 4
    assert list(rows[0]) == report.fieldnames


def test_raise_on_violation():
    report = AuditReport(name='demo', fieldnames=['x'])
    report.add({'x': 1}, 0.5)
    report.raise_on_violation()
    report.add({'x': 2}, 1.5, violations=1)
    assert not report.passed
    with pytest.raises(CertificateViolation):
        report.raise_on_violation()


@pytest.mark.slow
def test_lemma_audit_full():
    report = audit_lemma(trials=500, moduli=(31, 257), seed=0)
    assert report.passed
    assert report.checks == 500
    ms = [row['m'] for row in report.rows]
    assert min(ms) >= 31 and max(ms) <= 257 and max(ms) >= 200


@pytest.mark.slow
def test_weil_audit_every_prime_to_199():
    primes = [int(p) for p in small_primes(200) if p >= 3]
    report = audit_weil(primes)
    assert report.passed
    assert [row['p'] for row in report.rows] == primes
    assert all(row['mode'] == 'exhaustive' for row in report.rows)
    assert report.checks == sum((p - 1) + (p - 1) * p for p in primes)
    assert report.max_ratio <= 1 + 1e-6


@pytest.mark.slow
def test_l1_audit_acceptance_primes():
    report = audit_l1_claim([101, 499, 1009])
    assert report.passed
    cells = [(row['p'], row['T']) for row in report.rows]
    assert cells == [(p, T) for p in (101, 499, 1009) for T in (1, p // 4, p // 2, p)]
