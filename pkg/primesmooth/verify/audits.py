"""
Certificate audits: the bilinear (Vinogradov) bound, the Weil bound for
Kloosterman sums, and the L1 size of incomplete geometric sums.
"""
from math import gcd, log, sqrt

import numpy as np
import param

from primesmooth.arith.field import prime_field
from primesmooth.base.model_base import Model
from primesmooth.config import get_settings
from primesmooth.errors import CertificateViolation, RangeError
from primesmooth.expsums.bilinear import BilinearWeights, vinogradov_double_sum
from primesmooth.expsums.interval import direct_interval_sum, interval_sum_l1
from primesmooth.expsums.kloosterman import kloosterman, kloosterman_row
from primesmooth.logging import log_audit
from primesmooth.verify.config import resolve_size
from primesmooth.verify.report import write_rows


class AuditReport(Model):
    """Outcome of one audit with per-row detail for the CSV table"""
    name = param.String(default='audit', constant=True)
    checks = param.Integer(default=0, bounds=(0, None))
    violations = param.Integer(default=0, bounds=(0, None))
    max_ratio = param.Number(default=0.0, bounds=(0.0, None), doc="""
        Largest observed |value| / certificate""")
    seed = param.Integer(default=None, allow_None=True, constant=True)
    fieldnames = param.List(default=[], item_type=str, constant=True)
    rows = param.List(default=[], doc="""
        One dict per audited cell, keyed by fieldnames""")

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def add(self, row: dict, ratio: float, violations: int = 0, checks: int = 1):
        self.rows.append(row)
        self.checks += checks
        self.violations += int(violations)
        self.max_ratio = max(self.max_ratio, ratio)

    def raise_on_violation(self):
        if not self.passed:
            raise CertificateViolation(
                f"{self.name}: {self.violations} of {self.checks} checks violated the bound")

    def write(self, path):
        write_rows(self.rows, self.fieldnames, path)


def _weights(rng: np.random.Generator, m: int, style: int) -> np.ndarray:
    if style == 0:
        return rng.normal(size=m) + 1j * rng.normal(size=m)
    if style == 1:
        w = np.zeros(m, dtype=np.complex128)
        support = rng.choice(m, size=max(1, m // 8), replace=False)
        w[support] = rng.normal(size=len(support)) + 1j * rng.normal(size=len(support))
        return w
    return np.exp(2j * np.pi * rng.random(m))


def audit_lemma(trials: int = 500, moduli: tuple = (31, 257), seed: int = 0,
                rel_tol: float = 1e-9) -> AuditReport:
    """
    Random weights (Gaussian, sparse, unimodular in turn) and a random unit
    a mod m for m drawn from the inclusive range `moduli`; each trial checks
    |sum| <= sqrt(m X Y) (1 + rel_tol).
    """
    if trials < 1:
        raise RangeError(f"Expected at least one trial, got {trials}")
    lo, hi = moduli
    if not 2 <= lo <= hi:
        raise RangeError(f"Expected 2 <= lo <= hi for moduli, got {moduli}")
    rng = np.random.default_rng(seed)
    report = AuditReport(
        name='lemma', seed=seed, fieldnames=['trial', 'm', 'a', 'value', 'certificate', 'ratio'])
    for trial in range(trials):
        m = int(rng.integers(lo, hi + 1))
        a = int(rng.integers(1, m))
        while gcd(a, m) != 1:
            a = int(rng.integers(1, m))
        w = BilinearWeights(_weights(rng, m, trial % 3), _weights(rng, m, (trial + 1) % 3))
        value, certificate = vinogradov_double_sum(w, a)
        ratio = abs(value) / certificate if certificate > 0 else 0.0
        report.add(
            dict(trial=trial, m=m, a=a, value=f"{abs(value):.12g}",
                 certificate=f"{certificate:.12g}", ratio=f"{ratio:.12g}"),
            ratio, violations=abs(value) > certificate * (1 + rel_tol))
    log_audit('lemma', report)
    return report


def audit_weil(primes, h: int = 1, seed: int = 0, samples: int = 2000,
               abs_tol: float = 1e-6) -> AuditReport:
    """
    For primes up to the exhaustive cap every (a, b) with a != 0 is checked
    against 2 sqrt(p), and every a = 0, b != 0 sum against the exact value -1.
    Larger primes are checked on `samples` random pairs.
    """
    cap = get_settings().weil_exhaustive_cap
    rng = np.random.default_rng(seed)
    report = AuditReport(
        name='weil', seed=seed,
        fieldnames=['p', 'mode', 'checks', 'violations', 'max_ratio', 'zero_row_deviation'])
    for p in primes:
        field = prime_field(p)
        bound = 2.0 * sqrt(p)
        checks = violations = 0
        worst = 0.0
        zero_row = kloosterman_row(0, h, field)[1:]
        deviation = float(np.max(np.abs(zero_row + 1.0)))
        checks += len(zero_row)
        violations += int(np.sum(np.abs(zero_row + 1.0) > 1e-9 * p))
        if p <= cap:
            mode = 'exhaustive'
            for a in range(1, p):
                magnitudes = np.abs(kloosterman_row(a, h, field))
                checks += p
                violations += int(np.sum(magnitudes > bound + abs_tol))
                worst = max(worst, float(magnitudes.max()) / bound)
        else:
            mode = 'sampled'
            for _ in range(samples):
                a, b = int(rng.integers(1, p)), int(rng.integers(0, p))
                value, _ = kloosterman(a, b, h, field)
                checks += 1
                violations += abs(value) > bound + abs_tol
                worst = max(worst, abs(value) / bound)
        report.add(
            dict(p=p, mode=mode, checks=checks, violations=violations,
                 max_ratio=f"{worst:.12g}", zero_row_deviation=f"{deviation:.3g}"),
            worst, violations=violations, checks=checks)
    log_audit('weil', report)
    return report


DEFAULT_L1_LENGTHS = (1, 0.25, 0.5, 1.0)


def audit_l1_claim(primes, lengths=DEFAULT_L1_LENGTHS, S: int = 0,
                   rel_tol: float = 1e-9) -> AuditReport:
    """
    Computes sum_{a != 0} |interval_sum(a, S, T)| for each (p, T) and reports
    its ratio against sqrt(p) log p and p log p. The only assertion is that
    the closed-form total matches term-by-term recomputation.
    Lengths are absolute ints or fractions of p.
    """
    report = AuditReport(
        name='l1', fieldnames=['p', 'S', 'T', 'l1', 'ratio_sqrt_log', 'ratio_p_log', 'below_sqrt_log'])
    for p in primes:
        field = prime_field(p)
        for value in lengths:
            T = resolve_size(value, p, p)
            l1 = interval_sum_l1(S, T, field)
            direct = sum(abs(direct_interval_sum(a, S, T, field)) for a in range(1, p))
            consistent = abs(l1 - direct) <= rel_tol * max(1.0, direct)
            ratio_sqrt = l1 / (sqrt(p) * log(p))
            report.add(
                dict(p=p, S=S, T=T, l1=f"{l1:.12g}", ratio_sqrt_log=f"{ratio_sqrt:.12g}",
                     ratio_p_log=f"{l1 / (p * log(p)):.12g}", below_sqrt_log=ratio_sqrt < 1),
                ratio_sqrt, violations=not consistent)
    log_audit('l1', report)
    return report
