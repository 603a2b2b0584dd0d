import cmath
from math import fsum, pi, sin

import numpy as np

from primesmooth.arith.field import PrimeField
from primesmooth.config import get_settings
from primesmooth.errors import RangeError
from primesmooth.expsums.roots import compensated_sum, roots_of_unity


def _check_length(T: int, p: int):
    if not 1 <= T <= p:
        raise RangeError(f"Interval length must satisfy 1 <= T <= p = {p}, got {T}")


def interval_sum(a: int, S: int, T: int, field: PrimeField) -> complex:
    """
    sum_{n=S+1}^{S+T} e^{2 pi i a n / p} in closed form:
    e^{i pi a (2S+T+1)/p} * sin(pi a T/p) / sin(pi a/p) for a != 0, T for a = 0.
    """
    p = field.p
    _check_length(T, p)
    a %= p
    if a == 0:
        return complex(T, 0.0)
    if a * T % p == 0:
        return 0j
    magnitude = sin(pi * ((a * T) % (2 * p)) / p) / sin(pi * a / p)
    phase = (a * (2 * (S % p) + T + 1)) % (2 * p)
    return cmath.exp(1j * pi * phase / p) * magnitude


def direct_interval_sum(a: int, S: int, T: int, field: PrimeField) -> complex:
    """Term-by-term compensated evaluation; the oracle for the closed form"""
    p = field.p
    _check_length(T, p)
    exps = ((a % p) * ((S + 1 + np.arange(T, dtype=np.int64)) % p)) % p
    return compensated_sum(roots_of_unity(p)[exps])


def interval_sums(S: int, T: int, field: PrimeField) -> np.ndarray:
    """interval_sum for every frequency a in [0, p-1] at once"""
    p = field.p
    _check_length(T, p)
    if p > get_settings().spectrum_cap:
        return np.array([interval_sum(a, S, T, field) for a in range(p)], dtype=np.complex128)
    a = np.arange(p, dtype=np.int64)
    out = np.empty(p, dtype=np.complex128)
    out[0] = T
    nz = a[1:]
    num = np.sin(np.pi * ((nz * T) % (2 * p)) / p)
    den = np.sin(np.pi * nz / p)
    phase = (nz * (2 * (S % p) + T + 1)) % (2 * p)
    out[1:] = np.exp(1j * np.pi * phase / p) * (num / den)
    out[1:][(nz * T) % p == 0] = 0.0
    return out


def interval_sum_l1(S: int, T: int, field: PrimeField) -> float:
    """sum_{a=1}^{p-1} |interval_sum(a, S, T)|"""
    sums = interval_sums(S, T, field)
    return fsum(np.abs(sums[1:]).tolist())


def parseval_defect(S: int, T: int, field: PrimeField) -> float:
    """|sum_a |interval_sum(a)|^2 - pT|; zero up to roundoff"""
    sums = interval_sums(S, T, field)
    return abs(fsum((np.abs(sums) ** 2).tolist()) - field.p * T)
