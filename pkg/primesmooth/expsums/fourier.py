"""
Counting through characters: #{x in X : x in S+1..S+T (mod p)} equals
(1/p) sum_a spec_X(a) * conj(I(a)), I(a) the interval sum. This is the
representation the smoothing argument starts from; here it serves as an
analytic cross-check on the exact counters.
"""
import numpy as np

from primesmooth.arith.field import PrimeField
from primesmooth.expsums.interval import interval_sums
from primesmooth.expsums.spectrum import weighted_spectrum


def fourier_count(elements, S: int, T: int, field: PrimeField) -> float:
    """Character-sum evaluation of the number of elements in the reduced interval"""
    p = field.p
    spectrum = weighted_spectrum(np.asarray(elements, dtype=np.int64), p)
    sums = interval_sums(S, T, field)
    return float(np.real(np.sum(spectrum * np.conj(sums)))) / p


def fourier_count_J3(X, S: int, T: int, field: PrimeField) -> float:
    return fourier_count(getattr(X, 'elements', X), S, T, field)


def fourier_count_J(q) -> float:
    """
    J for a PowerBoxQuery: the exponents H+1..H+K give K residues g^x
    (distinct since K < p - 1 or a full period), counted in [M+1, M+N].
    """
    residues = q.ctx.powers(q.H, q.K)
    return fourier_count(residues, q.M, q.N, q.ctx.field)
