from math import sqrt

import numpy as np
import pytest

from primesmooth.arith.field import prime_field
from primesmooth.arith.primes import small_primes
from primesmooth.errors import PreconditionError, RangeError
from primesmooth.expsums.kloosterman import kloosterman, kloosterman_row
from primesmooth.expsums.roots import compensated_sum, roots_of_unity


def test_zero_frequency_row():
    field = prime_field(31)
    for b in range(1, 31):
        value, _ = kloosterman(0, b, 1, field)
        assert value == pytest.approx(-1, abs=1e-9)
    value, _ = kloosterman(0, 0, 1, field)
    assert value == pytest.approx(30)


@pytest.mark.parametrize('h', [1, 2, 30])
def test_weil_bound(h):
    field = prime_field(31)
    for a in range(1, 31):
        row = kloosterman_row(a, h, field)
        assert np.all(np.abs(row) <= 2 * sqrt(31) + 1e-6)
        # z -> -z maps the sum to its conjugate
        assert np.all(np.abs(row.imag) <= 1e-9)


def test_row_matches_scalar():
    field = prime_field(37)
    row = kloosterman_row(5, 3, field)
    for b in [0, 1, 20, 36]:
        value, bound = kloosterman(5, b, 3, field)
        assert abs(row[b] - value) <= 1e-9
        assert bound == pytest.approx(2 * sqrt(37))


def test_preconditions():
    with pytest.raises(PreconditionError):
        kloosterman(1, 1, 31, prime_field(31))
    with pytest.raises(RangeError):
        kloosterman(1, 1, 1, prime_field(2))


@pytest.mark.parametrize('p', [int(q) for q in small_primes(62) if q >= 3])
def test_conjugate_symmetry(p):
    """kloosterman(a, b) = conj(kloosterman(-a, -b)) for every (a, b)"""
    field = prime_field(p)
    b = np.arange(p)
    for a in range(p):
        row = kloosterman_row(a, 1, field)
        mirrored = kloosterman_row(-a % p, 1, field)[(-b) % p]
        assert np.max(np.abs(row - np.conj(mirrored))) <= 1e-9


def test_row_within_pairwise_tolerance():
    """Pairwise row sums stay within n log2(n) epsilons of the compensated value"""
    p = 4093
    field = prime_field(p)
    inverses = np.array([0] + [pow(z, -1, p) for z in range(1, p)])
    z = np.arange(1, p)
    row = kloosterman_row(7, 11, field)
    tol = (p - 1) * np.log2(p) * np.finfo(float).eps
    for b in [0, 1, 2000, 4092]:
        phases = (b * z - 77 * inverses[1:]) % p
        assert abs(row[b] - compensated_sum(roots_of_unity(p)[phases])) <= tol
