from math import sqrt

import numpy as np

from primesmooth.arith.field import PrimeField, inverse_table
from primesmooth.config import get_settings
from primesmooth.errors import PreconditionError, RangeError
from primesmooth.expsums.roots import compensated_sum, roots_of_unity


def _inverses(p: int) -> np.ndarray:
    if p <= get_settings().dlog_table_cap:
        return inverse_table(p)
    return np.array([0] + [pow(z, -1, p) for z in range(1, p)], dtype=np.int64)


def _check(p: int, h: int):
    if p < 3:
        raise RangeError(f"Kloosterman sums need p >= 3, got {p}")
    if h % p == 0:
        raise PreconditionError(f"Expected h != 0 mod {p}, got {h}")


def kloosterman(a: int, b: int, h: int, field: PrimeField) -> tuple[complex, float]:
    """
    sum_{z=1}^{p-1} e^{2 pi i (b z - a h z^{-1}) / p} and the Weil bound 2 sqrt(p).
    The bound holds for a != 0; for a = 0, b != 0 the sum is exactly -1.
    """
    p = field.p
    _check(p, h)
    z = np.arange(1, p, dtype=np.int64)
    c = (a * h) % p
    phases = ((b % p) * z - c * _inverses(p)[1:]) % p
    return compensated_sum(roots_of_unity(p)[phases]), 2.0 * sqrt(p)


def kloosterman_row(a: int, h: int, field: PrimeField) -> np.ndarray:
    """
    kloosterman(a, b, h) for every b in [0, p-1]. Rows are reduced with
    numpy's pairwise summation, so each entry is within about
    (p-1) log2(p) machine epsilons of the compensated scalar value; the
    Weil audit tolerance 1e-6 sits far above that.
    """
    p = field.p
    _check(p, h)
    z = np.arange(1, p, dtype=np.int64)
    b = np.arange(p, dtype=np.int64)
    c = (a * h) % p
    phases = (b[:, None] * z[None, :] - c * _inverses(p)[1:][None, :]) % p
    return roots_of_unity(p)[phases].sum(axis=1)
