from functools import lru_cache
from math import fsum

import numpy as np

from primesmooth.logging import log_table


@lru_cache(maxsize=32)
def roots_of_unity(m: int) -> np.ndarray:
    """
    e^{2 pi i k / m} for k in [0, m-1]. Every sum over residues mod m indexes
    this one table so rounding is consistent across operations.
    """
    k = np.arange(m, dtype=np.float64)
    angle = 2.0 * np.pi * k / m
    table = np.cos(angle) + 1j * np.sin(angle)
    table[0] = 1.0
    log_table('roots', m, m)
    table.setflags(write=False)
    return table


def compensated_sum(values) -> complex:
    """Error-free (fsum) accumulation of real and imaginary parts"""
    values = np.asarray(values, dtype=np.complex128)
    return complex(fsum(values.real.tolist()), fsum(values.imag.tolist()))
