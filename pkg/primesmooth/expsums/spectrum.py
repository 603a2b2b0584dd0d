import numpy as np
import param

from primesmooth.arith.field import PrimeField
from primesmooth.base.model_base import Model
from primesmooth.config import get_settings
from primesmooth.errors import CapacityError, DomainError
from primesmooth.expsums.roots import roots_of_unity

# Frequencies per block so a block's phase matrix stays near 2^20 entries
BLOCK_ENTRIES = 2**20
# Magnitudes within TIE_TOL * |X| of the maximum count as tied
TIE_TOL = 1e-9


class SpectrumSummary(Model):
    """Largest nontrivial Fourier coefficient of a set, normalized by its size"""
    set_size = param.Integer(default=1, bounds=(1, None), constant=True)
    delta = param.Number(default=0.0, bounds=(0.0, 1.0), constant=True, doc="""
        max_{a != 0} |sum_{x in X} e(ax/p)| / |X|""")
    argmax_a = param.Integer(default=1, bounds=(1, None), constant=True, doc="""
        Smallest frequency attaining the maximum""")


def _elements(X) -> np.ndarray:
    return np.asarray(getattr(X, 'elements', X), dtype=np.int64)


def weighted_spectrum(elements: np.ndarray, p: int) -> np.ndarray:
    """
    sum_{x} e^{2 pi i a x / p} over the given residues (repeats allowed), for
    every a. Evaluated directly in frequency blocks; blocks are reduced in
    order so the result does not depend on block size. Each block row is a
    pairwise sum, accurate to about n log2(n) machine epsilons for n
    residues; the spectral bounds checked downstream use 1e-6.
    """
    cap = get_settings().spectrum_cap
    if p > cap:
        raise CapacityError(f"p = {p} exceeds the spectrum cap {cap}")
    out = np.zeros(p, dtype=np.complex128)
    n = len(elements)
    if n == 0:
        return out
    roots = roots_of_unity(p)
    elements = elements % p
    step = max(1, BLOCK_ENTRIES // n)
    for start in range(0, p, step):
        a = np.arange(start, min(start + step, p), dtype=np.int64)
        out[start:start + len(a)] = roots[(a[:, None] * elements[None, :]) % p].sum(axis=1)
    out[0] = n
    return out


def set_spectrum(X, field: PrimeField) -> np.ndarray:
    """Entry a holds sum_{x in X} e^{2 pi i a x / p}; entry 0 is |X| exactly."""
    return weighted_spectrum(_elements(X), field.p)


def max_nontrivial_spectrum(X, field: PrimeField) -> SpectrumSummary:
    elements = _elements(X)
    if len(elements) == 0:
        raise DomainError("Delta is undefined for the empty set")
    spectrum = weighted_spectrum(elements, field.p)
    magnitudes = np.abs(spectrum[1:])
    # ties within rounding go to the smallest frequency
    top = magnitudes.max()
    idx = int(np.flatnonzero(magnitudes >= top - TIE_TOL * len(elements))[0])
    delta = min(1.0, float(top) / len(elements))
    return SpectrumSummary(set_size=len(elements), delta=delta, argmax_a=idx + 1)
