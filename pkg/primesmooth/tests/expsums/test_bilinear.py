import numpy as np
import pytest

from primesmooth.errors import PreconditionError, RangeError
from primesmooth.expsums.bilinear import BilinearWeights, vinogradov_double_sum


def test_constant_weights():
    """With nu = rho = 1 the double sum is m and the certificate m^{3/2}"""
    m = 31
    w = BilinearWeights(np.ones(m), np.ones(m))
    value, certificate = vinogradov_double_sum(w, 5)
    assert value == pytest.approx(m)
    assert certificate == pytest.approx(m ** 1.5)


def test_random_weights_within_certificate():
    rng = np.random.default_rng(11)
    for _ in range(50):
        m = int(rng.integers(2, 120))
        a = int(rng.integers(1, m + 1))
        if np.gcd(a, m) != 1:
            continue
        nu = rng.normal(size=m) + 1j * rng.normal(size=m)
        rho = np.exp(2j * np.pi * rng.random(m))
        value, certificate = vinogradov_double_sum(BilinearWeights(nu, rho), a)
        assert abs(value) <= certificate * (1 + 1e-9)


def test_preconditions():
    w = BilinearWeights(np.ones(12), np.ones(12))
    with pytest.raises(PreconditionError):
        vinogradov_double_sum(w, 4)
    with pytest.raises(RangeError):
        BilinearWeights(np.ones(5), np.ones(6))
    with pytest.raises(RangeError):
        BilinearWeights([1.0, np.nan], [1.0, 1.0])
