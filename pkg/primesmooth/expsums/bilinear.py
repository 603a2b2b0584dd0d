from math import gcd, sqrt

import numpy as np
import param

from primesmooth.base.model_base import Model
from primesmooth.errors import PreconditionError, RangeError
from primesmooth.expsums.roots import compensated_sum, roots_of_unity


class BilinearWeights(Model):
    """Complex weights nu(x), rho(y) on Z/mZ with their power sums X and Y"""
    m = param.Integer(default=2, bounds=(2, None), constant=True, doc="""
        The modulus""")
    nu = param.Array(constant=True, doc="Weights nu(x), x in [0, m-1]")
    rho = param.Array(constant=True, doc="Weights rho(y), y in [0, m-1]")
    X = param.Number(default=0.0, bounds=(0.0, None), constant=True, doc="sum |nu(x)|^2")
    Y = param.Number(default=0.0, bounds=(0.0, None), constant=True, doc="sum |rho(y)|^2")

    def __init__(self, nu, rho, **params):
        nu = np.asarray(nu, dtype=np.complex128)
        rho = np.asarray(rho, dtype=np.complex128)
        if nu.shape != rho.shape or nu.ndim != 1:
            raise RangeError(f"nu and rho must be equal-length vectors, got {nu.shape} and {rho.shape}")
        if not (np.all(np.isfinite(nu)) and np.all(np.isfinite(rho))):
            raise RangeError("Weights must be finite")
        super().__init__(
            m=len(nu), nu=nu, rho=rho,
            X=float(np.sum(np.abs(nu) ** 2)), Y=float(np.sum(np.abs(rho) ** 2)),
            **params)


def vinogradov_double_sum(w: BilinearWeights, a: int) -> tuple[complex, float]:
    """
    sum_x sum_y nu(x) rho(y) e^{2 pi i a x y / m} together with the
    certificate sqrt(m X Y) that bounds its modulus when gcd(a, m) = 1.
    """
    m = w.m
    if gcd(a, m) != 1:
        raise PreconditionError(f"Expected gcd(a, m) = 1, got a = {a}, m = {m}")
    x = np.arange(m, dtype=np.int64)
    phases = ((a % m) * np.outer(x, x)) % m
    terms = w.nu[:, None] * roots_of_unity(m)[phases] * w.rho[None, :]
    value = compensated_sum(terms.ravel())
    return value, sqrt(m * w.X * w.Y)
