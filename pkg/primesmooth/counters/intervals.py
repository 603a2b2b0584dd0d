from functools import cached_property

import numpy as np
import param

from primesmooth.base.model_base import Model
from primesmooth.common.param import ResidueList
from primesmooth.errors import RangeError


def interval_hits(r, S: int, T: int, p: int):
    """
    Number of j in [1, T] with S + j = r (mod p). This is membership (0/1) of r
    in the reduced interval when T <= p; longer integer windows, which only
    occur inside the smoothing machinery, count with multiplicity.
    Works on scalars and on integer arrays.
    """
    j0 = (r - S - 1) % p + 1
    if np.isscalar(j0):
        return 0 if j0 > T else (T - j0) // p + 1
    return np.where(j0 <= T, (T - j0) // p + 1, 0)


class ResidueInterval(Model):
    """The integers S+1..S+T read modulo p (wrap-around allowed)"""
    S = param.Integer(default=0, constant=True, doc="""
        Offset; any integer""")
    T = param.Integer(default=1, bounds=(1, None), constant=True, doc="""
        Length; queries additionally require T <= p""")

    def __init__(self, S: int = 0, T: int = 1, **params):
        super().__init__(S=int(S), T=int(T), **params)

    def contains(self, r: int, p: int) -> bool:
        return interval_hits(r, self.S, self.T, p) > 0

    def residues(self, p: int) -> np.ndarray:
        """Reduced members in interval order"""
        return (self.S + 1 + np.arange(self.T, dtype=np.int64)) % p

    def shifted(self, offset: int, extra: int = 0) -> 'ResidueInterval':
        """S+offset+1 .. S+offset+T+extra"""
        return ResidueInterval(S=self.S + offset, T=self.T + extra)

    def check_length(self, p: int, label: str = 'interval'):
        if not 1 <= self.T <= p:
            raise RangeError(f"{label} length must satisfy 1 <= T <= p = {p}, got {self.T}")

    def __repr__(self):
        return f"ResidueInterval(S={self.S}, T={self.T})"


class ResidueSet(Model):
    """A set of residues in [0, p-1] kept as a strictly increasing list"""
    elements = ResidueList(default=[], constant=True, doc="""
        Distinct residues in increasing order""")

    def __init__(self, elements=(), **params):
        super().__init__(elements=sorted(int(x) for x in elements), **params)

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.elements, dtype=np.int64)

    def __len__(self):
        return len(self.elements)

    def check_modulus(self, p: int, label: str = 'set'):
        if self.elements and self.elements[-1] >= p:
            raise RangeError(f"{label} has residue {self.elements[-1]} >= p = {p}")

    @classmethod
    def quadratic_residues(cls, p: int) -> 'ResidueSet':
        """The (p-1)/2 nonzero squares mod p"""
        x = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
        return cls(np.unique(x * x % p).tolist())

    @classmethod
    def random(cls, p: int, size: int, rng: np.random.Generator) -> 'ResidueSet':
        if not 0 <= size <= p:
            raise RangeError(f"Set size must lie in [0, {p}], got {size}")
        return cls(rng.choice(p, size=size, replace=False).tolist())

    def __repr__(self):
        return f"ResidueSet(size={len(self)})"


def window_weights(base: int, length: int, shifts, m: int) -> np.ndarray:
    """
    w[k] = sum over t in shifts of #{j in [1, length]: base + t + j = k (mod m)},
    for k in [0, m-1]. Summing a shifted window count over t is then a
    single dot product against w.
    """
    shifts = np.asarray(shifts, dtype=np.int64)
    full, rem = divmod(length, m)
    weights = np.full(m, full * len(shifts), dtype=np.int64)
    if rem and len(shifts):
        starts = (base + shifts + 1) % m
        ends = starts + rem
        wrap = ends > m
        diff = np.zeros(m + 1, dtype=np.int64)
        np.add.at(diff, starts, 1)
        np.add.at(diff, np.where(wrap, m, ends), -1)
        diff[0] += int(wrap.sum())
        np.add.at(diff, ends[wrap] - m, -1)
        weights += np.cumsum(diff)[:m]
    return weights
