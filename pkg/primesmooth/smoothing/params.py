"""
Branch rules for the auxiliary smoothing lengths. Every comparison against
an irrational threshold (9 p^{3/2}, 10 p^{3/4}, 9 (puv)^{1/2}, p^{3/4}) is
done on integer powers of both sides, so branch selection is exact.
Where a range of admissible integers is allowed, the smallest one is taken.
"""
from math import ceil, isqrt, sqrt

import param

from primesmooth.base.model_base import Model
from primesmooth.errors import PreconditionError, RangeError

FAMILIES = ['J', 'J1', 'J2', 'J3', 'J4']


class SmoothingParams(Model):
    """Auxiliary lengths of one smoothing argument and the branch that produced them"""
    family = param.Selector(objects=FAMILIES, default='J', constant=True, doc="""
        Counted quantity the parameters belong to""")
    branch = param.Selector(objects=['SMALL', 'LARGE'], default='SMALL', constant=True)
    N1 = param.Integer(default=None, allow_None=True, bounds=(1, None), constant=True, doc="""
        Residue-window length (J) or exponent window (J1)""")
    K1 = param.Integer(default=None, allow_None=True, bounds=(1, None), constant=True, doc="""
        Exponent-window length (J)""")
    T1 = param.Integer(default=None, allow_None=True, bounds=(1, None), constant=True, doc="""
        Interval-window length (J2, J3)""")
    K = param.Integer(default=None, allow_None=True, bounds=(1, None), constant=True, doc="""
        Box-window length (J4)""")
    epsilon = param.Number(default=None, allow_None=True, constant=True, doc="""
        Scale p^{3/4}/(NK)^{1/2} of the LARGE branch for J""")

    def __repr__(self):
        lengths = ', '.join(
            f"{k}={getattr(self, k)}" for k in ('N1', 'K1', 'T1', 'K') if getattr(self, k) is not None)
        return f"SmoothingParams({self.family}, {self.branch}, {lengths})"


def floor_fourth_root(x: int) -> int:
    """floor(x^{1/4}) exactly"""
    return isqrt(isqrt(x))


def ceil_root(num: int, den: int, k: int) -> int:
    """Smallest integer n >= 1 with n^k * den >= num"""
    n = max(1, int((num / den) ** (1.0 / k)))
    while n > 1 and (n - 1) ** k * den >= num:
        n -= 1
    while n**k * den < num:
        n += 1
    return n


def choose_params_thm1(p: int, N: int, K: int) -> SmoothingParams:
    if not (1 <= N < p and 1 <= K < p):
        raise RangeError(f"Expected 1 <= N, K < p = {p}, got N = {N}, K = {K}")
    # NK < 9 p^{3/2}  <=>  (NK)^2 < 81 p^3
    if (N * K) ** 2 <= 81 * p**3:
        return SmoothingParams(family='J', branch='SMALL', N1=max(1, N // 2), K1=max(1, K // 2))
    epsilon = p**0.75 / sqrt(N * K)
    # eps N = p^{3/4} (N/K)^{1/2}: smallest n with n^4 K^2 >= p^3 N^2
    N1 = ceil_root(p**3 * N**2, K**2, 4)
    K1 = ceil_root(p**3 * K**2, N**2, 4)
    return SmoothingParams(family='J', branch='LARGE', N1=N1, K1=K1, epsilon=epsilon)


def choose_params_thm2(p: int, N: int) -> SmoothingParams:
    if not 1 <= N < p:
        raise RangeError(f"Expected 1 <= N < p = {p}, got {N}")
    # N <= 10 p^{3/4}  <=>  N^4 <= 10^4 p^3
    if N**4 <= 10**4 * p**3:
        return SmoothingParams(family='J1', branch='SMALL', N1=max(1, N // 4))
    return SmoothingParams(family='J1', branch='LARGE', N1=floor_fourth_root(p**3))


def choose_params_thm3(p: int, u: int, v: int, T: int) -> SmoothingParams:
    if not 1 <= T <= p:
        raise RangeError(f"Expected 1 <= T <= p = {p}, got {T}")
    if u < 1 or v < 1:
        raise RangeError(f"Set sizes must be positive, got u = {u}, v = {v}")
    # uvT/p <= 9 (puv)^{1/2}  <=>  uv T^2 <= 81 p^3
    if u * v * T * T <= 81 * p**3:
        return SmoothingParams(family='J2', branch='SMALL', T1=max(1, T // 2))
    # p (T/uv)^{1/3} <= T1: smallest t with t^3 uv >= p^3 T
    T1 = ceil_root(p**3 * T, u * v, 3)
    if not 2 * T1 < T:
        raise PreconditionError(f"LARGE-branch T1 = {T1} is not below T/2 = {T / 2}")
    return SmoothingParams(family='J2', branch='LARGE', T1=T1)


def choose_params_thm4(p: int, T: int, delta: float) -> SmoothingParams:
    """
    T1 balances |X| T1/p against |X| Delta (T/T1)^{1/2}, giving
    T1 = (p Delta)^{2/3} T^{1/3}; when that does not fit under T/2 the
    window is T/2 and the error is of order |X| Delta.
    """
    if not 1 <= T <= p:
        raise RangeError(f"Expected 1 <= T <= p = {p}, got {T}")
    if not 0.0 <= delta <= 1.0:
        raise RangeError(f"Expected 0 <= delta <= 1, got {delta}")
    candidate = ceil((p * delta) ** (2.0 / 3.0) * T ** (1.0 / 3.0))
    if 1 <= candidate and 2 * candidate <= T:
        return SmoothingParams(family='J3', branch='LARGE', T1=candidate)
    return SmoothingParams(family='J3', branch='SMALL', T1=max(1, T // 2))


def choose_params_thm5(p: int, N: int) -> SmoothingParams:
    if not 2 <= N < p:
        raise RangeError(f"Expected 2 <= N < p = {p}, got {N}")
    # N > p^{3/4}  <=>  N^4 > p^3
    if N**4 > p**3:
        return SmoothingParams(family='J4', branch='LARGE', K=floor_fourth_root(p**3))
    return SmoothingParams(family='J4', branch='SMALL', K=N - 1)
