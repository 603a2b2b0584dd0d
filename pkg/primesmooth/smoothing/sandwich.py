"""
Smoothed lower and upper counts. For each family the true count satisfies

    J' <= D * count <= J''

where J' (J'') counts solutions with every window shrunk (widened) by an
auxiliary shift and D is the number of shifts. Each double sum over shifts
separates into a dot product of window weights (see `window_weights`), so
one bracket costs O(p) array work regardless of the auxiliary lengths.
"""
from fractions import Fraction

import numpy as np
import param

from primesmooth.arith.field import GeneratorCtx, inverse_table
from primesmooth.base.model_base import Model
from primesmooth.counters.intervals import window_weights
from primesmooth.counters.queries import (
    HyperbolaBoxQuery, PowerBoxQuery, PowerDiffQuery, ProductIntervalQuery, SetIntervalQuery)
from primesmooth.errors import CapacityError, PreconditionError
from primesmooth.expsums.spectrum import max_nontrivial_spectrum
from primesmooth.logging import log_sandwich
from primesmooth.smoothing.params import (
    FAMILIES, SmoothingParams, choose_params_thm1, choose_params_thm2, choose_params_thm3,
    choose_params_thm4, choose_params_thm5)


class SandwichCounts(Model):
    """Integer sandwich j_prime <= divisor * count <= j_dprime"""
    family = param.Selector(objects=FAMILIES, default='J', constant=True)
    j_prime = param.Integer(default=0, bounds=(0, None), constant=True, doc="""
        Smoothed lower count""")
    j_dprime = param.Integer(default=0, bounds=(0, None), constant=True, doc="""
        Smoothed upper count""")
    divisor = param.Integer(default=1, bounds=(1, None), constant=True, doc="""
        Number of auxiliary shifts; the bracket on the count is j/divisor""")
    params = param.ClassSelector(class_=SmoothingParams, default=None, allow_None=True, constant=True)
    complemented = param.Boolean(default=False, constant=True, doc="""
        Whether the bracket was mapped back through a complement identity""")
    main_lower = param.ClassSelector(class_=Fraction, default=None, allow_None=True, constant=True, doc="""
        Main term of j_prime / divisor""")
    main_upper = param.ClassSelector(class_=Fraction, default=None, allow_None=True, constant=True, doc="""
        Main term of j_dprime / divisor""")

    def __init__(self, **params):
        super().__init__(**params)
        if self.j_prime > self.j_dprime:
            raise PreconditionError(
                f"Lower smoothed count {self.j_prime} exceeds upper {self.j_dprime}")

    @property
    def lower(self) -> Fraction:
        return Fraction(self.j_prime, self.divisor)

    @property
    def upper(self) -> Fraction:
        return Fraction(self.j_dprime, self.divisor)

    def contains(self, count: int) -> bool:
        return self.j_prime <= count * self.divisor <= self.j_dprime

    def __repr__(self):
        return (f"SandwichCounts({self.family}, {self.j_prime}/{self.divisor} .. "
                f"{self.j_dprime}/{self.divisor})")


def _require_tables(ctx: GeneratorCtx):
    if not ctx.has_tables:
        raise CapacityError(f"Smoothed power counts need discrete-log tables; p = {ctx.p} has none")


def _exponent_weights(ctx: GeneratorCtx, base: int, length: int, shifts) -> np.ndarray:
    """Residue weights A[r] = sum over shifts of #{x in window: g^x = r}"""
    weights = window_weights(base, length, shifts, ctx.p - 1)
    out = np.zeros(ctx.p, dtype=np.int64)
    out[ctx.power_table] = weights
    return out


def _shifts(n: int, sign: int = 1) -> np.ndarray:
    return sign * np.arange(1, n + 1, dtype=np.int64)


def _sandwich(family, params, j_prime, j_dprime, divisor, mains) -> SandwichCounts:
    counts = SandwichCounts(
        family=family, j_prime=int(j_prime), j_dprime=int(j_dprime), divisor=divisor,
        params=params, main_lower=mains[0], main_upper=mains[1])
    log_sandwich(family, counts)
    return counts


def smoothed_main_term(family: str, query, params: SmoothingParams) -> tuple[Fraction, Fraction]:
    """Main terms of J'/D and J''/D, i.e. the zero-frequency part of each smoothed count"""
    p = query.p
    if family == 'J':
        K, N, K1, N1 = query.K, query.N, params.K1, params.N1
        return Fraction((K - K1) * (N - N1), p), Fraction((K + K1) * (N + N1), p)
    if family == 'J1':
        N, N1 = query.N, params.N1
        return Fraction((N - 2 * N1) * (N - N1), p), Fraction((N + 2 * N1) * (N + N1), p)
    if family == 'J2':
        uv, T, T1 = len(query.U) * len(query.V), query.interval.T, params.T1
        return Fraction(uv * (T - T1), p), Fraction(uv * (T + T1), p)
    if family == 'J3':
        size, T, T1 = len(query.X), query.interval.T, params.T1
        return Fraction(size * (T - T1), p), Fraction(size * (T + T1), p)
    if family == 'J4':
        Tx, Ty, K = query.x_range.T, query.y_range.T, params.K
        return (Fraction((Tx - K) * (Ty - K) * (p - 1), p * p),
                Fraction((Tx + K) * (Ty + K) * (p - 1), p * p))
    raise PreconditionError(f"Unknown family {family!r}")


def smoothed_counts_thm1(q: PowerBoxQuery, params: SmoothingParams) -> SandwichCounts:
    """
    J'  = sum_{z<=K1, t<=N1} J(H+z, K-K1, M+t, N-N1)
    J'' = sum_{z<=K1, t<=N1} J(H-z, K+K1, M-t, N+N1)
    """
    K1, N1 = params.K1, params.N1
    if not (K1 < q.K and N1 < q.N):
        raise PreconditionError(f"Need K1 < K and N1 < N, got K1 = {K1}, N1 = {N1} for K = {q.K}, N = {q.N}")
    ctx, p = q.ctx, q.p
    _require_tables(ctx)
    lower = np.dot(
        window_weights(q.H, q.K - K1, _shifts(K1), p - 1),
        window_weights(q.M, q.N - N1, _shifts(N1), p)[ctx.power_table])
    upper = np.dot(
        window_weights(q.H, q.K + K1, _shifts(K1, -1), p - 1),
        window_weights(q.M, q.N + N1, _shifts(N1, -1), p)[ctx.power_table])
    return _sandwich('J', params, lower, upper, K1 * N1, smoothed_main_term('J', q, params))


def _diff_correlation(A: np.ndarray, B: np.ndarray, targets) -> int:
    """sum over c in targets of #{(r, s) weighted: r - s = c (mod p)}"""
    p = len(A)
    idx = np.arange(p, dtype=np.int64)
    return sum(int(np.dot(A, B[(idx - c) % p])) for c in targets)


def smoothed_counts_thm2(q: PowerDiffQuery, params: SmoothingParams) -> SandwichCounts:
    """
    J1'  = #{x <= N-2N1, y <= N-N1, z, t <= N1: g^{x+z} - g^y = h g^{-t}}
    J1'' = #{x <= N+2N1, y <= N+N1, z, t <= N1: g^{x-z} - g^y = h g^{t}}
    """
    N, N1 = q.N, params.N1
    if not 4 * N1 <= N:
        raise PreconditionError(f"Need 4 N1 <= N, got N1 = {N1}, N = {N}")
    ctx, p, h = q.ctx, q.p, q.h % q.p
    _require_tables(ctx)
    lower = _diff_correlation(
        _exponent_weights(ctx, 0, N - 2 * N1, _shifts(N1)),
        _exponent_weights(ctx, 0, N - N1, [0]),
        [h * ctx.power(-t) % p for t in range(1, N1 + 1)])
    upper = _diff_correlation(
        _exponent_weights(ctx, 0, N + 2 * N1, _shifts(N1, -1)),
        _exponent_weights(ctx, 0, N + N1, [0]),
        [h * ctx.power(t) % p for t in range(1, N1 + 1)])
    return _sandwich('J1', params, lower, upper, N1 * N1, smoothed_main_term('J1', q, params))


def _product_histogram(p: int, U: np.ndarray, V: np.ndarray) -> np.ndarray:
    hist = np.zeros(p, dtype=np.int64)
    for x in U:
        np.add.at(hist, int(x) * V % p, 1)
    return hist


def smoothed_counts_thm3(q: ProductIntervalQuery, params: SmoothingParams) -> SandwichCounts:
    """
    J2'  = sum_{t<=T1} J2(U, V, S+t, T-T1)
    J2'' = sum_{t<=T1} J2(U, V, S-t, T+T1)
    """
    T, T1, S, p = q.interval.T, params.T1, q.interval.S, q.p
    if not 2 * T1 <= T:
        raise PreconditionError(f"Need 2 T1 <= T, got T1 = {T1}, T = {T}")
    hist = _product_histogram(p, q.U.array, q.V.array)
    lower = np.dot(hist, window_weights(S, T - T1, _shifts(T1), p))
    upper = np.dot(hist, window_weights(S, T + T1, _shifts(T1, -1), p))
    return _sandwich('J2', params, lower, upper, T1, smoothed_main_term('J2', q, params))


def smoothed_counts_thm4(q: SetIntervalQuery, params: SmoothingParams) -> SandwichCounts:
    """
    J3'  = sum_{t<=T1} J3(X, S+t, T-T1)
    J3'' = sum_{t<=T1} J3(X, S-t, T+T1)
    """
    T, T1, S, p = q.interval.T, params.T1, q.interval.S, q.p
    if not 2 * T1 <= T:
        raise PreconditionError(f"Need 2 T1 <= T, got T1 = {T1}, T = {T}")
    X = q.X.array
    lower = window_weights(S, T - T1, _shifts(T1), p)[X].sum()
    upper = window_weights(S, T + T1, _shifts(T1, -1), p)[X].sum()
    return _sandwich('J3', params, lower, upper, T1, smoothed_main_term('J3', q, params))


def smoothed_counts_thm5(q: HyperbolaBoxQuery, params: SmoothingParams) -> SandwichCounts:
    """
    J4'  = sum_{u, v<=K} J4 over the box (Sx+u, Tx-K) x (Sy+v, Ty-K)
    J4'' = sum_{u, v<=K} J4 over the box (Sx-u, Tx+K) x (Sy-v, Ty+K)
    """
    K, xr, yr, p = params.K, q.x_range, q.y_range, q.p
    if not K < min(xr.T, yr.T):
        raise PreconditionError(f"Need K < min(Tx, Ty), got K = {K}, Tx = {xr.T}, Ty = {yr.T}")
    # y = h / x over the units
    partner = q.h % p * inverse_table(p)[1:] % p
    lower = np.dot(
        window_weights(xr.S, xr.T - K, _shifts(K), p)[1:],
        window_weights(yr.S, yr.T - K, _shifts(K), p)[partner])
    upper = np.dot(
        window_weights(xr.S, xr.T + K, _shifts(K, -1), p)[1:],
        window_weights(yr.S, yr.T + K, _shifts(K, -1), p)[partner])
    return _sandwich('J4', params, lower, upper, K * K, smoothed_main_term('J4', q, params))


SMOOTHERS = {
    'J': smoothed_counts_thm1,
    'J1': smoothed_counts_thm2,
    'J2': smoothed_counts_thm3,
    'J3': smoothed_counts_thm4,
    'J4': smoothed_counts_thm5,
}


def normalize(query):
    """
    Reduces long windows with complement identities. Returns (reduced, offset,
    sign) with count(query) = offset + sign * count(reduced).

    J:  N > p/2 uses J(H, K, M, N) = K - J(H, K, M+N, p-N); then K > p/2
        uses J(H, K, I) = #(I minus 0) - J(H+K, p-1-K, I).
    J2: T > p/2 uses J2 = |U||V| - J2(S+T, p-T); J3 likewise with |X|.
    J1 and J4 are returned unchanged, and so is any window whose complement
    would be shorter than 2 (a length-1 window cannot be smoothed).
    """
    p = query.p
    if isinstance(query, PowerBoxQuery):
        offset, sign, q = 0, 1, query
        if 2 * q.N > p and p - q.N >= 2:
            offset, sign = q.K, -1
            q = PowerBoxQuery(ctx=q.ctx, H=q.H, K=q.K, M=q.M + q.N, N=p - q.N)
        if 2 * q.K > p and p - 1 - q.K >= 2:
            nonzero = q.N - (1 if (q.M + q.N) // p > q.M // p else 0)
            offset, sign = offset + sign * nonzero, -sign
            q = PowerBoxQuery(ctx=q.ctx, H=q.H + q.K, K=p - 1 - q.K, M=q.M, N=q.N)
        return q, offset, sign
    if isinstance(query, (ProductIntervalQuery, SetIntervalQuery)):
        T = query.interval.T
        if 2 * T > p and p - T >= 2:
            interval = query.interval.shifted(T, p - 2 * T)
            if isinstance(query, ProductIntervalQuery):
                total = len(query.U) * len(query.V)
                reduced = ProductIntervalQuery(field=query.field, U=query.U, V=query.V, interval=interval)
            else:
                total = len(query.X)
                reduced = SetIntervalQuery(field=query.field, X=query.X, interval=interval)
            return reduced, total, -1
    return query, 0, 1


def choose_params(query) -> SmoothingParams:
    """Branch selection for a (normalized) query"""
    p = query.p
    if query.kind == 'J':
        return choose_params_thm1(p, query.N, query.K)
    if query.kind == 'J1':
        return choose_params_thm2(p, query.N)
    if query.kind == 'J2':
        return choose_params_thm3(p, len(query.U), len(query.V), query.interval.T)
    if query.kind == 'J3':
        delta = max_nontrivial_spectrum(query.X, query.field).delta
        return choose_params_thm4(p, query.interval.T, delta)
    return choose_params_thm5(p, min(query.x_range.T, query.y_range.T))


def bracket(query) -> SandwichCounts:
    """
    Normalizes, chooses parameters, smooths, and maps the resulting
    sandwich back onto the original count.
    """
    reduced, offset, sign = normalize(query)
    params = choose_params(reduced)
    inner = SMOOTHERS[reduced.kind](reduced, params)
    if reduced is query:
        return inner
    D = inner.divisor
    if sign > 0:
        j_prime, j_dprime = offset * D + inner.j_prime, offset * D + inner.j_dprime
        mains = (offset + inner.main_lower, offset + inner.main_upper)
    else:
        j_prime, j_dprime = offset * D - inner.j_dprime, offset * D - inner.j_prime
        mains = (offset - inner.main_upper, offset - inner.main_lower)
    counts = SandwichCounts(
        family=query.kind, j_prime=max(0, j_prime), j_dprime=j_dprime, divisor=D,
        params=params, complemented=True, main_lower=mains[0], main_upper=mains[1])
    log_sandwich(query.kind, counts)
    return counts
