"""
Literal evaluation of the smoothed counts, looping over every variable
including the auxiliary shifts. Only for cross-checking small cases.
"""
from primesmooth.arith.field import mod_pow
from primesmooth.counters.brute import guard_volume
from primesmooth.errors import RangeError
from primesmooth.smoothing.params import SmoothingParams


def _brute_J(q, params):
    p, g, field = q.p, q.ctx.g, q.field
    K1, N1 = params.K1, params.N1
    guard_volume((q.K + K1) * K1 * (q.N + N1) * N1, "smoothed J")
    lower = upper = 0
    for z in range(1, K1 + 1):
        for t in range(1, N1 + 1):
            for x in range(q.H + 1, q.H + q.K - K1 + 1):
                r = mod_pow(g, x + z, field)
                for y in range(q.M + 1, q.M + q.N - N1 + 1):
                    lower += (r - y - t) % p == 0
            for x in range(q.H + 1, q.H + q.K + K1 + 1):
                r = mod_pow(g, x - z, field)
                for y in range(q.M + 1, q.M + q.N + N1 + 1):
                    upper += (r - y + t) % p == 0
    return lower, upper


def _brute_J1(q, params):
    p, g, field, h = q.p, q.ctx.g, q.field, q.h
    N, N1 = q.N, params.N1
    guard_volume((N + 2 * N1) * (N + N1) * N1 * N1, "smoothed J1")
    lower = upper = 0
    for z in range(1, N1 + 1):
        for t in range(1, N1 + 1):
            down = h * mod_pow(g, -t, field)
            up = h * mod_pow(g, t, field)
            for x in range(1, N - 2 * N1 + 1):
                gx = mod_pow(g, x + z, field)
                for y in range(1, N - N1 + 1):
                    lower += (gx - mod_pow(g, y, field) - down) % p == 0
            for x in range(1, N + 2 * N1 + 1):
                gx = mod_pow(g, x - z, field)
                for y in range(1, N + N1 + 1):
                    upper += (gx - mod_pow(g, y, field) - up) % p == 0
    return lower, upper


def _brute_J2(q, params):
    p, S, T, T1 = q.p, q.interval.S, q.interval.T, params.T1
    guard_volume(len(q.U) * len(q.V) * (T + T1) * T1, "smoothed J2")
    lower = upper = 0
    for x in q.U.elements:
        for y in q.V.elements:
            for t in range(1, T1 + 1):
                for z in range(S + 1, S + T - T1 + 1):
                    lower += (x * y - z - t) % p == 0
                for z in range(S + 1, S + T + T1 + 1):
                    upper += (x * y - z + t) % p == 0
    return lower, upper


def _brute_J3(q, params):
    p, S, T, T1 = q.p, q.interval.S, q.interval.T, params.T1
    guard_volume(len(q.X) * (T + T1) * T1, "smoothed J3")
    lower = upper = 0
    for x in q.X.elements:
        for t in range(1, T1 + 1):
            for y in range(S + 1, S + T - T1 + 1):
                lower += (x - y - t) % p == 0
            for y in range(S + 1, S + T + T1 + 1):
                upper += (x - y + t) % p == 0
    return lower, upper


def _brute_J4(q, params):
    p, h, K, xr, yr = q.p, q.h, params.K, q.x_range, q.y_range
    guard_volume((xr.T + K) * (yr.T + K) * K * K, "smoothed J4")
    lower = upper = 0
    for u in range(1, K + 1):
        for v in range(1, K + 1):
            for x in range(xr.S + 1, xr.S + xr.T - K + 1):
                for y in range(yr.S + 1, yr.S + yr.T - K + 1):
                    lower += ((x + u) * (y + v) - h) % p == 0
            for x in range(xr.S + 1, xr.S + xr.T + K + 1):
                for y in range(yr.S + 1, yr.S + yr.T + K + 1):
                    upper += ((x - u) * (y - v) - h) % p == 0
    return lower, upper


_ORACLES = {
    'J': _brute_J,
    'J1': _brute_J1,
    'J2': _brute_J2,
    'J3': _brute_J3,
    'J4': _brute_J4,
}


def brute_smoothed(family: str, query, params: SmoothingParams) -> tuple[int, int]:
    """(J', J'') by exhaustive loops over every variable and shift"""
    if family not in _ORACLES:
        raise RangeError(f"Unknown family {family!r}; expected one of {list(_ORACLES)}")
    return _ORACLES[family](query, params)
