"""
Exhaustive oracles. Each loops over every variable of the defining
congruence exactly as stated and shares nothing with the fast counters
beyond modular exponentiation.
"""
from primesmooth.arith.field import mod_pow
from primesmooth.config import get_settings
from primesmooth.counters.queries import (
    HyperbolaBoxQuery, PowerBoxQuery, PowerDiffQuery, ProductIntervalQuery, SetIntervalQuery)
from primesmooth.errors import CapacityError, RangeError


def guard_volume(volume: int, label: str):
    cap = get_settings().brute_volume_cap
    if volume > cap:
        raise CapacityError(f"Brute-force volume {volume} for {label} exceeds the cap {cap}")


def _brute_J(q: PowerBoxQuery) -> int:
    p, g, field = q.p, q.ctx.g, q.field
    total = 0
    for x in range(q.H + 1, q.H + q.K + 1):
        gx = mod_pow(g, x, field)
        for y in range(q.M + 1, q.M + q.N + 1):
            if (gx - y) % p == 0:
                total += 1
    return total


def _brute_J1(q: PowerDiffQuery) -> int:
    p, g, field = q.p, q.ctx.g, q.field
    total = 0
    for x in range(1, q.N + 1):
        gx = mod_pow(g, x, field)
        for y in range(1, q.N + 1):
            if (gx - mod_pow(g, y, field) - q.h) % p == 0:
                total += 1
    return total


def _brute_J2(q: ProductIntervalQuery) -> int:
    p, S, T = q.p, q.interval.S, q.interval.T
    total = 0
    for x in q.U.elements:
        for y in q.V.elements:
            for z in range(S + 1, S + T + 1):
                if (x * y - z) % p == 0:
                    total += 1
    return total


def _brute_J3(q: SetIntervalQuery) -> int:
    p, S, T = q.p, q.interval.S, q.interval.T
    total = 0
    for x in q.X.elements:
        for y in range(S + 1, S + T + 1):
            if (x - y) % p == 0:
                total += 1
    return total


def _brute_J4(q: HyperbolaBoxQuery) -> int:
    p, xr, yr = q.p, q.x_range, q.y_range
    total = 0
    for x in range(xr.S + 1, xr.S + xr.T + 1):
        for y in range(yr.S + 1, yr.S + yr.T + 1):
            if (x * y - q.h) % p == 0:
                total += 1
    return total


_ORACLES = {
    'J': (PowerBoxQuery, _brute_J),
    'J1': (PowerDiffQuery, _brute_J1),
    'J2': (ProductIntervalQuery, _brute_J2),
    'J3': (SetIntervalQuery, _brute_J3),
    'J4': (HyperbolaBoxQuery, _brute_J4),
}


def brute_count(kind: str, query) -> int:
    """Exhaustive count of the congruence named by kind (J, J1, J2, J3, J4)"""
    if kind not in _ORACLES:
        raise RangeError(f"Unknown count kind {kind!r}; expected one of {list(_ORACLES)}")
    query_type, oracle = _ORACLES[kind]
    if not isinstance(query, query_type):
        raise RangeError(f"{kind} expects a {query_type.__name__}, got {type(query).__name__}")
    guard_volume(query.volume(), kind)
    return oracle(query)
