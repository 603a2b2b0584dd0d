"""
Fast exact counters. The public count_* functions take validated queries;
the *_count functions underneath take plain integers and also accept the
widened windows of the smoothing machinery (exponent ranges of any length,
integer windows longer than p counted with multiplicity).
"""
from collections import Counter

import numpy as np

from primesmooth.arith.field import GeneratorCtx, inverse_table
from primesmooth.config import get_settings
from primesmooth.counters.intervals import interval_hits
from primesmooth.counters.queries import (
    HyperbolaBoxQuery, PowerBoxQuery, PowerDiffQuery, ProductIntervalQuery, SetIntervalQuery)

# Row block for U x V products so a block holds about 2^22 entries
PRODUCT_BLOCK = 2**22


def _sum_hits(residues, S: int, T: int, p: int) -> int:
    if len(residues) == 0:
        return 0
    return int(np.sum(interval_hits(residues, S, T, p)))


def power_box_count(ctx: GeneratorCtx, H: int, K: int, M: int, N: int) -> int:
    """#{(x, y): H < x <= H+K, M < y <= M+N, g^x = y (mod p)}"""
    return _sum_hits(ctx.powers(H, K), M, N, ctx.p)


def power_diff_count(ctx: GeneratorCtx, h: int, x0: int, xlen: int, y0: int, ylen: int) -> int:
    """#{(x, y): x0 < x <= x0+xlen, y0 < y <= y0+ylen, g^x - g^y = h (mod p)}"""
    p = ctx.p
    h %= p
    targets = ctx.powers(x0, xlen)
    sources = ctx.powers(y0, ylen)
    if ctx.has_tables:
        multiplicity = np.bincount(sources, minlength=p)
        return int(multiplicity[(targets - h) % p].sum())
    multiplicity = Counter(int(r) for r in sources)
    return sum(multiplicity.get((int(r) - h) % p, 0) for r in targets)


def product_interval_count(p: int, U: np.ndarray, V: np.ndarray, S: int, T: int) -> int:
    """#{(x, y, z): x in U, y in V, S < z <= S+T, xy = z (mod p)}"""
    if len(U) == 0 or len(V) == 0:
        return 0
    if p >= 2**31:
        return sum(interval_hits(int(x) * int(y) % p, S, T, p) for x in U for y in V)
    step = max(1, PRODUCT_BLOCK // len(V))
    total = 0
    for start in range(0, len(U), step):
        products = (U[start:start + step, None] * V[None, :]) % p
        total += _sum_hits(products.ravel(), S, T, p)
    return total


def set_interval_count(p: int, X: np.ndarray, S: int, T: int) -> int:
    """#{(x, y): x in X, S < y <= S+T, x = y (mod p)}"""
    return _sum_hits(X, S, T, p)


def hyperbola_box_count(p: int, h: int, Sx: int, Tx: int, Sy: int, Ty: int) -> int:
    """#{(x, y): Sx < x <= Sx+Tx, Sy < y <= Sy+Ty, xy = h (mod p)}, h != 0"""
    h %= p
    xs = (Sx + 1 + np.arange(Tx, dtype=np.int64)) % p
    xs = xs[xs != 0]
    if p <= get_settings().dlog_table_cap:
        ys = h * inverse_table(p)[xs] % p
        return _sum_hits(ys, Sy, Ty, p)
    return sum(interval_hits(h * pow(int(x), -1, p) % p, Sy, Ty, p) for x in xs)


def count_J(q: PowerBoxQuery) -> int:
    return power_box_count(q.ctx, q.H, q.K, q.M, q.N)


def count_J1(q: PowerDiffQuery) -> int:
    return power_diff_count(q.ctx, q.h, 0, q.N, 0, q.N)


def count_J2(q: ProductIntervalQuery) -> int:
    return product_interval_count(q.p, q.U.array, q.V.array, q.interval.S, q.interval.T)


def count_J3(q: SetIntervalQuery) -> int:
    return set_interval_count(q.p, q.X.array, q.interval.S, q.interval.T)


def count_J4(q: HyperbolaBoxQuery) -> int:
    return hyperbola_box_count(
        q.p, q.h, q.x_range.S, q.x_range.T, q.y_range.S, q.y_range.T)


COUNTERS = {
    'J': count_J,
    'J1': count_J1,
    'J2': count_J2,
    'J3': count_J3,
    'J4': count_J4,
}


def count(q) -> int:
    """Dispatches on the query's kind"""
    return COUNTERS[q.kind](q)
