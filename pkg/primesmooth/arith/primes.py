from functools import cache
from math import gcd, isqrt

import numpy as np

from primesmooth.errors import RangeError

MAX_MODULUS = 2**62
TRIAL_BOUND = 10**6
# Deterministic for every n < 3.3e24, far past the 2^62 range
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _check_range(n: int):
    if not 1 <= n < MAX_MODULUS:
        raise RangeError(f"Expected 1 <= n < 2^62, got {n}")


@cache
def small_primes(bound: int = TRIAL_BOUND) -> np.ndarray:
    """All primes below `bound`, by an Eratosthenes sieve"""
    sieve = np.ones(bound, dtype=bool)
    sieve[:2] = False
    for i in range(2, isqrt(bound - 1) + 1):
        if sieve[i]:
            sieve[i * i::i] = False
    return np.flatnonzero(sieve).astype(np.int64)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin over a fixed witness set."""
    _check_range(n)
    if n < 2:
        return False
    for q in MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """
    A nontrivial factor of the odd composite n. Brent's cycle detection with
    c = 1, 2, ... so the result is reproducible.
    """
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise RangeError(f"Pollard-Brent failed to split {n}")


def _split(n: int, found: dict[int, int]):
    if n == 1:
        return
    if is_prime(n):
        found[n] = found.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split(d, found)
    _split(n // d, found)


def factorize(n: int) -> list[tuple[int, int]]:
    """
    Prime factorization as (prime, exponent) pairs with increasing primes.
    Trial division by every prime below 10^6 runs as one vectorized remainder
    pass; any cofactor left over is split with Pollard-Brent.
    """
    _check_range(n)
    found: dict[int, int] = {}
    primes = small_primes()
    for q in primes[(n % primes) == 0].tolist():
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        found[q] = e
    _split(n, found)
    return sorted(found.items())
