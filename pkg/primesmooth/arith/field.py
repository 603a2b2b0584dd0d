from functools import lru_cache

import numpy as np
import param
from loguru import logger

from primesmooth.arith.primes import factorize, is_prime
from primesmooth.base.model_base import Model
from primesmooth.common.param import PrimeModulus
from primesmooth.config import get_settings
from primesmooth.errors import CapacityError, DegenerateModulusError, DomainError, RangeError
from primesmooth.logging import log_table


class PrimeField(Model):
    """A prime modulus together with the factorization of p - 1"""
    p = PrimeModulus(default=3, constant=True, doc="""
        The prime modulus, below 2^62""")
    factors_p_minus_1 = param.List(default=[], item_type=tuple, constant=True, doc="""
        (prime, exponent) pairs whose product is p - 1""")

    def __init__(self, p: int, **params):
        super().__init__(p=p, **params)
        if not self.factors_p_minus_1:
            with param.edit_constant(self):
                self.factors_p_minus_1 = factorize(p - 1) if p > 2 else []
        product = 1
        for q, e in self.factors_p_minus_1:
            product *= q**e
        if product != p - 1:
            raise RangeError(f"factors_p_minus_1 does not recompose to {p - 1}")

    def __hash__(self):
        return hash(self.p)

    def __eq__(self, other):
        if not isinstance(other, PrimeField):
            return NotImplemented
        return self.p == other.p

    def __repr__(self):
        return f"PrimeField(p={self.p})"


@lru_cache(maxsize=64)
def prime_field(p: int) -> PrimeField:
    """Cached PrimeField construction, so p - 1 is factored once per modulus"""
    return PrimeField(p)


def mod_pow(base: int, exp: int, field: PrimeField) -> int:
    """
    base^exp mod p with the exponent reduced mod p - 1 for units, so negative
    and very large exponents are well defined.
    """
    p = field.p
    base %= p
    if base == 0:
        if exp < 0:
            raise DomainError(f"0 has no inverse mod {p}; got exponent {exp}")
        return 1 if exp == 0 else 0
    return pow(base, exp % (p - 1), p)


def mod_inv(x: int, field: PrimeField) -> int:
    p = field.p
    if x % p == 0:
        raise DomainError(f"{x} is not invertible mod {p}")
    return pow(x, -1, p)


def is_primitive_root(g: int, field: PrimeField) -> bool:
    p = field.p
    g %= p
    if g == 0:
        return False
    return all(pow(g, (p - 1) // q, p) != 1 for q, _ in field.factors_p_minus_1)


class GeneratorCtx(Model):
    """
    A certified primitive root g of a prime field, optionally with the
    discrete-log table (residue -> exponent in [1, p-1]) and the power table
    (exponent mod p-1 -> residue).
    """
    field = param.ClassSelector(class_=PrimeField, constant=True, doc="""
        The prime field the generator lives in""")
    g = param.Integer(default=2, bounds=(2, None), constant=True, doc="""
        Primitive root mod p""")
    dlog_table = param.Array(default=None, allow_None=True, constant=True, doc="""
        Length-p table with dlog_table[g^x mod p] = x for x in [1, p-1]""")
    power_table = param.Array(default=None, allow_None=True, constant=True, doc="""
        Length p-1 table with power_table[x] = g^x mod p""")

    def __init__(self, **params):
        super().__init__(**params)
        if not self.g < self.field.p or not is_primitive_root(self.g, self.field):
            raise DomainError(f"{self.g} is not a primitive root mod {self.field.p}")

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def has_tables(self) -> bool:
        return self.power_table is not None

    def power(self, x: int) -> int:
        """g^x mod p for any integer x"""
        if self.power_table is not None:
            return int(self.power_table[x % (self.p - 1)])
        return mod_pow(self.g, x, self.field)

    def powers(self, start: int, length: int) -> np.ndarray:
        """g^x mod p for x in [start+1, start+length], as an int64 array"""
        if self.power_table is not None:
            exps = (start + 1 + np.arange(length, dtype=np.int64)) % (self.p - 1)
            return self.power_table[exps]
        p, g = self.p, self.g
        out = []
        r = mod_pow(g, start + 1, self.field)
        for _ in range(length):
            out.append(r)
            r = r * g % p
        return np.array(out, dtype=object if p >= 2**31 else np.int64)


def find_primitive_root(field: PrimeField) -> GeneratorCtx:
    """Smallest primitive root g >= 2, certified against every prime factor of p - 1"""
    p = field.p
    if p == 2:
        raise DegenerateModulusError("p = 2 has no primitive root g >= 2")
    for g in range(2, p):
        if is_primitive_root(g, field):
            return GeneratorCtx(field=field, g=g)
    raise DomainError(f"No primitive root found mod {p}")


def _power_sequence(g: int, p: int) -> np.ndarray:
    """g^0 .. g^(p-2) mod p by block doubling; products stay below 2^48"""
    pw = np.ones(1, dtype=np.int64)
    step = g % p
    while len(pw) < p - 1:
        pw = np.concatenate([pw, pw * step % p])
        step = step * step % p
    return pw[:p - 1]


def build_dlog_table(ctx: GeneratorCtx, cap: int = None) -> GeneratorCtx:
    """
    Returns a copy of ctx carrying the discrete-log and power tables.
    Raises CapacityError above the configured cap; callers then keep working
    with direct exponentiation.
    """
    if ctx.has_tables:
        return ctx
    cap = cap or get_settings().dlog_table_cap
    p = ctx.p
    if p > cap:
        raise CapacityError(f"p = {p} exceeds the discrete-log table cap {cap}")
    power_table = _power_sequence(ctx.g, p)
    dlog_table = np.zeros(p, dtype=np.int64)
    dlog_table[power_table] = np.arange(p - 1, dtype=np.int64)
    dlog_table[1] = p - 1
    log_table('dlog', p, p)
    return GeneratorCtx(field=ctx.field, g=ctx.g, dlog_table=dlog_table, power_table=power_table)


@lru_cache(maxsize=64)
def generator_ctx(p: int) -> GeneratorCtx:
    """Smallest primitive root of p with tables when p is under the cap"""
    ctx = find_primitive_root(prime_field(p))
    try:
        return build_dlog_table(ctx)
    except CapacityError as e:
        logger.warning(f"{e}; falling back to direct exponentiation")
        return ctx


@lru_cache(maxsize=16)
def inverse_table(p: int) -> np.ndarray:
    """
    inv[r] = r^-1 mod p for r in [1, p-1] (inv[0] = 0), by vectorized
    square-and-multiply of r^(p-2).
    """
    cap = get_settings().dlog_table_cap
    if p > cap:
        raise CapacityError(f"p = {p} exceeds the inverse table cap {cap}")
    base = np.arange(p, dtype=np.int64)
    result = np.ones(p, dtype=np.int64)
    e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    result[0] = 0
    log_table('inverse', p, p)
    return result
