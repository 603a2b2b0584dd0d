from .primes import is_prime, factorize
from .field import (
    PrimeField, GeneratorCtx, prime_field, generator_ctx, mod_pow, mod_inv,
    is_primitive_root, find_primitive_root, build_dlog_table, inverse_table)
