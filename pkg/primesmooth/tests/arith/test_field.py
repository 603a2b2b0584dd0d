import numpy as np
import pytest

from primesmooth.arith.field import (
    GeneratorCtx, build_dlog_table, find_primitive_root, generator_ctx, inverse_table,
    is_primitive_root, mod_inv, mod_pow, prime_field)
from primesmooth.arith.primes import small_primes
from primesmooth.errors import CapacityError, DegenerateModulusError, DomainError, RangeError


def test_prime_field_factors():
    assert prime_field(7).factors_p_minus_1 == [(2, 1), (3, 1)]
    assert prime_field(101).factors_p_minus_1 == [(2, 2), (5, 2)]


def test_prime_field_rejects_composite():
    with pytest.raises(RangeError):
        prime_field(8)


@pytest.mark.parametrize('p, g', [(3, 2), (5, 2), (7, 3), (23, 5), (41, 6), (101, 2)])
def test_smallest_primitive_root(p, g):
    assert find_primitive_root(prime_field(p)).g == g


def test_primitive_root_degenerate():
    with pytest.raises(DegenerateModulusError):
        find_primitive_root(prime_field(2))


def test_is_primitive_root():
    field = prime_field(7)
    assert is_primitive_root(3, field)
    assert is_primitive_root(5, field)
    assert not is_primitive_root(2, field)
    assert not is_primitive_root(0, field)


def test_generator_ctx_validates_root():
    with pytest.raises(DomainError):
        GeneratorCtx(field=prime_field(7), g=2)


def test_mod_pow_and_inverse():
    field = prime_field(7)
    assert mod_pow(3, -1, field) == 5
    assert mod_pow(2, 10**18, field) == pow(2, 10**18, 7)
    assert mod_pow(0, 0, field) == 1
    assert mod_pow(0, 5, field) == 0
    assert mod_inv(3, field) == 5
    with pytest.raises(DomainError):
        mod_pow(0, -1, field)
    with pytest.raises(DomainError):
        mod_inv(14, field)


def test_dlog_and_power_tables():
    ctx = generator_ctx(101)
    assert ctx.has_tables
    assert ctx.power_table[0] == 1
    assert ctx.dlog_table[1] == 100
    for x in [1, 2, 37, 99]:
        assert ctx.dlog_table[ctx.power(x)] == x
    assert sorted(ctx.power_table.tolist()) == list(range(1, 101))


def test_powers_window_matches_pow():
    ctx = generator_ctx(101)
    expected = [pow(ctx.g, x, 101) for x in range(-5 + 1, -5 + 230 + 1)]
    assert ctx.powers(-5, 230).tolist() == expected


def test_powers_without_tables():
    ctx = find_primitive_root(prime_field(101))
    assert not ctx.has_tables
    assert ctx.powers(3, 50).tolist() == generator_ctx(101).powers(3, 50).tolist()


def test_dlog_table_cap():
    ctx = find_primitive_root(prime_field(101))
    with pytest.raises(CapacityError):
        build_dlog_table(ctx, cap=50)


def test_inverse_table():
    inv = inverse_table(1009)
    r = np.arange(1, 1009)
    assert inv[0] == 0
    assert np.all(inv[1:] * r % 1009 == 1)


def test_mod_pow_adds_exponents():
    rng = np.random.default_rng(41)
    primes = small_primes(10**4)[2:]
    for _ in range(1000):
        field = prime_field(int(rng.choice(primes)))
        x = int(rng.integers(1, field.p))
        e1, e2 = (int(e) for e in rng.integers(-10**6, 10**6, size=2))
        assert mod_pow(x, e1 + e2, field) == mod_pow(x, e1, field) * mod_pow(x, e2, field) % field.p


@pytest.mark.slow
def test_primitive_root_generates_every_unit():
    for p in small_primes(10**4)[1:].tolist():
        g = find_primitive_root(prime_field(p)).g
        seen, x = set(), 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        assert len(seen) == p - 1
