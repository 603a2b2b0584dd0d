import param

from primesmooth.arith.primes import MAX_MODULUS, is_prime
from primesmooth.errors import RangeError


class PrimeModulus(param.Integer):
    """
    Integer parameter that only accepts primes below 2^62.

    Validation Logic:
    - Integer/bounds checks of param.Integer run first.
    - The value must then pass the deterministic primality test.
    """

    def __init__(self, default=3, **params):
        params.setdefault('bounds', (2, MAX_MODULUS - 1))
        super().__init__(default=default, **params)

    def _validate(self, val):
        super()._validate(val)
        if val is None and self.allow_None:
            return
        if not is_prime(val):
            raise RangeError(f"Parameter {self.name!r} must be prime, got {val}")


class ResidueList(param.List):
    """
    A strictly increasing list of residues, i.e. a set of residues kept in
    canonical order. Duplicates and unsorted input are rejected rather than
    silently normalized, since the counted quantities are defined over sets.
    """

    def __init__(self, default=[], **params):
        params.setdefault('item_type', int)
        super().__init__(default=default, **params)

    def _validate(self, val):
        super()._validate(val)
        if val is None:
            return
        if any(x < 0 for x in val):
            raise RangeError(f"Parameter {self.name!r} contains negative residues")
        if any(a >= b for a, b in zip(val, val[1:])):
            raise RangeError(
                f"Parameter {self.name!r} must be strictly increasing (no duplicates)")
