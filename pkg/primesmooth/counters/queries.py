from fractions import Fraction

import param

from primesmooth.arith.field import GeneratorCtx, PrimeField
from primesmooth.base.model_base import Model
from primesmooth.counters.intervals import ResidueInterval, ResidueSet
from primesmooth.errors import PreconditionError, RangeError


class Query(Model):
    """Base class of the five counted quantities"""
    kind = 'J'

    @property
    def p(self) -> int:
        return self.field.p

    def main_term(self) -> Fraction:
        raise NotImplementedError

    def volume(self) -> int:
        """Loop volume of the brute-force oracle for this query"""
        raise NotImplementedError


class PowerBoxQuery(Query):
    """J: integers x in [H+1, H+K] with g^x in [M+1, M+N] (mod p)"""
    kind = 'J'
    ctx = param.ClassSelector(class_=GeneratorCtx, constant=True)
    H = param.Integer(default=0, constant=True, doc="Exponent offset")
    K = param.Integer(default=1, bounds=(1, None), constant=True, doc="Exponent count, K < p")
    M = param.Integer(default=0, constant=True, doc="Residue offset")
    N = param.Integer(default=1, bounds=(1, None), constant=True, doc="Residue count, N < p")

    def __init__(self, **params):
        super().__init__(**params)
        p = self.ctx.p
        if not (self.K < p and self.N < p):
            raise RangeError(f"Expected 1 <= N, K < p = {p}, got N = {self.N}, K = {self.K}")

    @property
    def field(self) -> PrimeField:
        return self.ctx.field

    def main_term(self) -> Fraction:
        return Fraction(self.K * self.N, self.p)

    def volume(self) -> int:
        return self.K * self.N


class PowerDiffQuery(Query):
    """J1: pairs (x, y) in [1, N]^2 with g^x - g^y = h (mod p)"""
    kind = 'J1'
    ctx = param.ClassSelector(class_=GeneratorCtx, constant=True)
    h = param.Integer(default=1, constant=True, doc="Nonzero shift")
    N = param.Integer(default=1, bounds=(1, None), constant=True, doc="Exponent range, N < p")

    def __init__(self, **params):
        super().__init__(**params)
        p = self.ctx.p
        if self.h % p == 0:
            raise PreconditionError(f"Expected h != 0 mod {p}, got {self.h}")
        if not self.N < p:
            raise RangeError(f"Expected 1 <= N < p = {p}, got {self.N}")

    @property
    def field(self) -> PrimeField:
        return self.ctx.field

    def main_term(self) -> Fraction:
        return Fraction(self.N * self.N, self.p)

    def volume(self) -> int:
        return self.N * self.N


class ProductIntervalQuery(Query):
    """J2: triples x in U, y in V, z in [S+1, S+T] with xy = z (mod p)"""
    kind = 'J2'
    field = param.ClassSelector(class_=PrimeField, constant=True)
    U = param.ClassSelector(class_=ResidueSet, constant=True)
    V = param.ClassSelector(class_=ResidueSet, constant=True)
    interval = param.ClassSelector(class_=ResidueInterval, constant=True)

    def __init__(self, **params):
        super().__init__(**params)
        self.U.check_modulus(self.p, 'U')
        self.V.check_modulus(self.p, 'V')
        self.interval.check_length(self.p)

    def main_term(self) -> Fraction:
        return Fraction(len(self.U) * len(self.V) * self.interval.T, self.p)

    def volume(self) -> int:
        return len(self.U) * len(self.V) * self.interval.T


class SetIntervalQuery(Query):
    """J3: elements of X lying in [S+1, S+T] (mod p)"""
    kind = 'J3'
    field = param.ClassSelector(class_=PrimeField, constant=True)
    X = param.ClassSelector(class_=ResidueSet, constant=True)
    interval = param.ClassSelector(class_=ResidueInterval, constant=True)

    def __init__(self, **params):
        super().__init__(**params)
        self.X.check_modulus(self.p, 'X')
        self.interval.check_length(self.p)

    def main_term(self) -> Fraction:
        return Fraction(len(self.X) * self.interval.T, self.p)

    def volume(self) -> int:
        return len(self.X) * self.interval.T


class HyperbolaBoxQuery(Query):
    """J4: pairs (x, y) in a box of residue intervals with xy = h (mod p)"""
    kind = 'J4'
    field = param.ClassSelector(class_=PrimeField, constant=True)
    h = param.Integer(default=1, constant=True, doc="Nonzero target")
    x_range = param.ClassSelector(class_=ResidueInterval, constant=True)
    y_range = param.ClassSelector(class_=ResidueInterval, constant=True)

    def __init__(self, **params):
        super().__init__(**params)
        if self.h % self.p == 0:
            raise PreconditionError(f"Expected h != 0 mod {self.p}, got {self.h}")
        self.x_range.check_length(self.p, 'x_range')
        self.y_range.check_length(self.p, 'y_range')

    @classmethod
    def square(cls, field: PrimeField, h: int, N: int) -> 'HyperbolaBoxQuery':
        """The box 1 <= x, y <= N"""
        return cls(field=field, h=h, x_range=ResidueInterval(0, N), y_range=ResidueInterval(0, N))

    @property
    def is_square(self) -> bool:
        return (self.x_range.S == self.y_range.S == 0
                and self.x_range.T == self.y_range.T)

    def main_term(self) -> Fraction:
        return Fraction(self.x_range.T * self.y_range.T, self.p)

    def volume(self) -> int:
        return self.x_range.T * self.y_range.T
