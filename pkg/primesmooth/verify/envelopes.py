"""
Error envelopes: the expression inside each O(...) evaluated with implied
constant 1 (the Sarkozy-type bound keeps its stated factor 2). Logarithms
are natural.
"""
from enum import Enum
from math import log, sqrt

from primesmooth.errors import RangeError


class EnvelopeKind(str, Enum):
    THM1 = 'THM1'
    THM2 = 'THM2'
    THM3 = 'THM3'
    THM4 = 'THM4'
    THM5 = 'THM5'
    MONTGOMERY_EQ1 = 'MONTGOMERY_EQ1'
    RUZSA_EQ3 = 'RUZSA_EQ3'
    SARKOZY_EQ4 = 'SARKOZY_EQ4'
    CLASSICAL_J3 = 'CLASSICAL_J3'
    CLASSICAL_J4 = 'CLASSICAL_J4'

    def __str__(self):
        return self.value


THEOREMS = [EnvelopeKind.THM1, EnvelopeKind.THM2, EnvelopeKind.THM3, EnvelopeKind.THM4, EnvelopeKind.THM5]

# Counted quantity behind each theorem tag
THEOREM_FAMILY = {
    EnvelopeKind.THM1: 'J',
    EnvelopeKind.THM2: 'J1',
    EnvelopeKind.THM3: 'J2',
    EnvelopeKind.THM4: 'J3',
    EnvelopeKind.THM5: 'J4',
}
FAMILY_THEOREM = {family: kind for kind, family in THEOREM_FAMILY.items()}

# The older bound each new envelope is compared against
REFERENCE = {
    EnvelopeKind.THM1: EnvelopeKind.MONTGOMERY_EQ1,
    EnvelopeKind.THM2: EnvelopeKind.RUZSA_EQ3,
    EnvelopeKind.THM3: EnvelopeKind.SARKOZY_EQ4,
    EnvelopeKind.THM4: EnvelopeKind.CLASSICAL_J3,
    EnvelopeKind.THM5: EnvelopeKind.CLASSICAL_J4,
}

REQUIRED = {
    EnvelopeKind.THM1: ('p', 'K', 'N'),
    EnvelopeKind.THM2: ('p', 'N'),
    EnvelopeKind.THM3: ('p', 'u', 'v', 'T'),
    EnvelopeKind.THM4: ('p', 'set_size', 'T', 'delta'),
    EnvelopeKind.THM5: ('p', 'N'),
    EnvelopeKind.MONTGOMERY_EQ1: ('p',),
    EnvelopeKind.RUZSA_EQ3: ('p',),
    EnvelopeKind.SARKOZY_EQ4: ('p', 'u', 'v'),
    EnvelopeKind.CLASSICAL_J3: ('p', 'set_size', 'delta'),
    EnvelopeKind.CLASSICAL_J4: ('p',),
}


def _sqrt_p_log2(p):
    return sqrt(p) * log(p) ** 2


_FORMULAS = {
    EnvelopeKind.THM1: lambda p, K, N: sqrt(K * N) / p**0.25 + sqrt(p),
    EnvelopeKind.THM2: lambda p, N: N / p**0.25 + sqrt(p),
    EnvelopeKind.THM3: lambda p, u, v, T: (u * u * v * v * T) ** (1 / 3) + sqrt(p * u * v),
    EnvelopeKind.THM4: lambda p, set_size, T, delta: (
        set_size * T ** (1 / 3) * delta ** (2 / 3) / p ** (1 / 3) + set_size * delta),
    EnvelopeKind.THM5: lambda p, N: N / p**0.25 + sqrt(p),
    EnvelopeKind.MONTGOMERY_EQ1: _sqrt_p_log2,
    EnvelopeKind.RUZSA_EQ3: _sqrt_p_log2,
    EnvelopeKind.SARKOZY_EQ4: lambda p, u, v: 2 * sqrt(p * u * v) * log(p),
    EnvelopeKind.CLASSICAL_J3: lambda p, set_size, delta: set_size * delta * log(p),
    EnvelopeKind.CLASSICAL_J4: _sqrt_p_log2,
}


def envelope(kind: EnvelopeKind, **params) -> float:
    """
    Evaluates the envelope named by kind. Only the parameters the formula
    uses are read; each must be present and positive.
    """
    kind = EnvelopeKind(kind)
    args = {}
    for name in REQUIRED[kind]:
        value = params.get(name)
        if value is None:
            raise RangeError(f"{kind} envelope needs parameter {name!r}")
        if not value > 0:
            raise RangeError(f"{kind} envelope parameter {name} must be positive, got {value}")
        args[name] = value
    return float(_FORMULAS[kind](**args))
