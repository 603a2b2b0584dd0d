from math import log, sqrt

import pytest

from primesmooth.errors import RangeError
from primesmooth.verify.envelopes import REFERENCE, THEOREM_FAMILY, THEOREMS, EnvelopeKind, envelope


def test_envelope_values():
    assert envelope('THM1', p=101, K=100, N=100) == pytest.approx(100 / 101**0.25 + sqrt(101))
    assert envelope('THM1', p=101, K=100, N=100) == pytest.approx(41.59, abs=0.01)
    assert envelope(EnvelopeKind.THM3, p=101, u=1, v=1, T=1) == pytest.approx(1 + sqrt(101))
    assert envelope('SARKOZY_EQ4', p=101, u=1, v=1) == pytest.approx(92.76, abs=0.01)
    assert envelope('MONTGOMERY_EQ1', p=101) == pytest.approx(sqrt(101) * log(101) ** 2)
    assert envelope('CLASSICAL_J3', p=101, set_size=20, delta=0.5) == pytest.approx(10 * log(101))


def test_extra_parameters_are_ignored():
    assert envelope('THM2', p=211, N=50, K=7, delta=None) == envelope('THM2', p=211, N=50)


@pytest.mark.parametrize('params', [dict(p=101, K=0, N=5), dict(p=101, K=5), dict(p=-3, K=1, N=1)])
def test_envelope_rejects_bad_parameters(params):
    with pytest.raises(RangeError):
        envelope('THM1', **params)


def test_every_theorem_has_a_reference():
    assert [str(k) for k in THEOREMS] == ['THM1', 'THM2', 'THM3', 'THM4', 'THM5']
    assert set(REFERENCE) == set(THEOREMS) == set(THEOREM_FAMILY)
    with pytest.raises(ValueError):
        envelope('THM6', p=101)


def test_new_envelope_beats_reference_below_crossover():
    """With KN <= p^{3/2} the THM1 envelope is at most 2 sqrt(p) < sqrt(p) log^2 p"""
    for p in [101, 211, 401, 809, 1601]:
        for K in range(1, p, max(1, p // 16)):
            N = min(p - 1, int(p**1.5 / K))
            if (K * N) ** 2 <= p**3:
                assert envelope('THM1', p=p, K=K, N=N) < envelope('MONTGOMERY_EQ1', p=p)
