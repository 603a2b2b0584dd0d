"""
Full pilot sweep over the acceptance primes: freezes the implied constants,
re-runs the sweep against them, and checks the crossover and the
quadratic-residue instance. Marked slow.
"""
from math import sqrt

import pytest

from primesmooth.arith.field import prime_field
from primesmooth.counters import ResidueInterval, ResidueSet, SetIntervalQuery, count_J3
from primesmooth.verify import (
    check_constants, crossover_violations, freeze_constants, pilot_config, run_sweep,
    upper_bound_violations, write_report)
from primesmooth.verify.config import PILOT_PRIMES

pytestmark = pytest.mark.slow


@pytest.fixture(scope='module')
def pilot():
    records = run_sweep(pilot_config())
    return records, freeze_constants(records)


def test_rerun_respects_frozen_constants(pilot, tmp_path):
    records, frozen = pilot
    rerun = run_sweep(pilot_config())
    assert check_constants(rerun, frozen, rel_tol=1e-12) == []
    write_report(records, tmp_path / 'a.csv')
    write_report(rerun, tmp_path / 'b.csv')
    assert (tmp_path / 'a.csv').read_bytes() == (tmp_path / 'b.csv').read_bytes()


def test_crossover(pilot):
    records, frozen = pilot
    assert crossover_violations(records) == []
    assert upper_bound_violations(records, frozen['THM1']) == []


def test_quadratic_residue_instance(pilot):
    """The residue cells are part of the pilot, so their ratios sit under the frozen THM4 constant"""
    records, frozen = pilot
    residue_cells = [
        r for r in records if r.theorem == 'THM4' and r.set_size == (r.p - 1) // 2]
    assert {r.p for r in residue_cells} == set(PILOT_PRIMES)
    for p in PILOT_PRIMES:
        assert {r.T for r in residue_cells if r.p == p} == {p // 8, p // 4, p // 2, p - 1}
    for r in residue_cells:
        field = prime_field(r.p)
        q = SetIntervalQuery(
            field=field, X=ResidueSet.quadratic_residues(r.p), interval=ResidueInterval(r.S, r.T))
        assert count_J3(q) == r.exact_count
        assert r.ratio_new <= frozen['THM4'] * (1 + 1e-12)
        if r.p % 4 == 3:
            assert r.delta * r.set_size <= (sqrt(r.p) + 1) / 2 + 1e-6
