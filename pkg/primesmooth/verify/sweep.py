"""
Parameter sweeps. A sweep is planned into independent cell tasks holding
plain data only; each task rebuilds its field and generator through the
per-process caches, draws its random parameters from a generator seeded by
(seed, theorem, p, cell, trial), and returns one SweepRecord.
"""
import json
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import sqrt
from pathlib import Path

import numpy as np
from loguru import logger

from primesmooth.arith.field import generator_ctx, prime_field
from primesmooth.config import get_settings
from primesmooth.counters.fast import count
from primesmooth.counters.intervals import ResidueInterval, ResidueSet
from primesmooth.counters.queries import (
    HyperbolaBoxQuery, PowerBoxQuery, PowerDiffQuery, ProductIntervalQuery, SetIntervalQuery)
from primesmooth.errors import CapacityError, DomainError, RangeError, ReportIOError
from primesmooth.expsums.spectrum import max_nontrivial_spectrum
from primesmooth.logging import log_cell
from primesmooth.verify.config import SweepConfig, resolve_size
from primesmooth.verify.envelopes import (
    FAMILY_THEOREM, REFERENCE, THEOREMS, EnvelopeKind, envelope)
from primesmooth.verify.records import SweepRecord

FAMILY_ORDER = ['J', 'J1', 'J2', 'J3', 'J4']


def _grid(family: str, section: dict, p: int) -> list[dict]:
    sizes = [resolve_size(s, p, p - 1) for s in section['sizes']]
    if family == 'J2':
        set_sizes = [resolve_size(s, p, p - 1) for s in section['set_sizes']]
        return [{'size': s, 'set_size': u} for s in sizes for u in set_sizes]
    if family == 'J3':
        return [{'size': s, 'set_family': f, 'set_fraction': section['set_fraction']}
                for f in section['set_family'] for s in sizes]
    return [{'size': s} for s in sizes]


def plan_cells(config: SweepConfig) -> list[dict]:
    """Every (theorem, p, cell, trial) task of the sweep, in record order"""
    tasks = []
    for family in FAMILY_ORDER:
        if family not in config.theorems:
            continue
        theorem = str(FAMILY_THEOREM[family])
        for p in sorted(config.primes):
            if p < 3:
                raise RangeError(f"Sweeps need p >= 3, got {p}")
            for cell, point in enumerate(_grid(family, config.theorems[family], p)):
                for trial in range(config.trials):
                    tasks.append(dict(
                        theorem=theorem, family=family, p=p, cell=cell, trial=trial,
                        seed=config.seed, **point))
    return tasks


def _set_size(task: dict) -> int:
    if task['set_family'] == 'quadratic_residues':
        return (task['p'] - 1) // 2
    return max(1, int(task['set_fraction'] * task['p']))


def cell_cost(task: dict) -> int:
    """Rough count of elementary steps one task performs"""
    family, p, size = task['family'], task['p'], task['size']
    if family == 'J2':
        return task['set_size'] ** 2 + p
    if family == 'J3':
        return p * _set_size(task)
    return 2 * size + p


def _over_budget(tasks: list[dict], budget: int) -> list[tuple]:
    cap = get_settings().spectrum_cap
    over = set()
    for task in tasks:
        if cell_cost(task) > budget or (task['family'] == 'J3' and task['p'] > cap):
            over.add((task['theorem'], task['p'], task['cell']))
    return sorted(over)


def _draw_query(task: dict, rng: np.random.Generator):
    family, p, size = task['family'], task['p'], task['size']
    field = prime_field(p)
    if family == 'J':
        H, M = int(rng.integers(0, p - 1)), int(rng.integers(0, p))
        return PowerBoxQuery(ctx=generator_ctx(p), H=H, K=size, M=M, N=size)
    if family == 'J1':
        return PowerDiffQuery(ctx=generator_ctx(p), h=int(rng.integers(1, p)), N=size)
    if family == 'J2':
        S = int(rng.integers(0, p))
        U = ResidueSet.random(p, task['set_size'], rng)
        V = ResidueSet.random(p, task['set_size'], rng)
        return ProductIntervalQuery(field=field, U=U, V=V, interval=ResidueInterval(S, size))
    if family == 'J3':
        if task['set_family'] == 'quadratic_residues':
            X = ResidueSet.quadratic_residues(p)
        else:
            X = ResidueSet.random(p, _set_size(task), rng)
        S = int(rng.integers(0, p))
        return SetIntervalQuery(field=field, X=X, interval=ResidueInterval(S, size))
    return HyperbolaBoxQuery.square(field, int(rng.integers(1, p)), size)


def query_params(q) -> tuple[dict, dict]:
    """(record columns, envelope parameters) describing a query"""
    p = q.p
    if q.kind == 'J':
        return dict(H=q.H, K=q.K, M=q.M, N=q.N), dict(p=p, K=q.K, N=q.N)
    if q.kind == 'J1':
        return dict(h=q.h, N=q.N), dict(p=p, N=q.N)
    if q.kind == 'J2':
        u, v, S, T = len(q.U), len(q.V), q.interval.S, q.interval.T
        return dict(u=u, v=v, S=S, T=T), dict(p=p, u=u, v=v, T=T)
    if q.kind == 'J3':
        size, S, T = len(q.X), q.interval.S, q.interval.T
        delta = max_nontrivial_spectrum(q.X, q.field).delta
        return dict(S=S, T=T, set_size=size, delta=delta), dict(p=p, set_size=size, T=T, delta=delta)
    if not q.is_square:
        raise RangeError("Sweep records describe square J4 boxes only")
    return dict(h=q.h, N=q.x_range.T), dict(p=p, N=q.x_range.T)


def measure(q) -> dict:
    """
    Exact count, main term, absolute error and both envelopes with their
    ratios for one query. Keys match SweepRecord fields.
    """
    theorem = FAMILY_THEOREM[q.kind]
    params, env_params = query_params(q)
    exact = count(q)
    main = q.main_term()
    abs_error = abs(Fraction(exact) - main)
    env_new = envelope(theorem, **env_params)
    env_old = envelope(REFERENCE[theorem], **env_params)
    return dict(
        theorem=str(theorem), p=q.p, exact_count=exact, main_term=main, abs_error=abs_error,
        envelope_new=env_new, envelope_old=env_old,
        ratio_new=float(abs_error) / env_new, ratio_old=float(abs_error) / env_old, **params)


def run_cell(task: dict) -> SweepRecord:
    """Evaluates one sweep task; safe to call in a worker process"""
    start = time.perf_counter()
    theorem = EnvelopeKind(task['theorem'])
    seq = np.random.SeedSequence(
        [task['seed'], THEOREMS.index(theorem), task['p'], task['cell'], task['trial']])
    rng = np.random.default_rng(seq)
    record = SweepRecord(
        cell=task['cell'], trial=task['trial'], seed=int(seq.generate_state(1)[0]),
        **measure(_draw_query(task, rng)))
    log_cell(str(theorem), task['p'], task['cell'], task['trial'], time.perf_counter() - start)
    return record


def run_sweep(config: SweepConfig, workers: int = None) -> list[SweepRecord]:
    """
    Runs every cell of the sweep and returns the records sorted by
    (theorem, p, cell, trial). Cells whose estimated cost exceeds the budget
    are reported together in one CapacityError before any work starts.
    """
    tasks = plan_cells(config)
    budget = config.budget or get_settings().sweep_cell_budget
    over = _over_budget(tasks, budget)
    if over:
        raise CapacityError(f"{len(over)} sweep cells exceed the budget {budget}: {over}", cells=over)
    workers = workers or config.workers
    logger.info(f"Sweep: {len(tasks)} tasks on {workers} worker(s)")
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            records = list(executor.map(run_cell, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        records = [run_cell(task) for task in tasks]
    return sorted(records, key=lambda r: r.sort_key)


def _select(records, kind=None) -> list[SweepRecord]:
    if kind is None:
        return list(records)
    return [r for r in records if r.theorem == str(kind)]


def estimate_implied_constant(records, kind=None) -> float:
    """max ratio_new: the smallest C with error <= C * envelope on the data"""
    selected = _select(records, kind)
    if not selected:
        raise DomainError(f"No records to estimate a constant from (kind={kind})")
    return max(r.ratio_new for r in selected)


def freeze_constants(records) -> dict[str, float]:
    """Implied constant per theorem present in the records"""
    theorems = sorted({r.theorem for r in records})
    return {t: estimate_implied_constant(records, t) for t in theorems}


def check_constants(records, constants: dict, rel_tol: float = 1e-12) -> list[SweepRecord]:
    """Records whose ratio exceeds the frozen constant of their theorem"""
    violations = []
    for r in records:
        if r.theorem not in constants:
            raise RangeError(f"No frozen constant for {r.theorem}")
        if r.ratio_new > constants[r.theorem] * (1 + rel_tol):
            violations.append(r)
    return violations


def save_constants(constants: dict, path):
    path = Path(path)
    try:
        with open(path, 'w') as f:
            json.dump(dict(sorted(constants.items())), f, indent=2)
            f.write('\n')
    except OSError as e:
        raise ReportIOError(f"Cannot write constants to {path}: {e}", path=path) from e


def load_constants(path) -> dict[str, float]:
    path = Path(path)
    try:
        with open(path) as f:
            data = json.load(f)
    except OSError as e:
        raise ReportIOError(f"Cannot read constants from {path}: {e}", path=path) from e
    except json.JSONDecodeError as e:
        raise RangeError(f"Malformed constants file {path}: {e}") from e
    return {str(k): float(v) for k, v in data.items()}


def _below_crossover(r: SweepRecord) -> bool:
    # KN <= p^{3/2}
    return (r.K * r.N) ** 2 <= r.p**3


def crossover_violations(records) -> list[SweepRecord]:
    """THM1 cells with KN <= p^{3/2} and p >= 101 where the new envelope is not smaller"""
    return [
        r for r in _select(records, EnvelopeKind.THM1)
        if r.p >= 101 and _below_crossover(r) and not r.envelope_new < r.envelope_old]


def upper_bound_violations(records, c_star: float) -> list[SweepRecord]:
    """THM1 cells with KN <= p^{3/2} whose count exceeds KN/p + 2 C* sqrt(p)"""
    return [
        r for r in _select(records, EnvelopeKind.THM1)
        if _below_crossover(r) and r.exact_count > r.K * r.N / r.p + 2 * c_star * sqrt(r.p)]
