from enum import Enum
from pathlib import Path

import param
import typer
try:
    from typer._click.exceptions import UsageError as ClickUsageError
except ImportError:
    from click.exceptions import UsageError as ClickUsageError
from loguru import logger

from primesmooth.arith.field import (
    GeneratorCtx, build_dlog_table, generator_ctx, is_primitive_root, prime_field)
from primesmooth.arith.primes import is_prime
from primesmooth.base.model_base import Model
from primesmooth.config import load_settings
from primesmooth.counters.intervals import ResidueInterval, ResidueSet
from primesmooth.counters.queries import (
    HyperbolaBoxQuery, PowerBoxQuery, PowerDiffQuery, ProductIntervalQuery, SetIntervalQuery)
from primesmooth.errors import (
    CapacityError, CertificateViolation, DomainError, PrimeSmoothError, RangeError, UsageError)
from primesmooth.logging import setup_logging
from primesmooth.smoothing.sandwich import bracket
from primesmooth.counters.fast import count
from primesmooth.verify.audits import DEFAULT_L1_LENGTHS, audit_l1_claim, audit_lemma, audit_weil
from primesmooth.verify.config import load_sweep_config
from primesmooth.verify.report import read_records, write_report
from primesmooth.verify.records import format_fraction, format_real
from primesmooth.verify.sweep import (
    check_constants, crossover_violations, freeze_constants, load_constants, measure, run_sweep,
    save_constants)

SUBCOMMANDS = ['count', 'sandwich', 'sweep', 'check-lemma', 'check-weil', 'check-l1', 'report']

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class Kind(str, Enum):
    J = 'J'
    J1 = 'J1'
    J2 = 'J2'
    J3 = 'J3'
    J4 = 'J4'


class SetFamily(str, Enum):
    quadratic_residues = 'quadratic_residues'


class Format(str, Enum):
    csv = 'csv'
    json = 'json'


class Command(Model):
    """A parsed, validated invocation: one subcommand and its options"""
    subcommand = param.Selector(objects=SUBCOMMANDS, default='count', constant=True)
    options = param.Dict(default={}, constant=True)

    def __repr__(self):
        return f"Command({self.subcommand}, {self.options})"


typer_app = typer.Typer(no_args_is_help=True)


def _check_prime(value):
    if value is None:
        return value
    for p in (value if isinstance(value, list) else [value]):
        try:
            prime = p >= 2 and is_prime(p)
        except RangeError:
            prime = False
        if not prime:
            raise typer.BadParameter(f"{p} is not a prime below 2^62")
    return value


def _parse_residues(raw: str | None) -> list[int] | None:
    if raw is None:
        return None
    try:
        return sorted({int(x) for x in raw.split(',') if x.strip()})
    except ValueError:
        raise typer.BadParameter(f"Expected comma-separated integers, got {raw!r}")


def _dispatch(ctx: typer.Context, subcommand: str, **options):
    """Returns the Command when only parsing, otherwise runs it and exits with its code"""
    cmd = Command(subcommand=subcommand, options=options)
    if ctx.obj and ctx.obj.get('parse_only'):
        return cmd
    raise typer.Exit(run(cmd))


@typer_app.command('count')
def count_command(
    ctx: typer.Context,
    kind: Kind = typer.Option(..., '--kind', help="Counted quantity: J, J1, J2, J3 or J4"),
    p: int = typer.Option(..., '--p', callback=_check_prime, help="Prime modulus"),
    g: int = typer.Option(None, '--g', help="Primitive root (J, J1); default is the smallest"),
    H: int = typer.Option(0, '--H', help="Exponent offset (J)"),
    k: int = typer.Option(None, '--k', min=1, help="Exponent count (J)"),
    m: int = typer.Option(0, '--m', help="Residue offset (J)"),
    n: int = typer.Option(None, '--n', min=1, help="Residue count (J), range (J1), box side (J4)"),
    h: int = typer.Option(None, '--h', help="Nonzero shift (J1) or target (J4)"),
    s: int = typer.Option(0, '--s', help="Interval offset S (J2, J3)"),
    t: int = typer.Option(None, '--t', min=1, help="Interval length T (J2, J3)"),
    u_set: str = typer.Option(None, '--u-set', help="Comma-separated U (J2)"),
    v_set: str = typer.Option(None, '--v-set', help="Comma-separated V (J2)"),
    x_set: str = typer.Option(None, '--x-set', help="Comma-separated X (J3)"),
    set_family: SetFamily = typer.Option(None, '--set-family', help="Use a named set for X (J3)"),
):
    """Exact count of one congruence with its main term, error and envelope."""
    return _dispatch(
        ctx, 'count', kind=kind.value, p=p, g=g, H=H, K=k, M=m, N=n, h=h, S=s, T=t,
        U=_parse_residues(u_set), V=_parse_residues(v_set), X=_parse_residues(x_set),
        set_family=set_family.value if set_family else None)


@typer_app.command('sandwich')
def sandwich_command(
    ctx: typer.Context,
    kind: Kind = typer.Option(..., '--kind', help="Counted quantity: J, J1, J2, J3 or J4"),
    p: int = typer.Option(..., '--p', callback=_check_prime, help="Prime modulus"),
    g: int = typer.Option(None, '--g', help="Primitive root (J, J1); default is the smallest"),
    H: int = typer.Option(0, '--H', help="Exponent offset (J)"),
    k: int = typer.Option(None, '--k', min=1, help="Exponent count (J)"),
    m: int = typer.Option(0, '--m', help="Residue offset (J)"),
    n: int = typer.Option(None, '--n', min=1, help="Residue count (J), range (J1), box side (J4)"),
    h: int = typer.Option(None, '--h', help="Nonzero shift (J1) or target (J4)"),
    s: int = typer.Option(0, '--s', help="Interval offset S (J2, J3)"),
    t: int = typer.Option(None, '--t', min=1, help="Interval length T (J2, J3)"),
    u_set: str = typer.Option(None, '--u-set', help="Comma-separated U (J2)"),
    v_set: str = typer.Option(None, '--v-set', help="Comma-separated V (J2)"),
    x_set: str = typer.Option(None, '--x-set', help="Comma-separated X (J3)"),
    set_family: SetFamily = typer.Option(None, '--set-family', help="Use a named set for X (J3)"),
):
    """Smoothed lower/upper counts J' and J'' and whether they bracket the exact count."""
    return _dispatch(
        ctx, 'sandwich', kind=kind.value, p=p, g=g, H=H, K=k, M=m, N=n, h=h, S=s, T=t,
        U=_parse_residues(u_set), V=_parse_residues(v_set), X=_parse_residues(x_set),
        set_family=set_family.value if set_family else None)


@typer_app.command('sweep')
def sweep_command(
    ctx: typer.Context,
    config: Path = typer.Option(..., '--config', help="YAML sweep configuration"),
    out: Path = typer.Option(None, '--out', help="Report path; defaults to the config's output"),
    format: Format = typer.Option(None, '--format', help="csv or json; defaults to the config's format"),
    workers: int = typer.Option(None, '--workers', min=1, help="Worker processes"),
    seed: int = typer.Option(None, '--seed', min=0, help="Override the config seed"),
    constants: Path = typer.Option(None, '--constants', help="Frozen constants to check against"),
    freeze: Path = typer.Option(None, '--freeze', help="Write the observed constants here"),
):
    """Run a parameter sweep and write the report."""
    return _dispatch(
        ctx, 'sweep', config=str(config), out=str(out) if out else None,
        format=format.value if format else None, workers=workers, seed=seed,
        constants=str(constants) if constants else None, freeze=str(freeze) if freeze else None)


@typer_app.command('check-lemma')
def check_lemma_command(
    ctx: typer.Context,
    trials: int = typer.Option(500, '--trials', min=1),
    m_min: int = typer.Option(31, '--m-min', min=2),
    m_max: int = typer.Option(257, '--m-max', min=2),
    seed: int = typer.Option(0, '--seed', min=0),
    out: Path = typer.Option(None, '--out', help="Audit CSV path"),
):
    """Audit the bilinear bound sqrt(mXY) on random weights."""
    return _dispatch(
        ctx, 'check-lemma', trials=trials, m_min=m_min, m_max=m_max, seed=seed,
        out=str(out) if out else None)


@typer_app.command('check-weil')
def check_weil_command(
    ctx: typer.Context,
    p: list[int] = typer.Option(None, '--p', callback=_check_prime, help="Primes to audit (repeatable)"),
    max_p: int = typer.Option(199, '--max-p', min=3, help="Audit every prime 3..max-p when no --p is given"),
    h: int = typer.Option(1, '--h'),
    samples: int = typer.Option(2000, '--samples', min=1, help="Random (a, b) pairs above the exhaustive cap"),
    seed: int = typer.Option(0, '--seed', min=0),
    out: Path = typer.Option(None, '--out', help="Audit CSV path"),
):
    """Audit the Weil bound 2 sqrt(p) for Kloosterman sums."""
    primes = list(p) if p else [q for q in range(3, max_p + 1) if is_prime(q)]
    return _dispatch(
        ctx, 'check-weil', primes=primes, h=h, samples=samples, seed=seed,
        out=str(out) if out else None)


@typer_app.command('check-l1')
def check_l1_command(
    ctx: typer.Context,
    p: list[int] = typer.Option(None, '--p', callback=_check_prime, help="Primes (repeatable)"),
    s: int = typer.Option(0, '--s', help="Interval offset S"),
    out: Path = typer.Option(None, '--out', help="Audit CSV path"),
):
    """Report the L1 size of incomplete geometric sums against sqrt(p) log p and p log p."""
    primes = list(p) if p else [101, 499, 1009]
    return _dispatch(ctx, 'check-l1', primes=primes, S=s, out=str(out) if out else None)


@typer_app.command('report')
def report_command(
    ctx: typer.Context,
    input: Path = typer.Argument(..., help="Sweep CSV report"),
    constants: Path = typer.Option(None, '--constants', help="Frozen constants to check against"),
    json_out: Path = typer.Option(None, '--json', help="Mirror the records to this JSON file"),
):
    """Summarize a sweep CSV: constants per theorem and crossover verdicts."""
    return _dispatch(
        ctx, 'report', input=str(input), constants=str(constants) if constants else None,
        json_out=str(json_out) if json_out else None)


@typer_app.callback()
def callback(
    ctx: typer.Context,
    logging: bool = typer.Option(False, '--logging', help="Enable logging to stderr"),
    logging_level: str = typer.Option('INFO', '--logging-level'),
    log_file: str = typer.Option(None, '--log-file'),
    env: str = typer.Option(None, '--env', help="Path to a .env file with PRIMESMOOTH_* settings"),
):
    """
    primesmooth CLI
    """
    ctx.ensure_object(dict)
    if ctx.obj.get('parse_only'):
        return
    if logging:
        setup_logging(log_file=log_file, stdout_log_level=logging_level, file_log_level=logging_level)
    load_settings(env)


def parse_args(argv: list[str]) -> Command:
    """
    Parses argv into a validated Command without running it. Unknown flags,
    missing required options and non-prime moduli raise UsageError.
    """
    command = typer.main.get_command(typer_app)
    try:
        result = command.main(
            args=list(argv), prog_name='primesmooth', standalone_mode=False,
            obj={'parse_only': True})
    except ClickUsageError as e:
        raise UsageError(e.format_message()) from e
    if not isinstance(result, Command):
        raise UsageError("Expected a subcommand")
    return result


def _emit(**tokens):
    typer.echo(' '.join(f"{k}={v}" for k, v in tokens.items()))


def _build_query(o: dict):
    kind, p = o['kind'], o['p']
    field = prime_field(p)

    def require(*names):
        missing = [name for name in names if o.get(name) is None]
        if missing:
            raise UsageError(f"--kind {kind} needs {', '.join('--' + n.lower() for n in missing)}")

    if kind in ('J', 'J1'):
        if o.get('g') is None:
            ctx = generator_ctx(p)
        else:
            if not is_primitive_root(o['g'], field):
                raise DomainError(f"{o['g']} is not a primitive root mod {p}")
            ctx = GeneratorCtx(field=field, g=o['g'] % p)
            try:
                ctx = build_dlog_table(ctx)
            except CapacityError as e:
                logger.warning(f"{e}; falling back to direct exponentiation")
        if kind == 'J':
            require('K', 'N')
            return PowerBoxQuery(ctx=ctx, H=o['H'], K=o['K'], M=o['M'], N=o['N'])
        require('h', 'N')
        return PowerDiffQuery(ctx=ctx, h=o['h'], N=o['N'])
    if kind == 'J2':
        require('U', 'V', 'T')
        return ProductIntervalQuery(
            field=field, U=ResidueSet(o['U']), V=ResidueSet(o['V']), interval=ResidueInterval(o['S'], o['T']))
    if kind == 'J3':
        require('T')
        if o.get('set_family') == 'quadratic_residues':
            X = ResidueSet.quadratic_residues(p)
        else:
            require('X')
            X = ResidueSet(o['X'])
        return SetIntervalQuery(field=field, X=X, interval=ResidueInterval(o['S'], o['T']))
    require('h', 'N')
    return HyperbolaBoxQuery.square(field, o['h'], o['N'])


def _run_count(o: dict) -> int:
    q = _build_query(o)
    try:
        m = measure(q)
    except (DomainError, RangeError, CapacityError) as e:
        # envelope undefined (empty set, spectrum cap); the count itself still stands
        logger.warning(f"No envelope for this query: {e}")
        exact = count(q)
        _emit(kind=q.kind, p=q.p, count=exact, main_term=format_fraction(q.main_term()))
        return EXIT_OK
    _emit(
        kind=q.kind, p=q.p, count=m['exact_count'], main_term=format_fraction(m['main_term']),
        abs_error=format_fraction(m['abs_error']), envelope=format_real(m['envelope_new']),
        ratio=format_real(m['ratio_new']))
    return EXIT_OK


def _run_sandwich(o: dict) -> int:
    q = _build_query(o)
    counts = bracket(q)
    exact = count(q)
    inside = counts.contains(exact)
    _emit(
        kind=q.kind, p=q.p, j_prime=counts.j_prime, j_dprime=counts.j_dprime, divisor=counts.divisor,
        count=exact, complemented=str(counts.complemented).lower(), bracket='ok' if inside else 'violated')
    if not inside:
        raise CertificateViolation(f"Sandwich {counts!r} does not contain the count {exact}")
    return EXIT_OK


def _run_sweep(o: dict) -> int:
    config = load_sweep_config(o['config'])
    if o['seed'] is not None:
        config.seed = o['seed']
    out = o['out'] or config.output
    if out is None:
        raise UsageError("No output path: pass --out or set output in the config")
    records = run_sweep(config, workers=o['workers'])
    write_report(records, out, o['format'] or config.format)
    _emit(records=len(records), out=out)
    if o['freeze']:
        save_constants(freeze_constants(records), o['freeze'])
    if o['constants']:
        violations = check_constants(records, load_constants(o['constants']))
        _emit(constant_violations=len(violations))
        if violations:
            raise CertificateViolation(f"{len(violations)} records exceed the frozen constants")
    return EXIT_OK


def _finish_audit(report, out) -> int:
    if out:
        report.write(out)
    _emit(
        audit=report.name, checks=report.checks, violations=report.violations,
        max_ratio=format_real(report.max_ratio), seed=report.seed)
    report.raise_on_violation()
    return EXIT_OK


def _run_check_lemma(o: dict) -> int:
    report = audit_lemma(trials=o['trials'], moduli=(o['m_min'], o['m_max']), seed=o['seed'])
    return _finish_audit(report, o['out'])


def _run_check_weil(o: dict) -> int:
    report = audit_weil(o['primes'], h=o['h'], seed=o['seed'], samples=o['samples'])
    return _finish_audit(report, o['out'])


def _run_check_l1(o: dict) -> int:
    report = audit_l1_claim(o['primes'], lengths=DEFAULT_L1_LENGTHS, S=o['S'])
    if o['out']:
        report.write(o['out'])
    for row in report.rows:
        _emit(**row)
    _emit(audit=report.name, checks=report.checks, violations=report.violations)
    report.raise_on_violation()
    return EXIT_OK


def _run_report(o: dict) -> int:
    records = read_records(o['input'])
    if o['json_out']:
        write_report(records, o['json_out'], 'json')
    crossover = crossover_violations(records)
    for theorem, c_star in freeze_constants(records).items():
        selected = [r for r in records if r.theorem == theorem]
        _emit(theorem=theorem, records=len(selected), c_star=format_real(c_star))
    _emit(crossover_violations=len(crossover))
    failed = len(crossover)
    if o['constants']:
        violations = check_constants(records, load_constants(o['constants']), rel_tol=1e-10)
        _emit(constant_violations=len(violations))
        failed += len(violations)
    if failed:
        raise CertificateViolation(f"{failed} report checks failed")
    return EXIT_OK


HANDLERS = {
    'count': _run_count,
    'sandwich': _run_sandwich,
    'sweep': _run_sweep,
    'check-lemma': _run_check_lemma,
    'check-weil': _run_check_weil,
    'check-l1': _run_check_l1,
    'report': _run_report,
}


def run(cmd: Command) -> int:
    """
    Executes a parsed Command. Returns 0 on success, 1 when a checked bound
    fails, 2 on invalid arguments and 3 on I/O failure.
    """
    try:
        return HANDLERS[cmd.subcommand](cmd.options)
    except PrimeSmoothError as e:
        logger.error(f"{cmd.subcommand} failed: {e}")
        typer.echo(f"error={type(e).__name__} message={e}", err=True)
        return e.exit_code
