from pathlib import Path

import param
from loguru import logger
from ruamel.yaml import YAML
from ruamel.yaml.error import YAMLError

from primesmooth.arith.primes import is_prime
from primesmooth.base.model_base import Model
from primesmooth.errors import RangeError, ReportIOError

TOP_KEYS = {'primes', 'prime_range', 'seed', 'trials', 'workers', 'output', 'format', 'budget', 'theorems'}

SECTION_KEYS = {
    'J': {'sizes'},
    'J1': {'sizes'},
    'J2': {'sizes', 'set_sizes'},
    'J3': {'sizes', 'set_family', 'set_fraction'},
    'J4': {'sizes'},
}

DEFAULT_SIZES = [0.125, 0.25, 0.5, 1.0]
DEFAULT_SECTION = {
    'J': {'sizes': DEFAULT_SIZES},
    'J1': {'sizes': DEFAULT_SIZES},
    'J2': {'sizes': DEFAULT_SIZES, 'set_sizes': [0.25]},
    'J3': {'sizes': DEFAULT_SIZES, 'set_family': 'random', 'set_fraction': 0.25},
    'J4': {'sizes': DEFAULT_SIZES},
}
SET_FAMILIES = ['random', 'quadratic_residues']

PILOT_PRIMES = [101, 211, 401, 809, 1601, 3203, 6421]


def _check_sizes(values, label: str) -> list:
    if not isinstance(values, (list, tuple)):
        raise RangeError(f"{label} must be a list, got {values!r}")
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise RangeError(f"{label} entries must be numbers, got {v!r}")
        if isinstance(v, int) and v < 1:
            raise RangeError(f"{label} absolute sizes must be >= 1, got {v}")
        if isinstance(v, float) and not 0.0 < v <= 1.0:
            raise RangeError(f"{label} fractions must lie in (0, 1], got {v}")
        out.append(v)
    return out


def _check_families(value, label: str) -> list:
    """A family name or a list of them; each becomes its own block of cells"""
    families = [value] if isinstance(value, str) else value
    if not isinstance(families, (list, tuple)) or not families:
        raise RangeError(f"{label} must be a family name or a non-empty list, got {value!r}")
    for f in families:
        if f not in SET_FAMILIES:
            raise RangeError(f"{label} must be one of {SET_FAMILIES}, got {f!r}")
    return list(families)


def resolve_size(value, p: int, hi: int, lo: int = 1) -> int:
    """Ints are absolute, floats are fractions of p; either is clamped into [lo, hi]"""
    size = int(value * p) if isinstance(value, float) else int(value)
    return min(hi, max(lo, size))


class SweepConfig(Model):
    """Primes, per-theorem grids and run options of one sweep"""
    primes = param.List(default=[], item_type=int, doc="""
        Moduli swept, each prime""")
    seed = param.Integer(default=0, bounds=(0, None), doc="""
        Root seed; per-trial generators derive from (seed, theorem, p, cell, trial)""")
    trials = param.Integer(default=1, bounds=(1, None))
    workers = param.Integer(default=1, bounds=(1, None))
    output = param.String(default=None, allow_None=True, doc="""
        Report path; the CLI --out flag takes precedence""")
    format = param.Selector(objects=['csv', 'json'], default='csv')
    budget = param.Integer(default=None, allow_None=True, bounds=(1, None), doc="""
        Maximum estimated elementary steps per cell; defaults to the settings cap""")
    theorems = param.Dict(default={}, doc="""
        Mapping from J, J1, J2, J3, J4 to grid sections""")

    def __init__(self, **params):
        super().__init__(**params)
        for p in self.primes:
            if not is_prime(p):
                raise RangeError(f"Sweep modulus {p} is not prime")
        sections = {}
        for family, section in self.theorems.items():
            if family not in SECTION_KEYS:
                raise RangeError(f"Unknown theorem section {family!r}; expected {sorted(SECTION_KEYS)}")
            section = dict(section or {})
            unknown = set(section) - SECTION_KEYS[family]
            if unknown:
                raise RangeError(f"Unknown keys {sorted(unknown)} in section {family}")
            merged = {**DEFAULT_SECTION[family], **section}
            merged['sizes'] = _check_sizes(merged['sizes'], f"{family}.sizes")
            if 'set_sizes' in merged:
                merged['set_sizes'] = _check_sizes(merged['set_sizes'], f"{family}.set_sizes")
            if 'set_family' in merged:
                merged['set_family'] = _check_families(merged['set_family'], f"{family}.set_family")
            if 'set_fraction' in merged and not 0.0 < merged['set_fraction'] < 1.0:
                raise RangeError(f"{family}.set_fraction must lie in (0, 1), got {merged['set_fraction']}")
            sections[family] = merged
        self.theorems = sections


def config_from_dict(data: dict) -> SweepConfig:
    """Builds a SweepConfig from parsed file content, rejecting unknown keys"""
    data = dict(data or {})
    unknown = set(data) - TOP_KEYS
    if unknown:
        raise RangeError(f"Unknown sweep config keys {sorted(unknown)}")
    if 'primes' in data and 'prime_range' in data:
        raise RangeError("Give either primes or prime_range, not both")
    prime_range = data.pop('prime_range', None)
    if prime_range is not None:
        prime_range = dict(prime_range)
        if set(prime_range) != {'start', 'stop'}:
            raise RangeError(f"prime_range needs exactly start and stop, got {sorted(prime_range)}")
        data['primes'] = [n for n in range(max(2, prime_range['start']), prime_range['stop']) if is_prime(n)]
    if 'theorems' in data:
        data['theorems'] = {k: (dict(v) if v else {}) for k, v in dict(data['theorems']).items()}
    if 'primes' in data:
        data['primes'] = [int(p) for p in data['primes']]
    return SweepConfig(**data)


def load_sweep_config(path) -> SweepConfig:
    path = Path(path)
    yaml = YAML(typ='safe')
    try:
        with open(path) as f:
            data = yaml.load(f)
    except OSError as e:
        raise ReportIOError(f"Cannot read sweep config {path}: {e}", path=path) from e
    except YAMLError as e:
        raise RangeError(f"Malformed sweep config {path}: {e}") from e
    if data is not None and not isinstance(data, dict):
        raise RangeError(f"Sweep config {path} must be a mapping at top level")
    config = config_from_dict(data)
    logger.info(f"Loaded sweep config {path}: {len(config.primes)} primes, sections {sorted(config.theorems)}")
    return config


def pilot_config(**overrides) -> SweepConfig:
    """
    The pilot sweep whose maximum ratios become the frozen constants. J3
    cells run both random sets and the quadratic residues.
    """
    theorems = {family: {} for family in SECTION_KEYS}
    theorems['J3'] = {'set_family': list(SET_FAMILIES)}
    params = dict(primes=list(PILOT_PRIMES), seed=0, trials=3, theorems=theorems)
    params.update(overrides)
    return SweepConfig(**params)
