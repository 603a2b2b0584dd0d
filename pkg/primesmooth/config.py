import os

import param
from dotenv import load_dotenv
from loguru import logger

ENV_PREFIX = 'PRIMESMOOTH_'


class Settings(param.Parameterized):
    """Capacity caps and defaults shared by every module"""
    dlog_table_cap = param.Integer(default=2**24, bounds=(3, None), doc="""
        Largest p for which discrete-log/power tables are built""")
    spectrum_cap = param.Integer(default=2**16, bounds=(3, None), doc="""
        Largest p for which full set spectra are evaluated""")
    brute_volume_cap = param.Integer(default=10**9, bounds=(1, None), doc="""
        Maximum loop volume of a brute-force oracle""")
    weil_exhaustive_cap = param.Integer(default=199, bounds=(3, None), doc="""
        Primes up to this value are audited over every (a, b)""")
    sweep_cell_budget = param.Integer(default=10**8, bounds=(1, None), doc="""
        Maximum elementary steps a single sweep cell may cost""")
    workers = param.Integer(default=1, bounds=(1, None), doc="""
        Default worker count for sweeps""")


_settings = Settings()


def load_settings(env: str = None) -> Settings:
    """
    Loads a dotenv file (if given, else a `.env` in the working dir) and
    overrides the defaults with any PRIMESMOOTH_* variables.
    """
    if env:
        load_dotenv(env)
    else:
        load_dotenv()
    overrides = {}
    for name in _settings.param:
        if name == 'name':
            continue
        raw = os.environ.get(ENV_PREFIX + name.upper())
        if raw is not None:
            overrides[name] = int(raw)
    if overrides:
        logger.info(f"Settings overridden from environment: {overrides}")
        _settings.param.update(**overrides)
    return _settings


def get_settings() -> Settings:
    return _settings
