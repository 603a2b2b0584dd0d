import pytest

from primesmooth.errors import RangeError, ReportIOError
from primesmooth.verify.config import (
    DEFAULT_SIZES, PILOT_PRIMES, config_from_dict, load_sweep_config, pilot_config, resolve_size)


def _write(tmp_path, text: str):
    path = tmp_path / 'sweep.yaml'
    path.write_text(text)
    return path


def test_load_sweep_config(tmp_path):
    path = _write(tmp_path, """
primes: [101, 211]
seed: 7
trials: 2
format: json
theorems:
  J:
    sizes: [0.25, 10]
  J3:
    set_family: quadratic_residues
  J4:
""")
    config = load_sweep_config(path)
    assert config.primes == [101, 211]
    assert (config.seed, config.trials, config.format) == (7, 2, 'json')
    assert config.theorems['J']['sizes'] == [0.25, 10]
    assert config.theorems['J3']['set_family'] == ['quadratic_residues']
    assert config.theorems['J3']['sizes'] == DEFAULT_SIZES
    assert config.theorems['J4']['sizes'] == DEFAULT_SIZES


def test_prime_range(tmp_path):
    config = load_sweep_config(_write(tmp_path, "prime_range: {start: 100, stop: 130}\n"))
    assert config.primes == [101, 103, 107, 109, 113, 127]


@pytest.mark.parametrize('text', [
    "primes: [101]\nworkerz: 2\n",
    "primes: [101]\ntheorems:\n  J:\n    size: [0.5]\n",
    "primes: [101]\ntheorems:\n  J9: {}\n",
    "primes: [100]\n",
    "primes: [101]\nprime_range: {start: 2, stop: 10}\n",
    "primes: [101]\ntheorems:\n  J3:\n    set_family: squares\n",
    "primes: [101]\ntheorems:\n  J3:\n    set_family: []\n",
    "primes: [101]\ntheorems:\n  J3:\n    set_family: [random, cubes]\n",
    "primes: [101]\ntheorems:\n  J:\n    sizes: [1.5]\n",
    "primes: [101]\ntheorems:\n  J:\n    sizes: [0]\n",
    "- 101\n",
    "primes: [101\n",
])
def test_rejects_bad_config(tmp_path, text):
    with pytest.raises(RangeError):
        load_sweep_config(_write(tmp_path, text))


def test_missing_config(tmp_path):
    with pytest.raises(ReportIOError):
        load_sweep_config(tmp_path / 'missing.yaml')


def test_resolve_size():
    assert resolve_size(0.25, 101, 100) == 25
    assert resolve_size(1.0, 101, 100) == 100
    assert resolve_size(1, 101, 100) == 1
    assert resolve_size(500, 101, 100) == 100
    assert resolve_size(0.001, 101, 100) == 1


def test_pilot_config():
    config = pilot_config()
    assert config.primes == PILOT_PRIMES
    assert config.trials == 3
    assert sorted(config.theorems) == ['J', 'J1', 'J2', 'J3', 'J4']
    assert config.theorems['J3']['set_family'] == ['random', 'quadratic_residues']
    assert pilot_config(primes=[101]).primes == [101]
    assert config_from_dict({}).primes == []
