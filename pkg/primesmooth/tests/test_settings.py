import os

from primesmooth.config import get_settings, load_settings
from primesmooth.logging import setup_logging


def test_env_file_overrides(tmp_path, monkeypatch):
    settings = get_settings()
    monkeypatch.setattr(settings, 'workers', settings.workers)
    monkeypatch.setattr(settings, 'brute_volume_cap', settings.brute_volume_cap)
    env = tmp_path / 'test.env'
    env.write_text("PRIMESMOOTH_WORKERS=3\nPRIMESMOOTH_BRUTE_VOLUME_CAP=5000\n")
    try:
        assert load_settings(str(env)) is settings
        assert settings.workers == 3
        assert settings.brute_volume_cap == 5000
    finally:
        os.environ.pop('PRIMESMOOTH_WORKERS', None)
        os.environ.pop('PRIMESMOOTH_BRUTE_VOLUME_CAP', None)


def test_setup_logging_writes_file(tmp_path):
    log_file = tmp_path / 'run.log'
    logger = setup_logging(log_file=str(log_file), stdout_log_level='WARNING', file_log_level='INFO')
    logger.info("Cell: THM1 | p=101")
    logger.complete()
    logger.remove()
    assert 'Cell: THM1 | p=101' in log_file.read_text()
