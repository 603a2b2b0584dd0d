import sys
from loguru import logger

def setup_logging(
        log_file=None, stdout_log_level="DEBUG",
        file_log_level="DEBUG", file_log_mode='w'):
    logger.enable("primesmooth")

    logger.remove()

    # Time and padded level keep sweep lines aligned
    log_format = "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | <level>{level:^8}</level> | {message}"
    logger.add(sys.stderr, level=stdout_log_level, format=log_format, enqueue=True)

    if log_file:
        logger.add(
            log_file, rotation="10 MB", level=file_log_level,
            format=log_format, mode=file_log_mode, enqueue=True)

    return logger

def log_cell(theorem: str, p: int, cell_index: int, trial: int, elapsed: float):
    """
    Logs a finished sweep cell: theorem family, modulus, cell position and timing.

    Args:
        theorem (str): Theorem tag of the cell.
        p (int): The prime modulus.
        cell_index (int): Index of the cell within its (theorem, p) grid.
        trial (int): Trial number within the cell.
        elapsed (float): Seconds spent on the cell.
    """
    logger.info(f"Cell: {theorem} | p={p} | cell={cell_index} | trial={trial} | {elapsed:.3f}s")

def log_sandwich(family: str, counts: object):
    """Logs the smoothed counts of one sandwich evaluation."""
    logger.debug(
        f"Sandwich: {family} | J'={counts.j_prime} | J''={counts.j_dprime} "
        f"| divisor={counts.divisor} | complemented={counts.complemented}")

def log_audit(name: str, report: object):
    """
    Logs the summary of an audit: number of checks, violations and worst ratio.

    Args:
        name (str): Audit name.
        report (object): The AuditReport being logged.
    """
    logger.info(
        f"Audit: {name} | checks={report.checks} | violations={report.violations} "
        f"| max_ratio={report.max_ratio:.6f}")

def log_table(kind: str, p: int, size: int):
    """Logs construction of a per-modulus lookup table."""
    logger.debug(f"Table: {kind} | p={p} | entries={size}")
