class PrimeSmoothError(Exception):
    """Base class for all package errors. `exit_code` is what the CLI returns."""
    exit_code = 1


class RangeError(PrimeSmoothError, ValueError):
    """An argument lies outside its documented range"""
    exit_code = 2


class DomainError(PrimeSmoothError, ValueError):
    """The request is mathematically undefined (inverse of zero, empty set)"""
    exit_code = 2


class DegenerateModulusError(DomainError):
    """The modulus is too small for the requested construction"""


class PreconditionError(PrimeSmoothError, ValueError):
    """An operation precondition does not hold"""
    exit_code = 2


class CapacityError(PrimeSmoothError, RuntimeError):
    """A configured capacity cap was exceeded"""

    def __init__(self, message: str, cells: list | None = None):
        super().__init__(message)
        self.cells = cells or []


class CertificateViolation(PrimeSmoothError, AssertionError):
    """An audited bound failed on computed data"""
    exit_code = 1


class ReportIOError(PrimeSmoothError, OSError):
    """Reading or writing a report or config file failed"""
    exit_code = 3

    def __init__(self, message: str, path=None):
        super().__init__(message)
        self.path = path


class UsageError(PrimeSmoothError):
    """Invalid command-line usage"""
    exit_code = 2
