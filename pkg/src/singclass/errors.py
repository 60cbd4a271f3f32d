"""Exception hierarchy shared by the library and the CLI."""


class SingclassError(Exception):
    """Base class for every error raised by singclass."""

    exit_code = 3


class UsageError(SingclassError, ValueError):
    """Bad arguments: mismatched orders, malformed scene files, unknown kinds."""

    exit_code = 2


class DomainError(SingclassError, ArithmeticError):
    """A mathematical precondition failed (non-invertible unit, inexact division)."""

    exit_code = 3


class InvalidGermError(DomainError):
    """Weights do not describe a quasi-homogeneous isolated singularity."""


class UnsupportedError(DomainError):
    """The requested computation is outside the supported scene family."""
