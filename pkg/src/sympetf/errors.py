"""Exception types shared across the package.

``ValueError`` (and ``IndexError``) are reserved for misuse of an API:
bad dimensions, out-of-range orders, malformed parameters.  The classes
below signal *domain* failures, where the input is well formed but does
not have the mathematical structure an operation requires.  The CLI maps
domain failures to exit code 1 and usage failures to exit code 2.
"""


class DomainError(Exception):
    """Input is well formed but lacks the required mathematical structure."""


class NotSkewSymmetricError(DomainError):
    pass


class NotAFrameError(DomainError):
    pass


class FactorizationError(DomainError):
    """Gram factorization failed: zero rank or odd numerical rank."""


class NotEtfError(DomainError):
    """A certified square or core ETF Gram matrix was required."""


class NotEquiangularError(DomainError):
    pass


class RoundingError(DomainError):
    """Entries did not round cleanly to the expected integer pattern."""


class InvalidSeidelError(DomainError):
    """Matrix is not the Seidel adjacency matrix of a tournament."""


class NotSkewHadamardError(DomainError):
    pass


class NotSkewConferenceError(DomainError):
    pass


class FlatKernelError(DomainError):
    """Kernel is not one-dimensional or not spanned by a flat vector."""


class NotPsdError(DomainError):
    pass


class RankMismatchError(DomainError):
    pass
