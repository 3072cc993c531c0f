"""Exception hierarchy shared by every module."""


class BlockscopeError(Exception):
    """Base class for all package errors."""


class InputError(BlockscopeError, ValueError):
    """Malformed input: bad permutations, non-primes, unreadable files."""


class DomainError(BlockscopeError, ValueError):
    """An operation was applied outside its domain (e.g. an element not in the group)."""


class CapacityError(BlockscopeError):
    """The group is too large for the enumeration strategy."""


class CyclotomicArithmeticError(BlockscopeError, ArithmeticError):
    """Inversion of zero, or reduction of a value that is not integral at p."""


class TheoremViolation(BlockscopeError):
    """A computation contradicted a proven theorem.

    This indicates a bug in the engine (or corrupted input data) and must never
    be silenced.  ``diagnostics`` carries whatever the failing step knew.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class HypothesisError(DomainError):
    """The inputs do not satisfy the hypotheses of the theorem being applied."""
