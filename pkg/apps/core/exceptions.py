# apps/core/exceptions.py
"""Error hierarchy of the workbench. Each class carries the CLI exit code it maps to."""
from typing import Optional, Tuple


class BirecError(Exception):
    """Base class for every error raised by the workbench."""

    exit_code = 3

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ParseError(BirecError):
    """Malformed input file."""

    exit_code = 2

    def __init__(self, message: str, line: Optional[int] = None, source: Optional[str] = None):
        self.line = line
        self.source = source
        where = ''
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"line {line}:"
        super().__init__(f"{where} {message}".strip())


class InputError(BirecError):
    """Unknown letter, unreadable file or bad argument value."""

    exit_code = 2


class DomainError(BirecError):
    """An operation was called outside its domain (not recurrent, not a code, ...)."""

    exit_code = 3


class NotPrefixCode(DomainError):
    def __init__(self, pair: Tuple[str, str], kind: str = 'prefix'):
        self.pair = pair
        shown = tuple(word or 'eps' for word in pair)
        super().__init__(f"not a {kind} code: {shown[0]!r} and {shown[1]!r}")


class AmbiguityError(DomainError):
    """The automaton admits two successful paths with the same label."""

    def __init__(self, witness: str, paths: Optional[Tuple[tuple, tuple]] = None):
        self.witness = witness
        self.paths = paths
        super().__init__(f"automaton is ambiguous on {witness or 'eps'!r}")


class ResourceCapExceeded(BirecError):
    exit_code = 4

    def __init__(self, cap: int, what: str = 'monoid elements'):
        self.cap = cap
        super().__init__(f"more than {cap} {what}; raise --cap to continue")


class InvariantViolation(BirecError):
    """An internal cross-check failed; the result cannot be trusted."""

    exit_code = 3


class InternalInconsistency(InvariantViolation):
    """Two independent methods returned different answers."""
