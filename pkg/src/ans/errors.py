"""Exception types shared across the package.

Everything deliberate raises a subclass of ``AnsError``; the CLI maps those
to exit code 2 (domain errors) and anything else to exit code 1.
"""


class AnsError(Exception):
    """Base class for all errors raised on purpose by this package."""


class FormatError(AnsError):
    """A text file (automaton or morphism) failed strict parsing."""

    def __init__(self, path: str, line: int, message: str):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {message}")


class AlphabetMismatchError(AnsError):
    """Two objects that must share one ordered alphabet do not."""


class NotInLanguageError(AnsError):
    """A word was valuated against a language it does not belong to."""


class FiniteLanguageError(AnsError):
    """A numeration system was requested over a finite (or empty) language."""


class PartitionError(AnsError):
    """A family of fiber languages fails to partition the base language."""


class KernelBoundError(AnsError):
    """Black-box kernel reconstruction did not stabilize within its bound."""


class NotProlongableError(AnsError):
    """A morphism cannot be iterated from the requested seed letter."""
