class AztecError(Exception):
    """Base class for every error raised by this package."""


class InvalidSpanError(AztecError, ValueError):
    pass


class InsufficientTermsError(AztecError, ValueError):
    pass


class IllPosedProfileError(AztecError, ValueError):
    pass


class InconsistentProfileError(AztecError, ValueError):
    pass


class DomainError(AztecError, ValueError):
    pass


class TilingValidationError(AztecError, ValueError):
    pass


class SizeLimitError(AztecError):
    """Raised when an exhaustive enumeration is asked for beyond its cutoff.

    ``flag`` names the command-line option that raises the cutoff.
    """

    def __init__(self, what, n, cutoff, flag="--max-enum-n"):
        self.what = what
        self.n = n
        self.cutoff = cutoff
        self.flag = flag
        super().__init__(
            f"{what}: n={n} exceeds the enumeration cutoff {cutoff} "
            f"(raise it with {flag})"
        )


class InternalConsistencyError(AztecError, RuntimeError):
    """A state that valid input can never reach; seeing one is a bug."""
