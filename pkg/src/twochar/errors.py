"""Exception types shared across the package."""


class TwoCharError(Exception):
    pass


class LevelMismatchError(TwoCharError):
    """Arithmetic on cyclotomic numbers living at different levels."""


class ShapeError(TwoCharError):
    """Matrix or table with inconsistent dimensions."""


class ParseError(TwoCharError):
    """Malformed input file or literal. Carries a location hint when known."""

    def __init__(self, message, location=None):
        super().__init__(message if location is None else "%s (%s)" % (message, location))
        self.location = location


class ValidationError(TwoCharError):
    """An axiom check failed. `witness` pins down the first offending tuple."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ParameterError(TwoCharError):
    """Builtin constructor called with an out-of-range parameter."""


class SizeCapError(TwoCharError):
    """A computation would exceed the configured size cap."""


class UnsupportedInputError(TwoCharError):
    """Structurally valid input outside the supported regime (e.g. a non-faithful map)."""


class InternalConsistencyError(TwoCharError):
    """An internal invariant failed; indicates a bug or an invalid input object."""
