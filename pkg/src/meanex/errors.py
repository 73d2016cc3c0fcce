"""Error taxonomy shared across the package.

Two failure classes matter to callers (and map to CLI exit codes):
input problems (malformed files, bad flags, unparsable specs) and
numeric/domain problems (parameter domains, guard violations,
nonconvergent quadrature).
"""


class MeanexError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MeanexError):
    """Malformed input: files, CSV rows, spec strings, flag values. CLI exit 2."""


class DomainError(MeanexError):
    """Mathematical precondition violated: parameter domains, guards, degenerate data. CLI exit 3."""


class NumericError(MeanexError):
    """Numeric evaluation failed: nonconvergent quadrature, overflow range. CLI exit 3."""
