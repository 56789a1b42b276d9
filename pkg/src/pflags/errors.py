"""Exception taxonomy shared by all modules.

Errors are split by who is at fault: bad user data (``InvalidFieldError``,
``ParseError``), an operation applied outside its stated domain
(``PreconditionError``), a solve that would need a larger coefficient field
(``NeedsExtensionError``), and internal consistency failures that indicate a
bug rather than bad input (``InternalInvariantError``).
"""


class PflagsError(Exception):
    """Base class for all library errors."""


class InvalidFieldError(PflagsError):
    """Field construction data is inconsistent (non-prime p, bad modulus)."""


class PreconditionError(PflagsError):
    """An operation was called outside its stated domain."""


class NeedsExtensionError(PflagsError):
    """A solve needs a root outside the ambient finite field.

    Raised instead of silently extending the coefficient field.
    """


class InternalInvariantError(PflagsError):
    """A re-verification step failed; indicates a library bug."""


class ParseError(PflagsError):
    """Malformed JSON input or unknown schema."""
