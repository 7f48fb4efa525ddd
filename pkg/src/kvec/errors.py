"""Exception types shared across the package.

The CLI maps these onto exit status 2 (bad input or parameters); anything
else escaping to the top level is an internal error (status 1).
"""


class KvecError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(KvecError, ValueError):
    """A parameter is outside its valid range (bad K, empty corpus, ...)."""


class IngestError(KvecError, ValueError):
    """Input bytes could not be decoded as text."""


class UnknownWordError(KvecError, KeyError):
    """A word id or surface was looked up that the corpus does not contain."""
