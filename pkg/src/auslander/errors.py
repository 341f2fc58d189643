"""Exception types shared across the package."""


class AuslanderError(Exception):
    """Base class for domain errors (inapplicable operations, failed searches)."""


class NotApplicable(AuslanderError, ValueError):
    """An action was requested where its precondition fails."""


class Unsupported(AuslanderError):
    """A configuration outside what the implemented case analysis covers."""


class SearchFailed(AuslanderError, RuntimeError):
    """A constructive search exhausted its candidates."""
