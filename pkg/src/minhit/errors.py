class MinhitError(Exception):
    """Base class for errors raised by this package."""


class ExpansionLimitError(MinhitError):
    """A row (or promise) is too large to expand under the given limit."""


class FileFormatError(MinhitError):
    """Malformed hypergraph / set-family / row input."""


class UnresolvedVerdictError(MinhitError):
    """A row classification could not be decided with the available tools."""
