"""Exception hierarchy shared by all nilcone modules.

The CLI maps these onto exit codes: DomainError and ConfigurationError
exit with 1, ResourceError with 2.
"""


class NilconeError(Exception):
    pass


class ConfigurationError(NilconeError):
    """Bad preset name or malformed configuration."""


class DomainError(NilconeError):
    """Input outside an operation's mathematical domain."""


class ResourceError(NilconeError):
    """A configured size cap was exceeded (e.g. representation too large)."""
