"""Exception types shared across the package."""


class CopuzzleError(Exception):
    """Base class for all package errors."""


class ConfigError(CopuzzleError):
    """Invalid session or sweep configuration."""


class GenerationError(CopuzzleError):
    """A puzzle validator kept failing past the retry bound."""


class TurnOrderError(CopuzzleError):
    """A turn was taken out of order or on a terminated session."""


class AgentError(CopuzzleError):
    """An agent failed to produce a reply (e.g. remote transport failure)."""


class UnknownSessionError(CopuzzleError):
    """Session id not found in the service store."""


class RoleOccupiedError(CopuzzleError):
    """A human role was claimed twice for the same session."""
