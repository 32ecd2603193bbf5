"""Error types shared across the simulator"""


class IntransimError(Exception):
    """Base class for simulator errors"""


class ConfigError(IntransimError, ValueError):
    """Invalid or inconsistent configuration value"""

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"{key}: {message}")


class DimensionError(IntransimError, ValueError):
    """Vectors or matrices whose shapes do not line up"""


class DomainError(IntransimError, ValueError):
    """Search point outside the configured landscape domain"""


class UsageError(IntransimError, ValueError):
    """Request that names something that does not exist (e.g. a CSV column)"""
