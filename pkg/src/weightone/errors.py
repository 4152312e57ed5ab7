"""Exception hierarchy shared across the package.

The four base classes map onto the command line tool's exit codes:
invariant violations exit 1, configuration problems exit 2, cache
corruption exits 3 and oracle validation failures exit 4.
"""


class WeightOneError(Exception):
    pass


class InvariantViolation(WeightOneError):
    """An internal consistency assertion failed; signals an upstream bug."""


class ConfigError(WeightOneError):
    pass


class CacheCorruption(WeightOneError):
    pass


class OracleValidationError(WeightOneError):
    pass
