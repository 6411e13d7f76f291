"""Exception types shared across the package.

The CLI maps these onto its exit codes, so raising the right type matters:
ConfigError/SchemaError -> 2, ShapeError -> 3, NumericError -> 4,
ModelFileError -> 5.
"""


class TgcnnError(Exception):
    """Base class for all package errors."""


class ShapeError(TgcnnError):
    """Tensor rank/dimension mismatch."""


class NumericError(TgcnnError):
    """Non-finite values, guarded divisions, diverged training."""


class ConfigError(TgcnnError):
    """Invalid configuration value or unparseable config text."""


class SchemaError(ConfigError):
    """Malformed data file (CSV schema or band manifest violation)."""


class ModelFileError(TgcnnError):
    """Corrupt or unrecognized model file."""
