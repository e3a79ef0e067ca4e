"""Exception types shared across the toolkit."""


class ConfigError(Exception):
    """Invalid configuration: bad key, bad value, or inconsistent options."""


class DataError(Exception):
    """Problem with input data: missing directories, unreadable files, empty sets."""


class NumericError(Exception):
    """Numeric failure: NaN divergence, failed decomposition, rank deficiency."""


class ShapeError(ValueError):
    """Tensor shape mismatch between operands."""


class ModelFileError(DataError):
    """Corrupt, truncated, or incompatible model weight file."""
