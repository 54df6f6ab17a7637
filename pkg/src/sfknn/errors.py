"""Exception types shared across the package."""


class SfknnError(Exception):
    """Base class for all package errors."""


class DimensionError(SfknnError):
    """Shapes or grid lengths of the operands do not match."""


class ParameterError(SfknnError):
    """A tuning parameter is outside its admissible range."""


class DegenerateDirectionError(SfknnError):
    """A candidate index direction is (numerically) the zero function."""


class RankError(SfknnError):
    """The profiled normal equations are singular."""


class IllPosedError(SfknnError):
    """A least-squares representation problem is underdetermined."""


class ConfigError(SfknnError):
    """A fit or scenario configuration is inconsistent."""


class DataLoadError(SfknnError):
    """A dataset file could not be parsed into a complete dataset."""


class SchemaVersionError(SfknnError):
    """A stored fit document uses an unsupported schema version."""
