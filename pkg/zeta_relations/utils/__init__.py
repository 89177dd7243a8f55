"""
Utility modules for common functionality.
"""

from .config import Config
from .logger import setup_logger, get_logger
from .errors import (
    ZetaRelationsError,
    SeriesNotInvertibleError,
    SeriesUndefinedError,
    PoleProximityError,
    KernelDimensionError,
    VerificationError,
)

__all__ = [
    "Config",
    "setup_logger",
    "get_logger",
    "ZetaRelationsError",
    "SeriesNotInvertibleError",
    "SeriesUndefinedError",
    "PoleProximityError",
    "KernelDimensionError",
    "VerificationError",
]
