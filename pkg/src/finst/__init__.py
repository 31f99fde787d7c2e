"""finst: exhaustive verification of finite institution-style structures."""

__version__ = "0.1.0"

from .report import (InvalidInput, Item, Report, SizeGuardExceeded,  # noqa: F401
                     REFUSED, STRUCTURAL, VALID, VIOLATIONS)
