"""
zeta-relations: exact linear relations among the series Φ₂ₛ, Φ*₂ₛ, Ψ₂ₛ, Ψ*₂ₛ
of a second-order recurrence, with arbitrary-precision certification.
"""

__version__ = "0.1.0"

from .main import ZetaRelations, main

__all__ = ["ZetaRelations", "main", "__version__"]
