"""Point counting, supersingularity and birational maps for Edwards curves over finite fields."""

__version__ = "0.1.0"

from .counting import (
    CountReport,
    criterion_sum,
    extension_order,
    is_supersingular,
    order_congruence,
    resolve_exact_count,
    supersingular_order,
    trace,
)
from .curves import AffinePoint, EdwardsCurve, MontgomeryCurve, enumerate_edwards
from .field import Field, FieldElement, build_extension, legendre, sqrt_mod

__all__ = [
    "AffinePoint",
    "CountReport",
    "EdwardsCurve",
    "Field",
    "FieldElement",
    "MontgomeryCurve",
    "build_extension",
    "criterion_sum",
    "enumerate_edwards",
    "extension_order",
    "is_supersingular",
    "legendre",
    "order_congruence",
    "resolve_exact_count",
    "sqrt_mod",
    "supersingular_order",
    "trace",
]
