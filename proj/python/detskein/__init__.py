"""Link determinants, rational tangles and skein certificates."""

from ._core import (
    DomainError,
    ParseError,
    certify,
    components,
    connectivity,
    continued_fraction,
    determinant,
    determinant_at,
    evaluate,
    fit,
    mediant,
    n_colorable,
    normalize,
    verify,
)

__all__ = [
    "DomainError",
    "ParseError",
    "certify",
    "components",
    "connectivity",
    "continued_fraction",
    "determinant",
    "determinant_at",
    "evaluate",
    "fit",
    "mediant",
    "n_colorable",
    "normalize",
    "verify",
]
