"""Exact discriminants, Igusa invariants and prime-discriminant searches
for genus-2 Weierstrass equations over the rationals."""

from .exactmath import (
    Polynomial,
    disc_n,
    is_perfect_square,
    is_squarefree,
    mobius_transform,
    odd_part,
    resultant,
    solve_quadratic_z,
    v2,
    vp,
)

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "disc_n",
    "is_perfect_square",
    "is_squarefree",
    "mobius_transform",
    "odd_part",
    "resultant",
    "solve_quadratic_z",
    "v2",
    "vp",
    "__version__",
]
