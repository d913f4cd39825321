"""Combinatorics of the positive Grassmannian: positroids, plabic graphs,
exact boundary measurements, and dual polygon tilings."""

from .positroids import (
    DecoratedPermutation,
    GrassmannNecklace,
    Positroid,
    helicity,
    is_matroid,
    is_positroid,
    necklace_from_permutation,
    necklace_from_positroid,
    permutation_from_necklace,
    positroid_from_necklace,
    schubert_matroid,
    gale_leq,
    shift_permutation,
)

__all__ = [
    "DecoratedPermutation",
    "GrassmannNecklace",
    "Positroid",
    "helicity",
    "is_matroid",
    "is_positroid",
    "necklace_from_permutation",
    "necklace_from_positroid",
    "permutation_from_necklace",
    "positroid_from_necklace",
    "schubert_matroid",
    "gale_leq",
    "shift_permutation",
]
