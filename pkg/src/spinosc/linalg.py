"""Sparse exact Gaussian elimination over the rationals.

Vectors are dictionaries from hashable, totally ordered keys to Fraction.
Rows are kept pivot-normalized with the pivot at the largest key, which
makes elimination terminate by a simple ordering argument.  Everything is
exact; no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping

Vector = dict


def vec_sub_scaled(target: dict, source: Mapping, scale: Fraction) -> None:
    """target -= scale * source, dropping zeros, in place."""
    for key, coeff in source.items():
        value = target.get(key, Fraction(0)) - scale * coeff
        if value:
            target[key] = value
        else:
            target.pop(key, None)


class SparseEchelon:
    """An incrementally built row space with membership queries."""

    def __init__(self):
        self.rows: dict[Hashable, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Mapping) -> dict:
        """The residue of ``vector`` modulo the current row space."""
        out = {k: Fraction(v) for k, v in vector.items() if v}
        while True:
            pivot = None
            for key in out:
                if key in self.rows and (pivot is None or key > pivot):
                    pivot = key
            if pivot is None:
                return out
            vec_sub_scaled(out, self.rows[pivot], out[pivot])

    def insert(self, vector: Mapping) -> bool:
        """Add a vector to the span; returns True if the rank grew."""
        residue = self.reduce(vector)
        if not residue:
            return False
        pivot = max(residue)
        scale = residue[pivot]
        self.rows[pivot] = {k: v / scale for k, v in residue.items()}
        return True

    def contains(self, vector: Mapping) -> bool:
        return not self.reduce(vector)

    def contains_unit(self, key: Hashable) -> bool:
        return self.contains({key: Fraction(1)})


def scalar_ratio(v1: Mapping, v2: Mapping) -> Fraction | None:
    """The scalar c with v1 == c * v2, or None when not proportional."""
    if not v2:
        return None if v1 else Fraction(0)
    if not v1:
        return Fraction(0)
    if set(v1) != set(v2):
        return None
    ratios = {Fraction(v1[k]) / Fraction(v2[k]) for k in v1}
    if len(ratios) != 1:
        return None
    return ratios.pop()
