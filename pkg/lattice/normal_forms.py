"""
Smith and Hermite normal forms of integer matrices.

Both are computed by sympy's DomainMatrix normal forms over ZZ; this
module fixes the conventions the lattice code relies on.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form as _hnf
from sympy.polys.matrices.normalforms import smith_normal_decomp as _snd

IntRows = List[Tuple[int, ...]]


def int_matrix(rows: Sequence[Sequence[int]], ncols: int = 0) -> DomainMatrix:
    """Build a DomainMatrix over ZZ (empty rows keep ncols)."""
    if len(rows) == 0:
        return DomainMatrix.zeros((0, ncols), ZZ)
    return DomainMatrix.from_list([[int(x) for x in row] for row in rows], ZZ)


def int_rows(matrix: DomainMatrix) -> IntRows:
    return [tuple(int(x) for x in row) for row in matrix.to_list()]


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V == D with D diagonal, d1 | d2 | ..., U and V unimodular."""

    U: DomainMatrix
    D: DomainMatrix
    V: DomainMatrix
    V_inverse: DomainMatrix

    @property
    def diagonal(self) -> List[int]:
        entries = self.D.to_list()
        return [int(entries[i][i]) for i in range(min(self.D.shape))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(matrix) -> SmithDecomposition:
    """
    Smith normal form with its transforms.

    Diagonal entries are nonnegative, form a divisibility chain and have
    the zeros last.

    Args:
        matrix: Integer rows or a DomainMatrix over ZZ

    Returns:
        SmithDecomposition with U * A * V == D
    """
    A = matrix if isinstance(matrix, DomainMatrix) else int_matrix(matrix)
    D, U, V = _snd(A)
    V_inverse = V.convert_to(QQ).inv().convert_to(ZZ)
    return SmithDecomposition(U, D, V, V_inverse)


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> IntRows:
    """
    Row-style Hermite normal form of the lattice spanned by rows.

    Pivots move right going down and are positive, entries above a pivot
    are reduced into [0, pivot). Zero rows are dropped.

    sympy returns the column-style form with pivots in the bottom-right;
    reversing coordinates on the way in and rows on the way out turns
    that into the row-style form.

    Args:
        rows: Integer row vectors

    Returns:
        Echelon rows as tuples
    """
    if not rows:
        return []
    reversed_coords = [[int(x) for x in reversed(row)] for row in rows]
    columns = int_matrix(reversed_coords).transpose()
    hnf = _hnf(columns).transpose()
    return [tuple(reversed(row)) for row in reversed(int_rows(hnf))]
