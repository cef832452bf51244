"""
Exact linear algebra over the rationals.

Elimination runs on sympy DomainMatrix over QQ. Inputs are lists of rows
of ints or Fractions; results come back as Fractions.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

Matrix = List[List[Fraction]]


def to_fraction(value) -> Fraction:
    """Convert a QQ or ZZ domain element to a Fraction."""
    return Fraction(int(value.numerator), int(value.denominator))


def to_fractions(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def qq_matrix(rows: Sequence[Sequence], ncols: Optional[int] = None) -> DomainMatrix:
    """Build a DomainMatrix over QQ (empty rows keep ncols)."""
    n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    if not rows:
        return DomainMatrix.zeros((0, n), QQ)
    entries = [[(f.numerator, f.denominator) for f in row] for row in to_fractions(rows)]
    return DomainMatrix.from_list(entries, QQ)


def from_qq_matrix(matrix: DomainMatrix) -> Matrix:
    return [[to_fraction(x) for x in row] for row in matrix.to_list()]


def reduced_row_echelon(rows: Sequence[Sequence], ncols: Optional[int] = None) -> Tuple[Matrix, List[int]]:
    """
    Reduced row echelon form.

    Args:
        rows: Matrix rows
        ncols: Column count (needed when rows is empty)

    Returns:
        (nonzero rows of the RREF, pivot column indices)
    """
    if not rows:
        return [], []
    rref, pivots = qq_matrix(rows, ncols).rref()
    return from_qq_matrix(rref)[: len(pivots)], list(pivots)


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return qq_matrix(rows).rank()


def nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """
    Basis of {x : A x = 0}.

    One vector per free column, with a 1 in that column.

    Args:
        rows: Matrix A
        ncols: Number of columns of A

    Returns:
        List of basis vectors
    """
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    rref, pivots = qq_matrix(rows, ncols).rref()
    if not pivots:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    return from_qq_matrix(rref.nullspace_from_rref(pivots))


def inverse(matrix: Sequence[Sequence]) -> Matrix:
    """
    Inverse of a square nonsingular matrix.

    Raises:
        ValueError: If the matrix is singular
    """
    try:
        return from_qq_matrix(qq_matrix(matrix).inv())
    except DMNonInvertibleMatrixError as exc:
        raise ValueError("singular matrix") from exc


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> List[Fraction]:
    """
    Solve A x = b for square nonsingular A.

    Raises:
        ValueError: If A is singular
    """
    inv = inverse(matrix)
    return mat_vec(inv, rhs)


def coordinates(basis_rows: Sequence[Sequence], vector: Sequence) -> Optional[List[Fraction]]:
    """
    Coefficients c with sum_i c_i * basis_rows[i] == vector.

    Args:
        basis_rows: Linearly independent rows
        vector: Target vector

    Returns:
        Coefficients, or None if vector is outside the span
    """
    k = len(basis_rows)
    if k == 0:
        return [] if all(Fraction(x) == 0 for x in vector) else None
    # columns = basis vectors; solve B^T c = v
    system = [[basis_rows[i][j] for i in range(k)] + [vector[j]] for j in range(len(vector))]
    rref, pivots = reduced_row_echelon(system, k + 1)
    if k in pivots:
        return None
    solution = [Fraction(0)] * k
    for row, p in zip(rref, pivots):
        solution[p] = row[k]
    return solution


def mat_vec(matrix: Sequence[Sequence], vector: Sequence) -> List[Fraction]:
    return [sum((Fraction(a) * b for a, b in zip(row, vector)), Fraction(0)) for row in matrix]


def vec_mat(vector: Sequence, matrix: Sequence[Sequence]) -> List[Fraction]:
    ncols = len(matrix[0]) if matrix else 0
    return [sum((Fraction(vector[i]) * matrix[i][j] for i in range(len(matrix))), Fraction(0)) for j in range(ncols)]


def dot(a: Sequence, b: Sequence):
    return sum((x * y for x, y in zip(a, b)), 0)
