"""
Sublattices of Z^d: saturation, quotient maps, parallelotope points and
dual vectors of simplicial cones.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from errors import DependentGenerators, NotSaturated
from utils.helpers import primitive_vector
from .normal_forms import hermite_normal_form, int_matrix, int_rows, smith_normal_form
from . import rational

IntVector = Tuple[int, ...]


def saturation_basis(vectors: Sequence[Sequence[int]]) -> List[IntVector]:
    """
    Basis of span(vectors) intersected with Z^d, in Hermite form.

    Args:
        vectors: Integer vectors of a common length d

    Returns:
        rank-many integer rows generating the saturated sublattice
    """
    if not vectors:
        return []
    snf = smith_normal_form(int_matrix(vectors))
    k = snf.rank
    if k == 0:
        return []
    return hermite_normal_form(int_rows(snf.V_inverse)[:k])


@dataclass(frozen=True)
class QuotientMap:
    """
    Projection Z^d -> Z^d / L for a saturated sublattice L.

    projection is d x (d - k): a |-> a @ projection. section rows lift
    the quotient basis back to Z^d.
    """

    rank: int
    kernel: Tuple[IntVector, ...]
    projection: Tuple[IntVector, ...]
    section: Tuple[IntVector, ...]

    @property
    def quotient_rank(self) -> int:
        return self.rank - len(self.kernel)

    def project(self, vector: Sequence[int]) -> IntVector:
        q = self.quotient_rank
        return tuple(
            sum(int(vector[i]) * self.projection[i][j] for i in range(self.rank))
            for j in range(q)
        )

    def lift(self, coords: Sequence[int]) -> IntVector:
        return tuple(
            sum(int(coords[j]) * self.section[j][i] for j in range(self.quotient_rank))
            for i in range(self.rank)
        )


def quotient_map(kernel: Sequence[Sequence[int]], rank: int) -> QuotientMap:
    """
    Quotient of Z^d by a saturated sublattice.

    Args:
        kernel: Basis of the sublattice
        rank: d

    Returns:
        QuotientMap whose projection kills the kernel

    Raises:
        NotSaturated: If Z^d / kernel has torsion
    """
    kernel = [tuple(int(x) for x in v) for v in kernel]
    if not kernel:
        identity = tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))
        return QuotientMap(rank, (), identity, identity)

    snf = smith_normal_form(int_matrix(kernel))
    k = snf.rank
    if k != len(kernel):
        raise DependentGenerators("kernel vectors are linearly dependent", {"kernel": kernel})
    torsion = [d for d in snf.diagonal if d > 1]
    if torsion:
        raise NotSaturated(
            "quotient by a non-saturated sublattice has torsion",
            {"kernel": kernel, "invariant_factors": snf.diagonal},
        )

    projection = tuple(row[k:] for row in int_rows(snf.V))
    section = tuple(int_rows(snf.V_inverse)[k:])
    return QuotientMap(rank, tuple(kernel), projection, section)


def _check_independent(generators: Sequence[Sequence[int]]) -> None:
    if rational.rank(generators) != len(generators):
        raise DependentGenerators(
            "cone generators are linearly dependent",
            {"generators": [list(g) for g in generators]},
        )


def generator_coordinates(generators: Sequence[Sequence[int]]) -> Tuple[List[IntVector], List[List[int]]]:
    """
    Express independent generators in a basis of their saturation.

    Returns:
        (saturation basis B, integer k x k matrix C with u_i = C_i @ B)
    """
    _check_independent(generators)
    basis = saturation_basis(generators)
    coords = []
    for u in generators:
        c = rational.coordinates(basis, u)
        coords.append([int(x) for x in c])
    return basis, coords


def multiplicity(generators: Sequence[Sequence[int]]) -> int:
    """
    Index of the generated sublattice in its saturation.

    Product of the Smith diagonal of the generator matrix.

    Raises:
        DependentGenerators: If the generators are dependent
    """
    if not generators:
        return 1
    _check_independent(generators)
    return math.prod(smith_normal_form(int_matrix(generators)).diagonal)


@dataclass(frozen=True)
class ParallelotopePoint:
    """Lattice point n = sum lambda_i u_i of the half-open parallelotope."""

    point: IntVector
    coefficients: Tuple[Fraction, ...]

    @property
    def interior(self) -> bool:
        return all(c > 0 for c in self.coefficients)


def parallelotope_points(generators: Sequence[Sequence[int]]) -> List[ParallelotopePoint]:
    """
    Lattice points of {sum lambda_i u_i : 0 <= lambda_i < 1}.

    Enumerates the bounding box of the generator rows in saturation
    coordinates and solves for lambda exactly.

    Args:
        generators: Independent integer vectors

    Returns:
        Points sorted by their lambda-coordinates (origin first)

    Raises:
        DependentGenerators: If the generators are dependent
    """
    if not generators:
        return [ParallelotopePoint((), ())]

    basis, coords = generator_coordinates(generators)
    k = len(basis)
    inv = rational.inverse(coords)

    ranges = []
    for j in range(k):
        low = sum(min(0, coords[i][j]) for i in range(k))
        high = sum(max(0, coords[i][j]) for i in range(k))
        ranges.append(range(low, high + 1))

    points = []
    for z in itertools.product(*ranges):
        lam = rational.vec_mat(z, inv)
        if all(0 <= x < 1 for x in lam):
            n = tuple(sum(z[j] * basis[j][i] for j in range(k)) for i in range(len(basis[0])))
            points.append(ParallelotopePoint(n, tuple(lam)))

    points.sort(key=lambda p: p.coefficients)
    return points


def primitive_duals(generators: Sequence[Sequence[int]]) -> List[Tuple[IntVector, int]]:
    """
    Primitive dual vectors m_j of a simplicial cone.

    m_j is given in coordinates dual to the saturation basis of the
    generators, with <m_j, u_i> = 0 for i != j and <m_j, u_j> > 0.

    Returns:
        List of (m_j, <m_j, u_j>)

    Raises:
        DependentGenerators: If the generators are dependent
    """
    basis, coords = generator_coordinates(generators)
    inv = rational.inverse(coords)
    k = len(basis)

    duals = []
    for j in range(k):
        column = [inv[i][j] for i in range(k)]
        denominator = math.lcm(*(c.denominator for c in column))
        scaled = [int(c * denominator) for c in column]
        m = primitive_vector(scaled)
        # <m, u_j> = (C m)_j = scale factor, since C @ column = e_j
        pairing = sum(coords[j][i] * m[i] for i in range(k))
        duals.append((tuple(m), int(pairing)))
    return duals


def dual_functional(generators: Sequence[Sequence[int]], index: int, rank: int) -> List[Fraction]:
    """
    Rational functional m on Q^d with <m, u_index> = 1, <m, u_i> = 0
    for the other generators, and m = 0 on the section of the quotient
    by the saturated span.

    Args:
        generators: Independent integer vectors
        index: Which generator takes value 1
        rank: Ambient rank d

    Returns:
        m as a length-d vector of Fractions
    """
    basis, coords = generator_coordinates(generators)
    k = len(basis)
    inv = rational.inverse(coords)
    values = [inv[i][index] for i in range(k)] + [Fraction(0)] * (rank - k)

    section = quotient_map(basis, rank).section
    frame = [list(b) for b in basis] + [list(s) for s in section]
    return rational.solve(frame, values)


def lattice_rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank of the span of integer vectors."""
    if not vectors:
        return 0
    return smith_normal_form(vectors).rank
