"""
Fan data model: simplicial fans, cone groups and group elements.
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from errors import InvalidFanData, NotComplete
from lattice import IntVector, lattice_rank, parallelotope_points
from scalars import CyclotomicScalar, root_of_unity

Cone = Tuple[int, ...]


@dataclass(frozen=True)
class GroupElement:
    """
    Element g of the finite group G_sigma of a simplicial cone.

    exponents[i] = gamma(g) for the i-th ray of the cone, in [0, 1);
    the character on that ray is exp(2 pi i gamma) = zeta_order^powers[i].
    """

    representative: IntVector
    exponents: Tuple[Fraction, ...]
    order: int
    powers: Tuple[int, ...]

    @property
    def interior(self) -> bool:
        return all(e != 0 for e in self.exponents)

    @property
    def is_identity(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def character(self, position: int) -> CyclotomicScalar:
        """Character a_rho(g) of the ray at this position of the cone."""
        return root_of_unity(self.order, self.powers[position])


@dataclass(frozen=True)
class ConeGroup:
    """G_sigma with its elements; len(elements) == multiplicity."""

    cone: Cone
    multiplicity: int
    elements: Tuple[GroupElement, ...]

    @property
    def interior_elements(self) -> Tuple[GroupElement, ...]:
        return tuple(g for g in self.elements if g.interior)


class Fan:
    """
    A simplicial fan in N = Z^rank.

    Cones are sorted tuples of ray indices; the zero cone is ().
    Instances are immutable after build_fan and compare by identity.
    """

    def __init__(
        self,
        rank: int,
        rays: Sequence[IntVector],
        maximal_cones: Sequence[Cone],
        cones: Sequence[Cone],
        multiplicities: Dict[Cone, int],
    ):
        self.rank = rank
        self.rays: Tuple[IntVector, ...] = tuple(tuple(r) for r in rays)
        self.maximal_cones: Tuple[Cone, ...] = tuple(maximal_cones)
        self.cones: Tuple[Cone, ...] = tuple(cones)
        self._cone_set: FrozenSet[Cone] = frozenset(self.cones)
        self._multiplicities = dict(multiplicities)
        self._groups: Dict[Cone, ConeGroup] = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"Fan(rank={self.rank}, rays={len(self.rays)}, cones={len(self.cones)})"

    # Cones

    def has_cone(self, cone: Sequence[int]) -> bool:
        return tuple(sorted(cone)) in self._cone_set

    def check_cone(self, cone: Sequence[int]) -> Cone:
        key = tuple(sorted(cone))
        if key not in self._cone_set:
            raise InvalidFanData(f"{list(key)} is not a cone of the fan", {"cone": list(key)})
        return key

    def generators(self, cone: Sequence[int]) -> List[IntVector]:
        return [self.rays[i] for i in cone]

    def multiplicity(self, cone: Sequence[int]) -> int:
        return self._multiplicities[tuple(sorted(cone))]

    def cones_of_dimension(self, dim: int) -> List[Cone]:
        return [c for c in self.cones if len(c) == dim]

    def orbit_dimension(self, cone: Sequence[int]) -> int:
        return self.rank - len(cone)

    def faces_of(self, cone: Sequence[int]) -> List[Cone]:
        members = set(cone)
        return [c for c in self.cones if members.issuperset(c)]

    def cones_containing(self, cone: Sequence[int]) -> List[Cone]:
        members = set(cone)
        return [c for c in self.cones if members.issubset(c)]

    def __iter__(self) -> Iterator[Cone]:
        return iter(self.cones)

    # Predicates

    @property
    def singular_cones(self) -> List[Cone]:
        return [c for c in self.cones if self._multiplicities[c] > 1]

    @property
    def is_smooth(self) -> bool:
        return not self.singular_cones

    @cached_property
    def torus_rank(self) -> int:
        return self.rank - lattice_rank(self.rays)

    @cached_property
    def is_complete(self) -> bool:
        from .build import check_completeness

        return check_completeness(self)

    def require_complete(self, operation: str) -> None:
        if not self.is_complete:
            raise NotComplete(f"{operation} needs a complete fan", {"operation": operation})

    # Groups

    def cone_group(self, cone: Sequence[int]) -> ConeGroup:
        """G_sigma of a cone, computed once and cached."""
        key = self.check_cone(cone)
        group = self._groups.get(key)
        if group is None:
            group = compute_cone_group(self, key)
            with self._lock:
                self._groups.setdefault(key, group)
        return self._groups[key]


def compute_cone_group(fan: Fan, cone: Cone) -> ConeGroup:
    """
    Enumerate G_sigma through the half-open parallelotope of the cone.

    gamma_j(g) is the j-th parallelotope coordinate and the character is
    zeta_mult^(gamma_j * mult).
    """
    if not cone:
        identity = GroupElement(tuple(0 for _ in range(fan.rank)), (), 1, ())
        return ConeGroup(cone, 1, (identity,))

    mult = fan.multiplicity(cone)
    elements = []
    for p in parallelotope_points(fan.generators(cone)):
        powers = tuple(int(e * mult) for e in p.coefficients)
        elements.append(GroupElement(p.point, p.coefficients, mult, powers))
    return ConeGroup(cone, mult, tuple(elements))


@dataclass(frozen=True, eq=False)
class ConeSubset:
    """A star-closed set of cones of a fan."""

    fan: Fan
    cones: FrozenSet[Cone]

    @classmethod
    def full(cls, fan: Fan) -> "ConeSubset":
        return cls(fan, frozenset(fan.cones))

    def __contains__(self, cone) -> bool:
        return tuple(sorted(cone)) in self.cones

    def __iter__(self) -> Iterator[Cone]:
        return iter(c for c in self.fan.cones if c in self.cones)

    def __len__(self) -> int:
        return len(self.cones)

    def is_full(self) -> bool:
        return len(self.cones) == len(self.fan.cones)


def cone_label(fan: Optional[Fan], cone: Cone) -> str:
    """Readable cone name used in diagnostics."""
    if not cone:
        return "{0}"
    if fan is None:
        return "Cone(" + ",".join(f"u{i}" for i in cone) + ")"
    return "Cone(" + ",".join(str(list(fan.rays[i])) for i in cone) + ")"
