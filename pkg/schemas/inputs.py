"""
Input file schemas for fans, polytopes and subsets.

These Pydantic models define the JSON contract of the command line.
Integers are strict so that "1.0" never silently becomes 1.
"""

from typing import List, Optional

from pydantic import BaseModel, Field, StrictBool, StrictInt, model_validator


class FanInput(BaseModel):
    """A simplicial fan: rays and maximal cones by ray index."""

    lattice_rank: StrictInt = Field(..., ge=0, description="Rank d of the lattice N")
    rays: List[List[StrictInt]] = Field(
        default_factory=list,
        description="Primitive ray generators",
        examples=[[[1, 0], [0, 1], [-1, -1]]],
    )
    max_cones: List[List[StrictInt]] = Field(
        default_factory=list,
        description="Ray-index sets of the maximal cones",
        examples=[[[0, 1], [1, 2], [0, 2]]],
    )

    @model_validator(mode="after")
    def check_shape(self) -> "FanInput":
        for index, ray in enumerate(self.rays):
            if len(ray) != self.lattice_rank:
                raise ValueError(f"ray {index} has length {len(ray)}, expected {self.lattice_rank}")
        for cone in self.max_cones:
            for i in cone:
                if not 0 <= i < len(self.rays):
                    raise ValueError(f"cone {cone} refers to missing ray {i}")
        return self


class PolytopeInput(BaseModel):
    """A lattice polytope given by its vertices."""

    vertices: List[List[StrictInt]] = Field(
        ...,
        min_length=1,
        description="Integer vertices",
        examples=[[[0, 0], [1, 0], [0, 1]]],
    )

    @model_validator(mode="after")
    def check_shape(self) -> "PolytopeInput":
        lengths = {len(v) for v in self.vertices}
        if len(lengths) != 1:
            raise ValueError("vertices must all have the same length")
        return self

    @property
    def rank(self) -> int:
        return len(self.vertices[0])


class PolytopeSubcomplexInput(BaseModel):
    """A polytopal subcomplex: explicit faces or the whole boundary."""

    faces: Optional[List[List[StrictInt]]] = Field(
        default=None,
        description="Faces as lists of vertex indices",
    )
    boundary: StrictBool = Field(default=False, description="Use the boundary of the polytope")

    @model_validator(mode="after")
    def check_choice(self) -> "PolytopeSubcomplexInput":
        if self.boundary == (self.faces is not None):
            raise ValueError('give exactly one of "faces" or "boundary": true')
        return self


class ConeSubsetInput(BaseModel):
    """A star-closed set of cones by ray indices."""

    cones: List[List[StrictInt]] = Field(..., description="Member cones; [] is the zero cone")
