"""
Input file loading: JSON files parsed through the input schemas.
"""

from pathlib import Path
from typing import Optional, Type, TypeVar

from pydantic import BaseModel

from fan import ConeSubset, Fan, build_fan, star_closed_subset
from polytope import LatticePolytope, PolytopalSubcomplex, build_polytope, subcomplex_from_input
from schemas.inputs import ConeSubsetInput, FanInput, PolytopeInput, PolytopeSubcomplexInput
from utils.logger import logger

M = TypeVar("M", bound=BaseModel)


def read_model(path: str, model: Type[M]) -> M:
    """
    Read a JSON file into a schema model.

    Raises:
        OSError: If the file cannot be read
        ValidationError: If the JSON does not match the schema
    """
    text = Path(path).read_text(encoding="utf-8")
    logger.debug(f"Loaded {path} ({len(text)} bytes)")
    return model.model_validate_json(text)


def load_fan(path: str) -> Fan:
    data = read_model(path, FanInput)
    return build_fan(data.lattice_rank, data.rays, data.max_cones)


def load_polytope(path: str) -> LatticePolytope:
    data = read_model(path, PolytopeInput)
    return build_polytope(data.vertices)


def load_subcomplex(polytope: LatticePolytope, path: Optional[str]) -> PolytopalSubcomplex:
    """The subcomplex in `path`, or the whole polytope when no path is given."""
    data = read_model(path, PolytopeSubcomplexInput) if path else None
    return subcomplex_from_input(polytope, data)


def load_cone_subset(fan: Fan, path: Optional[str]) -> Optional[ConeSubset]:
    if not path:
        return None
    data = read_model(path, ConeSubsetInput)
    return star_closed_subset(fan, data.cones)
