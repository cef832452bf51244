"""
Report schemas emitted on standard output.

Polynomials in y and rationals serialize as canonical strings and parse
back from them, so an emitted report re-validates to an equal value.
"""

from enum import Enum
from fractions import Fraction
from typing import Any, Annotated, Dict, List, Literal, Optional

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PlainSerializer

from scalars import YPolynomial, YRational
from utils.helpers import format_rational, parse_rational, render_table


def _to_polynomial(value: Any) -> YPolynomial:
    if isinstance(value, YPolynomial):
        return value
    if isinstance(value, YRational):
        return value.to_polynomial()
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return YPolynomial.constant(value)
    if isinstance(value, str):
        return YPolynomial.parse(value)
    raise ValueError(f"not a polynomial in y: {value!r}")


PolynomialField = Annotated[
    YPolynomial,
    BeforeValidator(_to_polynomial),
    PlainSerializer(str, return_type=str),
]

RationalField = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]


class ClassKind(str, Enum):
    """Characteristic class kinds served by `fan class`."""

    TODD = "todd"
    TODD_OMEGA = "todd-omega"
    HIRZEBRUCH = "hirzebruch"
    MOCK_HIRZEBRUCH = "mock-hirzebruch"
    CHERN = "chern"
    TODD_SUBSET = "todd-subset"
    T_CLASS = "t-class"
    MOCK_T_CLASS = "mock-t-class"


class ReportModel(BaseModel):
    """Base for all reports."""

    model_config = ConfigDict(arbitrary_types_allowed=True, use_enum_values=True)


# Fan and class reports

class CycleTerm(ReportModel):
    """One term c * [V_sigma] of a cycle class."""

    cone: List[int]
    orbit_dim: int
    coefficient: PolynomialField


class ClassReport(ReportModel):
    """A characteristic class in the orbit-closure basis."""

    kind: ClassKind
    label: str
    normalized: bool = True
    y: Optional[RationalField] = None
    lattice_rank: int
    subset: Optional[List[List[int]]] = None
    terms: List[CycleTerm] = Field(default_factory=list)
    degree: Optional[PolynomialField] = Field(default=None, description="Present on complete fans")

    def to_text(self) -> str:
        header = f"{self.label} (kind={self.kind}, normalized={self.normalized}"
        if self.y is not None:
            header += f", y={format_rational(self.y)}"
        header += ")"
        rows = [(str(t.cone), t.orbit_dim, str(t.coefficient)) for t in self.terms]
        lines = [header, render_table(["cone", "orbit_dim", "coefficient"], rows)]
        if self.degree is not None:
            lines.append(f"degree: {self.degree}")
        return "\n".join(lines)


class SingularCone(ReportModel):
    cone: List[int]
    multiplicity: int


class FanReport(ReportModel):
    """Predicates of a fan."""

    lattice_rank: int
    num_rays: int
    num_cones: int
    simplicial: bool = True
    smooth: bool
    complete: bool
    completeness: Literal["complete (checked)", "incomplete"]
    singular_cones: List[SingularCone] = Field(default_factory=list)
    torus_factor: bool
    torus_rank: int

    def to_text(self) -> str:
        rows = [
            ("lattice_rank", self.lattice_rank),
            ("rays", self.num_rays),
            ("cones", self.num_cones),
            ("simplicial", self.simplicial),
            ("smooth", self.smooth),
            ("completeness", self.completeness),
            ("torus_rank", self.torus_rank),
        ]
        for entry in self.singular_cones:
            rows.append((f"singular {entry.cone}", f"mult {entry.multiplicity}"))
        return render_table(["property", "value"], rows)


class IdentityResult(ReportModel):
    """Outcome of one class identity."""

    name: str
    tag: str
    passed: bool
    witness: Optional[List[int]] = Field(default=None, description="First cone whose pairings differ")
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    detail: Optional[str] = None


class IdentityReport(ReportModel):
    """All identities evaluated on one fan."""

    lattice_rank: int
    label: str = "T-hat_1 (L-class under projectivity)"
    results: List[IdentityResult] = Field(default_factory=list)
    all_passed: bool = True

    def to_text(self) -> str:
        rows = [
            (r.name, r.tag, "pass" if r.passed else "FAIL", "" if r.witness is None else str(r.witness))
            for r in self.results
        ]
        summary = "all identities pass" if self.all_passed else "identity violations found"
        return render_table(["identity", "tag", "result", "witness"], rows) + "\n" + summary


# Polytope and counting reports

class FacetEntry(ReportModel):
    normal: List[int]
    offset: int
    vertices: List[int]


class FacetReport(ReportModel):
    """Facet presentation, face census and normal fan of a polytope."""

    rank: int
    facets: List[FacetEntry]
    face_counts: Dict[int, int]
    simple: bool
    normal_fan_rays: List[List[int]] = Field(default_factory=list)
    normal_fan_max_cones: List[List[int]] = Field(default_factory=list)

    def to_text(self) -> str:
        rows = [(str(f.normal), f.offset, str(f.vertices)) for f in self.facets]
        census = ", ".join(f"dim {k}: {v}" for k, v in sorted(self.face_counts.items()))
        return "\n".join([
            render_table(["normal", "offset", "vertices"], rows),
            f"faces: {census}",
            f"simple: {self.simple}",
        ])


class EhrhartRow(ReportModel):
    dilation: int
    count: int
    value: RationalField
    residual: RationalField


class ReciprocityRow(ReportModel):
    dilation: int
    interior_count: int
    value: RationalField


class EhrhartResult(ReportModel):
    """Ehrhart coefficients from Todd classes with brute-force residuals."""

    coefficients: List[RationalField]
    rows: List[EhrhartRow] = Field(default_factory=list)
    reciprocity: List[ReciprocityRow] = Field(default_factory=list)
    subcomplex: bool = False
    euler_characteristic: Optional[int] = None
    passed: bool = True

    def to_text(self) -> str:
        coeffs = ", ".join(format_rational(c) for c in self.coefficients)
        lines = [f"coefficients: ({coeffs})", render_table(
            ["dilation", "count", "value", "residual"],
            [(r.dilation, r.count, format_rational(r.value), format_rational(r.residual)) for r in self.rows],
        )]
        if self.reciprocity:
            lines.append(render_table(
                ["dilation", "interior", "(-1)^d Ehr(-l)"],
                [(r.dilation, r.interior_count, format_rational(r.value)) for r in self.reciprocity],
            ))
        lines.append("residuals zero" if self.passed else "NONZERO residuals")
        return "\n".join(lines)

    def to_csv(self) -> str:
        lines = ["dilation,count,value,residual"]
        for r in self.rows:
            lines.append(f"{r.dilation},{r.count},{format_rational(r.value)},{format_rational(r.residual)}")
        return "\n".join(lines) + "\n"


class WeightedCountReport(ReportModel):
    """Both sides of a weighted lattice-point identity."""

    mode: Literal["standard", "dual", "half"] = "standard"
    subcomplex: bool = False
    lhs: PolynomialField
    rhs: PolynomialField
    equal: bool

    def to_text(self) -> str:
        return render_table(
            ["mode", "lhs", "rhs", "equal"],
            [(self.mode, str(self.lhs), str(self.rhs), self.equal)],
        )


class IshidaEntry(ReportModel):
    p: int
    value: int


class HirzebruchPolynomialReport(ReportModel):
    """chi_y(X, O(D)) from classes, with its combinatorial expansion."""

    polynomial: PolynomialField
    combinatorial: PolynomialField
    equal: bool
    table: List[IshidaEntry] = Field(default_factory=list)
    table_matches: bool = True

    def to_text(self) -> str:
        lines = [
            f"chi_y: {self.polynomial}",
            f"faces: {self.combinatorial}",
            f"equal: {self.equal}",
            render_table(["p", "chi"], [(e.p, e.value) for e in self.table]),
        ]
        return "\n".join(lines)


class PickReport(ReportModel):
    """Classical and y-parametrized Pick formulas for a lattice polygon."""

    area: RationalField
    vertices: int
    edges: int
    boundary_points: int
    interior_points: int
    lattice_points: int
    chi_y: PolynomialField
    ypick_lhs: PolynomialField
    ypick_rhs: PolynomialField
    ypick_equal: bool
    pick_equal: bool
    class_equal: bool

    def to_text(self) -> str:
        rows = [
            ("area", format_rational(self.area)),
            ("boundary points", self.boundary_points),
            ("interior points", self.interior_points),
            ("lattice points", self.lattice_points),
            ("chi_y", str(self.chi_y)),
            ("yPick lhs", str(self.ypick_lhs)),
            ("yPick rhs", str(self.ypick_rhs)),
            ("yPick holds", self.ypick_equal),
            ("Pick holds", self.pick_equal),
            ("class check", self.class_equal),
        ]
        return render_table(["quantity", "value"], rows)


class ErrorReport(ReportModel):
    """Diagnostic written to stderr on failure."""

    error: str
    message: str
    detail: Dict[str, Any] = Field(default_factory=dict)
    exit_code: int

    def to_text(self) -> str:
        return f"error[{self.error}]: {self.message}"
