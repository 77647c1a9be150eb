"""
Data models for the JSON files read and written by the command line.

Each model mirrors one domain object and converts to and from it with
``from_domain`` / ``to_domain``. Reports share a common envelope carrying
the format version, the run seed and the tolerances in effect.
"""

from fractions import Fraction
from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from ..bundles.bundle import BundleMember, CircleBundle, tangent_param
from ..bundles.rectifier import RectificationReport
from ..config.constants import REPORT_VERSION
from ..geometry.curves import Circle, CircleOrLine, Line
from ..geometry.spheres import SphereEq
from ..metrics.connection import CurvatureSurvey
from ..nets.sphere_net import SphereNet
from ..processors.beltrami_checker import BeltramiReport
from ..taylor.diagnostics import DiagnosticReport
from ..taylor.polynomials import BivarPoly

Vec3 = Annotated[List[float], Field(min_length=3, max_length=3)]


class SphereModel(BaseModel):
    """Sphere equation a|x|^2 + <b, x> + c = 0."""
    a: float
    b: Vec3
    c: float

    @classmethod
    def from_domain(cls, sphere: SphereEq) -> 'SphereModel':
        return cls(a=sphere.a, b=list(sphere.b), c=sphere.c)

    def to_domain(self) -> SphereEq:
        return SphereEq(self.a, tuple(self.b), self.c)


class CircleModel(BaseModel):
    kind: Literal["circle"] = "circle"
    center: Vec3
    radius: float = Field(gt=0)
    normal: Vec3

    def to_domain(self) -> Circle:
        return Circle(tuple(self.center), self.radius, tuple(self.normal))


class LineModel(BaseModel):
    kind: Literal["line"] = "line"
    point: Vec3
    direction: Vec3

    def to_domain(self) -> Line:
        return Line(tuple(self.point), tuple(self.direction))


CurveModel = Annotated[Union[CircleModel, LineModel], Field(discriminator="kind")]


def curve_from_domain(curve: CircleOrLine) -> Union[CircleModel, LineModel]:
    if isinstance(curve, Circle):
        return CircleModel(center=list(curve.center), radius=curve.radius, normal=list(curve.normal))
    return LineModel(point=list(curve.point), direction=list(curve.direction))


class BundleMemberModel(BaseModel):
    k: float
    m: float
    curve: CurveModel


class BundleModel(BaseModel):
    """Bundle of curves through a common center."""
    center: Vec3
    members: List[BundleMemberModel]

    @classmethod
    def from_domain(cls, bundle: CircleBundle) -> 'BundleModel':
        return cls(
            center=list(bundle.center),
            members=[BundleMemberModel(k=member.tangent.k, m=member.tangent.m,
                                       curve=curve_from_domain(member.curve))
                     for member in bundle.members],
        )

    def to_domain(self) -> CircleBundle:
        members = tuple(BundleMember(tangent_param(member.k, member.m), member.curve.to_domain())
                        for member in self.members)
        return CircleBundle(tuple(self.center), members)


class DirsModel(BaseModel):
    """Tangent parameters (k, m) of a set of directions."""
    dirs: List[Tuple[float, float]]


class TermModel(BaseModel):
    i: int = Field(ge=0)
    j: int = Field(ge=0)
    num: int
    den: int = Field(gt=0)


class PolynomialModel(BaseModel):
    """Exact polynomial sum num/den k^i m^j."""
    terms: List[TermModel]

    @classmethod
    def from_domain(cls, poly: BivarPoly) -> 'PolynomialModel':
        return cls(terms=[TermModel(i=i, j=j, num=c.numerator, den=c.denominator)
                          for (i, j), c in poly.items()])

    def to_domain(self) -> BivarPoly:
        terms: Dict[Tuple[int, int], Fraction] = {}
        for term in self.terms:
            terms[(term.i, term.j)] = terms.get((term.i, term.j), Fraction(0)) + Fraction(term.num, term.den)
        return BivarPoly(terms)


class NetModel(BaseModel):
    """Four sphere equations spanning a net."""
    spheres: Annotated[List[SphereModel], Field(min_length=4, max_length=4)]

    @classmethod
    def from_domain(cls, net: SphereNet) -> 'NetModel':
        return cls(spheres=[SphereModel.from_domain(S) for S in net.basis])

    def to_domain(self) -> SphereNet:
        return SphereNet(tuple(S.to_domain() for S in self.spheres))


# Reports

class ReportEnvelope(BaseModel):
    """Fields carried by every report."""
    version: int = REPORT_VERSION
    seed: int
    tolerances: Dict[str, float] = Field(default_factory=dict)


class RectificationReportModel(ReportEnvelope):
    second_point: Optional[Vec3] = None
    max_residual: float
    residuals: List[float]
    rectified: bool

    @classmethod
    def from_domain(cls, report: RectificationReport, seed: int,
                    tolerances: Dict[str, float]) -> 'RectificationReportModel':
        return cls(
            seed=seed,
            tolerances=tolerances,
            second_point=None if report.second_point is None else list(report.second_point),
            max_residual=report.max_residual,
            residuals=list(report.per_circle_residual),
            rectified=report.rectified,
        )


class GenericityReportModel(ReportEnvelope):
    count: int
    rank: int
    generic: bool
    exact_rank: Optional[int] = None


class DiagnosticModel(BaseModel):
    source: str
    grid_size: int
    fit_residuals: Dict[str, float]
    remainders: Dict[str, float]
    linear_coefficients: Dict[str, float]
    recovered: Optional[Vec3] = None
    violations: List[str]
    divisibility: Dict[str, bool]
    verdict: str

    @classmethod
    def from_domain(cls, report: DiagnosticReport) -> 'DiagnosticModel':
        return cls(
            source=report.source,
            grid_size=report.grid_size,
            fit_residuals=report.fit_residuals,
            remainders=report.remainders,
            linear_coefficients=report.linear_coefficients,
            recovered=None if report.recovered is None else list(report.recovered),
            violations=sorted(report.violations),
            divisibility=report.divisibility,
            verdict=report.verdict.value,
        )


class TaylorReportModel(ReportEnvelope):
    """Closed forms against numeric extraction, identities and the diagnostics."""
    A: PolynomialModel
    B: PolynomialModel
    identities: Dict[str, bool]
    degrees: Dict[str, Optional[int]]
    divisibility: Dict[str, bool]
    symmetry_violations: List[str]
    closed_vs_numeric: Optional[float] = None
    closed: DiagnosticModel
    numeric: Optional[DiagnosticModel] = None
    verdict: str


class ClassificationModel(ReportEnvelope):
    model_config = ConfigDict(populate_by_name=True)

    geometry_class: str = Field(alias="class")
    S0: SphereModel
    disc: float


class CurvatureSampleModel(BaseModel):
    x: Vec3
    K: float


class CurvatureReportModel(ReportEnvelope):
    metric: str
    samples: List[CurvatureSampleModel]
    mean: float
    stddev: float

    @classmethod
    def from_domain(cls, survey: CurvatureSurvey, seed: int,
                    tolerances: Dict[str, float]) -> 'CurvatureReportModel':
        return cls(
            seed=seed,
            tolerances=tolerances,
            metric=survey.metric,
            samples=[CurvatureSampleModel(x=list(x), K=K) for x, K in survey.samples],
            mean=survey.mean,
            stddev=survey.stddev,
        )


class BeltramiReportModel(ReportEnvelope):
    metric: str
    geodesics: int
    max_circle_rms: float
    max_line_residual: float
    max_net_residual: float
    max_lift_residual: float
    max_energy_drift: float
    expected_curvature: float
    curvature_mean: Optional[float] = None
    curvature_stddev: Optional[float] = None
    failures: List[str]
    passed: bool

    @classmethod
    def from_domain(cls, report: BeltramiReport) -> 'BeltramiReportModel':
        survey = report.curvature
        return cls(
            seed=report.seed,
            tolerances=report.tolerances,
            metric=report.metric,
            geodesics=len(report.circle_rms),
            max_circle_rms=report.max_circle_rms,
            max_line_residual=report.max_line_residual,
            max_net_residual=report.max_net_residual,
            max_lift_residual=report.max_lift_residual,
            max_energy_drift=report.max_energy_drift,
            expected_curvature=report.expected_curvature,
            curvature_mean=None if survey is None else survey.mean,
            curvature_stddev=None if survey is None else survey.stddev,
            failures=report.failures(),
            passed=report.passed,
        )
