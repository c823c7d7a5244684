import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel

from .algebra import AlgebraPresentation, Generator, dims_table
from .catalog import ApplicabilityVerdict
from .families import get_family
from .groups import GroupType
from .oracle import OracleReport

ARTIFACT_VERSION = "0.1.0"
SCHEMA_PATH = Path(__file__).parent / "schema" / "output_document.schema.json"

BOTTOM_FAMILY_NOTE = (
    "c-family degrees are 2n·p^k − 2; the subscript 2n^k − 2 as commonly printed "
    "would put a class in degree 0 at k=0, impossible for a connected space"
)
MH_INDEX_NOTE = (
    "MH_odd uses a[k=1,j=0] = 2(n_i − 1)p − 3 for the factor Ω³S^{2n_i−1}; the "
    "subscripts 2n_i·p − 3 as commonly printed are not degrees of any generator "
    "of that factor and are reported separately in verbose output"
)
VECTOR_SPACE_NOTE = (
    "dimension tables are isomorphisms of F_p-vector spaces; no ring structure is claimed"
)


class GeneratorEntry(BaseModel):
    label: str
    family: str
    indices: List[int]
    degree: int
    kind: str
    formula: str


class AuditRow(BaseModel):
    degree: int
    series: str
    oracle: str
    status: Literal["PASS", "FAIL"]


class SpaceEntry(BaseModel):
    tag: str
    generators: List[GeneratorEntry] = []
    dims: List[Tuple[int, str]] = []
    degrees: List[int] = []
    printed_degrees: Optional[List[int]] = None
    transgression_targets: Optional[List[int]] = None
    audit: Optional[List[AuditRow]] = None


class VerdictEntry(BaseModel):
    regime: str
    p_regular: bool
    theorem_condition: bool
    coprime: bool
    boundary_null: bool
    gauge_splits: bool
    bgk_equiv_bg1: bool
    su2_boundary_order: Optional[int]
    failed_condition: Optional[str]
    notes: List[str]


class InputsEntry(BaseModel):
    group: str
    entries: List[int]
    prime: int
    chern: Optional[int] = None
    max_degree: Optional[int] = None
    space: Optional[str] = None


class MetaEntry(BaseModel):
    version: str = ARTIFACT_VERSION
    command: str
    notes: List[str] = []


class OutputDocument(BaseModel):
    inputs: InputsEntry
    verdict: Optional[VerdictEntry] = None
    spaces: Dict[str, SpaceEntry] = {}
    meta: MetaEntry


def generator_entry(g: Generator) -> GeneratorEntry:
    return GeneratorEntry(
        label=g.label,
        family=g.family.value,
        indices=list(g.indices),
        degree=g.degree,
        kind=g.kind.value,
        formula=get_family(g.family).formula,
    )


def space_entry(pres: AlgebraPresentation, trunc: Optional[int] = None) -> SpaceEntry:
    return SpaceEntry(
        tag=pres.tag,
        generators=[generator_entry(g) for g in pres.generators],
        dims=[(d, str(dim)) for d, dim in dims_table(pres, trunc)],
    )


def audit_rows(report: OracleReport) -> List[AuditRow]:
    return [
        AuditRow(
            degree=c.degree,
            series=str(c.expected),
            oracle=str(c.oracle),
            status="PASS" if c.passed else "FAIL",
        )
        for c in report.checks
    ]


def verdict_entry(v: ApplicabilityVerdict) -> VerdictEntry:
    return VerdictEntry(
        regime=v.regime.value,
        p_regular=v.p_regular,
        theorem_condition=v.theorem_condition,
        coprime=v.coprime,
        boundary_null=v.boundary_null,
        gauge_splits=v.gauge_splits,
        bgk_equiv_bg1=v.bgk_equiv_bg1,
        su2_boundary_order=v.su2_boundary_order,
        failed_condition=v.failed_condition,
        notes=list(v.notes),
    )


def inputs_entry(
    group: GroupType,
    prime: int,
    chern: Optional[int] = None,
    max_degree: Optional[int] = None,
    space: Optional[str] = None,
) -> InputsEntry:
    return InputsEntry(
        group=group.display_name,
        entries=list(group.entries),
        prime=prime,
        chern=chern,
        max_degree=max_degree,
        space=space,
    )


def load_schema() -> Dict[str, Any]:
    with open(SCHEMA_PATH, "r") as f:
        return json.load(f)
