import csv
import io
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from .document import OutputDocument, SpaceEntry

GREEN = "\033[32m"
RED = "\033[31m"
RESET = "\033[0m"

APPLICABLE_REGIMES = ("FullTheorem", "SU2Mod3")


def _paint(text: str, code: str, color: bool) -> str:
    return f"{code}{text}{RESET}" if color else text


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _space_lines(name: str, space: SpaceEntry) -> List[str]:
    lines = [f"\n[{name}] {space.tag}", "=" * 40]

    if space.generators:
        lines.append("Generators:")
        for g in space.generators:
            lines.append(
                f"  {g.label:<28} deg {g.degree:>4}  {g.kind:<10} {g.family:<5} {g.formula}"
            )

    if space.degrees:
        lines.append("Degrees: " + ", ".join(str(d) for d in space.degrees))
    if space.printed_degrees is not None:
        lines.append(
            "Printed subscripts: " + ", ".join(str(d) for d in space.printed_degrees)
        )
    if space.transgression_targets is not None:
        lines.append(
            "Transgression targets: "
            + ", ".join(str(d) for d in space.transgression_targets)
        )

    if space.audit is not None:
        lines.append("Oracle audit:")
        for row in space.audit:
            lines.append(
                f"  {row.degree:>4}  series {row.series:>12}  oracle {row.oracle:>12}  {row.status}"
            )
    elif space.dims:
        nonzero = [(d, dim) for d, dim in space.dims if dim != "0"]
        lines.append(f"Dimensions (nonzero, degrees 0..{space.dims[-1][0]}):")
        for d, dim in nonzero:
            lines.append(f"  {d:>4}: {dim}")
    return lines


def render_text(doc: OutputDocument, color: bool = False) -> str:
    inputs = doc.inputs
    header = f"Group: {inputs.group}  type {{{', '.join(map(str, inputs.entries))}}}  p={inputs.prime}"
    if inputs.chern is not None:
        header += f"  k={inputs.chern}"
    if inputs.max_degree is not None:
        header += f"  N={inputs.max_degree}"
    lines = [header]

    if doc.verdict is not None:
        v = doc.verdict
        code = GREEN if v.regime in APPLICABLE_REGIMES else RED
        lines.append(f"Regime: {_paint(v.regime, code, color)}")
        lines.append(f"  p-regular:               {_yes_no(v.p_regular)}")
        lines.append(f"  n_ℓ < p−1:               {_yes_no(v.theorem_condition)}")
        lines.append(f"  (p,k) = 1:               {_yes_no(v.coprime)}")
        lines.append(f"  ∂₁ null homotopic:       {_yes_no(v.boundary_null)}")
        lines.append(f"  𝒢₁ ≃ G × Ω³G⟨3⟩:         {_yes_no(v.gauge_splits)}")
        lines.append(f"  B𝒢_k ≃ B𝒢₁ (p-local):    {_yes_no(v.bgk_equiv_bg1)}")
        if v.su2_boundary_order is not None:
            lines.append(f"  order of ∂₁:             {v.su2_boundary_order}")
        if v.failed_condition:
            lines.append(f"  failed:                  {v.failed_condition}")
        for note in v.notes:
            lines.append(f"  - {note}")

    for name, space in doc.spaces.items():
        lines += _space_lines(name, space)

    if doc.meta.notes:
        lines.append("\nNotes:")
        lines += [f"  - {note}" for note in doc.meta.notes]
    lines.append(f"\nbgauge {doc.meta.version} ({doc.meta.command})")
    return "\n".join(lines) + "\n"


def render_json(doc: OutputDocument, color: bool = False) -> str:
    return doc.model_dump_json(indent=2) + "\n"


GENERATOR_HEADER = ["space", "label", "family", "indices", "degree", "kind", "formula"]


def _degree_counts(degrees: List[int]) -> List[Tuple[int, int]]:
    return sorted(Counter(degrees).items())


def render_csv(doc: OutputDocument, color: bool = False) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)

    if not doc.spaces and doc.verdict is not None:
        writer.writerow(["field", "value"])
        for key, value in doc.verdict.model_dump().items():
            if isinstance(value, list):
                value = "; ".join(value)
            writer.writerow([key, "" if value is None else value])
        return buffer.getvalue()

    # generator listings carry no dimension table
    if all(not space.dims and not space.degrees for space in doc.spaces.values()):
        writer.writerow(GENERATOR_HEADER)
        for name, space in doc.spaces.items():
            for g in space.generators:
                indices = ",".join(str(i) for i in g.indices)
                writer.writerow([name, g.label, g.family, indices, g.degree, g.kind, g.formula])
        return buffer.getvalue()

    audited = any(space.audit is not None for space in doc.spaces.values())
    header = ["space", "degree", "dimension"]
    if audited:
        header += ["oracle", "status"]
    writer.writerow(header)
    padding = ["", ""] if audited else []

    for name, space in doc.spaces.items():
        if space.audit is not None:
            for row in space.audit:
                writer.writerow([name, row.degree, row.series, row.oracle, row.status])
            continue
        for d, dim in space.dims:
            writer.writerow([name, d, dim] + padding)
        if not space.dims:
            # MH_odd lists class degrees; its dimension in a degree is the multiplicity
            for d, count in _degree_counts(space.degrees):
                writer.writerow([name, d, count] + padding)
    return buffer.getvalue()


@dataclass
class Renderer:
    name: str
    description: str
    render: Callable[[OutputDocument, bool], str]


RENDERERS: Dict[str, Renderer] = {
    "text": Renderer("text", "Human-readable report", render_text),
    "json": Renderer("json", "OutputDocument as JSON", render_json),
    "csv": Renderer("csv", "One row per (space, degree, dimension) or per generator", render_csv),
}


def get_renderer(name: str) -> Renderer:
    if name not in RENDERERS:
        raise ValueError(
            f"Unknown format: {name}. Available formats: {', '.join(RENDERERS)}"
        )
    return RENDERERS[name]
