import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .algebra import AlgebraPresentation, Family, Kind
from .catalog import (
    ApplicabilityVerdict,
    Regime,
    RegimeError,
    anick_t,
    bgk_homology,
    classifying_space_bg,
    group_g,
    loops3_g3,
    mh_odd,
    mh_odd_printed,
    mh_transgressions,
    su2_mod3_bgk,
    verdict,
)
from .document import (
    BOTTOM_FAMILY_NOTE,
    MH_INDEX_NOTE,
    VECTOR_SPACE_NOTE,
    MetaEntry,
    OutputDocument,
    SpaceEntry,
    audit_rows,
    generator_entry,
    inputs_entry,
    space_entry,
    verdict_entry,
)
from .groups import GroupType
from .oracle import OracleAuditor

logger = logging.getLogger(__name__)

DEFAULT_MAX_DEGREE = 100
ORACLE_DEGREE_LIMIT = 80

SPACE_KEYS = {
    "omega3g3": "Omega3G3",
    "bg": "BG",
    "g": "G",
    "anick": "Anick",
}


def mh_space(group: GroupType, p: int, loops: AlgebraPresentation, verbose: bool) -> SpaceEntry:
    """Odd MH classes of Ω³G⟨3⟩, with the generators of `loops` they are carried by."""
    degrees = mh_odd(group, p)
    # ā_{2p-3} from the Anick factor, a[k=1,j=0] from the S^{2n_i-1} factors (n < p)
    carriers = [
        g
        for g in loops.generators
        if g.kind is Kind.EXTERIOR
        and (
            (g.family is Family.ABAR and g.indices == (0, 0))
            or (g.family is Family.A and g.indices == (1, 0) and g.n < p)
        )
    ]
    entry = SpaceEntry(
        tag="MH_odd(Ω³G⟨3⟩)",
        generators=[generator_entry(g) for g in carriers],
        degrees=degrees,
    )
    if verbose:
        entry.printed_degrees = mh_odd_printed(group, p)
        entry.transgression_targets = [t for _, t in mh_transgressions(group, p)]
    return entry


@dataclass
class GaugeCalculator:
    group: GroupType
    prime: int
    chern: int = 1
    max_degree: int = DEFAULT_MAX_DEGREE
    verbose: bool = False
    auditor: Optional[OracleAuditor] = None
    applicability: ApplicabilityVerdict = field(init=False)

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError(f"--max-degree must be >= 0, got {self.max_degree}")
        self.applicability = verdict(self.group, self.prime, self.chern)
        if not self.auditor:
            self.auditor = OracleAuditor()

    def _document(
        self, command: str, spaces: Dict[str, SpaceEntry], notes: List[str], **inputs
    ) -> OutputDocument:
        return OutputDocument(
            inputs=inputs_entry(self.group, self.prime, **inputs),
            verdict=verdict_entry(self.applicability) if "chern" in inputs else None,
            spaces=spaces,
            meta=MetaEntry(command=command, notes=notes),
        )

    def require_applicable(self) -> None:
        v = self.applicability
        if not v.applicable:
            raise RegimeError(
                f"{self.group.display_name}, p={self.prime}, k={self.chern}: "
                f"{v.failed_condition}",
                v,
            )

    def presentations(self) -> Dict[str, AlgebraPresentation]:
        """The algebra spaces of a compute document, keyed by document name."""
        self.require_applicable()
        g, p, k, n = self.group, self.prime, self.chern, self.max_degree
        logger.info(
            f"Computing {g.display_name}, p={p}, k={k} through degree {n} "
            f"({self.applicability.regime.value})"
        )

        if self.applicability.regime is Regime.SU2_MOD3:
            bgk = su2_mod3_bgk(k, n)
        else:
            bgk = bgk_homology(g, p, k, n)

        spaces = {
            "BGk": bgk,
            "Omega3G3": loops3_g3(g, p, n),
            "BG": classifying_space_bg(g, p, n),
            "G": group_g(g, p, n),
        }
        if self.applicability.regime is Regime.SU2_MOD3:
            s3 = group_g(g, p, n)
            spaces["S3"] = AlgebraPresentation(s3.generators, p, n, "H_*(S³)")
        return spaces

    def verdict_document(self) -> OutputDocument:
        return self._document("verdict", {}, [], chern=self.chern)

    def compute_document(self) -> OutputDocument:
        presentations = self.presentations()
        spaces = {name: space_entry(pres) for name, pres in presentations.items()}
        mh = mh_space(self.group, self.prime, presentations["Omega3G3"], self.verbose)
        # keep the document order BGk, Omega3G3, BG, G, MH_odd[, S3]
        ordered = {name: spaces[name] for name in ("BGk", "Omega3G3", "BG", "G")}
        ordered["MH_odd"] = mh
        if "S3" in spaces:
            ordered["S3"] = spaces["S3"]
        return self._document(
            "compute",
            ordered,
            [BOTTOM_FAMILY_NOTE, MH_INDEX_NOTE, VECTOR_SPACE_NOTE],
            chern=self.chern,
            max_degree=self.max_degree,
        )

    def generators_presentation(self, space: str) -> AlgebraPresentation:
        g, p, n = self.group, self.prime, self.max_degree
        if space == "omega3g3":
            return loops3_g3(g, p, n)
        if space == "bg":
            return classifying_space_bg(g, p, n)
        if space == "g":
            return group_g(g, p, n)
        if space == "anick":
            return anick_t(p, n)
        raise ValueError(
            f"Unknown space: {space}. Available spaces: {', '.join(SPACE_KEYS)}"
        )

    def generators_document(self, space: str) -> OutputDocument:
        pres = self.generators_presentation(space)
        entry = SpaceEntry(
            tag=pres.tag,
            generators=[generator_entry(gen) for gen in pres.generators],
        )
        notes = [BOTTOM_FAMILY_NOTE] if space in ("omega3g3", "anick") else []
        return self._document(
            "generators",
            {SPACE_KEYS[space]: entry},
            notes,
            max_degree=self.max_degree,
            space=space,
        )

    def oracle_document(self, force: bool = False) -> Tuple[OutputDocument, bool]:
        if self.max_degree > ORACLE_DEGREE_LIMIT and not force:
            raise ValueError(
                f"Oracle audits are limited to degree {ORACLE_DEGREE_LIMIT} "
                f"(asked for {self.max_degree}); pass --force to run anyway"
            )
        passed = True
        spaces = {}
        for name, pres in self.presentations().items():
            report = self.auditor.audit(pres)
            passed = passed and report.passed
            entry = space_entry(pres)
            entry.audit = audit_rows(report)
            spaces[name] = entry
        if not passed:
            logger.error(
                f"Oracle audit failed for {self.group.display_name}, p={self.prime}"
            )
        doc = self._document(
            "oracle",
            spaces,
            [VECTOR_SPACE_NOTE],
            chern=self.chern,
            max_degree=self.max_degree,
        )
        return doc, passed
