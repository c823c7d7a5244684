import json
import logging
import os
from collections import Counter
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional, Sequence

from sympy import primerange

from .catalog import ApplicabilityVerdict, Regime, verdict
from .calculator import GaugeCalculator
from .groups import GroupType, catalog_groups

logger = logging.getLogger(__name__)


def check_verdict_consistency(v: ApplicabilityVerdict) -> List[str]:
    """Problems with the regime booleans of one verdict; empty when consistent."""
    top, p = v.group.top, v.prime
    problems = []
    if v.p_regular != (top <= p):
        problems.append("p_regular")
    if v.theorem_condition != (top < p - 1):
        problems.append("theorem_condition")
    if v.theorem_condition and not v.p_regular:
        problems.append("theorem_condition without p_regular")
    if v.boundary_null != v.theorem_condition or v.gauge_splits != v.theorem_condition:
        problems.append("boundary_null/gauge_splits")
    if v.bgk_equiv_bg1 != (p >= 3 and v.coprime):
        problems.append("bgk_equiv_bg1")
    if (v.regime is Regime.FULL_THEOREM) != (
        p != 2 and v.coprime and v.theorem_condition
    ):
        problems.append("regime FullTheorem")
    if (v.regime is Regime.SU2_MOD3) != (
        v.group.entries == (2,) and p == 3 and v.coprime
    ):
        problems.append("regime SU2Mod3")
    return problems


@dataclass
class SweepRow:
    group: str
    prime: int
    chern: int
    regime: str
    audited: bool = False
    audit_passed: Optional[bool] = None
    failed_degrees: List[str] = field(default_factory=list)
    problems: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "group": self.group,
            "prime": self.prime,
            "chern": self.chern,
            "regime": self.regime,
            "audited": self.audited,
            "audit_passed": self.audit_passed,
            "failed_degrees": self.failed_degrees,
            "problems": self.problems,
        }


@dataclass
class SweepResults:
    rows: List[SweepRow] = field(default_factory=list)

    @property
    def regime_counts(self) -> Dict[str, int]:
        counts = Counter(row.regime for row in self.rows)
        return {regime.value: counts.get(regime.value, 0) for regime in Regime}

    @property
    def failures(self) -> List[SweepRow]:
        return [row for row in self.rows if row.problems or row.audit_passed is False]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> Dict[str, Any]:
        return {
            "cases": len(self.rows),
            "audited": sum(1 for row in self.rows if row.audited),
            "regime_counts": self.regime_counts,
            "passed": self.passed,
            "failures": [row.to_dict() for row in self.failures],
        }


class MatrixExplorer:
    """Runs verdicts, and oracle audits where the homology is computable, over
    every catalog group of bounded rank and every prime up to a bound."""

    def __init__(
        self,
        max_prime: int = 23,
        max_rank: int = 4,
        max_degree: int = 40,
        cherns: Sequence[int] = (1,),
        groups: Optional[Sequence[GroupType]] = None,
        log_dir: Optional[str] = None,
        verbose: bool = False,
    ):
        if max_prime < 2:
            raise ValueError(f"--max-prime must be >= 2, got {max_prime}")
        if max_degree < 0:
            raise ValueError(f"--max-degree must be >= 0, got {max_degree}")
        self.primes = list(primerange(2, max_prime + 1))
        self.groups = list(groups) if groups is not None else catalog_groups(max_rank)
        self.max_degree = max_degree
        self.cherns = list(cherns)
        self.verbose = verbose
        self.results = SweepResults()
        self.setup_logging(log_dir)

    def setup_logging(self, log_dir: Optional[str] = None):
        handlers: List[logging.Handler] = [logging.StreamHandler()]
        if log_dir:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            os.makedirs(log_dir, exist_ok=True)
            handlers.append(logging.FileHandler(f"{log_dir}/sweep_{timestamp}.log"))
        logging.basicConfig(
            level=logging.INFO if self.verbose else logging.WARNING,
            format="%(asctime)s - %(levelname)s - %(message)s",
            handlers=handlers,
            force=True,
        )

    def evaluate(self, group: GroupType, p: int, k: int) -> SweepRow:
        v = verdict(group, p, k)
        row = SweepRow(group.display_name, p, k, v.regime.value)
        row.problems = check_verdict_consistency(v)
        for problem in row.problems:
            logger.error(f"{group.display_name}, p={p}, k={k}: inconsistent {problem}")

        if v.applicable:
            calculator = GaugeCalculator(group, p, k, self.max_degree)
            doc, passed = calculator.oracle_document(force=True)
            row.audited = True
            row.audit_passed = passed
            row.failed_degrees = [
                f"{name}@{audit.degree}"
                for name, space in doc.spaces.items()
                for audit in space.audit or []
                if audit.status == "FAIL"
            ]

        logger.info(
            f"{group.display_name}, p={p}, k={k}: {row.regime}"
            + (f", audit {'PASS' if row.audit_passed else 'FAIL'}" if row.audited else "")
        )
        return row

    def explore(self) -> SweepResults:
        logger.info(
            f"Sweeping {len(self.groups)} groups x {len(self.primes)} primes x "
            f"{len(self.cherns)} Chern classes"
        )
        for group in self.groups:
            for p in self.primes:
                for k in self.cherns:
                    self.results.rows.append(self.evaluate(group, p, k))

        for regime, count in self.results.regime_counts.items():
            logger.info(f"{regime}: {count}")
        return self.results

    def save_results(self, output_file: str):
        results = {
            "primes": self.primes,
            "groups": [g.display_name for g in self.groups],
            "cherns": self.cherns,
            "max_degree": self.max_degree,
            "summary": self.results.summary(),
            "rows": [row.to_dict() for row in self.results.rows],
        }
        with open(output_file, "w") as f:
            json.dump(results, f, indent=2, ensure_ascii=False)
        logger.info(f"Results saved to {output_file}")
