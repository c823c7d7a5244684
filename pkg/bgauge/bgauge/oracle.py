import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from .algebra import AlgebraPresentation, Kind, poincare
from .series import PowerSeries

logger = logging.getLogger(__name__)


def monomial_count_oracle(pres: AlgebraPresentation, d: int) -> int:
    """Count monomials of total degree d by exhaustive recursion over generators.

    Exterior generators take exponent 0 or 1, polynomial ones any exponent >= 0.
    Uses no power-series code.
    """
    if d > pres.trunc:
        raise ValueError(
            f"Presentation '{pres.tag}' is only complete up to degree {pres.trunc}, "
            f"asked for {d}"
        )
    if d < 0:
        return 0
    gens: List[Tuple[int, bool]] = [
        (g.degree, g.kind is Kind.EXTERIOR) for g in pres.generators if g.degree <= d
    ]

    @lru_cache(maxsize=None)
    def count(index: int, remaining: int) -> int:
        if index == len(gens):
            return 1 if remaining == 0 else 0
        degree, exterior = gens[index]
        max_exponent = 1 if exterior else remaining // degree
        return sum(
            count(index + 1, remaining - e * degree)
            for e in range(min(max_exponent, remaining // degree) + 1)
        )

    return count(0, d)


@dataclass
class DegreeCheck:
    degree: int
    expected: int
    oracle: int

    @property
    def passed(self) -> bool:
        return self.expected == self.oracle


@dataclass
class OracleReport:
    tag: str
    checks: List[DegreeCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[DegreeCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tag": self.tag,
            "passed": self.passed,
            "failed_degrees": [c.degree for c in self.failures],
            "degrees_checked": len(self.checks),
        }


class OracleAuditor:
    """Recomputes every coefficient of a Poincaré series with the monomial oracle."""

    def __init__(self, limit: Optional[int] = None):
        self.limit = limit

    def audit_series(
        self, pres: AlgebraPresentation, series: PowerSeries
    ) -> OracleReport:
        top = series.trunc if self.limit is None else min(series.trunc, self.limit)
        report = OracleReport(tag=pres.tag)
        logger.info(f"Auditing '{pres.tag}' through degree {top}")

        for degree in range(top + 1):
            check = DegreeCheck(degree, series.coeffs[degree], monomial_count_oracle(pres, degree))
            report.checks.append(check)
            if not check.passed:
                logger.error(
                    f"Degree {degree} of '{pres.tag}': series says {check.expected}, "
                    f"oracle counts {check.oracle}"
                )

        logger.info(
            f"'{pres.tag}': {len(report.checks) - len(report.failures)}/"
            f"{len(report.checks)} degrees agree"
        )
        return report

    def audit(self, pres: AlgebraPresentation, trunc: Optional[int] = None) -> OracleReport:
        return self.audit_series(pres, poincare(pres, trunc))
