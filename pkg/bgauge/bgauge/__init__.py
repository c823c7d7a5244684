"""
bgauge - Mod-p homology of the classifying spaces of gauge groups over S^4,
with the presentations it is built from and a monomial-count audit.
"""

from .algebra import AlgebraPresentation, Generator, Kind, poincare, tensor
from .calculator import GaugeCalculator
from .catalog import (
    ApplicabilityVerdict,
    Regime,
    RegimeError,
    anick_t,
    bgk_homology,
    su2_mod3_bgk,
    verdict,
)
from .document import ARTIFACT_VERSION, OutputDocument
from .groups import GroupType, SpecSyntaxError, lookup, parse_spec
from .oracle import OracleAuditor, monomial_count_oracle

__version__ = ARTIFACT_VERSION
__all__ = [
    "AlgebraPresentation",
    "Generator",
    "Kind",
    "poincare",
    "tensor",
    "GaugeCalculator",
    "ApplicabilityVerdict",
    "Regime",
    "RegimeError",
    "anick_t",
    "bgk_homology",
    "su2_mod3_bgk",
    "verdict",
    "OutputDocument",
    "GroupType",
    "SpecSyntaxError",
    "lookup",
    "parse_spec",
    "OracleAuditor",
    "monomial_count_oracle",
]
