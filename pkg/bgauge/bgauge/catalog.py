"""
Homology presentations of the spaces around B𝒢_k, and the verdict on which
statement covers a given (G, p, k).

All presentations are vector-space level: the Hopf algebra structure is not kept.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from sympy import igcd, isprime

from .algebra import (
    AlgebraPresentation,
    Family,
    drop_generator,
    presentation,
    tensor,
)
from .families import get_family
from .groups import GroupType

logger = logging.getLogger(__name__)

SU2_BOUNDARY_ORDER = 12
BOTTOM_ANICK_LABEL = "abar[k=0]"


class Regime(str, Enum):
    FULL_THEOREM = "FullTheorem"
    SU2_MOD3 = "SU2Mod3"
    P_DIVIDES_K = "PDividesK"
    P_REGULAR_ONLY = "PRegularOnly"
    NOT_P_REGULAR = "NotPRegular"
    PRIME_TWO = "PrimeTwoOutOfScope"


@dataclass(frozen=True)
class ApplicabilityVerdict:
    group: GroupType
    prime: int
    chern: int
    regime: Regime
    p_regular: bool
    theorem_condition: bool
    coprime: bool
    boundary_null: bool
    gauge_splits: bool
    bgk_equiv_bg1: bool
    su2_boundary_order: Optional[int]
    notes: Tuple[str, ...] = ()

    @property
    def applicable(self) -> bool:
        return self.regime in (Regime.FULL_THEOREM, Regime.SU2_MOD3)

    @property
    def failed_condition(self) -> Optional[str]:
        p, top = self.prime, self.group.top
        if self.regime is Regime.PRIME_TWO:
            return "p=2 is out of scope"
        if self.regime is Regime.P_DIVIDES_K:
            return f"({p},k)=1 fails (k={self.chern})"
        if self.regime is Regime.NOT_P_REGULAR:
            return f"not {p}-regular ({top} > {p})"
        if self.regime is Regime.P_REGULAR_ONLY:
            return f"condition n_ℓ < p−1 fails ({top} ≮ {p - 1})"
        return None


class RegimeError(Exception):
    """The requested computation lies outside the hypotheses that justify it."""

    def __init__(self, message: str, verdict: Optional[ApplicabilityVerdict] = None):
        super().__init__(message)
        self.verdict = verdict


def check_prime(p: int) -> None:
    if p < 2 or not isprime(p):
        raise ValueError(f"p must be a prime, got {p}")


def _require_odd_prime(p: int) -> None:
    check_prime(p)
    if p == 2:
        raise RegimeError("p=2 is out of scope")


def _require_p_regular(group: GroupType, p: int) -> None:
    _require_odd_prime(p)
    if group.top > p:
        raise RegimeError(
            f"{group.display_name} is not {p}-regular ({group.top} > {p})"
        )
    if group.entries[0] != 2:
        raise ValueError(
            f"{group.display_name}: the first type entry must be 2, got {group.entries[0]}"
        )


def _require_sphere_factors(group: GroupType) -> None:
    for n in group.entries[1:]:
        if n < 3:
            raise ValueError(
                f"{group.display_name}: Ω³S^(2n-1) needs n >= 3 for type entries after the first, got {n}"
            )


def verdict(group: GroupType, p: int, k: int) -> ApplicabilityVerdict:
    check_prime(p)
    top = group.top
    p_regular = top <= p
    theorem_condition = top < p - 1
    coprime = igcd(p, abs(k)) == 1
    is_su2 = group.entries == (2,)

    if p == 2:
        regime = Regime.PRIME_TWO
    elif is_su2 and p == 3 and coprime:
        regime = Regime.SU2_MOD3
    elif not coprime:
        regime = Regime.P_DIVIDES_K
    elif theorem_condition:
        regime = Regime.FULL_THEOREM
    elif p_regular:
        regime = Regime.P_REGULAR_ONLY
    else:
        regime = Regime.NOT_P_REGULAR

    notes: List[str] = []
    if regime is Regime.FULL_THEOREM:
        notes.append("H_*(B𝒢_k) ≅ H_*(Ω³G⟨3⟩) ⊗ H_*(BG) as F_p-vector spaces")
    elif regime is Regime.SU2_MOD3:
        notes.append("H_*(B𝒢_k) ≅ H_*(Ω³S³⟨3⟩)/(x₃) as F_3-vector spaces")
    if theorem_condition:
        notes.append("∂₁: G → Ω³G⟨3⟩ is null homotopic; 𝒢₁ ≃ G × Ω³G⟨3⟩")
    elif p != 2:
        notes.append("∂₁: G → Ω³G⟨3⟩ is essential; 𝒢₁ does not split")
    if is_su2:
        notes.append(f"∂₁: S³ → Ω³S³⟨3⟩ has order {SU2_BOUNDARY_ORDER}")
        if p == 3:
            notes.append("∂₁ injects in mod-3 homology")
    if p >= 3 and coprime:
        notes.append("B𝒢_k ≃ B𝒢₁ after localization at p")

    result = ApplicabilityVerdict(
        group=group,
        prime=p,
        chern=k,
        regime=regime,
        p_regular=p_regular,
        theorem_condition=theorem_condition,
        coprime=coprime,
        boundary_null=theorem_condition,
        gauge_splits=theorem_condition,
        bgk_equiv_bg1=p >= 3 and coprime,
        su2_boundary_order=SU2_BOUNDARY_ORDER if is_su2 else None,
        notes=tuple(notes),
    )
    logger.debug(f"Verdict for {group.display_name}, p={p}, k={k}: {regime.value}")
    return result


def loops3_sphere(n: int, p: int, trunc: int) -> AlgebraPresentation:
    """H_*(Ω³S^{2n+1}; F_p): families A, B and C."""
    if n < 2:
        raise ValueError(f"Ω³S^(2n+1) needs n >= 2, got {n}")
    _require_odd_prime(p)
    gens = []
    for family in (Family.A, Family.B, Family.C):
        gens += get_family(family).generators(n, p, trunc)
    return presentation(gens, p, trunc, f"H_*(Ω³S^{2 * n + 1})")


def loops2_sphere_2pminus1(p: int, trunc: int) -> AlgebraPresentation:
    """H_*(Ω²S^{2p-1}; F_p): families ABAR and BBAR."""
    _require_odd_prime(p)
    gens = []
    for family in (Family.ABAR, Family.BBAR):
        gens += get_family(family).generators(p - 1, p, trunc)
    return presentation(gens, p, trunc, f"H_*(Ω²S^{2 * p - 1})")


def anick_t(p: int, trunc: int) -> AlgebraPresentation:
    """H_*(Ω³S³⟨3⟩) ≅ H_*(Ω²S^{2p-1}) ⊗ H_*(Ω³S^{2p+1}) via the Anick space T^{2p+1}(p)."""
    return tensor(
        loops2_sphere_2pminus1(p, trunc),
        loops3_sphere(p, p, trunc),
        tag="H_*(Ω³S³⟨3⟩)",
    )


def loops3_g3(group: GroupType, p: int, trunc: int) -> AlgebraPresentation:
    """H_*(Ω³G⟨3⟩) for p-regular G: Ω³S³⟨3⟩ × ∏_{i>=2} Ω³S^{2n_i-1}."""
    _require_p_regular(group, p)
    _require_sphere_factors(group)
    result = anick_t(p, trunc)
    for n in group.entries[1:]:
        # S^{2n_i-1} = S^{2(n_i-1)+1}
        result = tensor(result, loops3_sphere(n - 1, p, trunc))
    return AlgebraPresentation(result.generators, p, trunc, "H_*(Ω³G⟨3⟩)")


def _type_entry_presentation(
    group: GroupType, p: int, trunc: int, family: Family, tag: str
) -> AlgebraPresentation:
    _require_p_regular(group, p)
    rule = get_family(family)
    gens = []
    for slot, n in enumerate(group.entries, 1):
        gens += rule.generators(n, p, trunc, slot=slot)
    return presentation(gens, p, trunc, tag)


def classifying_space_bg(group: GroupType, p: int, trunc: int) -> AlgebraPresentation:
    """H_*(BG) for p-regular G: polynomial on degrees 2n_i."""
    return _type_entry_presentation(group, p, trunc, Family.X_BG, "H_*(BG)")


def group_g(group: GroupType, p: int, trunc: int) -> AlgebraPresentation:
    """H_*(G) for p-regular G ≃ ∏ S^{2n_i-1}: exterior on degrees 2n_i - 1."""
    return _type_entry_presentation(group, p, trunc, Family.X_G, "H_*(G)")


def bgk_homology(group: GroupType, p: int, k: int, trunc: int) -> AlgebraPresentation:
    """H_*(B𝒢_k) ≅ H_*(Ω³G⟨3⟩) ⊗ H_*(BG); k only enters through (p, k) = 1."""
    v = verdict(group, p, k)
    if v.regime is not Regime.FULL_THEOREM:
        reason = v.failed_condition
        if v.regime is Regime.SU2_MOD3:
            reason = "condition n_ℓ < p−1 fails (2 ≮ 2); use the mod-3 quotient"
        raise RegimeError(f"{group.display_name}, p={p}, k={k}: {reason}", v)
    return tensor(
        loops3_g3(group, p, trunc),
        classifying_space_bg(group, p, trunc),
        tag="H_*(B𝒢_k)",
    )


def su2_mod3_bgk(k: int, trunc: int) -> AlgebraPresentation:
    """H_*(B𝒢_k; F_3) ≅ H_*(Ω³S³⟨3⟩)/(x₃) for G = SU(2), (3, k) = 1."""
    if igcd(3, abs(k)) != 1:
        raise RegimeError(f"SU(2), p=3, k={k}: (3,k)=1 fails")
    total = anick_t(3, trunc)
    if BOTTOM_ANICK_LABEL not in total.labels:
        # x₃ lies above the truncation, so the quotient agrees with the total space
        return AlgebraPresentation(total.generators, 3, trunc, "H_*(B𝒢_k)")
    return drop_generator(total, BOTTOM_ANICK_LABEL, tag="H_*(B𝒢_k)")


def mh_odd(group: GroupType, p: int) -> List[int]:
    """Degrees of the odd MH classes of H_*(Ω³G⟨3⟩).

    ā_{2p-3} from the Anick factor, then a[k=1,j=0] = 2(n_i - 1)p - 3 from each
    factor Ω³S^{2n_i-1}, i >= 2.
    """
    _require_p_regular(group, p)
    _require_sphere_factors(group)
    degrees = [get_family(Family.ABAR).degree(p - 1, p, 0, 0)]
    a = get_family(Family.A)
    degrees += [a.degree(n - 1, p, 1, 0) for n in group.entries[1:]]
    return degrees


def mh_odd_printed(group: GroupType, p: int) -> List[int]:
    """The same classes with subscripts 2n_i·p - 3, as they are usually printed."""
    _require_p_regular(group, p)
    _require_sphere_factors(group)
    return [2 * p - 3] + [2 * n * p - 3 for n in group.entries[1:]]


def mh_transgressions(group: GroupType, p: int) -> List[Tuple[int, int]]:
    """Each odd MH class of degree d transgresses to degree d - 1 in Ω⁴G⟨3⟩."""
    return [(d, d - 1) for d in mh_odd(group, p)]


def loops1_sphere(n: int, p: int, trunc: int) -> AlgebraPresentation:
    """H_*(ΩS^{2n+1}) = F_p[x_{2n}], the first factor of H_*(Ω³S^{2n+1})."""
    if n < 1:
        raise ValueError(f"ΩS^(2n+1) needs n >= 1, got {n}")
    _require_odd_prime(p)
    gens = get_family(Family.LOOP).generators(n, p, trunc)
    return presentation(gens, p, trunc, f"H_*(ΩS^{2 * n + 1})")


def w_n_bottom_cell(n: int, p: int) -> int:
    """Bottom cell of W_n, the fibre of the double suspension S^{2n-1} → Ω²S^{2n+1}."""
    if n < 1:
        raise ValueError(f"W_n needs n >= 1, got {n}")
    _require_odd_prime(p)
    return 2 * n * p - 3
