from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from .algebra import Family, Generator, Kind


@dataclass
class GeneratorFamily(ABC):
    """Base class for the closed-form generator families."""

    family: Family
    kind: Kind
    formula: str
    k_min: int = 0
    j_min: int = 0

    uses_k = True
    uses_j = True

    @abstractmethod
    def degree(self, n: int, p: int, k: int = 0, j: int = 0) -> int:
        """Degree of the (k, j) generator for sphere parameter n at prime p."""
        pass

    @abstractmethod
    def label(self, n: int, k: int = 0, j: int = 0, slot: Optional[int] = None) -> str:
        pass

    def indices(self, n: int, p: int, trunc: int) -> Iterator[Tuple[int, int]]:
        # degrees strictly increase in k and in j, so both loops terminate
        k = self.k_min
        while self.degree(n, p, k, self.j_min) <= trunc:
            j = self.j_min
            while self.degree(n, p, k, j) <= trunc:
                yield (k, j)
                if not self.uses_j:
                    break
                j += 1
            if not self.uses_k:
                break
            k += 1

    def generators(
        self, n: int, p: int, trunc: int, slot: Optional[int] = None
    ) -> List[Generator]:
        return [
            Generator(
                label=self.label(n, k, j, slot),
                family=self.family,
                indices=(k, j),
                degree=self.degree(n, p, k, j),
                kind=self.kind,
                n=n,
            )
            for k, j in self.indices(n, p, trunc)
        ]

    @classmethod
    def get_default_families(cls) -> Dict[Family, "GeneratorFamily"]:
        families = [
            SphereExteriorFamily(
                Family.A, Kind.EXTERIOR, "2(n·p^k - 1)·p^j - 1", k_min=1, j_min=0
            ),
            SpherePolynomialFamily(
                Family.B, Kind.POLYNOMIAL, "2(n·p^k - 1)·p^j - 2", k_min=1, j_min=1
            ),
            SphereBottomFamily(Family.C, Kind.POLYNOMIAL, "2n·p^k - 2", k_min=0),
            DoubleLoopExteriorFamily(
                Family.ABAR, Kind.EXTERIOR, "2(p - 1)·p^k - 1", k_min=0
            ),
            DoubleLoopPolynomialFamily(
                Family.BBAR, Kind.POLYNOMIAL, "2(p - 1)·p^k - 2", k_min=1
            ),
            TypeEntryFamily(Family.X_BG, Kind.POLYNOMIAL, "2n"),
            TypeEntryFamily(Family.X_G, Kind.EXTERIOR, "2n - 1"),
            TypeEntryFamily(Family.LOOP, Kind.POLYNOMIAL, "2n"),
        ]
        return {f.family: f for f in families}


@dataclass
class SphereExteriorFamily(GeneratorFamily):
    """a-generators of H_*(Ω³S^{2n+1})."""

    def degree(self, n: int, p: int, k: int = 0, j: int = 0) -> int:
        return 2 * (n * p**k - 1) * p**j - 1

    def label(self, n: int, k: int = 0, j: int = 0, slot: Optional[int] = None) -> str:
        return f"a[n={n},k={k},j={j}]"


@dataclass
class SpherePolynomialFamily(GeneratorFamily):
    """b-generators of H_*(Ω³S^{2n+1})."""

    def degree(self, n: int, p: int, k: int = 0, j: int = 0) -> int:
        return 2 * (n * p**k - 1) * p**j - 2

    def label(self, n: int, k: int = 0, j: int = 0, slot: Optional[int] = None) -> str:
        return f"b[n={n},k={k},j={j}]"


@dataclass
class SphereBottomFamily(GeneratorFamily):
    """c-generators of H_*(Ω³S^{2n+1}); c[k=0] is the bottom class in degree 2n-2."""

    uses_j = False

    def degree(self, n: int, p: int, k: int = 0, j: int = 0) -> int:
        return 2 * n * p**k - 2

    def label(self, n: int, k: int = 0, j: int = 0, slot: Optional[int] = None) -> str:
        return f"c[n={n},k={k}]"


@dataclass
class DoubleLoopExteriorFamily(GeneratorFamily):
    uses_j = False

    def degree(self, n: int, p: int, k: int = 0, j: int = 0) -> int:
        return 2 * (p - 1) * p**k - 1

    def label(self, n: int, k: int = 0, j: int = 0, slot: Optional[int] = None) -> str:
        return f"abar[k={k}]"


@dataclass
class DoubleLoopPolynomialFamily(GeneratorFamily):
    uses_j = False

    def degree(self, n: int, p: int, k: int = 0, j: int = 0) -> int:
        return 2 * (p - 1) * p**k - 2

    def label(self, n: int, k: int = 0, j: int = 0, slot: Optional[int] = None) -> str:
        return f"bbar[k={k}]"


@dataclass
class TypeEntryFamily(GeneratorFamily):
    """One generator per type entry n (BG, G) or per sphere (ΩS^{2n+1})."""

    uses_k = False
    uses_j = False

    def degree(self, n: int, p: int, k: int = 0, j: int = 0) -> int:
        if self.kind is Kind.EXTERIOR:
            return 2 * n - 1
        return 2 * n

    def label(self, n: int, k: int = 0, j: int = 0, slot: Optional[int] = None) -> str:
        prefix = self.family.value.lower()
        if slot is None:
            return f"{prefix}[n={n}]"
        return f"{prefix}[i={slot},n={n}]"


FAMILIES = GeneratorFamily.get_default_families()


def get_family(family: Family) -> GeneratorFamily:
    if family not in FAMILIES:
        raise ValueError(f"Unknown family: {family}. Available: {list(FAMILIES)}")
    return FAMILIES[family]


def recompute_degree(generator: Generator, p: int) -> int:
    k, j = generator.indices
    return get_family(generator.family).degree(generator.n, p, k, j)
