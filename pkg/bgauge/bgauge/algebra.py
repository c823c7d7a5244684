from dataclasses import dataclass, field, replace
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from sympy import isprime

from .series import PowerSeries, exterior_factor, geometric_factor, mul, one


class Kind(str, Enum):
    EXTERIOR = "exterior"
    POLYNOMIAL = "polynomial"


class Family(str, Enum):
    """Which formula produced a generator."""

    A = "A"
    B = "B"
    C = "C"
    ABAR = "ABAR"
    BBAR = "BBAR"
    X_BG = "X_BG"
    X_G = "X_G"
    LOOP = "LOOP"


@dataclass(frozen=True)
class Generator:
    label: str
    family: Family
    indices: Tuple[int, int]
    degree: int
    kind: Kind
    # sphere parameter: the generator lives in a factor built from S^{2n+1}
    # (or from the type entry n for the BG/G families)
    n: int = 0

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"{self.label}: degree must be positive, got {self.degree}")
        if any(i < 0 for i in self.indices):
            raise ValueError(f"{self.label}: negative index in {self.indices}")
        if self.kind is Kind.EXTERIOR and self.degree % 2 == 0:
            raise ValueError(f"{self.label}: exterior generator in even degree {self.degree}")
        if self.kind is Kind.POLYNOMIAL and self.degree % 2 == 1:
            raise ValueError(f"{self.label}: polynomial generator in odd degree {self.degree}")

    @property
    def sort_key(self) -> Tuple[int, str]:
        return (self.degree, self.label)


def check_odd_prime(p: int) -> None:
    if p == 2 or not isprime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


@dataclass(frozen=True)
class AlgebraPresentation:
    """A free graded-commutative algebra over F_p, listed by generators.

    `trunc` promises that every generator of degree <= trunc is listed.
    """

    generators: Tuple[Generator, ...]
    prime: int
    trunc: int
    tag: str = field(default="", compare=False)

    def __post_init__(self):
        check_odd_prime(self.prime)
        if self.trunc < 0:
            raise ValueError(f"Truncation degree must be >= 0, got {self.trunc}")
        gens = tuple(sorted(self.generators, key=lambda g: g.sort_key))
        labels = [g.label for g in gens]
        duplicates = sorted({label for label in labels if labels.count(label) > 1})
        if duplicates:
            raise ValueError(f"Duplicate generator labels: {duplicates}")
        object.__setattr__(self, "generators", gens)

    @property
    def labels(self) -> List[str]:
        return [g.label for g in self.generators]

    def get(self, label: str) -> Generator:
        for g in self.generators:
            if g.label == label:
                return g
        raise ValueError(f"Unknown generator label: {label!r}")


def poincare(pres: AlgebraPresentation, trunc: Optional[int] = None) -> PowerSeries:
    trunc = pres.trunc if trunc is None else trunc
    if trunc > pres.trunc:
        raise ValueError(
            f"Presentation '{pres.tag}' is only complete up to degree {pres.trunc}, "
            f"asked for {trunc}"
        )
    series = one(trunc)
    for g in pres.generators:
        if g.degree > trunc:
            break
        if g.kind is Kind.EXTERIOR:
            series = mul(series, exterior_factor(g.degree, trunc))
        else:
            series = mul(series, geometric_factor(g.degree, trunc))
    return series


def _unused_label(label: str, taken: set) -> str:
    suffix = 2
    while f"{label}#{suffix}" in taken:
        suffix += 1
    return f"{label}#{suffix}"


def tensor(
    a: AlgebraPresentation, b: AlgebraPresentation, tag: Optional[str] = None
) -> AlgebraPresentation:
    """Tensor product; colliding labels of `b` get a '#m' suffix."""
    if a.prime != b.prime:
        raise ValueError(f"Cannot tensor over different primes: {a.prime} vs {b.prime}")
    taken = set(a.labels)
    renamed = []
    for g in b.generators:
        if g.label in taken:
            g = replace(g, label=_unused_label(g.label, taken))
        taken.add(g.label)
        renamed.append(g)
    trunc = min(a.trunc, b.trunc)
    gens = tuple(g for g in a.generators + tuple(renamed) if g.degree <= trunc)
    if tag is None:
        tag = " ⊗ ".join(t for t in (a.tag, b.tag) if t)
    return AlgebraPresentation(gens, a.prime, trunc, tag)


def drop_generator(
    pres: AlgebraPresentation, label: str, tag: Optional[str] = None
) -> AlgebraPresentation:
    """Quotient by the ideal of one free generator, i.e. delete it."""
    pres.get(label)
    gens = tuple(g for g in pres.generators if g.label != label)
    return AlgebraPresentation(
        gens, pres.prime, pres.trunc, tag if tag is not None else f"{pres.tag}/({label})"
    )


def dims_table(pres: AlgebraPresentation, trunc: Optional[int] = None) -> List[Tuple[int, int]]:
    return list(enumerate(poincare(pres, trunc).coeffs))


def connectivity(pres: AlgebraPresentation) -> Optional[int]:
    """Lowest generator degree, or None when the presentation is the ground field."""
    return pres.generators[0].degree if pres.generators else None


def bottom_cell_count(pres: AlgebraPresentation) -> int:
    bottom = connectivity(pres)
    if bottom is None:
        return 0
    return sum(1 for g in pres.generators if g.degree == bottom)


def presentation(
    generators: Sequence[Generator], prime: int, trunc: int, tag: str = ""
) -> AlgebraPresentation:
    return AlgebraPresentation(tuple(generators), prime, trunc, tag)
