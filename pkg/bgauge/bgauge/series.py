from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple


@dataclass(frozen=True)
class PowerSeries:
    """Formal power series in t, truncated at degree `trunc` (inclusive).

    Coefficients are python ints, so dimension counts never overflow.
    """

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("A power series needs at least the degree-0 coefficient")
        for degree, value in enumerate(coeffs):
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(
                    f"Coefficient at degree {degree} is not an integer: {value!r}"
                )
            if value < 0:
                raise ValueError(f"Negative coefficient {value} at degree {degree}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return mul(self, other)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        return add(self, other)

    def __getitem__(self, degree: int) -> int:
        return coefficient(self, degree)


def from_coeffs(coeffs: Iterable[int]) -> PowerSeries:
    return PowerSeries(tuple(coeffs))


def _check_trunc(trunc: int) -> None:
    if trunc < 0:
        raise ValueError(f"Truncation degree must be >= 0, got {trunc}")


def _check_degree(d: int) -> None:
    if d <= 0:
        raise ValueError(f"Generator degree must be >= 1, got {d}")


def _check_same_trunc(a: PowerSeries, b: PowerSeries) -> None:
    if a.trunc != b.trunc:
        raise ValueError(
            f"Truncation mismatch: {a.trunc} vs {b.trunc}; "
            "truncate both operands to a common degree first"
        )


def zero(trunc: int) -> PowerSeries:
    _check_trunc(trunc)
    return PowerSeries((0,) * (trunc + 1))


def one(trunc: int) -> PowerSeries:
    _check_trunc(trunc)
    return PowerSeries((1,) + (0,) * trunc)


def mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the common truncation degree."""
    _check_same_trunc(a, b)
    n = a.trunc
    out = [0] * (n + 1)
    b_support = [(j, c) for j, c in enumerate(b.coeffs) if c]
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j, cb in b_support:
            if i + j > n:
                break
            out[i + j] += ca * cb
    return PowerSeries(tuple(out))


def add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _check_same_trunc(a, b)
    return PowerSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def exterior_factor(d: int, trunc: int) -> PowerSeries:
    """1 + t^d, the series of an exterior algebra on one degree-d class."""
    _check_degree(d)
    _check_trunc(trunc)
    coeffs = [1] + [0] * trunc
    if d <= trunc:
        coeffs[d] = 1
    return PowerSeries(tuple(coeffs))


def geometric_factor(d: int, trunc: int) -> PowerSeries:
    """1 + t^d + t^2d + ..., the series of a polynomial algebra on one degree-d class."""
    _check_degree(d)
    _check_trunc(trunc)
    return PowerSeries(tuple(1 if i % d == 0 else 0 for i in range(trunc + 1)))


def coefficient(s: PowerSeries, n: int) -> int:
    if not 0 <= n <= s.trunc:
        raise ValueError(f"Degree {n} outside 0..{s.trunc}")
    return s.coeffs[n]
