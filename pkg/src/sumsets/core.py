"""Domain types and elementary set transformations.

A finite integer set is kept as a strictly increasing tuple of distinct
integers.  All types here are immutable and safe to share across workers;
every operation is a pure function.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Iterable, Iterator

from .errors import (
    DomainViolation,
    InvalidDilation,
    InvalidSet,
    InvalidSetLiteral,
    NotNormalizable,
)

# Kernel inputs are rejected when h * max|a_i| exceeds this, so every value a
# coefficient vector can reach stays well inside a signed 64-bit word.
MAX_SAFE_MAGNITUDE = 2**62


class SumsetKind(str, Enum):
    """The four h-fold sumset notions, keyed by coefficient constraint."""

    UNRESTRICTED = "unrestricted"          # coefficients in N, sum = h
    RESTRICTED = "restricted"              # coefficients in {0,1}, h ones
    SIGNED = "signed"                      # coefficients in Z, |weight| = h
    RESTRICTED_SIGNED = "restricted-signed"  # coefficients in {-1,0,1}

    @property
    def bounded_fold(self) -> bool:
        """True for kinds where each element carries at most weight 1,
        forcing 1 <= h <= k."""
        return self in (SumsetKind.RESTRICTED, SumsetKind.RESTRICTED_SIGNED)

    @property
    def symmetric(self) -> bool:
        """True for kinds whose value sets satisfy S = -S."""
        return self in (SumsetKind.SIGNED, SumsetKind.RESTRICTED_SIGNED)


class SetFamily(str, Enum):
    """Input families the bound and inverse machinery distinguishes."""

    POSITIVE = "positive"
    CONTAINS_ZERO = "contains-zero"
    ANY = "any"


@dataclass(frozen=True)
class FiniteIntSet:
    """A = {a_0 < a_1 < ... < a_{k-1}}, a nonempty set of integers."""

    elements: tuple[int, ...]
    had_duplicates: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not self.elements:
            raise InvalidSet("a finite integer set must be nonempty")
        if any(b <= a for a, b in zip(self.elements, self.elements[1:])):
            raise InvalidSet(
                f"elements must be strictly increasing, got {self.elements}"
            )

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def max_magnitude(self) -> int:
        return max(abs(self.elements[0]), abs(self.elements[-1]))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, value: object) -> bool:
        return value in self.elements

    def canonical(self) -> str:
        """Canonical serialization: ascending comma-separated decimals."""
        return ",".join(str(a) for a in self.elements)

    def __str__(self) -> str:
        return self.canonical()


@dataclass(frozen=True)
class CoefficientVector:
    """One choice of coefficients (lambda_0, ..., lambda_{k-1})."""

    coefficients: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(abs(c) for c in self.coefficients)

    def apply(self, a: FiniteIntSet) -> int:
        return sum(c * x for c, x in zip(self.coefficients, a.elements))


@dataclass(frozen=True)
class SumsetResult:
    """A computed sumset: sorted distinct values plus provenance."""

    values: tuple[int, ...]
    kind: SumsetKind
    h: int
    source_k: int
    stats: "object | None" = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise InvalidSet("sumset values must be strictly increasing")
        if self.kind.symmetric:
            vals = set(self.values)
            if any(-v not in vals for v in vals):
                raise InvalidSet(
                    f"{self.kind.value} sumset must be symmetric, got {self.values}"
                )

    @property
    def cardinality(self) -> int:
        return len(self.values)

    def __contains__(self, value: object) -> bool:
        return value in set(self.values)


def make_set(raw: Iterable[int]) -> FiniteIntSet:
    """Sort and deduplicate ``raw`` into a FiniteIntSet.

    The result records whether the input contained duplicates; an empty
    input raises InvalidSet.
    """
    items = list(raw)
    if not items:
        raise InvalidSet("cannot build a set from an empty sequence")
    if any(not isinstance(x, int) or isinstance(x, bool) for x in items):
        raise InvalidSet(f"set elements must be integers, got {items!r}")
    distinct = sorted(set(items))
    return FiniteIntSet(tuple(distinct), had_duplicates=len(distinct) < len(items))


def parse_set_literal(text: str) -> FiniteIntSet:
    """Parse the shared set literal format, e.g. ``1,3,5,7``.

    The canonical form is ascending with no whitespace; parsing is liberal
    about order and duplicates but any non-integer token is an error.
    """
    if not text or any(ch.isspace() for ch in text):
        raise InvalidSetLiteral(f"malformed set literal: {text!r}")
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise InvalidSetLiteral(f"malformed set literal: {text!r}") from None
    return make_set(values)


def dilate(a: FiniteIntSet, alpha: int) -> FiniteIntSet:
    """The alpha-dilation {alpha * x : x in A}; order reverses for alpha < 0."""
    if alpha == 0:
        raise InvalidDilation("dilation by 0 would collapse the set")
    scaled = [alpha * x for x in a.elements]
    if alpha < 0:
        scaled.reverse()
    return FiniteIntSet(tuple(scaled))


def normalize_dilation(a: FiniteIntSet) -> tuple[int, FiniteIntSet]:
    """Factor a nonnegative set as d * A' with gcd of A' nonzero part 1.

    Returns (d, A').  Only defined for sets of nonnegative integers with at
    least one positive element; anything else raises NotNormalizable.
    """
    if a.elements[0] < 0:
        raise NotNormalizable(f"set {a} has negative elements")
    nonzero = [x for x in a.elements if x != 0]
    if not nonzero:
        raise NotNormalizable("set {0} has no positive element to normalize")
    d = 0
    for x in nonzero:
        d = gcd(d, x)
    return d, FiniteIntSet(tuple(x // d for x in a.elements))


def family_of(a: FiniteIntSet) -> SetFamily:
    """Classify a set into the positive / zero-containing input families."""
    if a.elements[0] > 0:
        return SetFamily.POSITIVE
    if a.elements[0] == 0:
        return SetFamily.CONTAINS_ZERO
    raise DomainViolation(
        f"set {a} is outside the positive / zero-containing families"
    )


def canonical_json(obj: object) -> str:
    """Single JSON serialization used everywhere, so that parsing a report
    and re-serializing it is byte-identical."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
