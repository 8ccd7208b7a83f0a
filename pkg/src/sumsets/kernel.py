"""Exact h-fold sumset computation by two independent engines.

For A = {a_0 < ... < a_{k-1}} and a fold count h, the four kinds collect
sums  sum(lambda_i * a_i)  over coefficient vectors lambda with

    unrestricted       lambda_i >= 0        and sum(lambda_i) = h
    restricted         lambda_i in {0,1}    and sum(lambda_i) = h
    signed             lambda_i in Z        and sum(|lambda_i|) = h
    restricted-signed  lambda_i in {-1,0,1} and sum(|lambda_i|) = h

The two engines are deliberately unrelated in structure:

* ``sumset_naive`` enumerates every coefficient vector (grouped by support
  and sign pattern so itertools drives the inner loops) and accumulates the
  distinct values in a hash set.  It is the oracle.
* ``sumset_layered`` runs a dynamic program over elements with layers
  indexed by consumed weight j = 0..h; each layer is a dense bitmask over
  the reachable offset range [-h*max|a|, h*max|a|], and per-element
  transitions either skip the element or add c*a_i for each admissible
  coefficient c.  It is the fast path.

Agreement of the two engines on a value set is the package's primary
correctness evidence; the explorer module re-checks every would-be
counterexample with both.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from math import comb
from operator import mul
from typing import Iterator

from .core import (
    MAX_SAFE_MAGNITUDE,
    CoefficientVector,
    FiniteIntSet,
    SumsetKind,
    SumsetResult,
)
from .errors import InvalidFold, KernelOverflow, TheoremViolation


@dataclass(frozen=True)
class KernelStats:
    """Optional per-computation statistics.

    ``vectors_enumerated`` is the size of the coefficient space the
    computation covers; the naive engine visits each vector exactly once,
    the layered engine covers the same space without materializing it.
    """

    vectors_enumerated: int
    distinct_values: int
    value_range: tuple[int, int]
    engine: str


def _require_valid_fold(k: int, h: int, kind: SumsetKind) -> None:
    if kind.bounded_fold:
        if not 1 <= h <= k:
            raise InvalidFold(f"{kind.value} needs 1 <= h <= k={k}, got h={h}")
    elif h < 1:
        raise InvalidFold(f"{kind.value} needs h >= 1, got h={h}")


def _require_safe_magnitude(a: FiniteIntSet, h: int) -> None:
    if h * a.max_magnitude > MAX_SAFE_MAGNITUDE:
        raise KernelOverflow(
            f"h * max|a_i| = {h} * {a.max_magnitude} exceeds 2^62"
        )


def enumerate_coefficients(
    k: int, h: int, kind: SumsetKind
) -> Iterator[CoefficientVector]:
    """Yield every coefficient vector of the kind with weight exactly h,
    each once, in lexicographic order over coefficient tuples."""
    _require_valid_fold(k, h, kind)

    def rec(prefix: list[int], remaining: int) -> Iterator[CoefficientVector]:
        pos = len(prefix)
        if pos == k:
            if remaining == 0:
                yield CoefficientVector(tuple(prefix))
            return
        if kind.bounded_fold and remaining > k - pos:
            return  # cannot place the leftover weight one unit at a time
        if kind is SumsetKind.UNRESTRICTED:
            candidates = range(0, remaining + 1)
        elif kind is SumsetKind.RESTRICTED:
            candidates = range(0, min(1, remaining) + 1)
        elif kind is SumsetKind.SIGNED:
            candidates = range(-remaining, remaining + 1)
        else:
            candidates = range(-1, 2)
        for c in candidates:
            if abs(c) <= remaining:
                prefix.append(c)
                yield from rec(prefix, remaining - abs(c))
                prefix.pop()

    return rec([], h)


def coefficient_space_size(k: int, h: int, kind: SumsetKind) -> int:
    """Number of coefficient vectors of the kind with weight exactly h."""
    _require_valid_fold(k, h, kind)
    if kind is SumsetKind.RESTRICTED:
        return comb(k, h)
    if kind is SumsetKind.RESTRICTED_SIGNED:
        return comb(k, h) * 2**h
    if kind is SumsetKind.UNRESTRICTED:
        return comb(k + h - 1, h)
    # signed: choose s nonzero slots, a composition of h into s positive
    # parts, and a sign per slot
    return sum(
        comb(k, s) * comb(h - 1, s - 1) * 2**s for s in range(1, min(k, h) + 1)
    )


_SIGN_PATTERNS: dict[int, list[tuple[int, ...]]] = {}


def _sign_patterns(n: int) -> list[tuple[int, ...]]:
    if n not in _SIGN_PATTERNS:
        _SIGN_PATTERNS[n] = list(product((1, -1), repeat=n))
    return _SIGN_PATTERNS[n]


def _naive_values(elements: tuple[int, ...], h: int, kind: SumsetKind) -> set[int]:
    k = len(elements)
    if kind is SumsetKind.RESTRICTED:
        return {sum(c) for c in combinations(elements, h)}
    if kind is SumsetKind.UNRESTRICTED:
        return {sum(c) for c in combinations_with_replacement(elements, h)}
    if kind is SumsetKind.RESTRICTED_SIGNED:
        patterns = _sign_patterns(h)
        return {
            sum(map(mul, support, signs))
            for support in combinations(elements, h)
            for signs in patterns
        }
    # signed: a vector is a support subset, a sign per support slot, and a
    # composition of h into positive parts; compositions m_i = 1 + n_i are
    # enumerated as multisets of extra copies
    values: set[int] = set()
    for s in range(1, min(k, h) + 1):
        patterns = _sign_patterns(s)
        extra = h - s
        for support in combinations(elements, s):
            for signs in patterns:
                signed = tuple(map(mul, support, signs))
                base = sum(signed)
                if extra == 0:
                    values.add(base)
                else:
                    for copies in combinations_with_replacement(signed, extra):
                        values.add(base + sum(copies))
    return values


def _shift(mask: int, delta: int) -> int:
    return mask << delta if delta >= 0 else mask >> -delta


def _layered_values(elements: tuple[int, ...], h: int, kind: SumsetKind) -> list[int]:
    offset = h * max(abs(elements[0]), abs(elements[-1]))
    layers = [0] * (h + 1)
    layers[0] = 1 << offset
    signed_fold = kind.symmetric
    unit_fold = kind.bounded_fold
    for x in elements:
        updated = layers.copy()
        for j in range(1, h + 1):
            acc = updated[j]
            if unit_fold:
                prev = layers[j - 1]
                acc |= _shift(prev, x)
                if signed_fold:
                    acc |= _shift(prev, -x)
            else:
                for c in range(1, j + 1):
                    prev = layers[j - c]
                    acc |= _shift(prev, c * x)
                    if signed_fold:
                        acc |= _shift(prev, -c * x)
            updated[j] = acc
        layers = updated
    mask = layers[h]
    values = []
    while mask:
        low = mask & -mask
        values.append(low.bit_length() - 1 - offset)
        mask ^= low
    return values


def _build_result(
    a: FiniteIntSet,
    h: int,
    kind: SumsetKind,
    values: tuple[int, ...],
    engine: str,
    collect_stats: bool,
) -> SumsetResult:
    stats = None
    if collect_stats:
        stats = KernelStats(
            vectors_enumerated=coefficient_space_size(a.k, h, kind),
            distinct_values=len(values),
            value_range=(values[0], values[-1]),
            engine=engine,
        )
    return SumsetResult(values=values, kind=kind, h=h, source_k=a.k, stats=stats)


def sumset_naive(
    a: FiniteIntSet,
    h: int,
    kind: SumsetKind = SumsetKind.RESTRICTED_SIGNED,
    collect_stats: bool = False,
) -> SumsetResult:
    """Oracle engine: direct enumeration of every coefficient vector."""
    _require_valid_fold(a.k, h, kind)
    _require_safe_magnitude(a, h)
    values = tuple(sorted(_naive_values(a.elements, h, kind)))
    return _build_result(a, h, kind, values, "naive", collect_stats)


def sumset_layered(
    a: FiniteIntSet,
    h: int,
    kind: SumsetKind = SumsetKind.RESTRICTED_SIGNED,
    collect_stats: bool = False,
) -> SumsetResult:
    """Fast engine: weight-layered dynamic program over dense bitmasks."""
    _require_valid_fold(a.k, h, kind)
    _require_safe_magnitude(a, h)
    values = tuple(_layered_values(a.elements, h, kind))
    return _build_result(a, h, kind, values, "layered", collect_stats)


def restricted_sumset_cardinality(a: FiniteIntSet, h: int) -> int:
    """|h^A|, the number of sums of h distinct elements of A."""
    card = sumset_layered(a, h, SumsetKind.RESTRICTED).cardinality
    floor = h * a.k - h * h + 1
    if card < floor:
        raise TheoremViolation(
            f"|{h}^A| = {card} < {floor} for A = {a}; restricted sumset "
            "lower bound is theorem-backed, this is a kernel bug"
        )
    return card
