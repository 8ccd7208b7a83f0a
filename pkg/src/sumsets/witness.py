"""Lower-bound certificates: labeled element families inside h^+-A.

A certificate family is a chain of labeled sumset members together with the
claimed order relation (strictly-less or equal) between consecutive links.
When every claimed relation holds, the chain forces a minimum number of
distinct values, so the families double as machine-checkable proofs of the
closed-form lower bounds evaluated in :mod:`sumsets.bounds`.

Three index families cover general sets:

* the s-family: sums of h consecutive-window elements with one omission,
  giving hk - h^2 + 1 distinct positive values;
* the t-family: mixed-sign sums bridging -s[0,0] up to s[0,0], adding
  C(h+1,2) - 1 values for positive sets and C(h,2) - 1 when 0 is in A;
* the u-family: the h = k bridge between t[0,1] and t[1,0], used by the
  extremal classification of full-fold equality sets.

For superincreasing sets two extra labeled sub-families (shifted s-values
and mirrored t-values) raise the certified count to 2hk - h^2 + h - 4 once
h >= 5 and k >= 6.  This module also generates the named extremal families
that attain the bounds with equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Iterable, Sequence

from .core import FiniteIntSet, make_set
from .errors import DomainViolation, InvalidFamily, InvalidFold

LESS = "<"
EQUAL = "="


@dataclass(frozen=True)
class WitnessElement:
    """One labeled chain link; ``core`` marks members counted by the family
    (brackets borrowed from a neighboring family are not core)."""

    label: str
    value: int
    relation_to_next: str | None
    core: bool = True

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "value": self.value,
            "relation_to_next": self.relation_to_next,
        }


@dataclass(frozen=True)
class WitnessFamily:
    """A chain of labeled sumset members with claimed order relations."""

    name: str
    h: int
    elements: tuple[WitnessElement, ...]
    expected_distinct: int
    expected_new: int | None = None
    subfamilies: tuple["WitnessFamily", ...] = field(default=())

    def core_values(self) -> set[int]:
        return {e.value for e in self.elements if e.core}

    def distinct_core(self) -> int:
        return len(self.core_values())


@dataclass(frozen=True)
class FamilyCheck:
    """Outcome of verifying one family's claims against actual numbers."""

    name: str
    chain_ok: bool
    broken_links: tuple[str, ...]
    distinct: int
    expected_distinct: int
    missing_members: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return (
            self.chain_ok
            and self.distinct == self.expected_distinct
            and not self.missing_members
        )


def _require_positive(a: FiniteIntSet) -> None:
    if a.elements[0] <= 0:
        raise DomainViolation(f"family defined for strictly positive sets, got {a}")


def _require_nonnegative(a: FiniteIntSet) -> None:
    if a.elements[0] < 0:
        raise DomainViolation(f"family defined for nonnegative sets, got {a}")


def _require_fold(a: FiniteIntSet, h: int) -> None:
    if not 1 <= h <= a.k:
        raise InvalidFold(f"need 1 <= h <= k={a.k}, got h={h}")


def _s_value(a: Sequence[int], i: int, j: int, h: int) -> int:
    """Sum of the window a[i..i+h] skipping a[i+h-j] (h distinct elements)."""
    return sum(a[i + l] for l in range(h + 1) if l != h - j)


def _s_last_value(a: Sequence[int], h: int) -> int:
    """Sum of the h largest elements (the chain's final link)."""
    return sum(a[len(a) - h :])


def _t_value(a: Sequence[int], i: int, j: int, h: int) -> int:
    """Mixed-sign sum: negate a[0..h-i-1] except a[j], add top block."""
    head = -sum(a[l] for l in range(h - i) if l != j) + a[j]
    return head + sum(a[h - m] for m in range(1, i + 1))


def _u_value(a: Sequence[int], j: int) -> int:
    k = len(a)
    return a[0] + a[j] - sum(a[l] for l in range(1, k) if l != j)


def s_family(a: FiniteIntSet, h: int) -> WitnessFamily:
    """The ascending window-sum chain; hk - h^2 + 1 distinct values.

    Defined for nonnegative sets; the chain's strictness only needs the
    elements distinct, so a leading zero is fine.
    """
    _require_nonnegative(a)
    _require_fold(a, h)
    elems: list[WitnessElement] = []
    k = a.k
    seq = a.elements
    for i in range(k - h):
        for j in range(h + 1):
            # s[i,h] equals s[i+1,0]; keep both labels so the collision is
            # itself a checked claim
            rel = LESS if j < h else EQUAL
            elems.append(WitnessElement(f"s[{i},{j}]", _s_value(seq, i, j, h), rel))
    elems.append(WitnessElement(f"s[{k - h},0]", _s_last_value(seq, h), None))
    return WitnessFamily(
        name="s",
        h=h,
        elements=tuple(elems),
        expected_distinct=h * k - h * h + 1,
    )


def _t_chain(a: FiniteIntSet, h: int, zero_in_a: bool) -> list[WitnessElement]:
    seq = a.elements
    s00 = _s_value(seq, 0, 0, h) if h < a.k else _s_last_value(seq, h)
    boundary = EQUAL if zero_in_a else LESS
    elems = [WitnessElement("-s[0,0]", -s00, boundary, core=False)]
    for i in range(h):
        for j in range(h - i):
            if j < h - i - 1:
                rel = LESS
            elif i < h - 1:
                rel = boundary
            else:
                rel = EQUAL  # t[h-1,0] always equals s[0,0]
            elems.append(WitnessElement(f"t[{i},{j}]", _t_value(seq, i, j, h), rel))
    elems.append(WitnessElement("s[0,0]", s00, None, core=False))
    return elems


def _superincreasing_subfamilies(a: FiniteIntSet, h: int) -> tuple[WitnessFamily, ...]:
    seq = a.elements
    if h > a.k - 1:
        raise DomainViolation(
            f"superincreasing sub-families need h <= k-1, got h={h}, k={a.k}"
        )
    subs: list[WitnessFamily] = []

    # shifted s-values v[j] = s[0,j] - 2*a_0 interleave the s[0,*] chain
    if h >= 3:
        up: list[WitnessElement] = [
            WitnessElement("s[0,0]", _s_value(seq, 0, 0, h), LESS, core=False)
        ]
        for j in range(1, h - 1):
            up.append(WitnessElement(f"v[{j}]", _s_value(seq, 0, j, h) - 2 * seq[0], LESS))
            rel = LESS if j < h - 2 else None
            up.append(WitnessElement(f"s[0,{j}]", _s_value(seq, 0, j, h), rel, core=False))
        subs.append(
            WitnessFamily(name="v", h=h, elements=tuple(up), expected_distinct=h - 2)
        )
        down: list[WitnessElement] = [
            WitnessElement(
                f"-s[0,{h - 2}]", -_s_value(seq, 0, h - 2, h), LESS, core=False
            )
        ]
        for j in range(h - 2, 0, -1):
            down.append(
                WitnessElement(f"-v[{j}]", 2 * seq[0] - _s_value(seq, 0, j, h), LESS)
            )
            rel = LESS if j > 1 else None
            down.append(
                WitnessElement(
                    f"-s[0,{j - 1}]", -_s_value(seq, 0, j - 1, h), rel, core=False
                )
            )
        subs.append(
            WitnessFamily(name="-v", h=h, elements=tuple(down), expected_distinct=h - 2)
        )

    # mirrored t-rows fill the gaps between consecutive t[0,*] values
    for j in range(2, h - 2):
        chain = [
            WitnessElement(
                f"t[0,{h - j - 1}]", _t_value(seq, 0, h - j - 1, h), LESS, core=False
            )
        ]
        for m in range(h - j - 2, -1, -1):
            chain.append(WitnessElement(f"-t[{j},{m}]", -_t_value(seq, j, m, h), LESS))
        chain.append(
            WitnessElement(f"-t[{j - 1},{h - j}]", -_t_value(seq, j - 1, h - j, h), LESS)
        )
        chain.append(
            WitnessElement(f"t[0,{h - j}]", _t_value(seq, 0, h - j, h), None, core=False)
        )
        subs.append(
            WitnessFamily(
                name=f"-t[{j},*]", h=h, elements=tuple(chain), expected_distinct=h - j
            )
        )

    if h >= 3:
        top = (
            WitnessElement("t[0,1]", _t_value(seq, 0, 1, h), LESS, core=False),
            WitnessElement(f"-t[{h - 3},2]", -_t_value(seq, h - 3, 2, h), LESS),
            WitnessElement("t[0,2]", _t_value(seq, 0, 2, h), None, core=False),
        )
        subs.append(
            WitnessFamily(name="-t[top]", h=h, elements=top, expected_distinct=1)
        )
    return tuple(subs)


def t_family(
    a: FiniteIntSet,
    h: int,
    zero_in_a: bool = False,
    superincreasing: bool = False,
) -> WitnessFamily:
    """The bridging chain from -s[0,0] to s[0,0].

    With ``zero_in_a`` the row boundaries collapse to equalities and the
    new-value contribution drops from C(h+1,2) - 1 to C(h,2) - 1.  With
    ``superincreasing`` the extra labeled sub-families are attached.
    """
    _require_fold(a, h)
    if zero_in_a:
        if a.elements[0] != 0:
            raise DomainViolation(f"zero_in_a requires a_0 = 0, got {a}")
    else:
        _require_positive(a)
    subfamilies: tuple[WitnessFamily, ...] = ()
    if superincreasing:
        if zero_in_a or not is_superincreasing(a):
            raise DomainViolation(f"set {a} is not superincreasing")
        subfamilies = _superincreasing_subfamilies(a, h)
    if zero_in_a:
        distinct = comb(h + 1, 2) - (h - 1)
        new = max(comb(h, 2) - 1, 0)
    else:
        distinct = comb(h + 1, 2)
        new = comb(h + 1, 2) - 1
    return WitnessFamily(
        name="t",
        h=h,
        elements=tuple(_t_chain(a, h, zero_in_a)),
        expected_distinct=distinct,
        expected_new=new,
        subfamilies=subfamilies,
    )


def u_family(a: FiniteIntSet) -> WitnessFamily:
    """The full-fold (h = k) chain t[0,1] < u[1] < ... < u[k-1] = t[1,0]."""
    _require_positive(a)
    if a.k < 3:
        raise DomainViolation(f"u-family needs k >= 3, got k={a.k}")
    k = a.k
    seq = a.elements
    elems = [WitnessElement("t[0,1]", _t_value(seq, 0, 1, k), LESS, core=False)]
    for j in range(1, k):
        rel = LESS if j < k - 1 else EQUAL
        elems.append(WitnessElement(f"u[{j}]", _u_value(seq, j), rel))
    elems.append(WitnessElement("t[1,0]", _t_value(seq, 1, 0, k), None, core=False))
    return WitnessFamily(
        name="u", h=k, elements=tuple(elems), expected_distinct=k - 1
    )


def verify_family(
    fam: WitnessFamily, membership: Iterable[int] | None = None
) -> FamilyCheck:
    """Check every claimed relation, the distinct count, and (optionally)
    membership of each core value in a computed sumset."""
    broken = []
    for cur, nxt in zip(fam.elements, fam.elements[1:]):
        if cur.relation_to_next == LESS and not cur.value < nxt.value:
            broken.append(f"{cur.label} < {nxt.label}")
        elif cur.relation_to_next == EQUAL and cur.value != nxt.value:
            broken.append(f"{cur.label} = {nxt.label}")
    missing: tuple[str, ...] = ()
    if membership is not None:
        allowed = set(membership)
        missing = tuple(
            e.label for e in fam.elements if e.core and e.value not in allowed
        )
    return FamilyCheck(
        name=fam.name,
        chain_ok=not broken,
        broken_links=tuple(broken),
        distinct=fam.distinct_core(),
        expected_distinct=fam.expected_distinct,
        missing_members=missing,
    )


def combined_census(a: FiniteIntSet, h: int) -> tuple[int, int]:
    """Distinct count of s, -s and t values together with the certified
    total 2(hk - h^2) + C(h+1,2) + 1, or C(h,2) in place of C(h+1,2) when
    0 is in A.  Returns (actual, expected)."""
    zero = a.elements[0] == 0
    s_vals = s_family(a, h).core_values()
    t_vals = t_family(a, h, zero_in_a=zero).core_values()
    union = s_vals | {-v for v in s_vals} | t_vals
    tail = comb(h, 2) if zero else comb(h + 1, 2)
    return len(union), 2 * (h * a.k - h * h) + tail + 1


def superincreasing_census(a: FiniteIntSet, h: int) -> tuple[int, int | None]:
    """Distinct count over all families including the superincreasing
    sub-families.  The certified total 2hk - h^2 + h - 4 applies only for
    h >= 5 and k >= 6; outside that range the count is reported with no
    claimed value."""
    fam = t_family(a, h, superincreasing=True)
    union = s_family(a, h).core_values()
    union |= {-v for v in union}
    union |= fam.core_values()
    for sub in fam.subfamilies:
        union |= sub.core_values()
    claimed = None
    if h >= 5 and a.k >= 6:
        claimed = 2 * h * a.k - h * h + h - 4
    return len(union), claimed


class FamilyName(str, Enum):
    """Named extremal families attaining the lower bounds with equality."""

    ODD_AP = "OddAP"                # d * {1, 3, ..., 2k-1}
    INTERVAL_1K = "Interval1K"      # d * [1, k]
    INTERVAL_0K = "Interval0K"      # d * [0, k-1]
    SPECIAL_0124 = "Special0124"    # d * {0, 1, 2, 4}
    SUM_CLOSED_3 = "SumClosed3"     # {a0, a1, a0+a1}
    SUM_CLOSED_4 = "SumClosed4"     # {0, a1, a2, a1+a2}
    PAIR = "Pair"                   # {a0, a1}, the k=2 exceptional case
    ZERO_PAIR = "ZeroPair"          # {0, a}, the k=2 exceptional case
    ZERO_TRIPLE = "ZeroTriple"      # {0, a1, a2}, the k=3 exceptional case


def gen_family(
    name: FamilyName | str,
    k: int | None = None,
    d: int = 1,
    params: Sequence[int] = (),
) -> FiniteIntSet:
    """Instantiate a named extremal family.

    ``d`` dilates every family; ``params`` carries the free elements of the
    small-k exceptional families (see FamilyName comments).
    """
    name = FamilyName(name)
    if d < 1:
        raise InvalidFamily(f"dilation factor must be positive, got d={d}")
    params = tuple(params)

    def fixed_k(expected: int) -> None:
        if k is not None and k != expected:
            raise InvalidFamily(f"{name.value} has k={expected}, got k={k}")

    def free_params(n: int, *, positive: bool = True) -> tuple[int, ...]:
        if len(params) != n:
            raise InvalidFamily(
                f"{name.value} needs {n} parameter(s), got {params!r}"
            )
        if positive and any(p <= 0 for p in params):
            raise InvalidFamily(f"{name.value} parameters must be positive")
        if any(q <= p for p, q in zip(params, params[1:])):
            raise InvalidFamily(f"{name.value} parameters must increase")
        return params

    if name is FamilyName.ODD_AP:
        if k is None or k < 2:
            raise InvalidFamily(f"{name.value} needs k >= 2, got k={k}")
        return make_set([d * (2 * i + 1) for i in range(k)])
    if name is FamilyName.INTERVAL_1K:
        if k is None or k < 3:
            raise InvalidFamily(f"{name.value} needs k >= 3, got k={k}")
        return make_set([d * i for i in range(1, k + 1)])
    if name is FamilyName.INTERVAL_0K:
        if k is None or k < 2:
            raise InvalidFamily(f"{name.value} needs k >= 2, got k={k}")
        return make_set([d * i for i in range(k)])
    if name is FamilyName.SPECIAL_0124:
        fixed_k(4)
        return make_set([0, d, 2 * d, 4 * d])
    if name is FamilyName.SUM_CLOSED_3:
        fixed_k(3)
        a0, a1 = free_params(2)
        return make_set([d * a0, d * a1, d * (a0 + a1)])
    if name is FamilyName.SUM_CLOSED_4:
        fixed_k(4)
        a1, a2 = free_params(2)
        return make_set([0, d * a1, d * a2, d * (a1 + a2)])
    if name is FamilyName.PAIR:
        fixed_k(2)
        a0, a1 = free_params(2)
        return make_set([d * a0, d * a1])
    if name is FamilyName.ZERO_PAIR:
        fixed_k(2)
        (a1,) = free_params(1)
        return make_set([0, d * a1])
    fixed_k(3)
    a1, a2 = free_params(2)
    return make_set([0, d * a1, d * a2])


def is_superincreasing(a: FiniteIntSet) -> bool:
    """a_0 > 0 and each element exceeds the sum of all earlier elements."""
    if a.elements[0] <= 0:
        return False
    running = a.elements[0]
    for x in a.elements[1:]:
        if x <= running:
            return False
        running += x
    return True


def gen_superincreasing(
    k: int,
    base: int = 1,
    ratio_schedule: int | Sequence[int] | None = None,
) -> FiniteIntSet:
    """Build a superincreasing set of size k starting at ``base``.

    ``ratio_schedule`` may be None (tightest growth: each element is one
    more than the sum so far), a constant integer ratio, or a sequence of
    k-1 per-step ratios.  A schedule that breaks the superincreasing
    condition raises InvalidFamily.
    """
    if k < 1:
        raise InvalidFamily(f"need k >= 1, got k={k}")
    if base < 1:
        raise InvalidFamily(f"need base > 0, got {base}")
    elements = [base]
    if ratio_schedule is None:
        steps: list[int] | None = None
    elif isinstance(ratio_schedule, int):
        steps = [ratio_schedule] * (k - 1)
    else:
        steps = list(ratio_schedule)
        if len(steps) != k - 1:
            raise InvalidFamily(
                f"schedule needs {k - 1} steps, got {len(steps)}"
            )
    total = base
    for i in range(1, k):
        nxt = total + 1 if steps is None else steps[i - 1] * elements[-1]
        if nxt <= total:
            raise InvalidFamily(
                f"schedule is not superincreasing at index {i}: "
                f"{nxt} <= {total}"
            )
        elements.append(nxt)
        total += nxt
    return FiniteIntSet(tuple(elements))
