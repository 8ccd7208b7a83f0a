"""Structure detection and classification of bound-equality sets.

The proven inverse results cover h = 2, h = 3 and h = k.  For each covered
(h, k, family) combination the classifier knows which extremal family is
predicted, tests structural membership, recomputes the sumset cardinality
(never trusting a caller-supplied number), and reports whether observation
and prediction agree.  Outside the proven coverage it returns a first-class
"not covered" result so scan pipelines can route those folds to the
conjecture machinery instead of crashing.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteIntSet, SetFamily, SumsetKind, family_of
from .errors import DegenerateSet, InvalidFold
from .kernel import sumset_layered
from .witness import FamilyName, gen_family
from .bounds import bound_value


def is_arithmetic_progression(a: FiniteIntSet) -> int | None:
    """The common difference d > 0 if A is an AP, else None.

    Size-1 sets are vacuously progressions with no defined difference and
    raise DegenerateSet so callers cannot silently treat them as matched.
    """
    if a.k < 2:
        raise DegenerateSet("a singleton has no common difference")
    d = a.elements[1] - a.elements[0]
    for x, y in zip(a.elements, a.elements[1:]):
        if y - x != d:
            return None
    return d


@dataclass(frozen=True)
class ExtremalClassification:
    """Verdict of one set against the inverse theory for its (h, k)."""

    set: FiniteIntSet
    h: int
    covered: bool
    theorem: str | None
    bound: int | None
    cardinality: int
    equality: bool
    family: str | None          # predicted family name when A matches it
    params: dict | None         # regeneration parameters for gen_family
    consistent: bool            # equality holds AND the set matches

    @property
    def matched(self) -> bool:
        return self.family is not None

    def to_json_dict(self) -> dict:
        return {
            "set": self.set.canonical(),
            "h": self.h,
            "cardinality": self.cardinality,
            "bound": self.bound,
            "equality": self.equality,
            "family": self.family,
            "params": self.params,
            "theorem": self.theorem,
        }


def regenerate(classification: ExtremalClassification) -> FiniteIntSet:
    """Rebuild the matched family instance from its stored parameters."""
    if classification.family is None:
        raise DegenerateSet("classification matched no family")
    p = dict(classification.params or {})
    return gen_family(
        classification.family,
        k=p.get("k"),
        d=p.get("d", 1),
        params=tuple(p.get("params", ())),
    )


def _match_positive(a: FiniteIntSet, h: int) -> tuple[str, str | None, dict | None]:
    """Return (theorem, family, params) for a positive set; family None if
    A does not lie in the predicted extremal family."""
    k = a.k
    e = a.elements
    if h == 2:
        if k == 2:
            return "T2_2", FamilyName.PAIR.value, {"k": 2, "params": list(e)}
        d = e[0]
        if all(x == d * (2 * i + 1) for i, x in enumerate(e)):
            return "T2_2", FamilyName.ODD_AP.value, {"k": k, "d": d}
        return "T2_2", None, None
    if h == k:
        if k == 3:
            if e[2] == e[0] + e[1]:
                return (
                    "T2_3",
                    FamilyName.SUM_CLOSED_3.value,
                    {"k": 3, "params": [e[0], e[1]]},
                )
            return "T2_3", None, None
        d = e[0]
        if all(x == d * (i + 1) for i, x in enumerate(e)):
            return "T2_3", FamilyName.INTERVAL_1K.value, {"k": k, "d": d}
        return "T2_3", None, None
    # h == 3, k >= 4 (k == 3 is the h == k case above)
    d = e[0]
    if all(x == d * (2 * i + 1) for i, x in enumerate(e)):
        return "T2_4", FamilyName.ODD_AP.value, {"k": k, "d": d}
    return "T2_4", None, None


def _match_zero(a: FiniteIntSet, h: int) -> tuple[str, str | None, dict | None]:
    k = a.k
    e = a.elements
    if h == 2:
        if k == 2:
            return "T3_2", FamilyName.ZERO_PAIR.value, {"k": 2, "params": [e[1]]}
        d = e[1]
        if all(x == d * i for i, x in enumerate(e)):
            return "T3_2", FamilyName.INTERVAL_0K.value, {"k": k, "d": d}
        return "T3_2", None, None
    if h == k:
        if k == 3:
            return (
                "T3_3",
                FamilyName.ZERO_TRIPLE.value,
                {"k": 3, "params": [e[1], e[2]]},
            )
        if k == 4:
            if e[3] == e[1] + e[2]:
                return (
                    "T3_3",
                    FamilyName.SUM_CLOSED_4.value,
                    {"k": 4, "params": [e[1], e[2]]},
                )
            return "T3_3", None, None
        d = e[1]
        if all(x == d * i for i, x in enumerate(e)):
            return "T3_3", FamilyName.INTERVAL_0K.value, {"k": k, "d": d}
        return "T3_3", None, None
    if k == 4:
        d = e[1]
        if e[2] == 2 * d and e[3] == 4 * d:
            return "T3_5", FamilyName.SPECIAL_0124.value, {"k": 4, "d": d}
        return "T3_5", None, None
    d = e[1]
    if all(x == d * i for i, x in enumerate(e)):
        return "T3_4", FamilyName.INTERVAL_0K.value, {"k": k, "d": d}
    return "T3_4", None, None


_THEOREM_BOUND = {
    "T2_2": lambda k: bound_value("T2_1", k, 2),
    "T2_3": lambda k: bound_value("T2_1", k, k),
    "T2_4": lambda k: bound_value("T2_4", k, 3),
    "T3_2": lambda k: bound_value("T3_1", k, 2),
    "T3_3": lambda k: bound_value("T3_1", k, k),
    "T3_4": lambda k: bound_value("T3_4", k, 3),
    "T3_5": lambda k: bound_value("T3_5", k, 3),
}


def inverse_coverage(family: SetFamily, k: int, h: int) -> str | None:
    """Which proven inverse theorem covers (family, k, h), if any."""
    if h == 2 and k >= 2:
        return "T2_2" if family is SetFamily.POSITIVE else "T3_2"
    if h == k and k >= 3:
        return "T2_3" if family is SetFamily.POSITIVE else "T3_3"
    if h == 3:
        if family is SetFamily.POSITIVE and k >= 4:
            return "T2_4"
        if family is SetFamily.CONTAINS_ZERO and k == 4:
            return "T3_5"
        if family is SetFamily.CONTAINS_ZERO and k >= 5:
            return "T3_4"
    return None


def classify_extremal(a: FiniteIntSet, h: int) -> ExtremalClassification:
    """Classify a set against the inverse theorem for its (h, k).

    The sumset is recomputed here rather than trusted from callers, so a
    scan pipeline cannot pair a stale cardinality with the wrong set.
    """
    family = family_of(a)
    if not 1 <= h <= a.k:
        raise InvalidFold(f"need 1 <= h <= k={a.k}, got h={h}")
    cardinality = sumset_layered(a, h, SumsetKind.RESTRICTED_SIGNED).cardinality
    theorem = inverse_coverage(family, a.k, h)
    if theorem is None:
        return ExtremalClassification(
            set=a,
            h=h,
            covered=False,
            theorem=None,
            bound=None,
            cardinality=cardinality,
            equality=False,
            family=None,
            params=None,
            consistent=False,
        )
    if family is SetFamily.POSITIVE:
        theorem, matched, params = _match_positive(a, h)
    else:
        theorem, matched, params = _match_zero(a, h)
    bound = _THEOREM_BOUND[theorem](a.k)
    equality = cardinality == bound
    return ExtremalClassification(
        set=a,
        h=h,
        covered=True,
        theorem=theorem,
        bound=bound,
        cardinality=cardinality,
        equality=equality,
        family=matched,
        params=params if matched is not None else None,
        consistent=equality and matched is not None,
    )
