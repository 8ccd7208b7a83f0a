"""Exhaustive scans over gcd-normalized integer sets.

Two modes:

* ``verify`` re-proves a theorem by brute force on a bounded space: the
  bound must hold for every set, and for inverse theorems equality must
  hold exactly on the predicted extremal family.  Any failure aborts with
  the offending set -- it can only be an implementation bug.
* ``conjecture`` hunts for counterexamples: bound violations and equality
  sets outside the conjectured extremal family are recorded, never raised.
  Every would-be counterexample is recomputed with the naive oracle first;
  nothing enters a report unless both engines agree on its cardinality.

Scanning only gcd-normalized sets loses nothing: sumsets commute with
dilation, so every dilation class is represented by its d = 1 member.
Scans are partitioned by the first elements of each set and the partition
results are merged in enumeration order, so reports are identical at every
parallelism level.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, gcd
from typing import Iterator, Sequence

from .core import FiniteIntSet, SetFamily, canonical_json
from .errors import EmptySpace, EngineMismatch, NotApplicable, TheoremViolation
from .inverse import classify_extremal, inverse_coverage
from .kernel import sumset_layered, sumset_naive
from .bounds import FORMULAS
from .witness import FamilyName


@dataclass(frozen=True)
class ScanMode:
    action: str   # "verify" | "conjecture"
    target: str   # formula / theorem / conjecture id

    def __str__(self) -> str:
        prefix = "verify" if self.action == "verify" else "conj"
        return f"{prefix}:{self.target}"


def parse_mode(text: str) -> ScanMode:
    action, _, target = text.partition(":")
    if action == "verify" and target in _VERIFY_TARGETS:
        return ScanMode("verify", target)
    if action in ("conj", "conjecture") and target in _CONJECTURE_TARGETS:
        return ScanMode("conjecture", target)
    raise NotApplicable(f"unknown scan mode {text!r}")


# direct-bound verify targets share the bound formula table
_DIRECT_VERIFY = {
    "T2_1": SetFamily.POSITIVE,
    "T3_1": SetFamily.CONTAINS_ZERO,
    "TA_Nathanson": SetFamily.ANY,
}

# inverse verify targets: family, forced fold ("k" meaning h = k), k range
_INVERSE_VERIFY: dict[str, tuple[SetFamily, object, int, int | None]] = {
    "T2_2": (SetFamily.POSITIVE, 2, 2, None),
    "T2_3": (SetFamily.POSITIVE, "k", 3, None),
    "T2_4": (SetFamily.POSITIVE, 3, 4, None),
    "T3_2": (SetFamily.CONTAINS_ZERO, 2, 2, None),
    "T3_3": (SetFamily.CONTAINS_ZERO, "k", 3, None),
    "T3_4": (SetFamily.CONTAINS_ZERO, 3, 5, None),
    "T3_5": (SetFamily.CONTAINS_ZERO, 3, 4, 4),
}

# conjecture targets: direct-bound id, family, conjectured extremal family.
# The inverse ids imply the direct bound check and vice versa: equality is
# only meaningful against the conjectured minimum, so both run per pass.
_CONJECTURES = {
    "C2_1": ("C2_1", SetFamily.POSITIVE, FamilyName.ODD_AP),
    "C2_2": ("C2_1", SetFamily.POSITIVE, FamilyName.ODD_AP),
    "C3_1": ("C3_1", SetFamily.CONTAINS_ZERO, FamilyName.INTERVAL_0K),
    "C3_2": ("C3_1", SetFamily.CONTAINS_ZERO, FamilyName.INTERVAL_0K),
}

_VERIFY_TARGETS = set(_DIRECT_VERIFY) | set(_INVERSE_VERIFY)
_CONJECTURE_TARGETS = set(_CONJECTURES)


@dataclass(frozen=True)
class ScanConfig:
    k: int
    max_element: int
    family: SetFamily
    mode: ScanMode
    h_values: tuple[int, ...] | None = None   # None: derived from the mode
    jobs: int = 1
    output: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "mode": str(self.mode),
            "k": self.k,
            "h": list(resolve_h_values(self)),
            "family": self.family.value,
            "max_element": self.max_element,
            "jobs": self.jobs,
            "output": self.output,
        }


@dataclass(frozen=True)
class ScanReport:
    config: ScanConfig
    sets_scanned: int
    equalities: tuple[dict, ...]
    classification_failures: tuple[dict, ...]
    conjecture_counterexamples: tuple[dict, ...]
    wall_time: float = field(compare=False)

    @property
    def clean(self) -> bool:
        return not self.classification_failures and not self.conjecture_counterexamples

    def to_json_dict(self) -> dict:
        return {
            "config": self.config.to_json_dict(),
            "sets_scanned": self.sets_scanned,
            "equalities": list(self.equalities),
            "classification_failures": list(self.classification_failures),
            "conjecture_counterexamples": list(self.conjecture_counterexamples),
            "wall_time": self.wall_time,
        }

    def to_json(self) -> str:
        return canonical_json(self.to_json_dict())

    def fingerprint(self) -> str:
        """Report content excluding wall time and execution-only settings
        (job count, output path); equal across parallelism levels."""
        d = self.to_json_dict()
        del d["wall_time"]
        del d["config"]["jobs"]
        del d["config"]["output"]
        return canonical_json(d)

    def csv_rows(self) -> list[list[object]]:
        rows: list[list[object]] = []
        for rec in self.equalities:
            rows.append(
                ["equality", rec["set"], rec["h"], rec["cardinality"], rec["bound"], rec.get("family") or ""]
            )
        for rec in self.classification_failures:
            rows.append(
                ["classification_failure", rec["set"], rec["h"], rec["cardinality"], rec["bound"], rec.get("expected_family") or ""]
            )
        for rec in self.conjecture_counterexamples:
            rows.append(
                ["counterexample", rec["set"], rec["h"], rec["cardinality"], rec["bound"], ""]
            )
        return rows


CSV_HEADER = ["type", "set", "h", "cardinality", "bound", "family"]


def _gcd_is_one(values: Sequence[int]) -> bool:
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            return True
    return g == 1


def enumerate_normalized_sets(
    k: int, max_element: int, family: SetFamily
) -> Iterator[FiniteIntSet]:
    """All normalized k-sets in lexicographic order.

    Positive family: k-subsets of [1, max_element] with gcd 1.  Zero
    family: {0} plus a (k-1)-subset of [1, max_element] whose gcd is 1.
    """
    nonzero_size, base = _space_shape(k, max_element, family)
    for tail in combinations(range(1, max_element + 1), nonzero_size):
        if nonzero_size == 0 or _gcd_is_one(tail):
            yield FiniteIntSet(base + tail)


def _space_shape(
    k: int, max_element: int, family: SetFamily
) -> tuple[int, tuple[int, ...]]:
    if k < 1:
        raise EmptySpace(f"need k >= 1, got k={k}")
    if family is SetFamily.CONTAINS_ZERO:
        nonzero_size, base = k - 1, (0,)
    elif family is SetFamily.POSITIVE:
        nonzero_size, base = k, ()
    else:
        raise NotApplicable("scans enumerate positive or contains-zero spaces")
    if max_element < nonzero_size:
        raise EmptySpace(
            f"no {k}-sets in [{'0' if base else '1'}, {max_element}]"
        )
    return nonzero_size, base


def _mobius_upto(n: int) -> list[int]:
    mu = [1] * (n + 1)
    primes = []
    is_comp = [False] * (n + 1)
    for i in range(2, n + 1):
        if not is_comp[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > n:
                break
            is_comp[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return mu


def count_normalized_sets(k: int, max_element: int, family: SetFamily) -> int:
    """Closed-form size of the scan space, via Moebius inversion over the
    gcd; used as the partition-completeness cross-check."""
    nonzero_size, _ = _space_shape(k, max_element, family)
    if nonzero_size == 0:
        return 1
    mu = _mobius_upto(max_element)
    return sum(
        mu[d] * comb(max_element // d, nonzero_size)
        for d in range(1, max_element + 1)
        if mu[d] != 0
    )


def resolve_h_values(config: ScanConfig) -> tuple[int, ...]:
    """The folds a scan will run, either explicit or the mode's default."""
    k = config.k
    mode = config.mode
    if mode.action == "verify" and mode.target in _INVERSE_VERIFY:
        forced = _INVERSE_VERIFY[mode.target][1]
        forced_h = k if forced == "k" else int(forced)  # type: ignore[arg-type]
        if config.h_values is not None and tuple(config.h_values) != (forced_h,):
            raise NotApplicable(
                f"{mode.target} fixes h = {forced_h}, got {config.h_values}"
            )
        return (forced_h,)
    if config.h_values is not None:
        return tuple(config.h_values)
    if mode.action == "conjecture":
        return tuple(range(3, k))
    return tuple(range(1, k + 1))


def _validate(config: ScanConfig) -> tuple[int, ...]:
    mode = config.mode
    k = config.k
    _space_shape(k, config.max_element, config.family)
    if mode.action == "verify":
        if mode.target in _DIRECT_VERIFY:
            wanted = _DIRECT_VERIFY[mode.target]
            if wanted is not SetFamily.ANY and wanted is not config.family:
                raise NotApplicable(
                    f"{mode.target} applies to {wanted.value} sets"
                )
            h_values = resolve_h_values(config)
            formula = FORMULAS[mode.target]
            bad = [h for h in h_values if not formula.validity(k, h)]
        else:
            wanted, _, k_min, k_max = _INVERSE_VERIFY[mode.target]
            if wanted is not config.family:
                raise NotApplicable(
                    f"{mode.target} applies to {wanted.value} sets"
                )
            if k < k_min or (k_max is not None and k > k_max):
                raise NotApplicable(f"{mode.target} needs k >= {k_min}")
            h_values = resolve_h_values(config)
            bad = [h for h in h_values if not 1 <= h <= k]
    else:
        direct_id, wanted, _ = _CONJECTURES[mode.target]
        if wanted is not config.family:
            raise NotApplicable(f"{mode.target} applies to {wanted.value} sets")
        h_values = resolve_h_values(config)
        formula = FORMULAS[direct_id]
        bad = [h for h in h_values if not formula.validity(k, h)]
    if bad or not h_values:
        raise NotApplicable(
            f"fold(s) {bad or h_values} invalid for {mode} at k={k}"
        )
    return h_values


def _family_matches(a: FiniteIntSet, name: FamilyName) -> bool:
    e = a.elements
    if name is FamilyName.ODD_AP:
        return all(x == e[0] * (2 * i + 1) for i, x in enumerate(e))
    if name is FamilyName.INTERVAL_0K:
        return e[0] == 0 and a.k >= 2 and all(x == e[1] * i for i, x in enumerate(e))
    raise NotApplicable(f"no structural matcher for {name}")


def _partitions(config: ScanConfig) -> list[tuple[int, ...]]:
    """Prefix blocks over the first (up to two) nonzero elements."""
    nonzero_size, _ = _space_shape(config.k, config.max_element, config.family)
    plen = min(2, nonzero_size)
    if plen == 0:
        return [()]
    room = nonzero_size - plen
    return [
        p
        for p in combinations(range(1, config.max_element + 1), plen)
        if config.max_element - p[-1] >= room
    ]


def _complete_prefix(
    config: ScanConfig, prefix: tuple[int, ...]
) -> Iterator[FiniteIntSet]:
    nonzero_size, base = _space_shape(config.k, config.max_element, config.family)
    if nonzero_size == 0:
        yield FiniteIntSet(base)
        return
    rest = nonzero_size - len(prefix)
    for tail in combinations(range(prefix[-1] + 1, config.max_element + 1), rest):
        full = prefix + tail
        if _gcd_is_one(full):
            yield FiniteIntSet(base + full)


def _scan_partition(args: tuple[ScanConfig, tuple[int, ...], tuple[int, ...]]) -> dict:
    """Worker: scan one prefix block. Returns plain lists for cheap merging."""
    config, h_values, prefix = args
    mode = config.mode
    out = {
        "scanned": 0,
        "equalities": [],
        "failures": [],
        "counterexamples": [],
    }
    try:
        if mode.action == "verify" and mode.target in _INVERSE_VERIFY:
            _verify_inverse_partition(config, h_values, prefix, out)
        elif mode.action == "verify":
            _verify_direct_partition(config, h_values, prefix, out)
        else:
            _conjecture_partition(config, h_values, prefix, out)
    except (TheoremViolation, EngineMismatch) as exc:
        raise type(exc)(f"[partition {prefix}] {exc}") from None
    return out


def _verify_direct_partition(config, h_values, prefix, out):
    formula = FORMULAS[config.mode.target]
    for a in _complete_prefix(config, prefix):
        out["scanned"] += 1
        for h in h_values:
            card = sumset_layered(a, h, formula.kind).cardinality
            bound = formula.value(a.k, h)
            if card < bound:
                naive = sumset_naive(a, h, formula.kind).cardinality
                if naive != card:
                    raise EngineMismatch(
                        f"engines disagree on {a}, h={h}: {card} vs {naive}"
                    )
                raise TheoremViolation(
                    f"{formula.id} violated on {a}, h={h}: {card} < {bound}"
                )
            if card == bound:
                out["equalities"].append(
                    {"set": a.canonical(), "h": h, "cardinality": card, "bound": bound}
                )


def _verify_inverse_partition(config, h_values, prefix, out):
    (h,) = h_values
    target = config.mode.target
    for a in _complete_prefix(config, prefix):
        out["scanned"] += 1
        cls = classify_extremal(a, h)
        if cls.theorem != target:
            raise NotApplicable(
                f"scan target {target} but ({a.k}, {h}) is covered by {cls.theorem}"
            )
        if cls.cardinality < cls.bound:
            naive = sumset_naive(a, h).cardinality
            if naive != cls.cardinality:
                raise EngineMismatch(
                    f"engines disagree on {a}, h={h}: {cls.cardinality} vs {naive}"
                )
            raise TheoremViolation(
                f"{target} bound violated on {a}: {cls.cardinality} < {cls.bound}"
            )
        if cls.equality != cls.matched:
            naive = sumset_naive(a, h).cardinality
            if naive != cls.cardinality:
                raise EngineMismatch(
                    f"engines disagree on {a}, h={h}: {cls.cardinality} vs {naive}"
                )
            raise TheoremViolation(
                f"{target} classification failed on {a}: equality={cls.equality} "
                f"but family match={cls.family!r} (cardinality {cls.cardinality}, "
                f"bound {cls.bound}, both engines agree)"
            )
        if cls.equality:
            out["equalities"].append(
                {
                    "set": a.canonical(),
                    "h": h,
                    "cardinality": cls.cardinality,
                    "bound": cls.bound,
                    "family": cls.family,
                }
            )


def _conjecture_partition(config, h_values, prefix, out):
    direct_id, _, inverse_family = _CONJECTURES[config.mode.target]
    formula = FORMULAS[direct_id]
    for a in _complete_prefix(config, prefix):
        out["scanned"] += 1
        for h in h_values:
            card = sumset_layered(a, h).cardinality
            bound = formula.value(a.k, h)
            if card < bound:
                naive = sumset_naive(a, h).cardinality
                if naive != card:
                    raise EngineMismatch(
                        f"engines disagree on {a}, h={h}: {card} vs {naive}"
                    )
                out["counterexamples"].append(
                    {
                        "set": a.canonical(),
                        "h": h,
                        "cardinality": card,
                        "bound": bound,
                        "naive_cardinality": naive,
                        "conjecture": direct_id,
                    }
                )
                continue
            if card == bound:
                matched = _family_matches(a, inverse_family)
                naive = sumset_naive(a, h).cardinality
                if naive != card:
                    raise EngineMismatch(
                        f"engines disagree on {a}, h={h}: {card} vs {naive}"
                    )
                out["equalities"].append(
                    {
                        "set": a.canonical(),
                        "h": h,
                        "cardinality": card,
                        "bound": bound,
                        "family": inverse_family.value if matched else None,
                    }
                )
                if not matched:
                    out["failures"].append(
                        {
                            "set": a.canonical(),
                            "h": h,
                            "cardinality": card,
                            "bound": bound,
                            "naive_cardinality": naive,
                            "expected_family": inverse_family.value,
                        }
                    )


def scan(config: ScanConfig) -> ScanReport:
    """Run a full scan; see the module docstring for mode semantics."""
    start = time.perf_counter()
    h_values = _validate(config)
    parts = _partitions(config)
    args = [(config, h_values, p) for p in parts]
    jobs = max(1, config.jobs)
    if jobs == 1 or len(parts) <= 1:
        partials = [_scan_partition(a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(parts))) as pool:
            partials = list(pool.map(_scan_partition, args, chunksize=1))

    scanned = sum(p["scanned"] for p in partials)
    expected = count_normalized_sets(config.k, config.max_element, config.family)
    if scanned != expected:
        raise TheoremViolation(
            f"partition completeness broken: scanned {scanned}, closed form "
            f"{expected}"
        )
    merged = {"equalities": [], "failures": [], "counterexamples": []}
    for p in partials:  # partition order == enumeration order
        merged["equalities"].extend(p["equalities"])
        merged["failures"].extend(p["failures"])
        merged["counterexamples"].extend(p["counterexamples"])
    return ScanReport(
        config=config,
        sets_scanned=scanned,
        equalities=tuple(merged["equalities"]),
        classification_failures=tuple(merged["failures"]),
        conjecture_counterexamples=tuple(merged["counterexamples"]),
        wall_time=time.perf_counter() - start,
    )
