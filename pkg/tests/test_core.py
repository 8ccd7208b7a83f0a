import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sumsets.core import (
    FiniteIntSet,
    SetFamily,
    canonical_json,
    dilate,
    family_of,
    make_set,
    normalize_dilation,
    parse_set_literal,
)
from sumsets.errors import (
    DomainViolation,
    InvalidDilation,
    InvalidSet,
    InvalidSetLiteral,
    NotNormalizable,
)

int_sets = st.sets(st.integers(-200, 200), min_size=1, max_size=8)


def test_make_set_sorts():
    assert make_set([5, 1, 3]).elements == (1, 3, 5)


def test_make_set_singleton():
    s = make_set([2])
    assert s.elements == (2,) and s.k == 1


def test_make_set_flags_duplicates():
    s = make_set([1, 1, 3])
    assert s.elements == (1, 3)
    assert s.had_duplicates
    assert not make_set([1, 3]).had_duplicates


def test_make_set_rejects_empty():
    with pytest.raises(InvalidSet):
        make_set([])


def test_make_set_rejects_non_integers():
    with pytest.raises(InvalidSet):
        make_set([1, 2.5])


def test_finite_int_set_rejects_unsorted():
    with pytest.raises(InvalidSet):
        FiniteIntSet((3, 1))


def test_dilate_examples():
    assert dilate(make_set([1, 3, 5]), 2).elements == (2, 6, 10)
    assert dilate(make_set([1, 2]), -1).elements == (-2, -1)
    assert dilate(make_set([1, 3]), 1).elements == (1, 3)


def test_dilate_by_zero_rejected():
    with pytest.raises(InvalidDilation):
        dilate(make_set([1, 3]), 0)


def test_normalize_dilation_examples():
    assert normalize_dilation(make_set([2, 6, 10])) == (2, make_set([1, 3, 5]))
    assert normalize_dilation(make_set([0, 3, 6, 9])) == (3, make_set([0, 1, 2, 3]))
    assert normalize_dilation(make_set([1, 4, 9])) == (1, make_set([1, 4, 9]))


def test_normalize_dilation_rejects_negative_and_zero_only():
    with pytest.raises(NotNormalizable):
        normalize_dilation(make_set([-2, 4]))
    with pytest.raises(NotNormalizable):
        normalize_dilation(make_set([0]))


@given(int_sets, st.integers(-10, 10).filter(lambda a: a != 0))
def test_dilation_preserves_cardinality(raw, alpha):
    a = make_set(raw)
    assert dilate(a, alpha).k == a.k


@given(
    int_sets,
    st.integers(-6, 6).filter(lambda a: a != 0),
    st.integers(-6, 6).filter(lambda a: a != 0),
)
def test_dilation_composes(raw, alpha, beta):
    a = make_set(raw)
    assert dilate(dilate(a, alpha), beta) == dilate(a, alpha * beta)


@given(st.sets(st.integers(0, 300), min_size=1, max_size=8).filter(lambda s: any(s)))
def test_normalize_dilation_idempotent(raw):
    d, primitive = normalize_dilation(make_set(raw))
    assert dilate(primitive, d) == make_set(raw)
    d2, again = normalize_dilation(primitive)
    assert d2 == 1 and again == primitive


def test_canonical_serialization_round_trip():
    a = make_set([7, -2, 3])
    assert a.canonical() == "-2,3,7"
    assert parse_set_literal(a.canonical()) == a


@pytest.mark.parametrize("bad", ["", "1,,3", "1, 3", "a,b", " 1,3", "1,3 "])
def test_parse_set_literal_rejects_malformed(bad):
    with pytest.raises(InvalidSetLiteral):
        parse_set_literal(bad)


def test_family_of():
    assert family_of(make_set([1, 4])) is SetFamily.POSITIVE
    assert family_of(make_set([0, 4])) is SetFamily.CONTAINS_ZERO
    with pytest.raises(DomainViolation):
        family_of(make_set([-1, 4]))


def test_canonical_json_round_trips_byte_identical():
    payload = {"b": [1, 2, {"x": None}], "a": "1,3,5", "t": 0.125}
    text = canonical_json(payload)
    assert canonical_json(json.loads(text)) == text
