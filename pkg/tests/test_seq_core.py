from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from temporal_tgen import oracle
from temporal_tgen.seq_core import (
    DegreeTuple,
    InvalidParameter,
    NotRealizable,
    OddDegreeSum,
    constants,
    is_realizable,
    main_path_eligible,
    parse_degree_lines,
    scalars,
    validate,
)


@pytest.mark.parametrize("d,T,expected", [
    ((2, 2, 2), 2, (6, 6, 2, Fraction(1), Fraction(1, 2))),
    ((0, 0), 1, (0, 0, 0, Fraction(0), Fraction(0))),
    ((3, 1, 1, 1), 5, (6, 6, 3, Fraction(1), Fraction(1, 5))),
])
def test_scalars(d, T, expected):
    s = scalars(d, T)
    assert (s.M, s.M2, s.Delta, s.B_L, s.B_D) == expected


@pytest.mark.parametrize("eps,expected", [(1, (2, 2, 5, 4)), (2, (1, 1, 4, 3)), (0.5, (3, 3, 7, 6))])
def test_constants_with_epsilon(eps, expected):
    c = constants(eps, 10)
    assert (c.lam, c.kappa, c.mu, c.eta) == expected
    assert c.mu > c.kappa >= 1 and c.mu > c.lam >= 1


def test_constants_default_to_delta():
    c = constants(None, 7)
    assert c.lam == c.kappa == c.mu == 7


def test_constants_rejects_nonpositive_epsilon():
    with pytest.raises(InvalidParameter):
        constants(0, 3)


@pytest.mark.parametrize("D,expected", [
    (DegreeTuple((2, 2, 2), 2), False),
    (DegreeTuple.regular(50, 2, 3), True),
    (DegreeTuple((2, 2), 1), False),
    (DegreeTuple.regular(50, 2, 1), False),
    (DegreeTuple.regular(60, 3, 4), True),
])
def test_main_path_eligible(D, expected):
    assert main_path_eligible(D) is expected


@pytest.mark.parametrize("D,expected", [
    (DegreeTuple((2, 2), 1), False),
    (DegreeTuple((2, 2), 2), True),
    (DegreeTuple((1, 1, 1), 5), False),
    (DegreeTuple((4, 0), 10), False),
    (DegreeTuple((), 3), True),
])
def test_is_realizable_examples(D, expected):
    assert is_realizable(D) is expected


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=5), st.integers(1, 3))
def test_is_realizable_matches_enumeration(d, T):
    D = DegreeTuple(tuple(d), T)
    if sum(d) > 8:
        return
    assert is_realizable(D) == (len(oracle.enumerate_simple(D)) > 0)


def test_is_realizable_large_lifetime_no_overflow():
    assert is_realizable(DegreeTuple((10**6,) * 3 + (2,), 10**12))


def test_validate_typed_errors():
    with pytest.raises(OddDegreeSum):
        validate(DegreeTuple((1, 2), 3))
    with pytest.raises(NotRealizable):
        validate(DegreeTuple((2, 2), 1))
    validate(DegreeTuple((1, 1), 1))


def test_degree_tuple_validation():
    with pytest.raises(InvalidParameter):
        DegreeTuple((1, -1), 2)
    with pytest.raises(InvalidParameter):
        DegreeTuple((1, 1), 0)
    assert DegreeTuple.regular(3, 2, 4).degrees == (2, 2, 2)


def test_parse_degree_lines():
    assert parse_degree_lines(["# header", "3", " 2 # trailing", "", "1"]) == [3, 2, 1]
    with pytest.raises(InvalidParameter):
        parse_degree_lines(["x"])
    with pytest.raises(InvalidParameter):
        parse_degree_lines(["-2"])
