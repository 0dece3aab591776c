import pytest
from hypothesis import given

from orthobranch import partitions as P
from orthobranch.partitions import Family

from .strategies import partitions


@pytest.mark.parametrize("la,want", [((), ()), ((1, 1, 1), (3,)), ((4, 2, 2, 2, 2), (5, 5, 1, 1))])
def test_conjugate_examples(la, want):
    assert P.conjugate(la) == want


def test_family_examples():
    assert P.is_in_family((4, 4, 2, 2), Family.EVEN_ROWS)
    assert not P.is_in_family((3, 2), Family.EVEN_ROWS)
    # (5,4,4,3,2,2)' = (6,6,4,3,1) has odd parts
    assert P.conjugate((5, 4, 4, 3, 2, 2)) == (6, 6, 4, 3, 1)
    assert not P.is_in_family((5, 4, 4, 3, 2, 2), Family.EVEN_COLUMNS)
    assert P.is_in_family((2, 2), Family.BOTH)
    assert not P.is_in_family((2, 2), Family.ALL, max_length=1)


def test_enumerate_family_examples():
    assert P.enumerate_family(Family.EVEN_ROWS, 4, 8) == [(), (2,), (2, 2), (4,)]
    assert P.enumerate_family(Family.BOTH, 2, 8) == [()]
    assert P.enumerate_family(Family.EVEN_COLUMNS, 2, 8) == [(), (1, 1)]


def test_enumerate_family_against_filter():
    for fam in Family:
        got = P.enumerate_family(fam, 7, 3)
        want = sorted(la for w in range(8) for la in P.partitions_of(w, max_length=3)
                      if P.is_in_family(la, fam))
        assert got == want


def test_even_rows_and_columns_are_conjugate():
    rows = set(P.enumerate_family(Family.EVEN_ROWS, 10, 10))
    cols = {P.conjugate(la) for la in P.enumerate_family(Family.EVEN_COLUMNS, 10, 10)}
    assert rows == cols


@pytest.mark.parametrize("d,n,want", [((4, 2, 2, 2, 2), 8, (0, 0, 0, 2, 2, 2, 2, 4)),
                                      ((), 3, (0, 0, 0)), ((2,), 1, (2,))])
def test_reverse_padded(d, n, want):
    assert P.reverse_padded(d, n) == want


def test_reverse_padded_too_long():
    with pytest.raises(ValueError):
        P.reverse_padded((1, 1, 1), 2)


def test_partitions_of_counts():
    assert [sum(1 for _ in P.partitions_of(w)) for w in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_parse():
    assert P.parse("") == ()
    assert P.parse("5,4,4") == (5, 4, 4)


@given(partitions(12))
def test_conjugate_involution(la):
    assert P.conjugate(P.conjugate(la)) == la
    assert sum(P.conjugate(la)) == sum(la)


@given(partitions(12))
def test_reverse_padded_is_weakly_increasing(la):
    r = P.reverse_padded(la, len(la) + 2)
    assert list(r) == sorted(r)
