from collections import Counter

import pytest

from orthobranch import partitions as P
from orthobranch import tableaux as TB
from orthobranch.branching import BranchingQuery, barred_set, delta_range
from orthobranch.flags import FlagContext, flag_sequences_row
from orthobranch.separation import pad_height, reconstruct_n4, separate
from orthobranch.spinor import (EMPTY_COMPONENT, OrthogonalWeight, SpinorElement,
                                enumerate_LRd, sp_component, t_component)

T4 = t_component(4, (1, 3, 4, 5), (1, 2))
T3 = t_component(3, (1, 3, 4), (1, 2))
T2 = t_component(3, (1, 5, 6), (1, 4))
T1 = t_component(2, (1, 2, 3, 5), (1, 2, 3, 4))
T1N = t_component(2, (1, 2, 3, 7), (1, 2, 3, 6))


def test_positive_golden():
    E = SpinorElement(8, (4, 3, 3, 2), (T4, T3, T2, T1, EMPTY_COMPONENT))
    steps = []
    R = separate(E, steps=steps)
    assert R.delta == (4, 4, 2, 2)
    assert R.tail.rows == ((1, 1, 1, 1), (3, 3, 5, 5), (4, 4, 6), (5,))
    assert R.lam == (6, 5, 5, 4, 1, 1, 1, 1)
    assert steps, "trace should record the sliding steps"


def test_negative_golden():
    E = SpinorElement(9, (4, 3, 3, 2, 1), (T4, T3, T2, T1N, sp_component((1, 2, 3, 4, 5))))
    R = separate(E)
    assert R.delta == (6, 4, 2, 2, 2)
    assert R.tail.rows == ((1, 1, 1, 1, 3), (3, 3, 5, 7), (4, 4, 6), (5,))
    assert separate(E, pad=pad_height(E) + 2) == R


def test_spin_minus_golden():
    E = SpinorElement(3, (2, 1), (T1N, sp_component((1, 2, 3, 4, 5))))
    R = separate(E)
    assert [b + t for b, t in R.columns] == [(1, 2, 3, 7), (1, 2, 3), (1, 2, 3, 4, 5, 6)]
    assert R.delta == (6, 2, 2)


def test_empty_weight():
    for n in (2, 3, 4):
        for la in [(2,), (1, 1), (2, 2)]:
            if len(la) > n:
                continue
            for E in enumerate_LRd((), la, n):
                R = separate(E)
                assert R.tail == TB.EMPTY and R.delta == la


def test_sliding_two_routes_agree():
    audit = Counter()
    for n in range(2, 6):
        for mu in P.orthogonal_labels(n, 4):
            for w in range(sum(mu), 7, 2):
                for la in P.partitions_of(w, max_length=n):
                    for E in enumerate_LRd(mu, la, n):
                        separate(E, audit)
    assert audit["S_applications"] > 0
    assert audit["S_applications"] == audit["dual_route_agreements"] == audit["knuth_checks"]


def test_bijection_onto_barred_sets():
    for n in range(1, 6):
        for mu in P.orthogonal_labels(n, 6):
            for w in range(sum(mu), 7, 2):
                for la in P.partitions_of(w, max_length=n):
                    q = BranchingQuery(n, la, mu)
                    elements = enumerate_LRd(mu, la, n)
                    image = {(R.delta, R.tail) for R in map(separate, elements)}
                    assert len(image) == len(elements)
                    assert image == {(d, S) for d in delta_range(q) for S in barred_set(q, d)}


def test_padding_stability():
    checked = 0
    for n in (3, 5):
        for mu in P.orthogonal_labels(n, 5):
            if OrthogonalWeight(n, mu).positive:
                continue
            for w in range(sum(mu), 8, 2):
                for la in P.partitions_of(w, max_length=n):
                    for E in enumerate_LRd(mu, la, n):
                        a = pad_height(E)
                        assert separate(E, pad=a) == separate(E, pad=a + 2) == separate(E, pad=a + 4)
                        checked += 1
    assert checked > 20


def test_reconstruction_at_rank_four():
    branches = Counter()
    for mu in P.orthogonal_labels(4, 8):
        if P.part(P.conjugate(mu), 1) != 2:
            continue
        for w in range(sum(mu), 9, 2):
            for la in P.partitions_of(w, max_length=4):
                for E in enumerate_LRd(mu, la, 4):
                    R = separate(E)
                    back = reconstruct_n4(R.delta, R.tail, mu)
                    assert back.columns() == E.columns()
                    branches[flag_sequences_row(R.tail, FlagContext(4, mu, R.delta)).m[1]] += 1
    # both shapes of the reconstruction occur
    assert branches[3] > 0 and branches[2] > 0


def test_reconstruction_rejects_unflagged_tail():
    # a lattice companion for (la', delta') that fails the row-side test
    with pytest.raises(ValueError):
        reconstruct_n4((2, 2), TB.straight([[1, 1], [2]]), (2, 1))
    with pytest.raises(ValueError):
        reconstruct_n4((), TB.straight([[1]]), (1,))
