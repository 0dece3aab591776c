import pytest

from orthobranch import partitions as P
from orthobranch.branching import (BranchingQuery, Group, Method, all_methods, bc_multiplicity,
                                   contributions, delta_range, enright_willenbring_check,
                                   flagged_set, littlewood_stable, multiplicity, sp_multiplicity)
from orthobranch.lr import Kind, enumerate_lr
from orthobranch.verify import orthogonal_instances

GOLDEN = BranchingQuery(8, (5, 4, 4, 3, 2, 2), (2, 2, 2, 1, 1))


def test_golden_case():
    assert all_methods(GOLDEN) == {"direct": 1, "barred": 1, "flagged": 1}
    per = contributions(GOLDEN, Method.FLAGGED)
    assert per == {(2, 2, 2, 2, 2, 2): 0, (4, 2, 2, 2, 2): 1, (4, 4, 2, 2): 0, (4, 4, 4): 0}
    assert contributions(GOLDEN, Method.BARRED) == per


def test_golden_enright_willenbring():
    assert enright_willenbring_check(8, 2, 2, 3, 2, GOLDEN.lam) == (1, 1, True)


def test_trivial_and_identity_cases():
    assert multiplicity(BranchingQuery(4, (), ())) == 1
    for n in range(2, 6):
        for mu in P.orthogonal_labels(n, 4):
            if len(mu) <= n:
                assert all(v == 1 for v in all_methods(BranchingQuery(n, mu, mu)).values())


def test_parity_mismatch_gives_zero():
    q = BranchingQuery(4, (2, 1), (2,))
    assert all(v == 0 for v in all_methods(q).values())
    assert delta_range(q) == []


def test_invalid_queries():
    with pytest.raises(ValueError):
        BranchingQuery(2, (1, 1, 1), ())
    with pytest.raises(ValueError):
        BranchingQuery(4, (2, 2), (2, 2, 1))
    with pytest.raises(ValueError):
        littlewood_stable(BranchingQuery(2, (1, 1), ()))


def test_littlewood_examples():
    assert littlewood_stable(BranchingQuery(4, (2,), ())) == 1
    assert littlewood_stable(BranchingQuery(6, (2, 1), (1,))) == 1


def test_three_methods_agree_on_small_instances():
    for n, lam, mu in orthogonal_instances(5, 6):
        vals = all_methods(BranchingQuery(n, lam, mu))
        assert len(set(vals.values())) == 1, (n, lam, mu, vals)


def test_stable_range_flagged_set_is_everything():
    for n, lam, mu in orthogonal_instances(6, 7):
        if 2 * len(lam) > n:
            continue
        q = BranchingQuery(n, lam, mu)
        for d in delta_range(q):
            every = {w.companion for w in enumerate_lr(lam, d, mu, Kind.ANTI)}
            assert set(flagged_set(q, d)) == every
        assert littlewood_stable(q) == multiplicity(q, Method.FLAGGED)


def test_symplectic_pin():
    assert sp_multiplicity(BranchingQuery(4, (2, 1, 1), (1, 1), Group.SP)) == 1


def test_symplectic_stable_range():
    for n in (2, 4, 6):
        for w in range(7):
            for lam in P.partitions_of(w, max_length=n // 2):
                for k in range(w % 2, w + 1, 2):
                    for mu in P.partitions_of(w - k, max_length=n // 2):
                        q = BranchingQuery(n, lam, mu, Group.SP)
                        assert sp_multiplicity(q) == littlewood_stable(q)


def test_types_b_and_c_row_and_companion_sides_agree():
    # bc_multiplicity raises if the two sides disagree
    for n in range(2, 6):
        for w in range(6):
            for lam in P.partitions_of(w, max_length=n):
                for k in range(w + 1):
                    for mu in P.partitions_of(k, max_length=n):
                        q = BranchingQuery(n, lam, mu, Group.B)
                        assert bc_multiplicity(q, "B") >= 0
                        if w == k and 2 * len(mu) <= n:
                            assert bc_multiplicity(q, "B") == (1 if lam == mu else 0)
                        bc_multiplicity(q, "C")


def test_enright_willenbring_sweep():
    checked = 0
    for n in range(4, 9):
        for a in range(1, n):
            for b in range(1, n):
                c = n - 1 - a - b
                if c < a + 1:  # mu must label an O_n module
                    continue
                for d in range(2, 5):
                    for w in range(d + 2 * a + b, 11, 2):
                        for lam in P.partitions_of(w, max_length=n):
                            diff, flagged, equal = enright_willenbring_check(n, a, b, c, d, lam)
                            assert equal, (n, a, b, c, d, lam, diff, flagged)
                            checked += 1
    assert checked > 1000
