from orthobranch import partitions as P
from orthobranch import tableaux as TB
from orthobranch.lr import (Kind, companion_of, enumerate_lr, filling_of, lr_count, psi,
                            psi_inverse)
from orthobranch.oracle import lr_brute
from orthobranch.tableaux import rotated_from_columns, straight

LA, MU, NU = (7, 6, 4, 3, 2), (6, 4, 2, 2), (2, 2, 2, 1, 1)
S = straight([[1, 3, 3, 5, 7], [2, 4, 6]])
U = rotated_from_columns([[2, 3, 5], [1, 2, 3, 4, 5]])


def _triples(max_size):
    for w in range(max_size + 1):
        for la in P.partitions_of(w):
            for k in range(w + 1):
                for mu in P.partitions_of(k):
                    if P.contains(la, mu):
                        for nu in P.partitions_of(w - k):
                            yield la, mu, nu


def test_small_counts():
    assert lr_count((2, 1), (1,), (1, 1)) == 1
    ws = enumerate_lr((3, 2), (3, 2), ())
    assert len(ws) == 1 and ws[0].companion == TB.EMPTY


def test_companion_example_is_enumerated():
    lat = enumerate_lr(P.conjugate(LA), P.conjugate(MU), P.conjugate(NU), Kind.LATTICE)
    anti = enumerate_lr(LA, MU, NU, Kind.ANTI)
    assert S in {w.companion for w in lat}
    assert U in {w.companion for w in anti}


def test_psi_examples():
    assert psi(S, LA, MU) == U
    assert psi_inverse(U, LA, MU) == S
    la, mu = (5, 4, 4, 3, 2, 2), (4, 2, 2, 2, 2)
    S_a = straight([[1, 3, 3, 3, 5], [2, 4, 4]])
    assert psi(S_a, la, mu) == rotated_from_columns([[2, 3, 6], [1, 2, 3, 4, 6]])
    assert psi(TB.EMPTY, (2, 1), (2, 1)) == TB.EMPTY


def test_companion_filling_inverse():
    for w in enumerate_lr(LA, MU, NU, Kind.ANTI):
        assert filling_of(w.companion, LA, MU) == w.filling
        assert companion_of(w.filling, NU, Kind.ANTI) == w.companion
    single = TB.Tableau((1,), (), ((1,),))
    assert companion_of(single, (1,), Kind.LATTICE) == straight([[1]])


def test_counts_against_brute_force():
    for la, mu, nu in _triples(7):
        assert lr_count(la, mu, nu) == lr_brute(la, mu, nu), (la, mu, nu)


def test_classical_symmetries():
    for la, mu, nu in _triples(6):
        c = lr_brute(la, mu, nu)
        assert c == lr_brute(la, nu, mu)
        assert c == lr_brute(P.conjugate(la), P.conjugate(mu), P.conjugate(nu))


def test_psi_is_a_bijection_and_companions_insert():
    for la, mu, nu in _triples(7):
        lat = enumerate_lr(P.conjugate(la), P.conjugate(mu), P.conjugate(nu), Kind.LATTICE)
        anti = enumerate_lr(la, mu, nu, Kind.ANTI)
        assert len(lat) == len(anti)
        Hmu, Hla = TB.highest_tableau(mu), TB.highest_tableau(la)
        for w in anti:
            assert TB.tableau_insert(w.companion, Hmu) == Hla
        images = set()
        for w in lat:
            V = psi(w.companion, la, mu)
            assert psi_inverse(V, la, mu) == w.companion
            images.add(V)
        assert images == {w.companion for w in anti}
