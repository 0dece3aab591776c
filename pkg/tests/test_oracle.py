from hypothesis import given

from orthobranch import partitions as P
from orthobranch import tableaux as TB
from orthobranch.oracle import (freudenthal_character, knuth_normal_form, lr_brute, row_word,
                                weyl_character_check, zero_weight_dim)
from orthobranch.spinor import EMPTY_COMPONENT, SpinorElement, t_component
from orthobranch.tableaux import straight

from .strategies import partitions


def test_zero_weight_examples():
    assert zero_weight_dim("B", 2, (1, 1)) == 2
    assert zero_weight_dim("D", 3, (1, 1)) == 3
    assert zero_weight_dim("B", 1, (1,)) == 1
    assert zero_weight_dim("D", 2, (1,)) == 0


def test_dimensions():
    # so_5: vector 5, adjoint 10; so_6: vector 6, adjoint 15; so_7 adjoint 21
    assert sum(freudenthal_character("B", 2, (1,)).values()) == 5
    assert sum(freudenthal_character("B", 2, (1, 1)).values()) == 10
    assert sum(freudenthal_character("D", 3, (1,)).values()) == 6
    assert sum(freudenthal_character("D", 3, (1, 1)).values()) == 15
    assert sum(freudenthal_character("B", 3, (1, 1)).values()) == 21


def test_weyl_character_formula():
    for typ, m, mu in [("B", 1, (2,)), ("B", 2, (1, 1)), ("B", 2, (2, 1)), ("D", 2, (1, 1)),
                       ("D", 3, (2, 1)), ("D", 2, (2,))]:
        assert weyl_character_check(typ, m, mu), (typ, m, mu)


def test_lr_brute_small():
    assert lr_brute((2, 1), (1,), (1, 1)) == 1
    assert lr_brute((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_brute((2,), (1,), (1, 1)) == 0


@given(partitions(7), partitions(4))
def test_lr_brute_pieri(la, mu):
    # multiplying by a single box adds one outer corner
    if P.contains(la, mu) and sum(la) == sum(mu) + 1:
        assert lr_brute(la, mu, (1,)) == 1


def test_knuth_normal_form_examples():
    assert knuth_normal_form((2, 1)) == straight([[1], [2]])
    assert knuth_normal_form((1, 2)) == straight([[1, 2]])
    assert knuth_normal_form((3, 1, 2)) == straight([[1, 2], [3]])
    T = straight([[1, 1, 2], [2, 3]])
    assert knuth_normal_form(row_word(T)) == T


def test_spinor_word_is_highest():
    T4 = t_component(4, (1, 3, 4, 5), (1, 2))
    T3 = t_component(3, (1, 3, 4), (1, 2))
    T2 = t_component(3, (1, 5, 6), (1, 4))
    T1 = t_component(2, (1, 2, 3, 5), (1, 2, 3, 4))
    E = SpinorElement(8, (4, 3, 3, 2), (T4, T3, T2, T1, EMPTY_COMPONENT))
    la = (6, 5, 5, 4, 1, 1, 1, 1)
    assert knuth_normal_form(tuple(reversed(E.word()))) == TB.highest_tableau(P.conjugate(la))
