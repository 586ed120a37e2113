import pytest

from tlkit.elements import TLElement, multiply
from tlkit.enumeration import identity_diagram
from tlkit.laurent import LaurentPoly
from tlkit.representation import generator_diagram

D = LaurentPoly.monomial("d", 1)


def test_terms_collected_and_sorted():
    u = generator_diagram(2, 1)
    ident = identity_diagram(2)
    el = TLElement.from_terms(2, "d", [(ident, D), (u, D), (ident, -D)])
    assert el.terms == ((u, D),)
    assert el.coefficient(ident).is_zero()
    assert el.coefficient(u) == D


def test_zero_and_addition():
    u = generator_diagram(2, 1)
    a = TLElement.from_diagram(u)
    assert (a - a).is_zero()
    assert a + TLElement.zero(2, "d") == a
    assert a.scaled(3).coefficient(u) == LaurentPoly.constant("d", 3)


def test_incompatible_terms_rejected():
    u = generator_diagram(2, 1)
    with pytest.raises(ValueError):
        TLElement.from_terms(3, "d", [(u, D)])
    with pytest.raises(ValueError):
        TLElement.from_terms(2, "A", [(u, D)])
    with pytest.raises(ValueError):
        TLElement.from_diagram(u) + TLElement.from_diagram(identity_diagram(3))


def test_multiply_with_symbolic_loop():
    u = generator_diagram(2, 1)
    a = TLElement.from_diagram(u)
    product = multiply(a, a, D)
    assert product == TLElement.from_terms(2, "d", [(u, D)])


def test_multiply_distributes():
    n = 3
    u1 = TLElement.from_diagram(generator_diagram(n, 1))
    u2 = TLElement.from_diagram(generator_diagram(n, 2))
    ident = TLElement.from_diagram(identity_diagram(n))
    left = multiply(u1 + ident, u2, D)
    right = multiply(u1, u2, D) + multiply(ident, u2, D)
    assert left == right


def test_multiply_requires_matching_loop_variable():
    u = generator_diagram(2, 1)
    a = TLElement.from_diagram(u)
    with pytest.raises(ValueError):
        multiply(a, a, LaurentPoly.monomial("A", 1))


def test_operator_order_right_factor_acts_first():
    # U_1 . U_2 keeps U_2's bottom cup: the right factor sits at the bottom.
    n = 3
    u1 = TLElement.from_diagram(generator_diagram(n, 1))
    u2 = TLElement.from_diagram(generator_diagram(n, 2))
    product = multiply(u1, u2, D)
    (diagram, coeff), = product.terms
    assert coeff.is_one()
    assert diagram.bottom_pairs() == frozenset({(2, 3)})
    assert diagram.top_pairs() == frozenset({(4, 5)})
