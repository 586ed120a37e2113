import random

import pytest

from tlkit.braids import (
    BraidWord,
    KauffmanParams,
    braid_image,
    braid_image_matrix,
    element_matrix,
    kauffman_loop_value,
    multiply_kauffman,
    verify_artin,
)
from tlkit.elements import TLElement
from tlkit.enumeration import catalan, enumerate_diagrams, identity_diagram
from tlkit.laurent import LaurentPoly
from tlkit.matrices import PolyMatrix


def identity_element(n):
    return TLElement.from_diagram(identity_diagram(n), LaurentPoly.one("A"))


class TestBraidWord:
    def test_validation(self):
        with pytest.raises(ValueError):
            BraidWord(3, (3,))
        with pytest.raises(ValueError):
            BraidWord(3, (0,))
        with pytest.raises(ValueError):
            BraidWord(0, ())

    def test_text_round_trip(self):
        w = BraidWord.from_text(4, "1,-2,3,-2")
        assert w.letters == (1, -2, 3, -2)
        assert w.to_text() == "1,-2,3,-2"
        assert BraidWord.from_text(4, "").letters == ()

    def test_inverse_reverses_and_negates(self):
        w = BraidWord(4, (1, -2, 3))
        assert w.inverse().letters == (-3, 2, -1)

    def test_concatenation(self):
        w = BraidWord(3, (1,)) * BraidWord(3, (-2,))
        assert w.letters == (1, -2)
        with pytest.raises(ValueError):
            BraidWord(3, (1,)) * BraidWord(4, (1,))


def test_kauffman_loop_value():
    assert str(kauffman_loop_value()) == "-A^2-A^-2"
    params = KauffmanParams()
    assert params.loop_value == kauffman_loop_value()
    with pytest.raises(ValueError):
        KauffmanParams(variable="d")


def test_empty_word_maps_to_identity():
    assert braid_image(BraidWord.identity(3)) == identity_element(3)
    assert braid_image_matrix(BraidWord.identity(3)) == PolyMatrix.identity(
        catalan(3), "A"
    )


@pytest.mark.parametrize("n", [2, 3, 4])
def test_generator_times_inverse_cancels(n):
    for i in range(1, n):
        w = BraidWord(n, (i, -i))
        assert braid_image(w) == identity_element(n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_matrix_inverse_cancellation(n):
    ident = PolyMatrix.identity(catalan(n), "A")
    for i in range(1, n):
        left = braid_image_matrix(BraidWord(n, (i,)))
        right = braid_image_matrix(BraidWord(n, (-i,)))
        assert left * right == ident


def test_braided_relation_elements_dim3():
    assert braid_image(BraidWord(3, (1, 2, 1))) == braid_image(BraidWord(3, (2, 1, 2)))


def test_braided_relation_matrices_dim4():
    m1 = braid_image_matrix(BraidWord(4, (1, 2, 1)))
    m2 = braid_image_matrix(BraidWord(4, (2, 1, 2)))
    assert m1.size == 14
    assert m1 == m2


def test_far_commutation_dim4():
    assert braid_image(BraidWord(4, (1, 3))) == braid_image(BraidWord(4, (3, 1)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_homomorphism_on_random_words(n):
    rng = random.Random(n)
    letters = [s * i for i in range(1, n) for s in (1, -1)]
    for _ in range(12):
        w1 = BraidWord(n, tuple(rng.choice(letters) for _ in range(rng.randint(0, 3))))
        w2 = BraidWord(n, tuple(rng.choice(letters) for _ in range(rng.randint(0, 3))))
        assert braid_image(w1 * w2) == multiply_kauffman(
            braid_image(w1), braid_image(w2)
        )


@pytest.mark.parametrize("n", [2, 3, 4])
def test_inverse_law_on_random_words(n):
    rng = random.Random(10 + n)
    letters = [s * i for i in range(1, n) for s in (1, -1)]
    for _ in range(8):
        w = BraidWord(n, tuple(rng.choice(letters) for _ in range(rng.randint(1, 6))))
        assert braid_image(w * w.inverse()) == identity_element(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_term_count_bounded_and_inside_basis(n):
    rng = random.Random(20 + n)
    basis = enumerate_diagrams(n)
    letters = [s * i for i in range(1, n) for s in (1, -1)]
    for _ in range(10):
        length = rng.randint(0, 6)
        w = BraidWord(n, tuple(rng.choice(letters) for _ in range(length)))
        image = braid_image(w)
        assert len(image.terms) <= 2**length
        for diagram, _ in image.terms:
            assert diagram in basis


@pytest.mark.parametrize("n", [2, 3, 4])
def test_matrix_route_matches_element_route(n):
    rng = random.Random(30 + n)
    letters = [s * i for i in range(1, n) for s in (1, -1)]
    for _ in range(6):
        w = BraidWord(n, tuple(rng.choice(letters) for _ in range(rng.randint(0, 4))))
        assert element_matrix(braid_image(w)) == braid_image_matrix(w)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_verify_artin_passes(n):
    report = verify_artin(n, max_len=5)
    assert report.passed, report.lines()


def test_verify_artin_rejects_single_strand():
    with pytest.raises(ValueError):
        verify_artin(1)
