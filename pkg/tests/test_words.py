import pytest
from hypothesis import given, strategies as st

from twistedburau.words import (ColoredBraidWord, Word, apply_letters, artin_letter_action,
                                braid_action, braid_permutation, format_braid, from_g_alphabet,
                                g_word, parse_braid, propagate_colors, to_g_alphabet,
                                word_inverse, word_product)

from conftest import braid_letters, colored_braids, words, words_of_rank


def W(*letters, n=3):
    return Word(tuple(letters), n)


def test_product_cancels_inverse():
    assert word_product(W(1), W(-1)).is_identity()


def test_product_single_cancellation():
    assert word_product(W(1, 2), W(-2, 1)) == W(1, 1)


def test_product_cascade():
    assert word_product(W(1, 2, -1), W(1, -2)) == W(1)


def test_inverse_examples():
    assert word_inverse(W()) == W()
    assert word_inverse(W(1, 2)) == W(-2, -1)
    assert word_inverse(W(-1)) == W(1)


def test_word_is_reduced_on_construction():
    assert W(1, 2, -2, -1, 3).letters == (3,)


def test_word_rejects_bad_index():
    with pytest.raises(ValueError):
        W(4)
    with pytest.raises(ValueError):
        W(0)


def test_rank_mismatch():
    with pytest.raises(ValueError):
        word_product(Word((1,), 2), Word((1,), 3))


def test_word_text():
    assert str(W(1, -2)) == "x1x2^-1"
    assert str(W()) == "1"


def test_artin_letter_action():
    assert artin_letter_action(1, 1, 2) == Word((1, 2, -1), 2)
    assert artin_letter_action(1, 2, 2) == Word((1,), 2)
    assert artin_letter_action(2, 1, 3) == Word((1,), 3)
    x2 = artin_letter_action(-1, 1, 2)
    assert x2 == Word((2,), 2)
    assert apply_letters((1,), x2) == Word((1,), 2)
    with pytest.raises(ValueError):
        artin_letter_action(1, 3, 2)


def test_braid_action_examples():
    b = ColoredBraidWord(2, (1, 1))
    assert braid_action(b, Word((1,), 2)) == Word((1, 2, 1, -2, -1), 2)
    assert braid_action(b, Word((2,), 2)) == Word((1, 2, -1), 2)
    w = Word((1, -2, 2, 1), 2)
    assert braid_action(ColoredBraidWord(2, ()), w) == w


def test_braid_permutation_examples():
    assert braid_permutation(ColoredBraidWord(2, (1,))) == (2, 1)
    assert braid_permutation(ColoredBraidWord(2, (1, 1))) == (1, 2)
    # strand tracing: the strand starting at position 1 ends at 3, 2 at 1, 3 at 2
    assert braid_permutation(ColoredBraidWord(3, (1, 2))) == (3, 1, 2)


def test_propagate_colors_examples():
    assert ColoredBraidWord(2, (1,), (1, 2)).bottom_colors() == (2, 1)
    assert ColoredBraidWord(2, (1, 1), (1, 2)).bottom_colors() == (1, 2)
    assert ColoredBraidWord(3, (), (1, 2, 1)).bottom_colors() == (1, 2, 1)
    assert propagate_colors(ColoredBraidWord(3, (1, 2), (1, 2, 3))) == [
        (1, 2, 3), (2, 1, 3), (2, 3, 1)]


def test_colors_follow_permutation():
    b = ColoredBraidWord(4, (1, -2, 3, 2, 1), (1, 2, 3, 4))
    perm = braid_permutation(b)
    bottom = b.bottom_colors()
    for i, c in enumerate(b.colors, 1):
        assert bottom[perm[i - 1] - 1] == c


def test_coloring_validation():
    with pytest.raises(ValueError):
        ColoredBraidWord(2, (), (1, 3))
    with pytest.raises(ValueError):
        ColoredBraidWord(2, (2,), (1, 1))
    with pytest.raises(ValueError):
        ColoredBraidWord(3, (), (1, 2))


def test_g_alphabet_examples():
    assert to_g_alphabet(Word((1,), 2)) == Word((1,), 2)
    assert to_g_alphabet(Word((2,), 2)) == Word((-1, 2), 2)
    acted = braid_action(ColoredBraidWord(2, (1,)), g_word(1, 2))
    assert to_g_alphabet(acted) == Word((2, -1), 2)


def test_parse_braid():
    assert parse_braid("s1 s2^-1 s1^3") == (1, -2, 1, 1, 1)
    assert parse_braid("") == ()
    assert parse_braid("  s2^2 ") == (2, 2)
    for bad in ("s0", "s1^0", "x1", "s1^", "s1s2"):
        with pytest.raises(ValueError):
            parse_braid(bad)


def test_parse_braid_error_position():
    with pytest.raises(ValueError, match="position 6"):
        parse_braid("s1 s2 q")


@given(braid_letters(4, 8))
def test_format_parse_round_trip(letters):
    assert parse_braid(format_braid(letters)) == letters


# invariants ------------------------------------------------------------------

@given(words(), words(), words())
def test_product_associative(u, v, w):
    if u.n == v.n == w.n:
        assert (u * v) * w == u * (v * w)


@given(words())
def test_inverse_cancels(u):
    assert (u * u.inverse()).is_identity()
    assert (u.inverse() * u).is_identity()


@given(colored_braids(), st.data())
def test_action_by_automorphisms(beta, data):
    w = data.draw(words_of_rank(beta.n))
    assert braid_action(beta.inverse(), braid_action(beta, w)) == w


@given(st.data())
def test_action_composes(data):
    n = data.draw(st.integers(2, 4))
    a = data.draw(braid_letters(n))
    b = data.draw(braid_letters(n))
    w = data.draw(words_of_rank(n))
    whole = braid_action(ColoredBraidWord(n, a + b), w)
    assert whole == braid_action(ColoredBraidWord(n, b), braid_action(ColoredBraidWord(n, a), w))


@given(st.integers(3, 5), st.data())
def test_braid_relations(n, data):
    w = data.draw(words_of_rank(n))
    i = data.draw(st.integers(1, n - 2))
    lhs = braid_action(ColoredBraidWord(n, (i, i + 1, i)), w)
    assert lhs == braid_action(ColoredBraidWord(n, (i + 1, i, i + 1)), w)
    far = [j for j in range(1, n) if abs(j - i) >= 2]
    if far:
        j = data.draw(st.sampled_from(far))
        a = braid_action(ColoredBraidWord(n, (i, j)), w)
        assert a == braid_action(ColoredBraidWord(n, (j, i)), w)


@given(colored_braids(n_min=1, n_max=5, len_max=8))
def test_g_n_is_fixed(beta):
    g = g_word(beta.n, beta.n)
    assert braid_action(beta, g) == g


@given(colored_braids(), st.integers(0, 6))
def test_propagation_through_pieces(beta, at):
    head, tail = beta.split(min(at, len(beta)))
    assert tail.bottom_colors() == beta.bottom_colors()
    assert head.compose(tail) == beta


@given(words())
def test_g_alphabet_round_trip(w):
    assert from_g_alphabet(to_g_alphabet(w)) == w
    assert to_g_alphabet(from_g_alphabet(w)) == w
