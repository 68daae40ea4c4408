import pytest
from hypothesis import given, strategies as st

from trilink.words import (
    FreeWord,
    commutator,
    exponent_sum,
    generator,
    parse_word,
    reduce_letters,
    word_inverse,
    word_power,
    word_product,
)

letters = st.lists(
    st.tuples(st.integers(min_value=1, max_value=3), st.sampled_from((1, -1))),
    max_size=12,
).map(tuple)
words = letters.map(lambda ls: FreeWord(3, ls))


def test_parse_reduced_word():
    w = parse_word("x1 x2 x1^-1 x2^-1", 3)
    assert len(w) == 4
    assert w.letters == ((1, 1), (2, 1), (1, -1), (2, -1))


def test_parse_cancellation():
    assert parse_word("x1 x1^-1", 3) == FreeWord(3)
    assert str(parse_word("", 3)) == ""


def test_parse_rejects_out_of_range():
    with pytest.raises(ValueError, match="out of range"):
        parse_word("x4", 3)


@pytest.mark.parametrize("bad", ["y1", "x0", "x1^2", "x1^", "x1^-2", "x-1", "x1x2"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_word(bad, 3)


def test_str_roundtrip():
    w = parse_word("x1 x3^-1 x3^-1 x2", 3)
    assert parse_word(str(w), 3) == w


def test_product_and_inverse():
    x1, x2, x3 = (generator(3, i) for i in (1, 2, 3))
    assert word_product(x1, word_inverse(x1)) == FreeWord(3)
    assert word_inverse(word_product(x1, x2)) == parse_word("x2^-1 x1^-1", 3)
    assert word_product(parse_word("x1 x2", 3), parse_word("x2^-1 x3", 3)) == \
        word_product(x1, x3)


def test_rank_mismatch():
    with pytest.raises(ValueError, match="rank mismatch"):
        word_product(generator(2, 1), generator(3, 1))
    with pytest.raises(ValueError, match="rank mismatch"):
        commutator(generator(2, 1), generator(3, 1))


def test_exponent_sum_examples():
    assert exponent_sum(parse_word("x1 x2 x1^-1 x2^-1", 3), 1) == 0
    assert exponent_sum(parse_word("x1 x1 x2^-1", 3), 1) == 2
    with pytest.raises(ValueError, match="out of range"):
        exponent_sum(generator(3, 1), 4)


def test_commutator_examples():
    x1, x2 = generator(3, 1), generator(3, 2)
    assert commutator(x1, x2) == parse_word("x1 x2 x1^-1 x2^-1", 3)
    w = parse_word("x1 x3 x2^-1", 3)
    assert commutator(w, w) == FreeWord(3)
    assert commutator(parse_word("x1 x3", 3), x2) == \
        parse_word("x1 x3 x2 x3^-1 x1^-1 x2^-1", 3)


def test_power():
    x1 = generator(3, 1)
    assert word_power(x1, 3) == parse_word("x1 x1 x1", 3)
    assert word_power(x1, -2) == parse_word("x1^-1 x1^-1", 3)
    assert word_power(x1, 0) == FreeWord(3)
    assert (x1 ** 2) * ~x1 == x1


def test_reduce_is_idempotent_on_raw_letters():
    raw = ((1, 1), (1, -1), (2, 1), (3, 1), (3, -1), (2, -1), (2, 1))
    once = reduce_letters(raw)
    assert reduce_letters(once) == once
    assert once == ((2, 1),)  # cascading cancellations collapse through the stack


@given(words, words)
def test_exponent_sums_additive(u, v):
    for i in (1, 2, 3):
        assert exponent_sum(word_product(u, v), i) == exponent_sum(u, i) + exponent_sum(v, i)


@given(words, words)
def test_commutator_kills_exponent_sums(u, v):
    c = commutator(u, v)
    assert all(exponent_sum(c, i) == 0 for i in (1, 2, 3))


@given(words, words, words)
def test_product_associative(u, v, w):
    assert word_product(word_product(u, v), w) == word_product(u, word_product(v, w))


@given(words)
def test_inverse_law(w):
    assert word_product(w, word_inverse(w)) == FreeWord(3)
    for i in (1, 2, 3):
        assert exponent_sum(word_inverse(w), i) == -exponent_sum(w, i)


def test_constructor_validates():
    with pytest.raises(ValueError):
        FreeWord(0)
    with pytest.raises(ValueError):
        FreeWord(2, ((3, 1),))
    with pytest.raises(ValueError):
        FreeWord(2, ((1, 2),))
