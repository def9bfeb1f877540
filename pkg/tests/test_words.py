"""Word and Lyndon machinery, checked against brute-force rotation oracles."""

import itertools

import pytest

from wordseries.words import (
    Alphabet,
    Word,
    is_lyndon,
    lyndon_factorization,
    lyndon_words,
    standard_factorization,
    words_up_to_grading,
)

X2 = Alphabet.x(2)
Y = Alphabet.y()


def w(alphabet, text):
    return alphabet.parse_word(text)


# -- oracle: Lyndon = strictly smaller than every proper cyclic rotation ----


def lyndon_by_rotations(word: Word) -> bool:
    key = word.lex_key()
    n = len(key)
    return all(key < key[i:] + key[:i] for i in range(1, n))


def test_grading():
    assert w(X2, "").grading == 0
    assert w(X2, "x0 x1 x1").grading == 3
    yw = w(Y, "y2 y1")
    assert yw.grading == sum(k for k, _ in yw.letters) == 3


def test_word_identity_and_order():
    a, b = w(X2, "x0 x1"), w(X2, "x0 x1")
    assert a == b and hash(a) == hash(b)
    assert w(X2, "x1") < w(X2, "x0 x0")  # grading dominates
    assert a * w(X2, "x0") == w(X2, "x0 x1 x0")
    with pytest.raises(ValueError):
        w(X2, "x2")


def test_parse_format_round_trip():
    for text in ("", "ε", "x0", "x1 x0 x1"):
        word = w(X2, text)
        assert X2.parse_word(str(word)) == word
    ym = Alphabet.y(color_order=4)
    word = ym.parse_word("y2@3 y1@0")
    assert str(word) == "y2@3 y1@0"
    assert word.grading == 3


def test_lyndon_examples():
    assert [str(u) for u in lyndon_words(X2, 2)] == ["x0", "x1", "x0 x1"]
    grade3 = [str(u) for u in lyndon_words(X2, 3)]
    assert grade3 == ["x0", "x1", "x0 x1", "x0 x0 x1", "x0 x1 x1"]
    assert is_lyndon(w(X2, "x0 x1"))
    assert not is_lyndon(w(X2, "x1 x0"))
    assert is_lyndon(w(X2, "x0"))
    with pytest.raises(ValueError):
        is_lyndon(w(X2, ""))


def test_lyndon_against_rotation_oracle():
    for n in range(1, 11):
        for tup in itertools.product(range(2), repeat=n):
            word = Word(X2, tup)
            assert is_lyndon(word) == lyndon_by_rotations(word)


def test_binary_lyndon_counts():
    # necklace counts for the binary alphabet
    expected = {1: 2, 2: 1, 3: 2, 4: 3, 5: 6, 6: 9, 7: 18, 8: 30, 9: 56, 10: 99}
    words = lyndon_words(X2, 10)
    for n, count in expected.items():
        assert sum(1 for u in words if u.grading == n) == count


def test_y_alphabet_letter_order():
    # y1 is the largest letter: Lyndon words start with their heaviest block
    assert [str(u) for u in lyndon_words(Y, 3)] == ["y1", "y2", "y3", "y2 y1"]
    got = {str(u) for u in lyndon_words(Y, 4)}
    assert got == {"y1", "y2", "y3", "y4", "y2 y1", "y3 y1", "y2 y1 y1"}


def test_colored_letter_order():
    ym = Alphabet.y(color_order=2)
    letters = ym.letters(max_weight=2)
    assert [ym.letter_name(a) for a in letters] == ["y2@0", "y2@1", "y1@0", "y1@1"]


def test_colored_lyndon_words():
    ym = Alphabet.y(color_order=2)
    got = [str(w) for w in lyndon_words(ym, 2)]
    assert got == ["y1@0", "y1@1", "y2@0", "y2@1", "y1@0 y1@1"]


def test_standard_factorization():
    s, r = standard_factorization(w(X2, "x0 x0 x1"))
    assert (str(s), str(r)) == ("x0", "x0 x1")
    s, r = standard_factorization(w(X2, "x0 x1 x1"))
    assert (str(s), str(r)) == ("x0 x1", "x1")
    s, r = standard_factorization(w(X2, "x0 x1"))
    assert (str(s), str(r)) == ("x0", "x1")
    with pytest.raises(ValueError):
        standard_factorization(w(X2, "x0"))
    with pytest.raises(ValueError):
        standard_factorization(w(X2, "x1 x0"))


def test_standard_factorization_properties():
    for l in lyndon_words(X2, 7):
        if len(l) < 2:
            continue
        s, r = standard_factorization(l)
        assert s * r == l
        assert is_lyndon(s) and is_lyndon(r)
        assert s.lex_key() < l.lex_key() < r.lex_key()
        # r is the *longest* proper Lyndon suffix
        longer = [l[i:] for i in range(1, len(l) - len(r))]
        assert not any(is_lyndon(u) for u in longer)


def test_lyndon_factorization_unique_non_increasing():
    for word in words_up_to_grading(X2, 8):
        if not word:
            continue
        factors = lyndon_factorization(word)
        joined = factors[0]
        for f in factors[1:]:
            joined = joined * f
        assert joined == word
        keys = [f.lex_key() for f in factors]
        assert all(a >= b for a, b in zip(keys, keys[1:]))
        assert all(is_lyndon(f) for f in factors)


def test_lyndon_factorization_y():
    word = w(Y, "y1 y2 y1 y3")
    factors = lyndon_factorization(word)
    assert all(is_lyndon(f) for f in factors)
    keys = [f.lex_key() for f in factors]
    assert all(a >= b for a, b in zip(keys, keys[1:]))
