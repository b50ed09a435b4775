import pytest
from hypothesis import given

from insertalg.errors import InvalidAlphabet, PositionOutOfRange, UnknownLetter
from insertalg.words import Alphabet, concat, format_word, insert_at, parse_word

from conftest import ABC, words


def test_parse_word():
    assert parse_word("abc", ABC) == "abc"
    assert len(parse_word("abc", ABC)) == 3


@pytest.mark.parametrize("text", ["1", ""])
def test_parse_empty_word(text):
    assert parse_word(text, Alphabet("ab")) == ""


def test_parse_unknown_letter():
    with pytest.raises(UnknownLetter) as exc:
        parse_word("abd", ABC)
    assert exc.value.letter == "d"


@pytest.mark.parametrize("letters", ["", "aa", "a1", "a*", "a b"])
def test_bad_alphabets(letters):
    with pytest.raises(InvalidAlphabet):
        Alphabet(letters)


def test_dna_alphabet():
    assert Alphabet("AGCT").sort_key("GA") < Alphabet("AGCT").sort_key("CA")


def test_concat():
    assert concat("ab", "c") == "abc"
    assert concat("", "ab") == "ab"
    assert concat("a", "a") == "aa"


def test_insert_at():
    assert insert_at("abc", "de", 1) == "dabce"
    assert insert_at("x", "", 0) == "x"
    assert insert_at("", "ab", 1) == "ab"


@pytest.mark.parametrize("i", [-1, 3])
def test_insert_at_out_of_range(i):
    with pytest.raises(PositionOutOfRange):
        insert_at("a", "bc", i)


def test_word_order_is_length_then_lex():
    ordered = list(ABC.words_upto(2))
    assert ordered[:5] == ["", "a", "b", "c", "aa"]
    assert sorted(reversed(ordered), key=ABC.sort_key) == ordered


@given(words(ABC, 5), words(ABC, 5))
def test_insert_at_ends(x, y):
    assert insert_at(x, y, 0) == concat(x, y)
    assert insert_at(x, y, len(y)) == concat(y, x)
    results = [insert_at(x, y, i) for i in range(len(y) + 1)]
    assert len(results) == len(y) + 1
    assert all(len(w) == len(x) + len(y) for w in results)


@given(words(ABC, 6))
def test_format_parse_round_trip(w):
    assert parse_word(format_word(w), ABC) == w
