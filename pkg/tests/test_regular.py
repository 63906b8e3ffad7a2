"""Regex parsing, DFA compilation, enumeration, and pumping decompositions."""

import itertools
import re

import pytest

from foldlang import Alphabet, RegularLang, parse_regex
from foldlang.errors import DecompositionError, RegexSyntaxError
from foldlang.regular import (Concat, Epsilon, Literal, Star, Union,
                              match_backtrack, literal_word)

from conftest import AB, random_word

UD = Alphabet("ud")

FIXTURES = [
    ("aaaab*", AB, "aaaab*"),
    ("(uu)*ddd", UD, "(uu)*ddd"),
    ("a*", AB, "a*"),
    ("(ab)*", AB, "(ab)*"),
    ("a+b?", AB, "a+b?"),
    ("(a|b)*a", AB, "(a|b)*a"),
    ("()", AB, ""),              # epsilon
]


def brute_words(alphabet, n):
    return ("".join(t) for t in itertools.product(alphabet.symbols, repeat=n))


# -- parsing ----------------------------------------------------------------

def test_parse_shapes():
    ast = parse_regex("a|ba*", AB)
    assert isinstance(ast, Union)
    left, right = ast.parts
    assert left == Literal("a")
    assert isinstance(right, Concat)
    assert isinstance(right.parts[1], Star)


def test_parse_epsilon_and_empty():
    assert isinstance(parse_regex("()", AB), Epsilon)
    lang = RegularLang("[]", AB)
    assert not lang.member("")
    assert not lang.member("a")
    assert not lang.is_infinite()


@pytest.mark.parametrize("bad", ["(", ")", "*", "a(b", "a)b", "[a]"])
def test_parse_errors_carry_position(bad):
    with pytest.raises(RegexSyntaxError):
        parse_regex(bad, AB)


def test_symbols_outside_alphabet_rejected():
    with pytest.raises(RegexSyntaxError):
        parse_regex("axb", AB)


def test_trailing_bar_is_epsilon_alternative():
    lang = RegularLang("a|", AB)
    assert lang.member("a") and lang.member("") and not lang.member("b")


# -- compiled DFA vs oracles --------------------------------------------------

@pytest.mark.parametrize("pattern,alphabet,pyre", FIXTURES)
def test_member_matches_backtracking_oracle(pattern, alphabet, pyre, rng):
    lang = RegularLang(pattern, alphabet)
    ast = parse_regex(pattern, alphabet)
    compiled = re.compile(pyre) if pyre else None
    for _ in range(1000):
        w = random_word(rng, alphabet, rng.randrange(10))
        got = lang.member(w)
        assert got == match_backtrack(ast, w)
        if compiled is not None:
            assert got == bool(compiled.fullmatch(w))


@pytest.mark.parametrize("pattern,alphabet,pyre", FIXTURES)
def test_enumerate_length_matches_filter(pattern, alphabet, pyre):
    lang = RegularLang(pattern, alphabet)
    for n in range(9):
        expect = [w for w in brute_words(alphabet, n) if lang.member(w)]
        got = list(lang.enumerate_length(n))
        assert got == sorted(got, key=alphabet.sort_key)
        assert sorted(got) == sorted(expect)
        assert lang.has_length(n) == bool(expect)
        smallest = lang.smallest_of_length(n)
        if expect:
            assert smallest == min(expect, key=alphabet.sort_key)
        else:
            assert smallest is None


def test_enumeration_respects_declared_symbol_order():
    lang = RegularLang("(a|b)(a|b)", Alphabet("ba"))
    assert list(lang.enumerate_length(2)) == ["bb", "ba", "ab", "aa"]


# -- pumping ------------------------------------------------------------------

def test_pumping_length_examples():
    assert RegularLang("aaaab*", AB).pumping_length() == 6
    assert RegularLang("(uu)*ddd", UD).pumping_length() == 6
    assert RegularLang("a*", Alphabet("a")).pumping_length() == 1


def test_decompose_splits_first_loop():
    lang = RegularLang("aaaab*", AB)
    d = lang.decompose("aaaabbb")
    assert d.x + d.y + d.z == "aaaabbb"
    assert d.y != ""
    assert len(d.x + d.y) <= lang.pumping_length()


@pytest.mark.parametrize("pattern,alphabet,pyre", FIXTURES)
def test_decomposition_pump_property(pattern, alphabet, pyre):
    lang = RegularLang(pattern, alphabet)
    if not lang.is_infinite():
        return
    p = lang.pumping_length()
    n = next(n for n in range(p, p + 20) if lang.has_length(n))
    w = lang.smallest_of_length(n)
    d = lang.decompose(w)
    assert d.whole == w
    for i in range(5):
        assert lang.member(d.pumped(i))


def test_decompose_rejects_short_or_foreign_strings():
    lang = RegularLang("aaaab*", AB)
    with pytest.raises(DecompositionError):
        lang.decompose("aaaab")  # shorter than the pumping length
    with pytest.raises(DecompositionError):
        lang.decompose("bbbbbbbb")  # not in the language


def test_is_infinite():
    assert RegularLang("a*", AB).is_infinite()
    assert not RegularLang("a|ab|abb", AB).is_infinite()
    assert not RegularLang("[]", AB).is_infinite()


def test_literal_word_roundtrip():
    lang = RegularLang.from_ast(literal_word("abba"), AB)
    assert lang.member("abba")
    assert not lang.member("abb")
    assert list(lang.enumerate_length(4)) == ["abba"]
