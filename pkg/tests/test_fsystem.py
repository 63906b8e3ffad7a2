"""F-system semantics: enumeration, membership, pairing, spec files."""

import pytest

from foldlang import (FSystem, RegularLang, equal_length_pair,
                      finite_language_system, fold, fs_enumerate, fs_member,
                      parse_spec, load_spec)
from foldlang.errors import (AlphabetError, NoEqualLengthPair, ResourceLimit,
                             SpecFileError)

from conftest import AB, system

BB_FRONT = system("aaaab*", "(uu)*ddd")

BB_FRONT_13 = ["aaaab", "aaaabbb", "bbaaaabbb", "bbbbaaaabbb", "bbbbbbaaaabbb"]


def test_bb_front_enumeration():
    assert fs_enumerate(BB_FRONT, 13) == BB_FRONT_13


def test_enumeration_is_sorted_by_length_then_lex():
    phi = system("(a|b)(a|b)", "(u|d)(u|d)")
    assert fs_enumerate(phi, 2) == ["aa", "ab", "ba", "bb"]


def test_enumeration_with_witnesses():
    wit = fs_enumerate(BB_FRONT, 13, with_witnesses=True)
    assert set(wit) == set(BB_FRONT_13)
    for w, (r, s) in wit.items():
        assert fold(r, s) == w
        assert BB_FRONT.core.member(r) and BB_FRONT.proc.member(s)


def test_membership():
    assert fs_member(BB_FRONT, "bbaaaabbb")
    assert not fs_member(BB_FRONT, "ababababa")
    ok, (r, s) = fs_member(BB_FRONT, "aaaabbb", with_witness=True)
    assert ok and fold(r, s) == "aaaabbb"
    ok, witness = fs_member(BB_FRONT, "bbbbbbb", with_witness=True)
    assert not ok and witness is None


def test_membership_with_cf_components():
    phi = system("S -> a S b | eps", "S -> u S d | eps")
    # fold(a^n b^n, u^n d^n) = reverse(first half) ++ second half
    assert fs_member(phi, fold("aabb", "uudd"))
    assert not fs_member(phi, "bbaa")


def test_proc_alphabet_enforced():
    with pytest.raises(AlphabetError):
        FSystem(RegularLang("a*", AB), RegularLang("a*", AB))


def test_equal_length_pair():
    r, s = equal_length_pair(BB_FRONT, 9)
    assert (r, s) == ("aaaabbbbb", "uuuuuuddd")
    r, s = equal_length_pair(BB_FRONT, 0)
    assert (r, s) == ("aaaab", "uuddd")


def test_equal_length_pair_not_found():
    phi = system("aa", "ddd")
    with pytest.raises(NoEqualLengthPair):
        equal_length_pair(phi, 0, ceiling=16)


def test_pair_cap_guards_blowup():
    phi = system("(a|b)*", "(u|d)*")
    with pytest.raises(ResourceLimit):
        fs_enumerate(phi, 12, pair_cap=1000)


def test_finite_language_system():
    words = {"ab", "ba", "abba", ""}
    phi = finite_language_system(words)
    assert set(fs_enumerate(phi, 6)) == words
    assert fs_member(phi, "abba")
    assert not fs_member(phi, "aab")


def test_finite_language_system_empty_set():
    phi = finite_language_system([])
    assert fs_enumerate(phi, 5) == []


# -- spec files -----------------------------------------------------------------

GOOD_SPEC = """
# pairs of u steps send b-pairs to the front
alphabet = a b
core.kind = regex
core.regex = aaaab*
proc.kind = regex
proc.regex = (uu)*ddd
"""

CF_SPEC = """
alphabet = a b
core.kind = cfg
core.cfg = S -> a S b | eps
proc.kind = cfg
proc.cfg = S -> u S d | eps
"""

MULTILINE_CF_SPEC = """
alphabet = a b
core.kind = cfg
core.cfg = S -> a T
core.cfg = T -> b | eps
proc.kind = regex
proc.regex = d*
"""


def test_parse_spec_regex():
    phi = parse_spec(GOOD_SPEC)
    assert fs_enumerate(phi, 13) == BB_FRONT_13


def test_parse_spec_cfg():
    phi = parse_spec(CF_SPEC)
    assert fs_member(phi, fold("aabb", "uudd"))


def test_parse_spec_repeated_cfg_lines():
    phi = parse_spec(MULTILINE_CF_SPEC)
    assert set(fs_enumerate(phi, 3)) == {"a", "ab"}


@pytest.mark.parametrize("text,fragment", [
    ("alphabet = a b\ncore.kind = regex\nproc.kind = regex\nproc.regex = d*",
     "core.regex"),
    ("core.kind = regex\ncore.regex = a*\nproc.kind = regex\nproc.regex = d*",
     "alphabet"),
    (GOOD_SPEC + "proc.alphabet = u d", "implicitly"),
    (GOOD_SPEC + "core.kind = regex", "duplicate"),
    ("alphabet = a b\ncore.kind = dfa\nproc.kind = regex\nproc.regex = d*",
     "kind"),
    ("what is this", "key = value"),
])
def test_spec_errors(text, fragment):
    with pytest.raises(SpecFileError, match=fragment):
        parse_spec(text)


def test_load_spec_roundtrip(tmp_path):
    path = tmp_path / "bb_front.fsys"
    path.write_text(GOOD_SPEC, encoding="utf-8")
    phi = load_spec(path)
    assert fs_member(phi, "aaaab")
