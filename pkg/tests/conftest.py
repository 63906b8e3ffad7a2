import random

import pytest

from foldlang import Alphabet, ContextFreeLang, FSystem, PROC_ALPHABET, RegularLang

AB = Alphabet("ab")
ABC = Alphabet("abc")


def lang(text, alphabet):
    """Build a RegularLang or ContextFreeLang from a one-line description."""
    if "->" in text:
        return ContextFreeLang(text, alphabet)
    return RegularLang(text, alphabet)


def system(core, proc, alphabet=AB):
    return FSystem(lang(core, alphabet), lang(proc, PROC_ALPHABET))


@pytest.fixture
def rng():
    return random.Random(0x5EED)


def random_word(rng, alphabet, n):
    return "".join(rng.choice(alphabet.symbols) for _ in range(n))


def random_proc(rng, n):
    return "".join(rng.choice("ud") for _ in range(n))
