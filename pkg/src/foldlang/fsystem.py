"""F-system semantics: the brute-force oracle for L(Phi).

An F-system pairs a core language over Sigma with a folding-procedure
language over {u, d}; its language is every fold of an equal-length
pair.  Everything here is decided by exhaustive pairing per length,
which is exponential but exact at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cfg import ContextFreeLang
from .errors import AlphabetError, NoEqualLengthPair, ResourceLimit, SpecFileError
from .folding import PROC_ALPHABET, Alphabet, fold
from .regular import RegularLang

#: Per-length candidate-pair cap for the exhaustive oracle.
DEFAULT_PAIR_CAP = 500_000

#: Search ceiling above min_len when looking for an equal-length pair.
DEFAULT_LENGTH_CEILING = 512

LanguageSpec = RegularLang | ContextFreeLang


@dataclass
class FSystem:
    """Pair (core language over Sigma, procedure language over {u, d})."""

    core: LanguageSpec
    proc: LanguageSpec

    def __post_init__(self):
        if self.proc.alphabet != PROC_ALPHABET:
            raise AlphabetError("procedure language must use alphabet {u, d}")


def _pairs_at_length(phi: FSystem, n: int, pair_cap: int):
    rs = phi.core.enumerate_length(n)
    if not rs:
        return (), ()
    ss = phi.proc.enumerate_length(n)
    if len(rs) * len(ss) > pair_cap:
        raise ResourceLimit(
            f"{len(rs)}x{len(ss)} candidate pairs at length {n} "
            f"exceed the cap of {pair_cap}")
    return rs, ss


def fs_enumerate(phi: FSystem, max_len: int, pair_cap: int = DEFAULT_PAIR_CAP,
                 with_witnesses: bool = False):
    """All members of L(Phi) of length <= max_len, sorted by (length, lex).

    With with_witnesses=True, returns a dict mapping each member to one
    witnessing (r, s) pair (the first found in enumeration order).
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    witnesses: dict[str, tuple[str, str]] = {}
    for n in range(max_len + 1):
        rs, ss = _pairs_at_length(phi, n, pair_cap)
        for r in rs:
            for s in ss:
                w = fold(r, s)
                if w not in witnesses:
                    witnesses[w] = (r, s)
    if with_witnesses:
        return witnesses
    key = phi.core.alphabet.sort_key
    return sorted(witnesses, key=lambda w: (len(w), key(w)))


def fs_member(phi: FSystem, w: str, pair_cap: int = DEFAULT_PAIR_CAP,
              with_witness: bool = False):
    """Decide w in L(Phi) by exhausting equal-length pairs at |w|."""
    rs, ss = _pairs_at_length(phi, len(w), pair_cap)
    for r in rs:
        for s in ss:
            if fold(r, s) == w:
                return (True, (r, s)) if with_witness else True
    return (False, None) if with_witness else False


def equal_length_pair(phi: FSystem, min_len: int,
                      ceiling: int = DEFAULT_LENGTH_CEILING) -> tuple[str, str]:
    """Smallest n >= min_len with members in both components; within that
    n, the lexicographically smallest r and s."""
    if min_len < 0:
        raise ValueError("min_len must be >= 0")
    for n in range(min_len, min_len + ceiling + 1):
        if phi.core.has_length(n) and phi.proc.has_length(n):
            return phi.core.smallest_of_length(n), phi.proc.smallest_of_length(n)
    raise NoEqualLengthPair(
        f"no common length in [{min_len}, {min_len + ceiling}]")


def finite_language_system(words) -> FSystem:
    """F-system whose language is exactly the given finite word set:
    Phi = (union of the words, d*)."""
    from .regular import Empty, Union, literal_word

    words = sorted(set(words), key=lambda w: (len(w), w))
    symbols = sorted({ch for w in words for ch in w})
    alphabet = Alphabet(symbols or ["a"])
    if not words:
        ast = Empty()
    elif len(words) == 1:
        ast = literal_word(words[0])
    else:
        ast = Union(tuple(literal_word(w) for w in words))
    core = RegularLang.from_ast(ast, alphabet)
    proc = RegularLang("d*", PROC_ALPHABET)
    return FSystem(core, proc)


# ---------------------------------------------------------------------------
# Spec file format

def parse_spec(text: str) -> FSystem:
    """Parse the line-oriented F-system spec format.

    Keys: `alphabet`, `core.kind`, `core.regex` / `core.cfg` (repeatable),
    `proc.kind`, `proc.regex` / `proc.cfg`.  `#` starts a comment; the
    procedure alphabet is implicitly {u, d} and declaring it is an error.
    """
    values: dict[str, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SpecFileError(f"line {lineno}: expected 'key = value'")
        key, value = line.split("=", 1)
        key = key.strip()
        value = value.strip()
        if key == "proc.alphabet":
            raise SpecFileError(
                "the procedure alphabet is implicitly {u, d}; do not declare it")
        values.setdefault(key, []).append(value)

    def single(key):
        if key not in values:
            raise SpecFileError(f"missing key {key!r}")
        if len(values[key]) > 1:
            raise SpecFileError(f"duplicate key {key!r}")
        return values[key][0]

    alphabet = Alphabet(single("alphabet").split())

    def build(side, alpha):
        kind = single(f"{side}.kind")
        if kind == "regex":
            return RegularLang(single(f"{side}.regex"), alpha)
        if kind == "cfg":
            lines = values.get(f"{side}.cfg")
            if not lines:
                raise SpecFileError(f"missing key {side}.cfg")
            return ContextFreeLang("\n".join(lines), alpha)
        raise SpecFileError(f"{side}.kind must be 'regex' or 'cfg', got {kind!r}")

    return FSystem(build("core", alphabet), build("proc", PROC_ALPHABET))


def load_spec(path) -> FSystem:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())
