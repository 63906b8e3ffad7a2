"""The folding operation on strings.

A string w over an alphabet is folded under a direction string v over
{u, d} of the same length: each step takes the next symbol of w and
either prepends it to the stack built so far (fold up, 'u') or appends
it (fold down, 'd').  The result reads the final stack top to bottom.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .errors import AlphabetError, UndefinedFold

GAMMA = ("u", "d")


class Direction(enum.Enum):
    """One folding step: up prepends, down appends."""

    UP = "u"
    DOWN = "d"

    def __str__(self):
        return self.value

    @classmethod
    def from_char(cls, ch: str) -> "Direction":
        if ch == "u":
            return cls.UP
        if ch == "d":
            return cls.DOWN
        raise AlphabetError(f"direction must be 'u' or 'd', got {ch!r}")


class Alphabet:
    """Ordered set of distinct single-character symbols."""

    def __init__(self, symbols):
        syms = list(symbols)
        if not syms:
            raise AlphabetError("alphabet must be non-empty")
        seen = set()
        for s in syms:
            if len(s) != 1:
                raise AlphabetError(f"symbols must be single characters, got {s!r}")
            if s in seen:
                raise AlphabetError(f"duplicate symbol {s!r}")
            seen.add(s)
        self.symbols = tuple(syms)
        self._index = {s: i for i, s in enumerate(self.symbols)}

    def __contains__(self, symbol):
        return symbol in self._index

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return f"Alphabet({''.join(self.symbols)!r})"

    def index(self, symbol) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise AlphabetError(f"symbol {symbol!r} not in alphabet") from None

    def validate(self, word: str) -> str:
        for ch in word:
            if ch not in self._index:
                raise AlphabetError(f"symbol {ch!r} not in alphabet")
        return word

    def sort_key(self, word: str):
        """Key ordering words lexicographically by declared symbol order."""
        return tuple(self._index[ch] for ch in word)


#: The folding-procedure alphabet, fixed to {u, d}.
PROC_ALPHABET = Alphabet(GAMMA)


def check_proc(v: str) -> str:
    for ch in v:
        if ch not in GAMMA:
            raise AlphabetError(f"procedure symbol must be 'u' or 'd', got {ch!r}")
    return v


@dataclass(frozen=True)
class FoldStep:
    stack: str
    symbol: str
    direction: Direction


@dataclass(frozen=True)
class FoldTrace:
    """Step-by-step record of a fold; steps[t].stack has length t+1."""

    steps: tuple[FoldStep, ...]

    @property
    def result(self) -> str:
        return self.steps[-1].stack if self.steps else ""


def fold_step(stack: str, symbol: str, direction, alphabet: Alphabet | None = None) -> str:
    """One application of the single-step fold: prepend on UP, append on DOWN."""
    if alphabet is not None and symbol not in alphabet:
        raise AlphabetError(f"symbol {symbol!r} not in alphabet")
    if not isinstance(direction, Direction):
        direction = Direction.from_char(direction)
    if direction is Direction.UP:
        return symbol + stack
    return stack + symbol


def fold(w: str, v: str) -> str:
    """Fold w under direction string v; undefined (raises) when |w| != |v|.

    Total work is O(n) symbol moves: the stack is kept as a deque with
    constant-time prepend/append.
    """
    if len(w) != len(v):
        raise UndefinedFold(f"|w|={len(w)} != |v|={len(v)}")
    check_proc(v)
    stack: deque[str] = deque()
    for a, b in zip(w, v):
        if b == "u":
            stack.appendleft(a)
        else:
            stack.append(a)
    return "".join(stack)


def split_updown(w: str, v: str) -> tuple[str, str]:
    """Split w into (w_up, w_down), the subsequences at up/down positions of v.

    Satisfies the two-way identity: reverse(w_up) + w_down == fold(w, v).
    """
    if len(w) != len(v):
        raise UndefinedFold(f"|w|={len(w)} != |v|={len(v)}")
    check_proc(v)
    up = []
    down = []
    for a, b in zip(w, v):
        (up if b == "u" else down).append(a)
    return "".join(up), "".join(down)


def fold_trace(w: str, v: str) -> FoldTrace:
    """Like fold, but records the stack after every step."""
    if len(w) != len(v):
        raise UndefinedFold(f"|w|={len(w)} != |v|={len(v)}")
    check_proc(v)
    stack: deque[str] = deque()
    steps = []
    for a, b in zip(w, v):
        if b == "u":
            stack.appendleft(a)
        else:
            stack.append(a)
        steps.append(FoldStep("".join(stack), a, Direction.from_char(b)))
    return FoldTrace(tuple(steps))


def fold_permutation(v: str) -> list[int]:
    """Position permutation induced by v: result[k] = index into w of the
    symbol landing at output position k.  fold(w, v)[k] == w[perm[k]]."""
    check_proc(v)
    order: deque[int] = deque()
    for i, b in enumerate(v):
        if b == "u":
            order.appendleft(i)
        else:
            order.append(i)
    return list(order)
