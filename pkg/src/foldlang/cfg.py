"""Context-free engine.

Grammars are parsed from a line-oriented syntax, converted to a binary
normal form (A -> BC / A -> a, plus a start-epsilon flag), and queried
through CYK membership, per-length enumeration, and the context-free
pumping-lemma decomposition taken from a deterministic parse tree.

Grammar syntax: one production group per line, `A -> alpha | beta | eps`;
nonterminals are uppercase identifiers, terminals are single lowercase
characters, `eps` is the empty right-hand side.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .errors import DecompositionError, GrammarSyntaxError
from .folding import Alphabet

_NONTERM = re.compile(r"[A-Z][A-Za-z0-9_]*$")


@dataclass
class Grammar:
    nonterminals: tuple[str, ...]
    terminals: Alphabet
    productions: dict[str, list[tuple[str, ...]]]
    start: str


def parse_grammar(text: str, alphabet: Alphabet | None = None) -> Grammar:
    """Parse grammar text; the first line's head is the start symbol.

    When no alphabet is given, it is inferred from the terminals in order
    of first appearance.
    """
    productions: dict[str, list[tuple[str, ...]]] = {}
    heads: list[str] = []
    terminals_seen: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise GrammarSyntaxError(f"line {lineno}: expected 'A -> ...'")
        head, rhs_text = line.split("->", 1)
        head = head.strip()
        if not _NONTERM.match(head):
            raise GrammarSyntaxError(f"line {lineno}: bad nonterminal {head!r}")
        if head not in productions:
            productions[head] = []
            heads.append(head)
        for alt in rhs_text.split("|"):
            symbols = alt.split()
            if symbols == ["eps"]:
                productions[head].append(())
                continue
            if not symbols:
                raise GrammarSyntaxError(f"line {lineno}: empty alternative (use 'eps')")
            rhs = []
            for sym in symbols:
                if _NONTERM.match(sym):
                    rhs.append(sym)
                elif len(sym) == 1 and sym.islower():
                    if alphabet is not None and sym not in alphabet:
                        raise GrammarSyntaxError(
                            f"line {lineno}: terminal {sym!r} not in alphabet")
                    if sym not in terminals_seen:
                        terminals_seen.append(sym)
                    rhs.append(sym)
                else:
                    raise GrammarSyntaxError(f"line {lineno}: bad symbol {sym!r}")
            productions[head].append(tuple(rhs))
    if not heads:
        raise GrammarSyntaxError("no productions")
    nonterminals = tuple(heads)
    for head, alts in productions.items():
        for rhs in alts:
            for sym in rhs:
                if _NONTERM.match(sym) and sym not in productions:
                    raise GrammarSyntaxError(f"undeclared nonterminal {sym!r}")
    if alphabet is None:
        alphabet = Alphabet(terminals_seen or ["a"])
    return Grammar(nonterminals, alphabet, productions, heads[0])


# ---------------------------------------------------------------------------
# Normal form

@dataclass
class NormalFormGrammar:
    """Binary normal form: A -> B C and A -> a only; the empty string is
    derivable exactly when start_epsilon is set."""

    nonterminals: tuple[str, ...]
    terminals: Alphabet
    bin_prods: dict[str, list[tuple[str, str]]]
    term_prods: dict[str, list[str]]
    start: str
    start_epsilon: bool

    def n_nonterminals(self) -> int:
        return len(self.nonterminals)


def _nullable_set(g: Grammar) -> set[str]:
    nullable: set[str] = set()
    changed = True
    while changed:
        changed = False
        for head, alts in g.productions.items():
            if head in nullable:
                continue
            for rhs in alts:
                if all(sym in nullable for sym in rhs):
                    nullable.add(head)
                    changed = True
                    break
    return nullable


def _prune_useless(nonterminals, prods, start):
    """Drop non-generating and unreachable nonterminals."""
    generating: set[str] = set()
    changed = True
    while changed:
        changed = False
        for head, alts in prods.items():
            if head in generating:
                continue
            for rhs in alts:
                if all((s in generating) or (s not in prods) for s in rhs):
                    generating.add(head)
                    changed = True
                    break
    if start not in generating:
        return (start,), {start: []}
    reach = {start}
    frontier = [start]
    while frontier:
        head = frontier.pop()
        for rhs in prods[head]:
            for s in rhs:
                if s in prods and s in generating and s not in reach:
                    reach.add(s)
                    frontier.append(s)
    keep = generating & reach
    new_prods = {}
    for head in keep:
        new_prods[head] = [rhs for rhs in prods[head]
                           if all((s not in prods) or (s in keep) for s in rhs)]
    order = tuple(nt for nt in nonterminals if nt in keep)
    return order, new_prods


def to_normal_form(g: Grammar) -> NormalFormGrammar:
    nonterminals, prods = _prune_useless(g.nonterminals, g.productions, g.start)
    sub = Grammar(nonterminals, g.terminals, prods, g.start)

    # epsilon elimination
    nullable = _nullable_set(sub)
    start_epsilon = g.start in nullable
    eps_free: dict[str, set[tuple[str, ...]]] = {nt: set() for nt in nonterminals}
    for head, alts in prods.items():
        for rhs in alts:
            opt = [i for i, s in enumerate(rhs) if s in nullable]
            for mask in itertools.product((False, True), repeat=len(opt)):
                drop = {opt[i] for i, d in enumerate(mask) if d}
                new = tuple(s for i, s in enumerate(rhs) if i not in drop)
                if new:
                    eps_free[head].add(new)

    # unit-production elimination
    unit_closure: dict[str, set[str]] = {nt: {nt} for nt in nonterminals}
    changed = True
    while changed:
        changed = False
        for a in nonterminals:
            for rhs in list(eps_free[a]):
                if len(rhs) == 1 and rhs[0] in eps_free:
                    for b in unit_closure[rhs[0]]:
                        if b not in unit_closure[a]:
                            unit_closure[a].add(b)
                            changed = True
    no_unit: dict[str, set[tuple[str, ...]]] = {nt: set() for nt in nonterminals}
    for a in nonterminals:
        for b in unit_closure[a]:
            for rhs in eps_free[b]:
                if not (len(rhs) == 1 and rhs[0] in eps_free):
                    no_unit[a].add(rhs)

    # terminal lifting and binarization
    order = list(nonterminals)
    bin_prods: dict[str, list[tuple[str, str]]] = {nt: [] for nt in order}
    term_prods: dict[str, list[str]] = {nt: [] for nt in order}
    term_nt: dict[str, str] = {}
    suffix_nt: dict[tuple[str, ...], str] = {}

    def fresh(base):
        name = base
        k = 0
        while name in bin_prods:
            k += 1
            name = f"{base}{k}"
        order.append(name)
        bin_prods[name] = []
        term_prods[name] = []
        return name

    def lift(sym):
        if sym in eps_free:
            return sym
        if sym not in term_nt:
            nt = fresh(f"T_{sym}")
            term_prods[nt].append(sym)
            term_nt[sym] = nt
        return term_nt[sym]

    def chain(symbols):
        """Nonterminal deriving the given symbol sequence (len >= 2)."""
        if symbols in suffix_nt:
            return suffix_nt[symbols]
        nt = fresh("X")
        suffix_nt[symbols] = nt
        if len(symbols) == 2:
            bin_prods[nt].append((symbols[0], symbols[1]))
        else:
            bin_prods[nt].append((symbols[0], chain(symbols[1:])))
        return nt

    for a in nonterminals:
        for rhs in sorted(no_unit[a]):
            if len(rhs) == 1:
                term_prods[a].append(rhs[0])
            else:
                lifted = tuple(lift(s) for s in rhs)
                if len(lifted) == 2:
                    bin_prods[a].append(lifted)
                else:
                    bin_prods[a].append((lifted[0], chain(lifted[1:])))

    order2, _ = _prune_useless(
        tuple(order),
        {nt: [tuple(p) for p in bin_prods[nt]] + [(t,) for t in term_prods[nt]]
         for nt in order},
        g.start)
    keep = set(order2)
    return NormalFormGrammar(
        nonterminals=tuple(nt for nt in order if nt in keep),
        terminals=g.terminals,
        bin_prods={nt: sorted(p for p in bin_prods[nt]
                              if p[0] in keep and p[1] in keep)
                   for nt in order if nt in keep},
        term_prods={nt: sorted(term_prods[nt]) for nt in order if nt in keep},
        start=g.start,
        start_epsilon=start_epsilon,
    )


# ---------------------------------------------------------------------------
# CYK membership (bitmask over start positions, per nonterminal and span)

def _cyk_masks(nf: NormalFormGrammar, w: str) -> dict[tuple[str, int], int]:
    """masks[(A, l)] has bit i set iff A derives w[i:i+l]."""
    n = len(w)
    masks: dict[tuple[str, int], int] = {}
    for a in nf.nonterminals:
        m = 0
        for t in nf.term_prods[a]:
            for i, ch in enumerate(w):
                if ch == t:
                    m |= 1 << i
        masks[(a, 1)] = m
    for l in range(2, n + 1):
        for a in nf.nonterminals:
            m = 0
            for b, c in nf.bin_prods[a]:
                for s in range(1, l):
                    left = masks[(b, s)]
                    if not left:
                        continue
                    right = masks[(c, l - s)]
                    if right:
                        m |= left & (right >> s)
            masks[(a, l)] = m & ((1 << (n - l + 1)) - 1)
    return masks


def cyk_member(nf: NormalFormGrammar, w: str) -> bool:
    if w == "":
        return nf.start_epsilon
    for ch in w:
        if ch not in nf.terminals:
            return False
    if nf.start not in nf.bin_prods:
        return False
    masks = _cyk_masks(nf, w)
    return bool(masks[(nf.start, len(w))] & 1)


# ---------------------------------------------------------------------------
# Enumeration

class _Enumerator:
    def __init__(self, nf: NormalFormGrammar):
        self.nf = nf
        self.cache: dict[tuple[str, int], tuple[str, ...]] = {}

    def strings(self, a: str, n: int) -> tuple[str, ...]:
        key = (a, n)
        if key in self.cache:
            return self.cache[key]
        nf = self.nf
        out: set[str] = set()
        if n == 1:
            out.update(nf.term_prods[a])
        elif n >= 2:
            for b, c in nf.bin_prods[a]:
                for s in range(1, n):
                    lefts = self.strings(b, s)
                    if not lefts:
                        continue
                    rights = self.strings(c, n - s)
                    for x in lefts:
                        for y in rights:
                            out.add(x + y)
        result = tuple(sorted(out, key=nf.terminals.sort_key))
        self.cache[key] = result
        return result

    def nonempty(self, a: str, n: int) -> bool:
        # boolean DP, cheaper than materializing strings
        key = ("#", a, n)
        if key in self.cache:
            return self.cache[key]
        nf = self.nf
        if n == 1:
            val = bool(nf.term_prods[a])
        elif n < 1:
            val = False
        else:
            val = any(self.nonempty(b, s) and self.nonempty(c, n - s)
                      for b, c in nf.bin_prods[a] for s in range(1, n))
        self.cache[key] = val
        return val

    def smallest(self, a: str, n: int) -> str | None:
        """Lexicographically smallest string of length n derived from a.
        Exact because all candidates per split have equal length."""
        key = ("<", a, n)
        if key in self.cache:
            return self.cache[key]
        nf = self.nf
        best: str | None = None
        if n == 1:
            for t in nf.term_prods[a]:
                if best is None or nf.terminals.sort_key(t) < nf.terminals.sort_key(best):
                    best = t
        elif n >= 2:
            for b, c in nf.bin_prods[a]:
                for s in range(1, n):
                    if not (self.nonempty(b, s) and self.nonempty(c, n - s)):
                        continue
                    cand = self.smallest(b, s) + self.smallest(c, n - s)
                    if best is None or nf.terminals.sort_key(cand) < nf.terminals.sort_key(best):
                        best = cand
        self.cache[key] = best
        return best


def enumerate_length(nf: NormalFormGrammar, n: int, _enum: _Enumerator | None = None) -> list[str]:
    """All length-n members, lexicographic by alphabet order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return [""] if nf.start_epsilon else []
    if nf.start not in nf.bin_prods:
        return []
    enum = _enum or _Enumerator(nf)
    return list(enum.strings(nf.start, n))


# ---------------------------------------------------------------------------
# Pumping decomposition

def cfg_pumping_length(nf: NormalFormGrammar) -> int:
    """2^(k+1) for k nonterminals, a valid pumping length."""
    return 2 ** (nf.n_nonterminals() + 1)


@dataclass(frozen=True)
class CfgDecomposition:
    """u v x y z with |vy| >= 1, |vxy| <= p, u v^i x y^i z in L for i >= 0.

    v or y may individually be empty; only |vy| >= 1 is guaranteed."""

    u: str
    v: str
    x: str
    y: str
    z: str

    @property
    def whole(self) -> str:
        return self.u + self.v + self.x + self.y + self.z

    def pumped(self, i: int) -> str:
        return self.u + self.v * i + self.x + self.y * i + self.z


@dataclass
class _Node:
    nt: str
    start: int
    length: int
    children: list = field(default_factory=list)


def _build_tree(nf: NormalFormGrammar, masks, w: str, a: str, i: int, l: int) -> _Node:
    """Deterministic parse tree: first production, smallest split."""
    node = _Node(a, i, l)
    if l == 1 and w[i] in nf.term_prods[a]:
        return node
    for b, c in nf.bin_prods[a]:
        for s in range(1, l):
            if (masks[(b, s)] >> i) & 1 and (masks[(c, l - s)] >> (i + s)) & 1:
                node.children = [
                    _build_tree(nf, masks, w, b, i, s),
                    _build_tree(nf, masks, w, c, i + s, l - s),
                ]
                return node
    raise AssertionError(f"no derivation for {a} over w[{i}:{i+l}]")


def _longest_path(node: _Node) -> list[_Node]:
    path = [node]
    cur = node
    heights: dict[int, int] = {}

    def height(nd: _Node) -> int:
        key = id(nd)
        if key not in heights:
            heights[key] = 1 + max((height(ch) for ch in nd.children), default=0)
        return heights[key]

    while cur.children:
        cur = max(cur.children, key=height)  # ties resolve to the left child
        path.append(cur)
    return path


def cfg_decompose(nf: NormalFormGrammar, w: str) -> CfgDecomposition:
    """Decompose via the lowest repeated-nonterminal pair on the longest
    root-to-leaf path of a deterministic parse tree."""
    if not cyk_member(nf, w):
        raise DecompositionError(f"{w!r} is not a member")
    p = cfg_pumping_length(nf)
    if len(w) < p:
        raise DecompositionError(f"|w|={len(w)} < pumping length {p}")
    masks = _cyk_masks(nf, w)
    tree = _build_tree(nf, masks, w, nf.start, 0, len(w))
    path = _longest_path(tree)
    k = nf.n_nonterminals()
    tail = path[-(k + 1):]
    seen: dict[str, _Node] = {}
    upper = lower = None
    for node in reversed(tail):
        if node.nt in seen:
            upper, lower = node, seen[node.nt]
            break
        seen[node.nt] = node
    if upper is None:
        raise AssertionError("no repeated nonterminal on longest path")  # unreachable
    u = w[:upper.start]
    v = w[upper.start:lower.start]
    x = w[lower.start:lower.start + lower.length]
    y = w[lower.start + lower.length:upper.start + upper.length]
    z = w[upper.start + upper.length:]
    return CfgDecomposition(u, v, x, y, z)


def is_infinite(nf: NormalFormGrammar) -> bool:
    """Infinite iff the binary-production digraph over useful nonterminals
    has a cycle (each binary node adds at least one terminal elsewhere)."""
    if nf.start not in nf.bin_prods:
        return False
    edges = {a: {b for bc in nf.bin_prods[a] for b in bc} for a in nf.nonterminals}
    color: dict[str, int] = {}

    def dfs(a):
        color[a] = 1
        for b in edges.get(a, ()):
            if color.get(b) == 1:
                return True
            if b not in color and dfs(b):
                return True
        color[a] = 2
        return False

    return any(dfs(a) for a in nf.nonterminals if a not in color)


# ---------------------------------------------------------------------------
# Language facade

class ContextFreeLang:
    """A context-free language: grammar text, normalized once."""

    def __init__(self, grammar_text: str, alphabet: Alphabet | None = None):
        self.grammar = parse_grammar(grammar_text, alphabet)
        self.alphabet = self.grammar.terminals
        self.normal_form = to_normal_form(self.grammar)
        self._enum = _Enumerator(self.normal_form)

    def member(self, w: str) -> bool:
        return cyk_member(self.normal_form, w)

    def enumerate_length(self, n: int) -> tuple[str, ...]:
        return tuple(enumerate_length(self.normal_form, n, self._enum))

    def has_length(self, n: int) -> bool:
        if n == 0:
            return self.normal_form.start_epsilon
        if self.normal_form.start not in self.normal_form.bin_prods:
            return False
        return self._enum.nonempty(self.normal_form.start, n)

    def smallest_of_length(self, n: int) -> str | None:
        if n == 0:
            return "" if self.normal_form.start_epsilon else None
        if not self.has_length(n):
            return None
        return self._enum.smallest(self.normal_form.start, n)

    def pumping_length(self) -> int:
        return cfg_pumping_length(self.normal_form)

    def decompose(self, w: str) -> CfgDecomposition:
        return cfg_decompose(self.normal_form, w)

    def is_infinite(self) -> bool:
        return is_infinite(self.normal_form)

    def __repr__(self):
        return f"ContextFreeLang(start={self.grammar.start!r})"
