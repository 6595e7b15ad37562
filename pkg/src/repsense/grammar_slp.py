"""Straight-line grammars, the Bisection grammar and edit splicing.

Terminals are ints, nonterminals are strs.  Grammar size is the total length
of all right-hand sides, so a rule ``X -> a`` contributes 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from .text_core import DEL, INS, SUB, EditOp, Text, check_edit, render_symbol, require_nonempty

Symbol = Union[int, str]


@dataclass(frozen=True)
class Slp:
    rules: dict[str, tuple[Symbol, ...]]
    start: str
    _lengths: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def size(self) -> int:
        return sum(len(rhs) for rhs in self.rules.values())

    @property
    def binary_rules(self) -> int:
        """Rules whose right-hand side has two or more symbols."""
        return sum(1 for rhs in self.rules.values() if len(rhs) >= 2)

    @property
    def height(self) -> int:
        memo: dict[str, int] = {}
        for name in _topological(self):
            memo[name] = 1 + max((memo[c] for c in self.rules[name] if isinstance(c, str)),
                                 default=0)
        return memo[self.start]

    def length(self, symbol: Symbol) -> int:
        if isinstance(symbol, int):
            return 1
        if not self._lengths:
            for name in _topological(self):
                self._lengths[name] = sum(self.length(c) for c in self.rules[name])
        return self._lengths[symbol]

    def dump(self) -> str:
        def show(sym):
            return sym if isinstance(sym, str) else render_symbol(sym)
        lines = []
        for name in _topological(self)[::-1]:
            lines.append(f"{name} -> " + " ".join(show(c) for c in self.rules[name]))
        return "\n".join(lines)


def _topological(G: Slp) -> list[str]:
    """Nonterminals reachable from the start, children before parents.

    Raises ValueError on a cycle or an undefined nonterminal.
    """
    state: dict[str, int] = {}
    order: list[str] = []
    stack: list[tuple[str, int]] = [(G.start, 0)]
    while stack:
        name, idx = stack.pop()
        if idx == 0:
            if state.get(name) == 2:
                continue
            if state.get(name) == 1:
                raise ValueError(f"cyclic rule through {name}")
            if name not in G.rules:
                raise ValueError(f"undefined nonterminal {name}")
            state[name] = 1
        rhs = G.rules[name]
        while idx < len(rhs) and not (isinstance(rhs[idx], str) and state.get(rhs[idx]) != 2):
            idx += 1
        if idx < len(rhs):
            child = rhs[idx]
            if state.get(child) == 1:
                raise ValueError(f"cyclic rule through {child}")
            stack.append((name, idx + 1))
            stack.append((child, 0))
        else:
            state[name] = 2
            order.append(name)
    return order


def slp_expand(G: Slp) -> Text:
    memo: dict[str, tuple[int, ...]] = {}
    for name in _topological(G):
        out: list[int] = []
        for c in G.rules[name]:
            if isinstance(c, str):
                out.extend(memo[c])
            else:
                out.append(c)
        memo[name] = tuple(out)
    return Text(memo[G.start])


def bisection(T: Sequence[int]) -> Slp:
    """Bisection grammar: the left child of a node of length m covers 2^j
    symbols for the largest j with 2^j < m; equal subtrees share one rule.

    Two nodes derive the same string iff they have the same length and the
    same pair of children, so sharing is keyed exactly by the child names.
    """
    require_nonempty(T)
    symbols = tuple(T)
    rules: dict[str, tuple[Symbol, ...]] = {}
    names: dict[tuple, str] = {}

    def name_for(key, rhs):
        name = names.get(key)
        if name is None:
            name = names[key] = f"X{len(names) + 1}"
            rules[name] = rhs
        return name

    def build(i: int, m: int) -> str:
        if m == 1:
            return name_for(("leaf", symbols[i]), (symbols[i],))
        half = 1 << ((m - 1).bit_length() - 1)
        left = build(i, half)
        right = build(i + half, m - half)
        return name_for((left, right), (left, right))

    start = build(0, len(symbols))
    return Slp(rules, start)


def g_bsc(T: Sequence[int]) -> int:
    return bisection(T).size


def splice_grammar(G: Slp, e: EditOp) -> Slp:
    """Grammar for the edited text: every rule on the root-to-leaf path of the
    edited position gets a primed copy whose right-hand side points at the
    primed child; rules no longer reachable are dropped.
    """
    n = G.length(G.start)
    check_edit(_LengthOnly(n, G), e)
    # insertion after the last symbol is placed right of the final leaf
    target = min(e.position, n) if e.kind == INS else e.position
    after = e.kind == INS and e.position == n + 1

    path: list[tuple[str, int]] = []
    name, offset = G.start, target
    while True:
        rhs = G.rules[name]
        for j, c in enumerate(rhs):
            m = G.length(c)
            if offset <= m:
                break
            offset -= m
        path.append((name, j))
        if isinstance(rhs[j], int):
            break
        name = rhs[j]

    rules = dict(G.rules)
    replacement: tuple[Symbol, ...] | None = None
    for depth, (name, j) in enumerate(reversed(path)):
        rhs = list(G.rules[name])
        if depth == 0:
            if e.kind == SUB:
                rhs[j] = e.symbol
            elif e.kind == DEL:
                del rhs[j]
            else:
                rhs.insert(j + 1 if after else j, e.symbol)
        elif replacement is None:
            del rhs[j]
        else:
            rhs[j] = replacement[0]
        if rhs:
            fresh = name + "'"
            while fresh in rules:
                fresh += "'"
            rules[fresh] = tuple(rhs)
            replacement = (fresh,)
        else:
            replacement = None
    if replacement is None:
        return Slp({"S": ()}, "S")
    spliced = Slp(rules, replacement[0])
    live = set(_topological(spliced))
    return Slp({k: v for k, v in rules.items() if k in live}, spliced.start)


class _LengthOnly:
    """Sequence stand-in so edit validation can run without expanding G."""

    def __init__(self, n: int, G: Slp):
        self.n, self.G = n, G

    def __len__(self):
        return self.n

    def __getitem__(self, i: int) -> int:
        name, offset = self.G.start, i + 1
        while True:
            for c in self.G.rules[name]:
                m = self.G.length(c)
                if offset <= m:
                    break
                offset -= m
            if isinstance(c, int):
                return c
            name = c
