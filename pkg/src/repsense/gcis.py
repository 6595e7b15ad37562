"""Grammar compression by induced sorting (GCIS).

Each level appends a sentinel smaller than every symbol, classifies
positions as L or S, cuts the string at LMS positions (position 1 is
always a cut) and replaces every factor by a nonterminal numbered by its
lexicographic rank.  Recursion stops once the only LMS positions left are
the first position and the sentinel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .grammar_slp import Slp
from .text_core import Text, require_nonempty

L_TYPE, S_TYPE = "L", "S"


def classify_ls(S: Sequence[int]) -> list[str]:
    """Types of every position of S followed by the sentinel (length n+1).

    A position is L iff its suffix is larger than the next one; with equal
    neighbours it inherits the type on its right.  The sentinel is S, so
    the last real symbol is always L.
    """
    n = len(S)
    types = [S_TYPE] * (n + 1)
    for k in range(n - 1, -1, -1):
        if k == n - 1:
            types[k] = L_TYPE
        elif S[k] > S[k + 1]:
            types[k] = L_TYPE
        elif S[k] == S[k + 1]:
            types[k] = types[k + 1]
    return types


def lms_positions(S: Sequence[int]) -> list[int]:
    """1-based cut points over S$: position 1, every S preceded by L, and |S$|."""
    types = classify_ls(S)
    cuts = [1]
    for i in range(1, len(types)):
        if types[i] == S_TYPE and types[i - 1] == L_TYPE:
            cuts.append(i + 1)
    return cuts


@dataclass(frozen=True)
class GcisLevel:
    dictionary: tuple[tuple[int, ...], ...]  # distinct factors in rank order
    labels: tuple[int, ...]                  # nonterminal of each dictionary entry
    string: tuple[int, ...]                  # the next-level string G_h


@dataclass(frozen=True)
class GcisGrammar:
    text: Text
    sigma: int
    levels: tuple[GcisLevel, ...]

    @property
    def final(self) -> tuple[int, ...]:
        return self.levels[-1].string if self.levels else tuple(self.text)

    @property
    def height(self) -> int:
        return len(self.levels)

    @property
    def size(self) -> int:
        return sum(sum(map(len, lv.dictionary)) for lv in self.levels) + len(self.final)

    def dump(self) -> str:
        def show(seq):
            return ("" if all(s < 10 for s in seq) else " ").join(map(str, seq))
        lines = [f"G0 = {show(self.text)}$"]
        for h, lv in enumerate(self.levels, start=1):
            entries = ", ".join(f"{lab} -> {show(d)}" for lab, d in zip(lv.labels, lv.dictionary))
            lines.append(f"D{h} = {{{entries}}}  size {sum(map(len, lv.dictionary))}")
            lines.append(f"G{h} = {show(lv.string)}$")
        lines.append(f"g_is = {self.size}")
        return "\n".join(lines)


def _parse_level(G: tuple[int, ...]):
    """Factors of one level, or None when there is no interior LMS position."""
    cuts = lms_positions(G)
    if len(cuts) <= 2:
        return None
    return [G[cuts[j] - 1:cuts[j + 1] - 1] for j in range(len(cuts) - 1)]


def gcis_build(T: Sequence[int], sigma: int | None = None) -> GcisGrammar:
    """Full leveled grammar.  Nonterminals of level h are numbered
    ``1 + sigma + (rules of earlier levels) + rank``; ``sigma`` defaults to
    the largest symbol of T.
    """
    require_nonempty(T)
    text = Text(T)
    sigma = max(text) if sigma is None else sigma
    levels = []
    G = tuple(text)
    used = 0
    while True:
        factors = _parse_level(G)
        if factors is None:
            break
        dictionary = sorted(set(factors))
        base = 1 + sigma + used
        label = {d: base + r for r, d in enumerate(dictionary)}
        G = tuple(label[f] for f in factors)
        levels.append(GcisLevel(tuple(dictionary), tuple(label[d] for d in dictionary), G))
        used += len(dictionary)
    return GcisGrammar(text, sigma, tuple(levels))


def g_is(T: Sequence[int]) -> int:
    """GCIS grammar size: total dictionary length over levels plus the final string."""
    require_nonempty(T)
    G = tuple(T)
    size = 0
    while True:
        n = len(G)
        # types right to left; a cut goes before every S whose left neighbour is L
        cuts = []
        t_next, nxt = True, None  # the sentinel is S and smaller than everything
        for k in range(n - 1, -1, -1):
            c = G[k]
            t = False if nxt is None or c > nxt else (True if c < nxt else t_next)
            if t_next and not t:
                cuts.append(k + 2)
            t_next, nxt = t, c
        cuts.append(1)
        if len(cuts) <= 2:
            return size + n
        cuts.reverse()
        factors = [G[cuts[j] - 1:cuts[j + 1] - 1] for j in range(len(cuts) - 1)]
        dictionary = sorted(set(factors))
        size += sum(map(len, dictionary))
        rank = {d: r for r, d in enumerate(dictionary)}
        G = tuple(rank[f] for f in factors)


def to_slp(grammar: GcisGrammar) -> Slp:
    """Export as an SLP with one rule per dictionary entry plus the start rule."""
    rules: dict[str, tuple] = {}
    level_symbols: set[int] = set()
    for lv in grammar.levels:
        for lab, d in zip(lv.labels, lv.dictionary):
            rules[f"R{lab}"] = tuple(f"R{c}" if c in level_symbols else c for c in d)
        level_symbols = set(lv.labels)
    rules["S"] = tuple(f"R{c}" if c in level_symbols else c for c in grammar.final)
    return Slp(rules, "S")
