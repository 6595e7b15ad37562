"""CDAWG edge count from maximal repeats.

Nodes of the CDAWG other than the sink are the source (empty string) and
the maximal repeats; every node has one out-edge per distinct symbol that
extends it to the right inside T.  Text boundaries count as distinct
contexts, so ``a^h`` is a maximal repeat of ``a^n`` for every h < n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .complexity_delta import lcp_array, suffix_array
from .text_core import Text, limits, require_nonempty

_START, _END = -1, -2


@dataclass(frozen=True)
class MaximalRepeatSet:
    repeats: tuple[Text, ...]
    extensions: dict[Text, tuple[int, ...]]  # includes the empty string (source)

    @property
    def edges(self) -> int:
        return sum(len(v) for v in self.extensions.values())


def maximal_repeats(T: Sequence[int], limit: int | None = None) -> MaximalRepeatSet:
    """Maximal repeats as the left-diverse LCP intervals of the suffix array."""
    require_nonempty(T)
    n = len(T)
    cap = limits()["e"] if limit is None else limit
    if n > cap:
        raise ValueError(f"n={n} exceeds the CDAWG limit {cap}")
    symbols = tuple(T)
    sa = suffix_array(symbols)
    lcp = lcp_array(symbols, sa) + [0]
    repeats = []
    ext: dict[Text, tuple[int, ...]] = {Text(()): tuple(sorted(set(symbols)))}

    def close(depth: int, lo: int, hi: int) -> None:
        # suffixes sa[lo..hi] share exactly `depth` symbols and diverge after them
        lefts = {symbols[sa[x] - 1] if sa[x] else _START for x in range(lo, hi + 1)}
        if len(lefts) < 2:
            return
        rep = Text(symbols[sa[lo]:sa[lo] + depth])
        repeats.append(rep)
        ext[rep] = tuple(sorted({symbols[sa[x] + depth] for x in range(lo, hi + 1)
                                 if sa[x] + depth < n}))

    stack: list[tuple[int, int]] = [(0, 0)]  # (lcp value, left boundary)
    for j in range(1, n + 1):
        lb = j - 1
        while lcp[j] < stack[-1][0]:
            depth, lb = stack.pop()
            close(depth, lb, j - 1)
        if lcp[j] > stack[-1][0]:
            stack.append((lcp[j], lb))
    repeats.sort(key=lambda r: (len(r), r))
    return MaximalRepeatSet(tuple(repeats), ext)


def cdawg_e(T: Sequence[int], limit: int | None = None) -> int:
    """Number of CDAWG edges: right-extensions of the source and of each maximal repeat."""
    return maximal_repeats(T, limit).edges
