"""Greedy Lempel-Ziv style factorizations: LZ77, LZ77sr, LZSS, LZSSsr, LZ78, LZ-End.

All parsers encode the text as a ``str`` and let ``str.find`` do substring
search, which keeps the quadratic greedy loops fast enough for exhaustive
sweeps.  A factor that copies earlier material records the 1-based start of
one earlier occurrence (``source``) and the copied length; a trailing
explicit symbol, if any, is in ``symbol``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .text_core import Text, as_str, render, require_nonempty

LZ77, LZ77SR, LZSS, LZSSSR, LZ78, LZEND = "LZ77", "LZ77sr", "LZSS", "LZSSsr", "LZ78", "LZEnd"

LITERAL, REFERENCE, LZ78_PAIR = "literal", "reference", "lz78-pair"


@dataclass(frozen=True)
class Factor:
    start: int
    length: int
    kind: str
    source: int | None = None   # reference: start of the copied occurrence
    parent: int | None = None   # lz78-pair: index of the extended factor, 0 = empty
    symbol: int | None = None   # explicit last symbol (literal, lz78-pair, LZ77-style)

    @property
    def copied(self) -> int:
        """How many leading symbols come from ``source``."""
        if self.kind != REFERENCE:
            return 0
        return self.length - (self.symbol is not None)


@dataclass(frozen=True)
class Factorization:
    variant: str
    text: Text
    factors: tuple[Factor, ...]

    @property
    def z(self) -> int:
        return len(self.factors)

    def pieces(self) -> list[Text]:
        return [Text(self.text[f.start - 1:f.start - 1 + f.length]) for f in self.factors]

    def render(self) -> str:
        return "|".join(render(p) for p in self.pieces())


def reconstruct(fz: Factorization) -> Text:
    """Rebuild the text from factor data alone (never reading ``fz.text``)."""
    out: list[int] = []
    phrases: list[tuple[int, ...]] = []
    for f in fz.factors:
        begin = len(out)
        if f.kind == LITERAL:
            out.append(f.symbol)
        elif f.kind == LZ78_PAIR:
            base = phrases[f.parent - 1] if f.parent else ()
            out.extend(base)
            if f.symbol is not None:
                out.append(f.symbol)
        else:
            src = f.source - 1
            for t in range(f.copied):
                out.append(out[src + t])  # symbol by symbol: overlap is allowed
            if f.symbol is not None:
                out.append(f.symbol)
        phrases.append(tuple(out[begin:]))
    return Text(out)


def _extend(s: str, i: int, window_end) -> tuple[int, int]:
    """Longest l with s[i:i+l] found starting before i inside s[:window_end(l)].

    Returns (l, start of leftmost such occurrence or -1).
    """
    n = len(s)
    l, src = 0, -1
    lo = 0
    while i + l < n:
        j = s.find(s[i:i + l + 1], lo, window_end(l + 1))
        if j < 0 or j >= i:
            break
        l, src, lo = l + 1, j, j
    return l, src


def _lz77_like(T: Sequence[int], variant: str, self_ref: bool) -> Factorization:
    require_nonempty(T)
    text = Text(T)
    s = as_str(text)
    n = len(s)
    factors = []
    i = 0
    while i < n:
        window = (lambda l: i + l - 1) if self_ref else (lambda l: i)
        l, src = _extend(s, i, window)
        has_tail = i + l < n
        length = l + has_tail
        sym = text[i + l] if has_tail else None
        if l == 0:
            factors.append(Factor(i + 1, 1, LITERAL, symbol=sym))
        else:
            factors.append(Factor(i + 1, length, REFERENCE, source=src + 1, symbol=sym))
        i += length
    return Factorization(variant, text, tuple(factors))


def lz77(T: Sequence[int]) -> Factorization:
    """Each factor is the shortest prefix of the rest that does not occur
    entirely inside the already-parsed prefix; the last factor may repeat."""
    return _lz77_like(T, LZ77, self_ref=False)


def lz77sr(T: Sequence[int]) -> Factorization:
    """As :func:`lz77`, but the earlier occurrence may overlap the factor."""
    return _lz77_like(T, LZ77SR, self_ref=True)


def _lzss_like(T: Sequence[int], variant: str, self_ref: bool) -> Factorization:
    require_nonempty(T)
    text = Text(T)
    s = as_str(text)
    n = len(s)
    factors = []
    i = 0
    while i < n:
        if s.find(s[i], 0, i) < 0:
            factors.append(Factor(i + 1, 1, LITERAL, symbol=text[i]))
            i += 1
            continue
        window = (lambda l: i + l - 1) if self_ref else (lambda l: i)
        l, src = _extend(s, i, window)
        factors.append(Factor(i + 1, l, REFERENCE, source=src + 1))
        i += l
    return Factorization(variant, text, tuple(factors))


def lzss(T: Sequence[int]) -> Factorization:
    """Literal for a first occurrence, else the longest prefix occurring earlier."""
    return _lzss_like(T, LZSS, self_ref=False)


def lzsssr(T: Sequence[int]) -> Factorization:
    """As :func:`lzss`, with overlapping earlier occurrences allowed."""
    return _lzss_like(T, LZSSSR, self_ref=True)


def lz78(T: Sequence[int]) -> Factorization:
    """Each factor extends an earlier factor (or the empty string) by one symbol."""
    return lz78_with_trie(T)[0]


def lz78_with_trie(T: Sequence[int]) -> tuple[Factorization, dict[tuple[int, int], int]]:
    """LZ78 factorization plus its trie: ``(parent index, symbol) -> factor index``."""
    require_nonempty(T)
    text = Text(T)
    trie: dict[tuple[int, int], int] = {}
    factors = []
    n = len(text)
    i = 0
    while i < n:
        node, j = 0, i
        while j < n and (node, text[j]) in trie:
            node = trie[(node, text[j])]
            j += 1
        if j < n:
            trie[(node, text[j])] = len(factors) + 1
            factors.append(Factor(i + 1, j - i + 1, LZ78_PAIR, parent=node, symbol=text[j]))
            i = j + 1
        else:
            factors.append(Factor(i + 1, j - i, LZ78_PAIR, parent=node))
            i = j
    return Factorization(LZ78, text, tuple(factors)), trie


def lzend(T: Sequence[int]) -> Factorization:
    """The copied part of each factor must end where some earlier factor ends."""
    require_nonempty(T)
    text = Text(T)
    s = as_str(text)
    n = len(s)
    ends: list[int] = []   # exclusive 0-based ends of earlier factors
    factors = []
    i = 0
    while i < n:
        best, src = 0, -1
        c = s[i]
        for e in ends:
            j = s.find(c, 0, e)
            while j >= 0:
                l = e - j
                if l > best and i + l <= n and s[j:e] == s[i:i + l]:
                    best, src = l, j
                j = s.find(c, j + 1, e)
        has_tail = i + best < n
        length = best + has_tail
        sym = text[i + best] if has_tail else None
        if best == 0:
            factors.append(Factor(i + 1, 1, LITERAL, symbol=sym))
        else:
            factors.append(Factor(i + 1, length, REFERENCE, source=src + 1, symbol=sym))
        i += length
        ends.append(i)
    return Factorization(LZEND, text, tuple(factors))


PARSERS = {
    "z77": lz77,
    "z77sr": lz77sr,
    "zss": lzss,
    "zsssr": lzsssr,
    "z78": lz78,
    "zend": lzend,
}
