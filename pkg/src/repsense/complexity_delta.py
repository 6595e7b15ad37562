"""Substring complexity: distinct substrings per length and their best ratio."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .text_core import Text, as_str, require_nonempty

_DIRECT_SORT_MAX = 256


def suffix_array(T: Sequence[int]) -> list[int]:
    """0-based suffix array: direct suffix sort for short texts, prefix
    doubling (O(n log^2 n)) otherwise."""
    n = len(T)
    if n <= _DIRECT_SORT_MAX:
        s = as_str(T)
        return sorted(range(n), key=lambda i: s[i:])
    sa = list(range(n))
    rank = list(T)
    k = 1
    while True:
        key = [(rank[i], rank[i + k] if i + k < n else -1) for i in range(n)]
        sa.sort(key=key.__getitem__)
        new = [0] * n
        for j in range(1, n):
            new[sa[j]] = new[sa[j - 1]] + (key[sa[j]] != key[sa[j - 1]])
        rank = new
        if n == 0 or rank[sa[-1]] == n - 1 or k >= n:
            return sa
        k *= 2


def lcp_array(T: Sequence[int], sa: Sequence[int]) -> list[int]:
    """Kasai: ``lcp[j]`` is the common-prefix length of suffixes sa[j-1], sa[j]; lcp[0] = 0."""
    n = len(T)
    rank = [0] * n
    for j, i in enumerate(sa):
        rank[i] = j
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        while i + h < n and j + h < n and T[i + h] == T[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


@dataclass(frozen=True)
class SubstrTable:
    """``counts[k-1]`` distinct substrings of length k, for k = 1..n."""

    counts: tuple[int, ...]
    delta: Fraction
    argmax_k: int


def substr_counts(T: Sequence[int]) -> list[int]:
    """Distinct substrings of every length, from the suffix array and LCP array.

    Suffixes sharing a length-k prefix are contiguous in suffix order, so
    the count for k is (#suffixes of length >= k) - (#adjacent LCPs >= k).
    """
    n = len(T)
    sa = suffix_array(T)
    lcp = lcp_array(T, sa)
    lcp_hist = [0] * (n + 2)
    for h in lcp[1:]:
        lcp_hist[h] += 1
    counts = []
    lcp_at_least = sum(lcp_hist[1:])
    for k in range(1, n + 1):
        # n - k + 1 suffixes have length >= k
        counts.append(n - k + 1 - lcp_at_least)
        lcp_at_least -= lcp_hist[k]
    return counts


def substr_table(T: Sequence[int]) -> SubstrTable:
    require_nonempty(T)
    counts = substr_counts(T)
    best_c, arg = 0, 1
    for k, c in enumerate(counts, start=1):
        if c * arg > best_c * k:  # c/k > best_c/arg without building fractions
            best_c, arg = c, k
    return SubstrTable(tuple(counts), Fraction(best_c, arg), arg)


def delta(T: Sequence[int]) -> Fraction:
    return substr_table(T).delta


def delta_family_texts(m: int) -> tuple[Text, Text]:
    """(abb)^m a (bba)^{m+1} a^{3m} (bba)^m and its copy without position 3m+1."""
    if m < 1:
        raise ValueError("m must be >= 1")
    a, b = 0, 1
    T = Text((a, b, b) * m + (a,) + (b, b, a) * (m + 1) + (a,) * (3 * m) + (b, b, a) * m)
    i = 3 * m  # 0-based index of position 3m+1
    return T, Text(T[:i] + T[i + 1:])


def delta_of_family_check(m: int) -> tuple[Fraction, Fraction, Fraction]:
    """Exact delta of the deletion family, the edited text, and the closed-form floor.

    Raises AssertionError if delta(T) != 2 or delta(T') is below (9m+2)/(3m+1).
    """
    T, T2 = delta_family_texts(m)
    d, d2 = delta(T), delta(T2)
    floor = Fraction(9 * m + 2, 3 * m + 1)
    assert d == 2, f"delta(T) = {d}, expected 2"
    assert d2 >= floor, f"delta(T') = {d2} < {floor}"
    return d, d2, floor
