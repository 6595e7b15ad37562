"""Rotation-based Burrows-Wheeler transform (no end marker) and its run count."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .text_core import Text, require_nonempty


@dataclass(frozen=True)
class BwtResult:
    bwt: Text
    runs: int


def sorted_rotations(T: Sequence[int]) -> list[int]:
    """0-based rotation starts in lexicographic order, by cyclic prefix doubling.

    Equal rotations (periodic texts) end with equal symbols, so their
    relative order does not affect the transform.
    """
    n = len(T)
    order = list(range(n))
    rank = list(T)
    k = 1
    while True:
        key = [(rank[i], rank[(i + k) % n]) for i in range(n)]
        order.sort(key=key.__getitem__)
        new = [0] * n
        for j in range(1, n):
            new[order[j]] = new[order[j - 1]] + (key[order[j]] != key[order[j - 1]])
        rank = new
        if rank[order[-1]] == n - 1 or k >= n:
            return order
        k *= 2


def count_runs(seq: Sequence[int]) -> int:
    return sum(1 for i in range(len(seq)) if i == 0 or seq[i] != seq[i - 1])


def bwt(T: Sequence[int]) -> BwtResult:
    require_nonempty(T)
    n = len(T)
    out = Text(T[(i - 1) % n] for i in sorted_rotations(T))
    return BwtResult(out, count_runs(out))


def runs(T: Sequence[int]) -> int:
    return bwt(T).runs


def reversed_fibonacci(k: int, a: int = 0, b: int = 1) -> Text:
    """Reverse of F_k where F_1 = b, F_2 = a and F_k = F_{k-1} F_{k-2}."""
    if k < 2:
        raise ValueError("k must be >= 2")
    prev, cur = (b,), (a,)
    for _ in range(k - 2):
        prev, cur = cur, cur + prev
    return Text(reversed(cur))
