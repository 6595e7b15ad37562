"""String attractors: validity check and exact smallest size by branch and bound.

Every distinct substring ``s`` contributes one constraint: the attractor must
contain a position of the union of all occurrence intervals of ``s``.  With
positions encoded as bits that union is one integer mask, so the search is a
minimum hitting set over masks.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .text_core import ExactResult, as_str, limits, require_nonempty


def cover_masks(T: Sequence[int]) -> list[int]:
    """One mask per distinct substring: bit p-1 set iff p lies in some occurrence."""
    s = as_str(T)
    n = len(s)
    masks: list[int] = []
    for k in range(1, n + 1):
        block = (1 << k) - 1
        by_sub: dict[str, int] = {}
        for i in range(n - k + 1):
            sub = s[i:i + k]
            by_sub[sub] = by_sub.get(sub, 0) | (block << i)
        masks.extend(by_sub.values())
    return masks


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Drop every mask that contains another one (hitting the smaller suffices)."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if all(m & k != k for k in kept):
            kept.append(m)
    return kept


def is_attractor(T: Sequence[int], positions: Iterable[int]) -> bool:
    chosen = 0
    for p in positions:
        if not 1 <= p <= len(T):
            raise ValueError(f"position {p} outside 1..{len(T)}")
        chosen |= 1 << (p - 1)
    return all(m & chosen for m in cover_masks(T))


def _positions(mask: int) -> tuple[int, ...]:
    out = []
    p = 1
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return tuple(out)


def _disjoint_lower_bound(unhit: list[int]) -> int:
    """Greedy packing of pairwise disjoint sets; each needs its own position."""
    used = 0
    count = 0
    for m in unhit:  # already ordered by size
        if not m & used:
            used |= m
            count += 1
    return count


def gamma_exact(T: Sequence[int], budget: int | None = 2_000_000,
                limit: int | None = None, upper: int | None = None) -> ExactResult:
    """Smallest attractor size and one witness (1-based positions).

    ``limit`` caps n (default from :func:`limits`); ``budget`` caps search
    nodes.  Exceeding either yields an inconclusive result whose ``value``
    is the best attractor size found so far, if any.
    """
    require_nonempty(T)
    n = len(T)
    cap = limits()["gamma"] if limit is None else limit
    if n > cap:
        return ExactResult(None, None, "inconclusive")
    sets = minimal_masks(cover_masks(T))
    forced = 0
    for m in sets:
        if m.bit_count() == 1:
            forced |= m
    rest = [m for m in sets if not m & forced]

    if upper is None:
        from .lz_family import lzsssr
        upper = lzsssr(T).z
    # an attractor of size `upper` always exists; search for anything smaller
    best = [upper + 1, None]
    nodes = [0]

    def search(chosen: int, count: int, pending: list[int]) -> None:
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise _OutOfBudget
        unhit = [m for m in pending if not m & chosen]
        if not unhit:
            if count < best[0]:
                best[0], best[1] = count, chosen
            return
        if count + _disjoint_lower_bound(unhit) >= best[0]:
            return
        pivot = unhit[0]
        # branch on each position of the smallest unhit set; positions already
        # tried in earlier branches are excluded to avoid duplicate subsets
        excluded = 0
        bits = pivot
        while bits:
            low = bits & -bits
            bits ^= low
            remaining = [m for m in unhit if not m & low]
            if any(m & ~excluded == 0 for m in remaining):
                excluded |= low
                continue
            search(chosen | low, count + 1, [m & ~excluded for m in remaining])
            excluded |= low
            if count + 1 >= best[0]:
                return

    try:
        search(forced, forced.bit_count(), rest)
    except _OutOfBudget:
        found = best[1]
        return ExactResult(best[0] if found is not None else None,
                           _positions(found) if found is not None else None,
                           "inconclusive")
    if best[1] is None:
        raise AssertionError("no attractor within the LZSSsr bound; parser or search is broken")
    return ExactResult(best[0], _positions(best[1]))


class _OutOfBudget(Exception):
    pass


def gamma(T: Sequence[int], limit: int | None = None) -> int:
    """Exact gamma or :class:`~repsense.text_core.Inconclusive`."""
    from .text_core import Inconclusive

    res = gamma_exact(T, limit=limit)
    if not res.exact:
        raise Inconclusive(f"gamma inconclusive for n={len(T)}")
    return res.value
