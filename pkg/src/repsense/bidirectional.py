"""Bidirectional macro schemes: validity, exact minimum size, edit splicing.

A scheme is a list of phrases, each either a ground symbol or a copy of
``length`` symbols starting at ``source`` (1-based, anywhere in T except the
phrase's own start).  Position x of a copy phrase points to the matching
source position; the scheme is valid when following those pointers from
every position reaches a ground phrase.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

from .lz_family import LITERAL, lzsssr
from .text_core import (DEL, INS, SUB, EditOp, ExactResult, Text, as_str, check_edit,
                        limits, render_symbol, require_nonempty)


@dataclass(frozen=True)
class Ground:
    symbol: int

    length = 1

    def __str__(self) -> str:
        return render_symbol(self.symbol)


@dataclass(frozen=True)
class Copy:
    source: int
    length: int

    def __str__(self) -> str:
        return f"({self.source},{self.length})"


Phrase = Union[Ground, Copy]


@dataclass(frozen=True)
class BidirectionalScheme:
    phrases: tuple[Phrase, ...]

    @property
    def size(self) -> int:
        return len(self.phrases)

    @property
    def n(self) -> int:
        return sum(ph.length for ph in self.phrases)

    def starts(self) -> list[int]:
        out, p = [], 1
        for ph in self.phrases:
            out.append(p)
            p += ph.length
        return out

    def __str__(self) -> str:
        return "".join(map(str, self.phrases))


_TOKEN = re.compile(r"\((\d+),(\d+)\)|<(\d+)>|([^\s()<>|])")


def parse_scheme(s: str) -> BidirectionalScheme:
    """Inverse of ``str(scheme)``."""
    phrases: list[Phrase] = []
    pos = 0
    s = s.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ValueError(f"cannot parse scheme at {s[pos:]!r}")
        if m.group(1):
            phrases.append(Copy(int(m.group(1)), int(m.group(2))))
        elif m.group(3):
            phrases.append(Ground(int(m.group(3))))
        else:
            phrases.append(Ground(ord(m.group(4))))
        pos = m.end()
    return BidirectionalScheme(tuple(phrases))


def reference_function(B: BidirectionalScheme, n: int | None = None) -> list[int]:
    """1-based F with F[0] unused: F[x] = 0 on ground phrases, else the source position."""
    n = B.n if n is None else n
    if B.n != n:
        raise ValueError(f"phrase lengths sum to {B.n}, expected {n}")
    F = [0] * (n + 1)
    for p, ph in zip(B.starts(), B.phrases):
        if isinstance(ph, Copy):
            if ph.length < 1 or ph.source == p or ph.source < 1 or ph.source + ph.length - 1 > n:
                raise ValueError(f"malformed copy phrase {ph} at {p}")
            for t in range(ph.length):
                F[p + t] = ph.source + t
    return F


def _acyclic(F: list[int]) -> bool:
    n = len(F) - 1
    state = [0] * (n + 1)  # 0 unseen, 1 on current walk, 2 reaches ground
    for x in range(1, n + 1):
        walk = []
        y = x
        while y and state[y] == 0:
            state[y] = 1
            walk.append(y)
            y = F[y]
        if y and state[y] == 1:
            return False
        for w in walk:
            state[w] = 2
    return True


def reconstruct_scheme(B: BidirectionalScheme) -> Text:
    """Decode a scheme without the text; raises ValueError on a cycle."""
    F = reference_function(B)
    if not _acyclic(F):
        raise ValueError("scheme has a reference cycle")
    n = B.n
    ground = [None] * (n + 1)
    for p, ph in zip(B.starts(), B.phrases):
        if isinstance(ph, Ground):
            ground[p] = ph.symbol
    out = [None] * (n + 1)
    for x in range(1, n + 1):
        chain = []
        y = x
        while out[y] is None and ground[y] is None:
            chain.append(y)
            y = F[y]
        sym = out[y] if out[y] is not None else ground[y]
        for c in chain + [y]:
            out[c] = sym
    return Text(out[1:])


def validate_scheme(T: Sequence[int], B: BidirectionalScheme) -> bool:
    """Copy phrases match their sources and F reaches ground from everywhere."""
    n = len(T)
    F = reference_function(B, n)
    for p, ph in zip(B.starts(), B.phrases):
        if isinstance(ph, Ground):
            if T[p - 1] != ph.symbol:
                return False
        elif tuple(T[ph.source - 1:ph.source - 1 + ph.length]) != tuple(T[p - 1:p - 1 + ph.length]):
            return False
    return _acyclic(F)


def scheme_from_factorization(fz) -> BidirectionalScheme:
    """LZSS-style factorizations are valid schemes: every source lies to the left."""
    phrases: list[Phrase] = []
    for f in fz.factors:
        if f.kind == LITERAL or f.length == 1:
            phrases.append(Ground(fz.text[f.start - 1]))
        else:
            phrases.append(Copy(f.source, f.length))
    return BidirectionalScheme(tuple(phrases))


# ---------------------------------------------------------------------------
# exact search


def _min_parse_lower_bounds(s: str, occurs_elsewhere) -> list[int]:
    """lb[p]: fewest phrases covering s[p:] if cycles were allowed."""
    n = len(s)
    lb = [0] * (n + 1)
    for p in range(n - 1, -1, -1):
        best = 1 + lb[p + 1]
        for l in range(2, n - p + 1):
            if not occurs_elsewhere(p, l):
                break  # longer prefixes cannot occur elsewhere either
            best = min(best, 1 + lb[p + l])
        lb[p] = best
    return lb


def b_exact(T: Sequence[int], limit: int | None = None,
            budget: int | None = 5_000_000) -> ExactResult:
    """Minimum scheme size by iterative deepening over left-to-right parses.

    A phrase of length >= 2 must copy an occurrence starting elsewhere;
    length-1 phrases are ground (a ground phrase never closes a cycle, so
    it dominates a length-1 copy).  Pointers are added incrementally and a
    branch dies as soon as it closes a cycle.  The cycle-free minimum parse
    length bounds every suffix from below; the LZSSsr scheme bounds the
    answer from above.
    """
    require_nonempty(T)
    n = len(T)
    cap = limits()["b"] if limit is None else limit
    upper = scheme_from_factorization(lzsssr(T))
    if n > cap:
        return ExactResult(upper.size, upper, "inconclusive")
    s = as_str(T)
    text = tuple(T)
    # sources[p][l]: starts q != p with s[q:q+l] == s[p:p+l]
    starts_of: dict[str, list[int]] = {}
    for i in range(n):
        for j in range(i + 2, n + 1):
            starts_of.setdefault(s[i:j], []).append(i)
    sources: list[list[list[int]]] = [[[] for _ in range(n - p + 1)] for p in range(n)]
    for p in range(n):
        for l in range(2, n - p + 1):
            sources[p][l] = [q for q in starts_of.get(s[p:p + l], ()) if q != p]

    def occurs_elsewhere(p, l):
        return bool(sources[p][l])

    lb = _min_parse_lower_bounds(s, occurs_elsewhere)
    F: list[int | None] = [None] * n  # -1 ground, None unassigned, else target
    phrases: list[Phrase] = []
    nodes = [0]

    def closes_cycle(p: int, l: int) -> bool:
        for x in range(p, p + l):
            y = F[x]
            steps = 0
            while y is not None and y >= 0:
                if y == x or steps > n:
                    return True
                y = F[y]
                steps += 1
        return False

    def dfs(p: int, left: int) -> bool:
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise _OutOfBudget
        if p == n:
            return True
        if lb[p] > left:
            return False
        for l in range(n - p, 1, -1):
            if lb[p + l] > left - 1:
                continue
            for q in sources[p][l]:
                for t in range(l):
                    F[p + t] = q + t
                if not closes_cycle(p, l):
                    phrases.append(Copy(q + 1, l))
                    if dfs(p + l, left - 1):
                        return True
                    phrases.pop()
                for t in range(l):
                    F[p + t] = None
        if lb[p + 1] <= left - 1:
            F[p] = -1
            phrases.append(Ground(text[p]))
            if dfs(p + 1, left - 1):
                return True
            phrases.pop()
            F[p] = None
        return False

    try:
        for k in range(max(1, lb[0]), upper.size):
            if dfs(0, k):
                return ExactResult(k, BidirectionalScheme(tuple(phrases)))
    except _OutOfBudget:
        return ExactResult(upper.size, upper, "inconclusive")
    return ExactResult(upper.size, upper)


class _OutOfBudget(Exception):
    pass


def b_value(T: Sequence[int], limit: int | None = None) -> int:
    from .text_core import Inconclusive

    res = b_exact(T, limit=limit)
    if not res.exact:
        raise Inconclusive(f"b inconclusive for n={len(T)}")
    return res.value


# ---------------------------------------------------------------------------
# splicing an edit into a scheme


def splice_scheme(T: Sequence[int], B: BidirectionalScheme, e: EditOp) -> BidirectionalScheme:
    """Valid scheme for the edited text with at most 2*size(B)+2 phrases.

    Substitution/deletion at i: the phrase covering i is cut around i.
    Every copy phrase whose source covers i loses that pointer.  One of
    them (the anchor) turns the affected symbol into a ground phrase; the
    others copy that ground symbol and the run after it from the anchor.
    All anchor choices (and grounding everywhere) are built, and the
    smallest valid one is returned.  Insertion only splits phrases whose
    target or source straddles the gap and adds one ground phrase.
    """
    check_edit(T, e)
    if not validate_scheme(T, B):
        raise ValueError("input scheme is not valid for T")
    T2 = tuple(T)
    from .text_core import edit_tuple
    T2 = edit_tuple(T2, e)
    if e.kind == INS:
        out = _splice_insert(T, B, e)
        assert validate_scheme(T2, out)
        return out
    starts = B.starts()
    i = e.position
    affected = [j for j, ph in enumerate(B.phrases)
                if isinstance(ph, Copy) and ph.source <= i < ph.source + ph.length]
    best = None
    for anchor in [None] + affected:
        cand = _splice_sub_del(T, B, starts, e, affected, anchor)
        if cand is None or not validate_scheme(T2, cand):
            continue
        if best is None or cand.size < best.size:
            best = cand
    assert best is not None  # grounding every affected symbol is always valid
    return best


def _run_end(ph: Copy, p: int, t: int, i: int) -> int:
    """End offset (exclusive) of the run starting at offset t that survives the edit."""
    if p <= i < p + ph.length and i - p > t:
        return i - p
    return ph.length


def _splice_sub_del(T, B, starts, e, affected, anchor):
    i = e.position
    # per phrase: list of segments (offset_lo, offset_hi, kind, data)
    anchor_pos = anchor_len = None
    if anchor is not None:
        ph, p = B.phrases[anchor], starts[anchor]
        t = i - ph.source
        anchor_pos = p + t           # old position of the anchor's ground symbol
        anchor_len = _run_end(ph, p, t, i) - t
    new_phrases: list[Phrase] = []
    shift = (lambda y: y) if e.kind == SUB else (lambda y: y if y < i else y - 1)

    def emit_copy(target_old: int, source_old: int, length: int):
        if length <= 0:
            return
        if length == 1:
            new_phrases.append(Ground(T[target_old - 1]))
            return
        assert not source_old <= i < source_old + length
        new_phrases.append(Copy(shift(source_old), length))

    for j, (ph, p) in enumerate(zip(B.phrases, starts)):
        if isinstance(ph, Ground):
            if p == i:
                if e.kind == SUB:
                    new_phrases.append(Ground(e.symbol))
            else:
                new_phrases.append(ph)
            continue
        l = ph.length
        cuts = {0, l}
        t_edit = i - p if p <= i < p + l else None
        t_src = i - ph.source if j in affected else None
        for t in (t_edit, t_src):
            if t is not None:
                cuts.update((t, t + 1))
        redirect_end = None
        if t_src is not None and j != anchor and anchor is not None:
            redirect_end = _run_end(ph, p, t_src, i)
            if redirect_end - t_src > anchor_len:
                return None
            cuts.discard(t_src + 1)
            cuts.add(redirect_end)
        bounds = sorted(c for c in cuts if 0 <= c <= l)
        for lo, hi in zip(bounds, bounds[1:]):
            if lo == t_edit:
                if e.kind == SUB:
                    new_phrases.append(Ground(e.symbol))
            elif lo == t_src:
                if redirect_end is not None:
                    emit_copy(p + lo, anchor_pos, hi - lo)
                else:
                    new_phrases.append(Ground(T[p + lo - 1]))
            else:
                emit_copy(p + lo, ph.source + lo, hi - lo)
    return BidirectionalScheme(tuple(new_phrases))


def _splice_insert(T, B, e) -> BidirectionalScheme:
    i, c = e.position, e.symbol
    new_phrases: list[Phrase] = []
    inserted = False

    def emit_copy(target_old, source_old, length):
        if length == 1:
            new_phrases.append(Ground(T[target_old - 1]))
        elif length > 1:
            new_phrases.append(Copy(source_old if source_old < i else source_old + 1, length))

    for ph, p in zip(B.phrases, B.starts()):
        if p == i and not inserted:
            new_phrases.append(Ground(c))
            inserted = True
        if isinstance(ph, Ground):
            new_phrases.append(ph)
            continue
        l = ph.length
        cuts = {0, l}
        if p < i < p + l:
            cuts.add(i - p)
        if ph.source < i < ph.source + l:
            cuts.add(i - ph.source)
        bounds = sorted(cuts)
        for lo, hi in zip(bounds, bounds[1:]):
            if p + lo == i and not inserted:
                new_phrases.append(Ground(c))
                inserted = True
            emit_copy(p + lo, ph.source + lo, hi - lo)
    if not inserted:
        new_phrases.append(Ground(c))
    return BidirectionalScheme(tuple(new_phrases))
