"""Texts, single-character edits and the alphabets edits may draw from.

A :class:`Text` is a tuple of nonnegative integer symbols, so every tuple
operation (slicing, hashing, comparison) works on it directly.  Positions in
the public API are 1-based.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

SUB, INS, DEL = "sub", "ins", "del"
EDIT_KINDS = (SUB, INS, DEL)


class Text(tuple):
    """Immutable sequence of nonnegative integer symbols."""

    __slots__ = ()

    def __new__(cls, symbols: Iterable[int] = ()):
        items = tuple(symbols)
        for s in items:
            if not isinstance(s, int) or isinstance(s, bool) or s < 0:
                raise ValueError(f"symbols must be nonnegative integers, got {s!r}")
        return super().__new__(cls, items)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def alphabet(self) -> tuple[int, ...]:
        return tuple(sorted(set(self)))

    def __repr__(self) -> str:
        return f"Text({render(self)!r})"


def as_text(symbols: Sequence[int] | str | bytes) -> Text:
    """Coerce a Text, a tuple of ints, a ``str`` or ``bytes`` into a Text."""
    if isinstance(symbols, Text):
        return symbols
    if isinstance(symbols, str):
        return Text(ord(c) for c in symbols)
    return Text(symbols)


def from_letters(s: str, alphabet: str | None = None) -> Text:
    """Map letters to small integers: by position in ``alphabet`` or by sorted order."""
    order = alphabet if alphabet is not None else "".join(sorted(set(s)))
    index = {c: i for i, c in enumerate(order)}
    return Text(index[c] for c in s)


def parse_bytes(data: bytes) -> Text:
    """Raw byte mode: every byte becomes the symbol equal to its value."""
    return Text(data)


def parse_tokens(data: str) -> Text:
    """Token mode: whitespace-separated decimal integers, one per symbol."""
    try:
        return Text(int(tok) for tok in data.split())
    except ValueError as exc:
        raise ValueError(f"token mode expects decimal integers: {exc}") from None


def render_symbol(s: int) -> str:
    return chr(s) if 33 <= s < 127 and chr(s) not in "()<>|" else f"<{s}>"


def render(symbols: Iterable[int]) -> str:
    """Printable form: ASCII graphic characters as-is, everything else as ``<k>``."""
    return "".join(render_symbol(s) for s in symbols)


def require_nonempty(T: Sequence[int]) -> None:
    if len(T) == 0:
        raise ValueError("measure requires a nonempty text")


@dataclass(frozen=True, order=True)
class EditOp:
    """A single-character edit; ``symbol`` is None for deletions."""

    position: int
    symbol: int | None
    kind: str

    def __post_init__(self):
        if self.kind not in EDIT_KINDS:
            raise ValueError(f"unknown edit kind {self.kind!r}")
        if (self.kind == DEL) != (self.symbol is None):
            raise ValueError("deletions carry no symbol; other edits need one")

    @classmethod
    def sub(cls, position: int, symbol: int) -> "EditOp":
        return cls(position, symbol, SUB)

    @classmethod
    def ins(cls, position: int, symbol: int) -> "EditOp":
        return cls(position, symbol, INS)

    @classmethod
    def delete(cls, position: int) -> "EditOp":
        return cls(position, None, DEL)

    def __str__(self) -> str:
        if self.kind == DEL:
            return f"del@{self.position}"
        return f"{self.kind}@{self.position}:{self.symbol}"

    def inverse(self, T: Sequence[int]) -> "EditOp":
        """The edit that maps ``apply_edit(T, self)`` back to ``T``."""
        if self.kind == SUB:
            return EditOp.sub(self.position, T[self.position - 1])
        if self.kind == INS:
            return EditOp.delete(self.position)
        return EditOp.ins(self.position, T[self.position - 1])


def check_edit(T: Sequence[int], e: EditOp) -> None:
    n = len(T)
    hi = n + 1 if e.kind == INS else n
    if not 1 <= e.position <= hi:
        raise ValueError(f"{e}: position out of range 1..{hi}")
    if e.kind != DEL and (not isinstance(e.symbol, int) or e.symbol < 0):
        raise ValueError(f"{e}: symbol must be a nonnegative integer")
    if e.kind == SUB and T[e.position - 1] == e.symbol:
        raise ValueError(f"{e}: substitution by the identical symbol")


def edit_tuple(T: tuple, e: EditOp) -> tuple:
    """Unchecked edit on a plain tuple (hot path for sweeps)."""
    i = e.position - 1
    if e.kind == SUB:
        return T[:i] + (e.symbol,) + T[i + 1:]
    if e.kind == INS:
        return T[:i] + (e.symbol,) + T[i:]
    return T[:i] + T[i + 1:]


def apply_edit(T: Sequence[int], e: EditOp) -> Text:
    check_edit(T, e)
    return Text(edit_tuple(tuple(T), e))


@dataclass(frozen=True)
class AlphabetPolicy:
    """Which symbols substitutions and insertions may use.

    ``fixed``: exactly ``symbols``.  ``fresh``: the symbols present in the
    text together with ``symbols`` (a base alphabet, often empty), plus
    ``k`` unused symbols directly above the largest of them.
    """

    mode: str
    symbols: tuple[int, ...] = ()
    k: int = 1

    @classmethod
    def fixed(cls, symbols: Iterable[int]) -> "AlphabetPolicy":
        return cls("fixed", tuple(sorted(set(symbols))), 0)

    @classmethod
    def fresh(cls, k: int = 1, base: Iterable[int] = ()) -> "AlphabetPolicy":
        if k < 0:
            raise ValueError("fresh symbol count must be nonnegative")
        return cls("fresh", tuple(sorted(set(base))), k)

    def alphabet_for(self, T: Sequence[int]) -> tuple[int, ...]:
        if self.mode == "fixed":
            return self.symbols
        present = sorted(set(T) | set(self.symbols))
        top = present[-1] if present else -1
        return tuple(present) + tuple(range(top + 1, top + 1 + self.k))

    def __str__(self) -> str:
        if self.mode == "fixed":
            return "fixed(" + ",".join(map(str, self.symbols)) + ")"
        base = ",".join(map(str, self.symbols))
        return f"fresh({self.k}" + (f";{base})" if base else ")")

    @classmethod
    def parse(cls, spec: str) -> "AlphabetPolicy":
        """Inverse of ``str``: ``fixed(0,1)``, ``fresh(1)`` or ``fresh(1;0,1)``."""
        spec = spec.strip()
        if not spec.endswith(")") or "(" not in spec:
            raise ValueError(f"bad alphabet policy {spec!r}")
        head, body = spec[:-1].split("(", 1)
        if head == "fixed":
            return cls.fixed(int(t) for t in body.split(",") if t)
        if head == "fresh":
            k, _, base = body.partition(";")
            return cls.fresh(int(k), (int(t) for t in base.split(",") if t))
        raise ValueError(f"bad alphabet policy {spec!r}")


DEFAULT_POLICY = AlphabetPolicy.fresh(1)


def enumerate_edits(T: Sequence[int], kind: str,
                    policy: AlphabetPolicy = DEFAULT_POLICY) -> Iterator[EditOp]:
    """Every distinct edit of one kind, ordered by position then symbol."""
    require_nonempty(T)
    n = len(T)
    if kind == DEL:
        for p in range(1, n + 1):
            yield EditOp.delete(p)
        return
    A = policy.alphabet_for(T)
    if kind == SUB:
        for p in range(1, n + 1):
            for c in A:
                if c != T[p - 1]:
                    yield EditOp.sub(p, c)
    elif kind == INS:
        for p in range(1, n + 2):
            for c in A:
                yield EditOp.ins(p, c)
    else:
        raise ValueError(f"unknown edit kind {kind!r}")


def canonicalize(T: Sequence[int]) -> Text:
    """Relabel symbols by first occurrence: first new symbol 0, next 1, ..."""
    return Text(canonical_tuple(T))


def canonical_tuple(T: Sequence[int]) -> tuple:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(s, len(seen)) for s in T)


def rank_tuple(T: Sequence[int]) -> tuple:
    """Order-preserving relabel onto 0..k-1."""
    ranks = {s: i for i, s in enumerate(sorted(set(T)))}
    return tuple(ranks[s] for s in T)


def as_str(T: Sequence[int]) -> str:
    """Encode symbols as a ``str`` so substring search runs in C.

    Equality and order of symbols are preserved; symbols at or above the
    surrogate range are rank-compressed first.
    """
    if T and max(T) >= 0xD800:
        T = rank_tuple(T)
    return "".join(map(chr, T))


_DEFAULT_LIMITS = {"gamma": 24, "b": 10, "e": 2000}


def limits() -> dict[str, int]:
    """Size caps for exponential or quadratic measures.

    ``REPSENSE_LIMITS`` overrides them, e.g. ``gamma=30,b=12``.
    """
    out = dict(_DEFAULT_LIMITS)
    raw = os.environ.get("REPSENSE_LIMITS", "").strip()
    for item in filter(None, (x.strip() for x in raw.split(","))):
        key, sep, val = item.partition("=")
        if not sep or key.strip() not in out:
            raise ValueError(f"REPSENSE_LIMITS: cannot parse {item!r}")
        value = int(val)
        if value < 1:
            raise ValueError("REPSENSE_LIMITS values must be >= 1")
        out[key.strip()] = value
    return out


@dataclass(frozen=True)
class ExactResult:
    """Outcome of an exponential exact search.

    ``status`` is ``"exact"`` or ``"inconclusive"``.  When inconclusive,
    ``value`` is the best size found so far (an upper bound, or None).
    """

    value: int | None
    witness: object
    status: str = "exact"

    @property
    def exact(self) -> bool:
        return self.status == "exact"


class Inconclusive(Exception):
    """A measure could not be computed within its configured limits."""
