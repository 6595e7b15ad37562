"""Worst-case additive and multiplicative sensitivity of registered measures."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .text_core import (DEFAULT_POLICY, AlphabetPolicy, EditOp, Inconclusive, Text,
                        canonical_tuple, edit_tuple, enumerate_edits, limits)

CHEAP, MODERATE, EXPENSIVE = "cheap", "moderate", "expensive"


@dataclass(frozen=True)
class Measure:
    name: str
    fn: Callable[..., object]
    order_insensitive: bool  # value unchanged by renaming symbols
    cost: str
    exact: bool              # False when the measure may raise Inconclusive
    description: str


def _lz(variant):
    from .lz_family import PARSERS
    return lambda T: PARSERS[variant](T).z


def _gamma(T, limit=None):
    from .attractor_gamma import gamma
    return gamma(T, limit=limit)


def _b(T, limit=None):
    from .bidirectional import b_value
    return b_value(T, limit=limit)


def _e(T, limit=None):
    from .cdawg_size import cdawg_e
    return cdawg_e(T, limit=limit)


def _delta(T):
    from .complexity_delta import delta
    return delta(T)


def _r(T):
    from .bwt_runs import runs
    return runs(T)


def _gis(T):
    from .gcis import g_is
    return g_is(T)


def _gbsc(T):
    from .grammar_slp import g_bsc
    return g_bsc(T)


MEASURES: dict[str, Measure] = {m.name: m for m in (
    Measure("delta", _delta, True, CHEAP, True, "substring complexity"),
    Measure("gamma", _gamma, True, EXPENSIVE, False, "smallest string attractor"),
    Measure("b", _b, True, EXPENSIVE, False, "smallest bidirectional scheme"),
    Measure("r", _r, False, CHEAP, True, "runs in the BWT"),
    Measure("z77", _lz("z77"), True, CHEAP, True, "LZ77 factors"),
    Measure("z77sr", _lz("z77sr"), True, CHEAP, True, "self-referencing LZ77 factors"),
    Measure("zss", _lz("zss"), True, CHEAP, True, "LZSS factors"),
    Measure("zsssr", _lz("zsssr"), True, CHEAP, True, "self-referencing LZSS factors"),
    Measure("z78", _lz("z78"), True, CHEAP, True, "LZ78 factors"),
    Measure("zend", _lz("zend"), True, CHEAP, True, "LZ-End factors"),
    Measure("gis", _gis, False, CHEAP, True, "GCIS grammar size"),
    Measure("gbsc", _gbsc, True, CHEAP, True, "Bisection grammar size"),
    Measure("e", _e, True, MODERATE, True, "CDAWG edges"),
)}

_LIMITED = {"gamma", "b", "e"}


def lookup(name: str) -> Measure:
    try:
        return MEASURES[name]
    except KeyError:
        import difflib
        close = difflib.get_close_matches(name, MEASURES, n=3)
        hint = f"; did you mean {', '.join(close)}?" if close else ""
        raise KeyError(f"unknown measure {name!r}{hint} (known: {', '.join(MEASURES)})") from None


def evaluate(name: str, T: Sequence[int], limits: dict | None = None):
    """Value of measure ``name`` on T; raises Inconclusive for gamma/b past their caps."""
    m = lookup(name)
    if name in _LIMITED and limits and name in limits:
        return m.fn(T, limit=limits[name])
    return m.fn(T)


@dataclass(frozen=True)
class EditResult:
    edit: EditOp
    value: object  # None when inconclusive


@dataclass(frozen=True)
class SensitivityReport:
    measure: str
    text: Text
    kind: str
    policy: AlphabetPolicy
    base: object
    results: tuple[EditResult, ...]
    additive: object | None
    multiplicative: Fraction | None
    additive_witness: EditOp | None
    multiplicative_witness: EditOp | None

    @property
    def partial(self) -> bool:
        """True when some edit was inconclusive, making the maxima lower bounds."""
        return any(r.value is None for r in self.results)


def _maxima(base, results):
    best_as = best_ms = None
    w_as = w_ms = None
    for r in results:  # edits arrive in (position, symbol) order; strict > keeps the first
        if r.value is None:
            continue
        d = r.value - base
        q = Fraction(r.value) / Fraction(base)
        if best_as is None or d > best_as:
            best_as, w_as = d, r.edit
        if best_ms is None or q > best_ms:
            best_ms, w_ms = q, r.edit
    return best_as, best_ms, w_as, w_ms


def sensitivity(measure: str, T: Sequence[int], kind: str,
                policy: AlphabetPolicy = DEFAULT_POLICY,
                limits: dict | None = None) -> SensitivityReport:
    """Exhaustive sensitivity of T over every edit of one kind.

    Edits yielding the same T' are evaluated once.  Ties between witnesses go
    to the lowest position, then the lowest symbol.
    """
    m = lookup(measure)
    T = Text(T)
    base = evaluate(measure, T, limits)
    if not base:
        raise ValueError(f"{measure}(T) = 0; ratios undefined")
    cache: dict[tuple, object] = {}
    results = []
    for e in enumerate_edits(T, kind, policy):
        Tp = edit_tuple(tuple(T), e)
        key = canonical_tuple(Tp) if m.order_insensitive else Tp
        if key not in cache:
            try:
                cache[key] = evaluate(measure, Tp, limits)
            except Inconclusive:
                cache[key] = None
        results.append(EditResult(e, cache[key]))
    a, q, wa, wq = _maxima(base, results)
    return SensitivityReport(measure, T, kind, policy, base, tuple(results), a, q, wa, wq)


@dataclass(frozen=True)
class GlobalWorst:
    measure: str
    n: int
    sigma: int
    kind: str
    multiplicative: Fraction | None
    additive: object | None
    multiplicative_witness: tuple[Text, EditOp] | None
    additive_witness: tuple[Text, EditOp] | None
    texts: int
    partial: bool


def all_texts(n: int, sigma: int, canonical: bool) -> list[tuple]:
    """All strings of length n over 0..sigma-1, or one per renaming class."""
    if not canonical:
        return list(itertools.product(range(sigma), repeat=n))
    out = []

    def grow(prefix, used):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for c in range(min(used + 1, sigma)):
            prefix.append(c)
            grow(prefix, max(used, c + 1))
            prefix.pop()

    grow([], 0)
    return out


def _chunk_worst(args):
    measure, texts, kind, policy, lim = args
    m = lookup(measure)
    cache: dict[tuple, object] = {}

    def value(X):
        key = canonical_tuple(X) if m.order_insensitive else X
        if key not in cache:
            try:
                cache[key] = evaluate(measure, X, lim)
            except Inconclusive:
                cache[key] = None
        return cache[key]

    best = [None, None, None, None]  # ms, as, ms witness, as witness
    partial = False
    for T in texts:
        base = value(T)
        if base is None:
            partial = True
            continue
        for e in enumerate_edits(T, kind, policy):
            v = value(edit_tuple(T, e))
            if v is None:
                partial = True
                continue
            q, d = Fraction(v) / Fraction(base), v - base
            if best[0] is None or q > best[0]:
                best[0], best[2] = q, (Text(T), e)
            if best[1] is None or d > best[1]:
                best[1], best[3] = d, (Text(T), e)
    return best, partial


def global_worst(measure: str, n: int, sigma: int, kind: str,
                 policy: AlphabetPolicy = DEFAULT_POLICY, jobs: int = 1,
                 limits: dict | None = None) -> GlobalWorst:
    """Worst MS and AS over every T of length n over sigma letters.

    Texts are canonicalized when the measure ignores symbol names; witnesses
    are the first attaining (T, edit) in lexicographic text order.
    """
    m = lookup(measure)
    texts = all_texts(n, sigma, m.order_insensitive and policy.mode == "fresh")
    jobs = max(1, jobs)
    size = -(-len(texts) // jobs)
    chunks = [(measure, texts[i:i + size], kind, policy, limits)
              for i in range(0, len(texts), size)]
    if jobs == 1:
        parts = [_chunk_worst(c) for c in chunks]
    else:
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_chunk_worst, chunks))
    best = [None, None, None, None]
    partial = False
    for (b, p) in parts:  # chunks are in text order, so strict > keeps the earliest witness
        partial |= p
        if b[0] is not None and (best[0] is None or b[0] > best[0]):
            best[0], best[2] = b[0], b[2]
        if b[1] is not None and (best[1] is None or b[1] > best[1]):
            best[1], best[3] = b[1], b[3]
    return GlobalWorst(measure, n, sigma, kind, best[0], best[1], best[2], best[3],
                       len(texts), partial)


def default_limits() -> dict:
    return limits()
