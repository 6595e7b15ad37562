"""Cross-measure inequalities and instantiated squeeze-bound statements."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .text_core import Inconclusive, Text

PASS, FAIL, SKIP = "pass", "fail", "skipped"

# (name, smaller measure, larger measure, source of the inequality)
RELATIONS: tuple[tuple[str, str, str, str], ...] = (
    ("delta<=gamma", "delta", "gamma", "every attractor hits each length-k substring"),
    ("gamma<=zsssr", "gamma", "zsssr", "LZSSsr phrase ends form an attractor"),
    ("zsssr<=zend", "zsssr", "zend", "greedy LZSSsr against LZ-End, as listed"),
    ("z77sr<=zend", "z77sr", "zend", "an LZ-End parse is a valid self-referencing LZ77 parse"),
    ("zsssr<=zss", "zsssr", "zss", "allowing overlap never lengthens the greedy parse"),
    ("z77sr<=z77", "z77sr", "z77", "allowing overlap never lengthens the greedy parse"),
    ("zss<=gbsc", "zss", "gbsc", "LZSS lower-bounds any grammar"),
    ("zss<=gis", "zss", "gis", "LZSS lower-bounds any grammar"),
    ("gamma<=e", "gamma", "e", "CDAWG edge count bounds the attractor size"),
)


@dataclass(frozen=True)
class RelationResult:
    name: str
    left: object
    right: object
    status: str
    source: str


@dataclass(frozen=True)
class RelationReport:
    text: Text
    values: dict
    results: tuple[RelationResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.results)

    @property
    def skipped(self) -> tuple[str, ...]:
        return tuple(r.name for r in self.results if r.status == SKIP)


def check_relations(T: Sequence[int], gamma_limit: int | None = None,
                    values: dict | None = None) -> RelationReport:
    """Evaluate every listed inequality on T.

    ``values`` may supply precomputed measure values by name.  Relations
    involving an inconclusive measure are marked skipped.
    """
    from .sensitivity_harness import evaluate

    T = Text(T)
    vals: dict = dict(values or {})
    lim = {"gamma": gamma_limit} if gamma_limit else None
    for name in {m for _, a, b, _ in RELATIONS for m in (a, b)}:
        if name not in vals:
            try:
                vals[name] = evaluate(name, T, lim)
            except Inconclusive:
                vals[name] = None
    results = []
    for rel, a, b, src in RELATIONS:
        x, y = vals[a], vals[b]
        if x is None or y is None:
            status = SKIP
        else:
            status = PASS if x <= y else FAIL
        results.append(RelationResult(rel, x, y, status, src))
    return RelationReport(T, vals, tuple(results))


# Known asymptotic upper bounds of one measure in terms of another, used as
# templates: beta <= alpha * f(n, alpha) up to a constant.
SQUEEZE_TEMPLATES = {
    "r": ("delta", "log n * log delta", "O(log n log r)"),
    "gamma": ("delta", "log(n / delta)", "O(log n)"),
    "zend": ("delta", "log^2(n / delta)", "O(log^2 (n / delta))"),
    "gbsc": ("delta", "log(n / delta)", "O(log n)"),
}


def squeeze_report(alpha_T, alpha_Tp, n: int, beta: str = "r",
                   alpha: str | None = None, f: str | None = None) -> str:
    """Instantiate the sandwich alpha <= beta <= alpha * f for T and T'.

    If alpha has bounded multiplicative sensitivity, then
    beta(T') / beta(T) <= alpha(T') * f / alpha(T).  The constants stay
    symbolic; this text is informational and never asserted.
    """
    default_alpha, default_f, ratio = SQUEEZE_TEMPLATES.get(beta, ("alpha", "f", "O(f)"))
    alpha = alpha or default_alpha
    f = f or default_f
    a, ap = Fraction(alpha_T), Fraction(alpha_Tp)
    if a == ap:
        ratio = "O(f)"
    lines = [
        f"measure {beta} squeezed by {alpha}: {alpha} <= {beta} <= c * {alpha} * ({f})",
        f"n = {n}, {alpha}(T) = {a}, {alpha}(T') = {ap}, {alpha}(T')/{alpha}(T) = {ap / a}",
        f"{beta}(T')/{beta}(T) <= c * {ap / a} * ({f}) evaluated at n = {n}",
        f"ratio template: {ratio}",
    ]
    return "\n".join(lines)
