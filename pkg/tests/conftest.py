"""Shared fixtures and the per-criterion acceptance summary."""

from __future__ import annotations

import os
import sys
from collections import OrderedDict

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from repsense.text_core import canonical_tuple  # noqa: E402

CRITERIA = OrderedDict([
    (1, "worked-example oracle set"),
    (2, "lower-bound families"),
    (3, "upper-bound property suites"),
    (4, "oracle equivalences"),
    (5, "relation suite"),
    (6, "determinism"),
])

# criterion -> list of (item, ok, detail); filled by the acceptance tests
_RESULTS: dict[int, list[tuple[str, bool, str]]] = {c: [] for c in CRITERIA}


class Recorder:
    def __call__(self, criterion: int, item: str, ok: bool, detail: str = "") -> bool:
        _RESULTS[criterion].append((item, bool(ok), detail))
        return bool(ok)


@pytest.fixture(scope="session")
def record() -> Recorder:
    return Recorder()


class ValueCache:
    """Memoized measure values; renaming-invariant measures share one entry per class."""

    def __init__(self):
        self._store: dict[tuple, object] = {}

    def get(self, name, fn, T, invariant=True):
        key = (name, canonical_tuple(T) if invariant else tuple(T))
        if key not in self._store:
            self._store[key] = fn(T)
        return self._store[key]


@pytest.fixture(scope="session")
def values() -> ValueCache:
    return ValueCache()


@pytest.fixture(scope="session")
def gis_table():
    """g_is of every ternary string of length <= 13, indexed by its base-3 value."""
    np = pytest.importorskip("numpy")
    from itertools import product

    from repsense.gcis import g_is

    table = {0: np.zeros(1, dtype=np.int32)}
    for L in range(1, 14):
        table[L] = np.fromiter((g_is(T) for T in product(range(3), repeat=L)),
                               dtype=np.int32, count=3 ** L)
    return table


def pytest_terminal_summary(terminalreporter):
    if not any(_RESULTS.values()):
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for c, title in CRITERIA.items():
        items = _RESULTS[c]
        if not items:
            tr.write_line(f"NOT RUN  criterion {c}: {title}")
            continue
        status = "PASS" if all(ok for _, ok, _ in items) else "FAIL"
        passed = sum(ok for _, ok, _ in items)
        tr.write_line(f"{status}     criterion {c}: {title} ({passed}/{len(items)} items)")
        for item, ok, detail in items:
            if not ok:
                tr.write_line(f"    FAIL {item}: {detail}")
