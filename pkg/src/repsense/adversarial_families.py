"""Generators for the lower-bound string families and their expected values.

Symbol layout: named letters get the small integers listed in each
generator (``a=0, b=1, ...`` unless noted), and distinct sentinels
(``#_j``, ``sigma_j``) are consecutive integers right after the letters.
Every generator returns a :class:`FamilyInstance` carrying T, the edit
that produces the family's T', and the closed-form expectations.
"""

from __future__ import annotations

import inspect
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .text_core import DEL, INS, SUB, EditOp, Text, apply_edit


@dataclass(frozen=True)
class Expectation:
    measure: str
    side: str        # "T" or "T'"
    op: str          # "==", ">=" or "<="
    value: object
    note: str = ""

    def holds(self, actual) -> bool:
        if self.op == "==":
            return actual == self.value
        if self.op == ">=":
            return actual >= self.value
        if self.op == "<=":
            return actual <= self.value
        raise ValueError(self.op)


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    params: dict
    text: Text
    edit: EditOp
    expected: tuple[Expectation, ...]
    extras: dict = field(default_factory=dict, compare=False)

    @property
    def edited(self) -> Text:
        return apply_edit(self.text, self.edit)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    build: Callable[..., FamilyInstance]
    params: tuple[str, ...]
    summary: str


FAMILIES: dict[str, FamilySpec] = {}


def _family(name: str, summary: str):
    def deco(fn):
        FAMILIES[name] = FamilySpec(name, fn, tuple(inspect.signature(fn).parameters), summary)
        return fn
    return deco


def _inst(name, params, T, edit, *expect, **extras) -> FamilyInstance:
    return FamilyInstance(name, dict(params), Text(T), edit, tuple(expect), extras)


def _E(measure, side, value, op="==", note=""):
    return Expectation(measure, side, op, value, note)


def _need(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


# ---------------------------------------------------------------- delta

@_family("delta-del", "(abb)^m a (bba)^{m+1} a^{3m} (bba)^m, delete position 3m+1")
def delta_del(m: int) -> FamilyInstance:
    _need(m >= 1, "m >= 1")
    a, b = 0, 1
    T = (a, b, b) * m + (a,) + (b, b, a) * (m + 1) + (a,) * (3 * m) + (b, b, a) * m
    return _inst("delta-del", {"m": m}, T, EditOp.delete(3 * m + 1),
                 _E("delta", "T", Fraction(2)),
                 _E("delta", "T'", Fraction(9 * m + 2, 3 * m + 1), ">="))


# ---------------------------------------------------------------- gamma

def _gamma_text(k: int):
    a, x = 0, 1
    sharp = lambda j: 2 + j  # #_j, j = 1..k, after the letters a, x, b
    T = [a] * k + [x] + [a] * (k + 1)
    for j in range(1, k + 1):
        T += [sharp(j)] + [a] * (k - j) + [x] + [a] * j
    witness = [k + 1, k + 2] + [2 * k + 3 + (j - 1) * (k + 2) for j in range(1, k + 1)]
    return T, witness


def _gamma(kind: str, k: int) -> FamilyInstance:
    _need(k >= 1, "k >= 1")
    T, witness = _gamma_text(k)
    b = 2
    edit = {SUB: EditOp.sub(k + 1, b), INS: EditOp.ins(k + 2, b), DEL: EditOp.delete(k + 1)}[kind]
    after = {SUB: 2 * k + 2, INS: 2 * k + 2, DEL: 2 * k + 1}[kind]
    return _inst(f"gamma-{kind}", {"k": k}, T, edit,
                 _E("gamma", "T", k + 2), _E("gamma", "T'", after),
                 _E("n", "T", k * k + 4 * k + 2), witness=tuple(witness))


@_family("gamma-sub", "a^k x a^{k+1} #_1 a^{k-1} x a ... #_k x a^k; x at k+1 becomes b")
def gamma_sub(k: int) -> FamilyInstance:
    return _gamma(SUB, k)


@_family("gamma-ins", "same text; b inserted between positions k+1 and k+2")
def gamma_ins(k: int) -> FamilyInstance:
    return _gamma(INS, k)


@_family("gamma-del", "same text; position k+1 deleted")
def gamma_del(k: int) -> FamilyInstance:
    return _gamma(DEL, k)


# ---------------------------------------------------------------- bidirectional

@_family("b-family", "a^k x a^{k+1} #_1 a^k x a #_2 ... #_k a x a^k; x at k+1 becomes fresh y")
def b_family(k: int) -> FamilyInstance:
    _need(k >= 1, "k >= 1")
    from .bidirectional import BidirectionalScheme, Copy, Ground
    a, x, y = 0, 1, 2
    sharp = lambda j: 2 + j
    T = [a] * k + [x] + [a] * (k + 1)
    for j in range(1, k + 1):
        T += [sharp(j)] + [a] * (k - j + 1) + [x] + [a] * j
    phrases = [Copy(k + 2, k), Ground(x), Ground(a), Copy(k + 2, k)]
    for j in range(1, k + 1):
        phrases += [Ground(sharp(j)), Copy(j, k + 2)]
    scheme = BidirectionalScheme(tuple(phrases))
    return _inst("b-family", {"k": k}, T, EditOp.sub(k + 1, y),
                 _E("b", "T", 2 * k + 4, "<=", "explicit scheme"),
                 _E("b", "T'", 3 * k + 5),
                 _E("n", "T", k * k + 5 * k + 2), scheme=scheme)


@_family("b-unary", "a^n; the symbol at ceil(n/2) becomes b")
def b_unary(n: int) -> FamilyInstance:
    _need(n >= 4, "n >= 4")
    return _inst("b-unary", {"n": n}, [0] * n, EditOp.sub((n + 1) // 2, 1),
                 _E("b", "T", 2), _E("b", "T'", 4))


# ---------------------------------------------------------------- LZ77 / LZ77sr

def _q_text(p: int, first=(0,)):
    blocks = [tuple(first)]
    for _ in range(2, p + 1):
        blocks.append(sum(blocks, ()) + (1,))
    return sum(blocks, ())


def _lz77_q(kind, p):
    _need(p >= 2, "p >= 2")
    T = _q_text(p)
    edit = {SUB: EditOp.sub(1, 2), INS: EditOp.ins(2, 2), DEL: EditOp.delete(1)}[kind]
    after = {SUB: 2 * p - 1, INS: 2 * p - 1, DEL: 2 * p - 2}[kind]
    return _inst(f"lz77-q-{kind}", {"p": p}, T, edit, _E("z77", "T", p), _E("z77", "T'", after),
                 _E("n", "T", 2 ** p - 1))


@_family("lz77-q-sub", "Q_1 = 0, Q_k = Q_1...Q_{k-1} 1; T[1] becomes 2")
def lz77_q_sub(p: int) -> FamilyInstance:
    return _lz77_q(SUB, p)


@_family("lz77-q-ins", "Q-string; 2 inserted after T[1]")
def lz77_q_ins(p: int) -> FamilyInstance:
    return _lz77_q(INS, p)


@_family("lz77-q-del", "Q-string; T[1] deleted")
def lz77_q_del(p: int) -> FamilyInstance:
    return _lz77_q(DEL, p)


@_family("lz77sr-q-del", "Q-string under self-referencing LZ77; T[1] deleted")
def lz77sr_q_del(p: int) -> FamilyInstance:
    _need(p >= 2, "p >= 2")
    return _inst("lz77sr-q-del", {"p": p}, _q_text(p), EditOp.delete(1),
                 _E("z77sr", "T", p), _E("z77sr", "T'", 2 * p - 2))


def _lz77sr_r(kind, p):
    _need(p >= 2, "p >= 2")
    T = _q_text(p, first=(0, 0))
    edit = {SUB: EditOp.sub(2, 2), INS: EditOp.ins(2, 2)}[kind]
    return _inst(f"lz77sr-r-{kind}", {"p": p}, T, edit,
                 _E("z77sr", "T", p), _E("z77sr", "T'", 2 * p))


@_family("lz77sr-r-sub", "R_1 = 00, R_k = R_1...R_{k-1} 1; T[2] becomes 2")
def lz77sr_r_sub(p: int) -> FamilyInstance:
    return _lz77sr_r(SUB, p)


@_family("lz77sr-r-ins", "R-string; 2 inserted after T[1]")
def lz77sr_r_ins(p: int) -> FamilyInstance:
    return _lz77sr_r(INS, p)


def _pow2(h: int) -> int:
    _need(h >= 1, "h >= 1")
    return 2 ** h


def _sqrtn_lz77(kind, h):
    p = _pow2(h)
    a, b, c = 0, 1, 2
    sharp = lambda j: 2 + j
    if kind == DEL:
        T = [a] * (p - 1) + [c, b]
        for j in range(1, p):
            T += [a] * j + [c, b, sharp(j)]
        return _inst("lz77-sqrtn-del", {"h": h}, T, EditOp.delete(p),
                     _E("z77", "T", h + p + 1), _E("z77", "T'", h + 2 * p - 1), p=p)
    T = [a] * (2 * p - 2) + [b]
    for j in range(1, p):
        T += [a] * (p + j - 1) + [b, sharp(j)]
    edit = EditOp.sub(p, c) if kind == SUB else EditOp.ins(p, c)
    return _inst(f"lz77-sqrtn-{kind}", {"h": h}, T, edit,
                 _E("z77", "T", h + p), _E("z77", "T'", h + 2 * p), p=p)


@_family("lz77-sqrtn-sub", "p=2^h: a^{2p-2} b . a^p b #_1 ... a^{2p-2} b #_{p-1}; p-th a becomes c")
def lz77_sqrtn_sub(h: int) -> FamilyInstance:
    return _sqrtn_lz77(SUB, h)


@_family("lz77-sqrtn-ins", "same text; c inserted between positions p-1 and p")
def lz77_sqrtn_ins(h: int) -> FamilyInstance:
    return _sqrtn_lz77(INS, h)


@_family("lz77-sqrtn-del", "p=2^h: a^{p-1} c b . a c b #_1 ... a^{p-1} c b #_{p-1}; first c deleted")
def lz77_sqrtn_del(h: int) -> FamilyInstance:
    return _sqrtn_lz77(DEL, h)


def _sqrtn_lz77sr(kind, p):
    _need(p >= 2, "p >= 2")
    a, b, c = 0, 1, 2
    sharp = lambda j: 2 + j
    if kind == DEL:
        T = [a] * p + [b, c]
        for j in range(1, p + 1):
            T += [a] * j + [b, c, sharp(j)]
        return _inst("lz77sr-sqrtn-del", {"p": p}, T, EditOp.delete(p + 2),
                     _E("z77sr", "T", p + 3), _E("z77sr", "T'", 2 * p + 2))
    T = [a] * (p - 1) + ([a] if kind == SUB else []) + [a] * p + [b]
    for j in range(1, p):
        T += [a] * (p + j) + [b, sharp(j)]
    edit = EditOp.sub(p, c) if kind == SUB else EditOp.ins(p, c)
    return _inst(f"lz77sr-sqrtn-{kind}", {"p": p}, T, edit,
                 _E("z77sr", "T", p + 1), _E("z77sr", "T'", 2 * p + 2))


@_family("lz77sr-sqrtn-sub", "a^{p-1} a . a^p b . a^{p+1} b #_1 ... a^{2p-1} b #_{p-1}; p-th a becomes c")
def lz77sr_sqrtn_sub(p: int) -> FamilyInstance:
    return _sqrtn_lz77sr(SUB, p)


@_family("lz77sr-sqrtn-ins", "a^{p-1} . a^p b . a^{p+1} b #_1 ...; c inserted between p-1 and p")
def lz77sr_sqrtn_ins(p: int) -> FamilyInstance:
    return _sqrtn_lz77sr(INS, p)


@_family("lz77sr-sqrtn-del", "a^p b c . a b c #_1 ... a^p b c #_p; the c at p+2 deleted")
def lz77sr_sqrtn_del(p: int) -> FamilyInstance:
    return _sqrtn_lz77sr(DEL, p)


def _binary_lz77sr(kind, p):
    _need(p >= 2, "p >= 2")
    T = [0] * (p - 1) + ([0] if kind == SUB else []) + [0] * (2 * p) + [1]
    for j in range(1, p + 1):
        T += [0] * (2 * p + j) + [1] + [0] * j + [1]
    edit = EditOp.sub(p, 1) if kind == SUB else EditOp.ins(p, 1)
    return _inst(f"lz77sr-binary-{kind}", {"p": p}, T, edit,
                 _E("z77sr", "T", p + 2), _E("z77sr", "T'", 2 * p + 4))


@_family("lz77sr-binary-sub", "0^{p-1} 0 . 0^{2p} 1 . 0^{2p+1} 1 0 1 ... 0^{3p} 1 0^p 1; p-th 0 becomes 1")
def lz77sr_binary_sub(p: int) -> FamilyInstance:
    return _binary_lz77sr(SUB, p)


@_family("lz77sr-binary-ins", "0^{p-1} . 0^{2p} 1 ...; 1 inserted between p-1 and p")
def lz77sr_binary_ins(p: int) -> FamilyInstance:
    return _binary_lz77sr(INS, p)


# ---------------------------------------------------------------- LZSS

def _lzss_text(p: int):
    zero, one = 0, 1
    a = lambda i: 1 + i          # a_1..a_p
    b = lambda i: 1 + p + i      # b_1..b_p
    Q1 = [a(i) for length in range(p, 0, -1) for i in range(1, length + 1)]
    Q2 = [b(i) for length in range(1, p + 1) for i in range(1, length + 1)]
    m = p * (p + 1) // 2
    T = Q1 + [a(1), one] + Q2
    for k in range(1, m + 1):
        T += Q1[m - k + 1:] + [a(1), one] + Q2[:k]
    return T, len(Q1) + 2, zero  # position of the first 1, the extra letter 0


def _lzss(kind, p):
    _need(p >= 1, "p >= 1")
    T, first_one, zero = _lzss_text(p)
    m = p * (p + 1) // 2
    edit = {SUB: EditOp.sub(first_one, zero), INS: EditOp.ins(first_one, zero),
            DEL: EditOp.delete(first_one)}[kind]
    after = {SUB: 4 * p + 3 * m, INS: 4 * p + 2 * m, DEL: 4 * p + 3 * m}[kind]
    return _inst(f"lzss-{kind}", {"p": p}, T, edit,
                 _E("zss", "T", 4 * p + m), _E("zss", "T'", after),
                 _E("zsssr", "T", 4 * p + m), _E("zsssr", "T'", after))


@_family("lzss-sub", "Q1 a_1 1 Q2 followed by the suffix/prefix blocks; first 1 becomes 0")
def lzss_sub(p: int) -> FamilyInstance:
    return _lzss(SUB, p)


@_family("lzss-ins", "same text; 0 inserted before the first 1")
def lzss_ins(p: int) -> FamilyInstance:
    return _lzss(INS, p)


@_family("lzss-del", "same text; the first 1 deleted")
def lzss_del(p: int) -> FamilyInstance:
    return _lzss(DEL, p)


# ---------------------------------------------------------------- LZ-End

def _lzend(kind, p):
    _need(p >= 1, "p >= 1")
    s = lambda i: i - 1  # sigma_i
    Q = [s(i) for length in range(1, p + 1) for i in range(1, length + 1)]
    q = len(Q)
    T = list(Q) + [s(1), s(p + 1)]
    for j in range(1, q + 1):
        T += Q[q - j:] + [s(1), s(p + 1), s(p + 1 + j)]
    sharp = p + q + 1
    edit = {SUB: EditOp.sub(q + 1, sharp), INS: EditOp.ins(q + 1, sharp),
            DEL: EditOp.delete(q + 1)}[kind]
    expect = [_E("zend", "T", p + 1 + q)]
    if kind in (SUB, INS):
        expect.append(_E("zend", "T'", p + 2 + 2 * q))
    return _inst(f"lzend-{kind}", {"p": p}, T, edit, *expect, q=q)


@_family("lzend-sub", "Q = s1.s1s2...s1..sp, then Q-suffix blocks; T[q+1] becomes #")
def lzend_sub(p: int) -> FamilyInstance:
    return _lzend(SUB, p)


@_family("lzend-ins", "same text; # inserted between positions q and q+1")
def lzend_ins(p: int) -> FamilyInstance:
    return _lzend(INS, p)


@_family("lzend-del", "same text; T[q+1] deleted")
def lzend_del(p: int) -> FamilyInstance:
    return _lzend(DEL, p)


# ---------------------------------------------------------------- LZ78

def lz78_ell(j: int) -> int:
    """The l with l(l-1)/2 + 1 <= j <= l(l+1)/2, by direct scan."""
    ell = 1
    while not ell * (ell - 1) // 2 + 1 <= j <= ell * (ell + 1) // 2:
        ell += 1
    return ell


def lz78_y(j: int, k: int) -> int:
    """Largest y <= k with y = 2 + j + l_j - 1 (mod l_j), by direct scan."""
    ell = lz78_ell(j)
    target = (2 + j + ell - 1) % ell
    y = k
    while y % ell != target:
        y -= 1
    return y


def lz78_formula(k: int) -> Fraction:
    """5k - 1 + sum_{j=2..k} (y_j - j - 1) / l_j."""
    return 5 * k - 1 + sum(Fraction(lz78_y(j, k) - j - 1, lz78_ell(j)) for j in range(2, k + 1))


def _lz78(kind, k):
    _need(k >= 2, "k >= 2")
    s = lambda i: i - 1  # sigma_i, i = 1..2k
    T = [s(i) for i in range(k + 1, 2 * k + 1)]
    for length in range(1, k + 1):
        T += [s(i) for i in range(1, length + 1)]
    block = len(T) + 1  # first symbol of factor 2k+1
    for j in range(1, k + 1):
        T += [s(i) for i in range(1, lz78_y(j, k) + 1)] + [s(k + j)]
    sharp = 2 * k
    edit = {SUB: EditOp.sub(block, sharp), INS: EditOp.ins(block + 1, sharp),
            DEL: EditOp.delete(block)}[kind]
    expect = [_E("z78", "T", 3 * k)]
    if kind == SUB:
        expect.append(_E("z78", "T'", lz78_formula(k)))
    return _inst(f"lz78-{kind}", {"k": k}, T, edit, *expect,
                 y=tuple(lz78_y(j, k) for j in range(1, k + 1)))


@_family("lz78-sub", "s_{k+1}..s_{2k} . prefixes of s1..sk . (s1..s_{y_j} s_{k+j}); first s1 of factor 2k+1 becomes #")
def lz78_sub(k: int) -> FamilyInstance:
    return _lz78(SUB, k)


@_family("lz78-ins", "same text; # inserted after the first symbol of factor 2k+1")
def lz78_ins(k: int) -> FamilyInstance:
    return _lz78(INS, k)


@_family("lz78-del", "same text; first symbol of factor 2k+1 deleted")
def lz78_del(k: int) -> FamilyInstance:
    return _lz78(DEL, k)


# ---------------------------------------------------------------- GCIS

@_family("gcis-sub", "(2^p 3)^4; the third 3 becomes 1")
def gcis_sub(p: int) -> FamilyInstance:
    _need(p >= 1, "p >= 1")
    T = ([2] * p + [3]) * 4
    return _inst("gcis-sub", {"p": p}, T, EditOp.sub(3 * (p + 1), 1),
                 _E("gis", "T", p + 5), _E("gis", "T'", 4 * p + 7))


@_family("gcis-ins", "((12)^p 122)^4; 1 inserted before the 122 of the third block")
def gcis_ins(p: int) -> FamilyInstance:
    _need(p >= 1, "p >= 1")
    blk = [1, 2] * p + [1, 2, 2]
    T = blk * 4
    return _inst("gcis-ins", {"p": p}, T, EditOp.ins(2 * len(blk) + 2 * p + 1, 1),
                 _E("gis", "T", p + 10), _E("gis", "T'", 4 * p + 16))


@_family("gcis-del", "((122)^p 132)^4; the third 3 deleted")
def gcis_del(p: int) -> FamilyInstance:
    _need(p >= 1, "p >= 1")
    blk = [1, 2, 2] * p + [1, 3, 2]
    T = blk * 4
    return _inst("gcis-del", {"p": p}, T, EditOp.delete(2 * len(blk) + 3 * p + 2),
                 _E("gis", "T", p + 11), _E("gis", "T'", 4 * p + 15))


# ---------------------------------------------------------------- Bisection

@_family("bisection-sub", "a^{2^k}; the last a becomes b")
def bisection_sub(k: int) -> FamilyInstance:
    _need(k >= 1, "k >= 1")
    n = 2 ** k
    return _inst("bisection-sub", {"k": k}, [0] * n, EditOp.sub(n, 1),
                 _E("gbsc", "T", 2 * k - 1), _E("gbsc", "T'", 4 * k - 4))


def de_bruijn2(sigma: int) -> list[int]:
    """Order-2 de Bruijn cycle over 0..sigma-1 (Lyndon concatenation), unrolled
    by repeating its first symbol, so every one of sigma^2 bigrams occurs once."""
    seq: list[int] = []
    a = [0] * 3

    def db(t, p):
        if t > 2:
            if 2 % p == 0:
                seq.extend(a[1:p + 1])
            return
        a[t] = a[t - p]
        db(t + 1, p)
        for j in range(a[t - p] + 1, sigma):
            a[t] = j
            db(t + 1, t)

    db(1, 1)
    return seq + seq[:1]


def _bisection_indel(kind, p, sigma):
    _need(p >= 1, "p >= 1")
    _need(sigma >= 2 and sigma & (sigma - 1) == 0, "sigma must be a power of two >= 2")
    Q = de_bruijn2(sigma)
    t = sigma * sigma
    T = [c for c in Q[1:] for _ in range(2 ** p)]
    edit = EditOp.delete(1) if kind == DEL else EditOp.ins(1, Q[0])
    after = t * p + t if kind == DEL else (t + 1) * p + t
    return _inst(f"bisection-{kind}", {"p": p, "sigma": sigma}, T, edit,
                 _E("gbsc", "T", p * sigma + t - 1), _E("gbsc", "T'", after), Q=tuple(Q))


@_family("bisection-del", "Q'[1]^{2^p} ... Q'[t]^{2^p} over a de Bruijn Q; first symbol deleted")
def bisection_del(p: int, sigma: int = 2) -> FamilyInstance:
    return _bisection_indel(DEL, p, sigma)


@_family("bisection-ins", "same text; Q[1] prepended")
def bisection_ins(p: int, sigma: int = 2) -> FamilyInstance:
    return _bisection_indel(INS, p, sigma)


# ---------------------------------------------------------------- CDAWG

@_family("cdawg-del", "a^m b a^m b; the first b deleted")
def cdawg_del(m: int) -> FamilyInstance:
    _need(m >= 1, "m >= 1")
    T = [0] * m + [1] + [0] * m + [1]
    return _inst("cdawg-del", {"m": m}, T, EditOp.delete(m + 1),
                 _E("e", "T", 2 * m + 1), _E("e", "T'", 4 * m))


@_family("cdawg-sub", "a^m b a^m b; the first b becomes a")
def cdawg_sub(m: int) -> FamilyInstance:
    _need(m >= 1, "m >= 1")
    T = [0] * m + [1] + [0] * m + [1]
    return _inst("cdawg-sub", {"m": m}, T, EditOp.sub(m + 1, 0),
                 _E("e", "T", 2 * m + 1), _E("e", "T'", 2 * (2 * m + 1), note="a^{2m+1} b"))


@_family("cdawg-ins", "a^n; b appended")
def cdawg_ins(n: int) -> FamilyInstance:
    _need(n >= 2, "n >= 2")
    return _inst("cdawg-ins", {"n": n}, [0] * n, EditOp.ins(n + 1, 1),
                 _E("e", "T", n), _E("e", "T'", 2 * n - 2))


# ---------------------------------------------------------------- BWT

@_family("rev-fibonacci", "reversed Fibonacci word; a symbol prepended")
def rev_fibonacci(k: int, prepend: int = 0) -> FamilyInstance:
    from .bwt_runs import reversed_fibonacci
    _need(k >= 4, "k >= 4")
    _need(prepend in (0, 1), "prepend must be a (0) or b (1)")
    return _inst("rev-fibonacci", {"k": k, "prepend": prepend}, reversed_fibonacci(k),
                 EditOp.ins(1, prepend), _E("r", "T", 2))


# ---------------------------------------------------------------- verification

def generate(family: str, **params) -> FamilyInstance:
    try:
        spec = FAMILIES[family]
    except KeyError:
        raise KeyError(f"unknown family {family!r}") from None
    unknown = set(params) - set(spec.params)
    if unknown:
        raise ValueError(f"{family}: unknown parameters {sorted(unknown)}; expected {spec.params}")
    return spec.build(**params)


@dataclass(frozen=True)
class CheckResult:
    expectation: Expectation
    actual: object
    ok: bool | None  # None: measure inconclusive


@dataclass(frozen=True)
class VerifyReport:
    instance: FamilyInstance
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def inconclusive(self) -> bool:
        return any(c.ok is None for c in self.checks)


def verify(instance: FamilyInstance, limits: dict | None = None) -> VerifyReport:
    """Evaluate every expectation with the production measures.

    ``limits`` overrides the n caps of exponential measures (``gamma``, ``b``).
    A ``b`` expectation on T with an explicit scheme is checked by validating
    that scheme and comparing its size.
    """
    from .sensitivity_harness import evaluate
    from .text_core import Inconclusive

    texts = {"T": instance.text, "T'": instance.edited}
    checks = []
    for ex in instance.expected:
        T = texts[ex.side]
        if ex.measure == "n":
            actual = len(T)
        elif ex.measure == "b" and ex.side == "T" and "scheme" in instance.extras:
            from .bidirectional import validate_scheme
            scheme = instance.extras["scheme"]
            actual = scheme.size if validate_scheme(T, scheme) else None
            checks.append(CheckResult(ex, actual, actual is not None and ex.holds(actual)))
            continue
        else:
            try:
                actual = evaluate(ex.measure, T, limits=limits)
            except Inconclusive:
                checks.append(CheckResult(ex, None, None))
                continue
        checks.append(CheckResult(ex, actual, ex.holds(actual)))
    return VerifyReport(instance, tuple(checks))
