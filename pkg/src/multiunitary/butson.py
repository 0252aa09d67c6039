"""Butson matrices in logarithmic form.

A record of the text format is a header line ``BH n q`` followed by ``n``
lines of ``n`` integer exponents in ``[0, q)``; records are separated by
blank lines and ``#`` starts a comment. The k-th record of a file (1-based)
is the matrix usually written ``B_[k]``.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exceptions import ParseError, RangeError, ShapeMismatch
from .matcore import is_hadamard
from .validation import DEFAULT_TOL, check_matrix


@dataclass(frozen=True, eq=False)
class LogMatrix:
    """Matrix ``exp(2 pi i exps / q)`` stored by its integer exponents."""

    q: int
    exps: np.ndarray

    def __post_init__(self):
        if int(self.q) < 2:
            raise RangeError(f"root order q must be >= 2, got {self.q}")
        exps = np.array(self.exps, dtype=np.int64)
        if exps.ndim != 2 or exps.shape[0] != exps.shape[1]:
            raise ShapeMismatch(f"exponent table must be square, got shape {exps.shape}")
        exps = exps % int(self.q)
        exps.setflags(write=False)
        object.__setattr__(self, "q", int(self.q))
        object.__setattr__(self, "exps", exps)

    @property
    def n(self):
        return self.exps.shape[0]

    def __eq__(self, other):
        if not isinstance(other, LogMatrix):
            return NotImplemented
        return self.q == other.q and np.array_equal(self.exps, other.exps)

    def __hash__(self):
        return hash((self.q, self.exps.tobytes()))

    def __repr__(self):
        return f"LogMatrix(n={self.n}, q={self.q})"


def _strip(line):
    return line.split("#", 1)[0].strip()


def iter_log(lines):
    """Yield LogMatrix records from an iterable of text lines."""
    header = None
    rows = []
    for lineno, raw in enumerate(lines, start=1):
        line = _strip(raw)
        if header is None:
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3 or parts[0] != "BH":
                raise ParseError("expected header 'BH n q'", lineno, 1)
            try:
                n, q = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("header order and root order must be integers", lineno) from None
            if n < 1 or q < 2:
                raise ParseError(f"invalid header values n={n}, q={q}", lineno)
            header = (n, q, lineno)
            rows = []
            continue
        n, q, start = header
        if not line:
            raise ParseError(f"record starting at line {start} has {len(rows)} of {n} rows", lineno)
        values = []
        for col, tok in enumerate(line.split(), start=1):
            try:
                values.append(int(tok))
            except ValueError:
                raise ParseError(f"non-integer exponent {tok!r}", lineno, col) from None
        if len(values) != n:
            raise ParseError(f"expected {n} exponents, found {len(values)}", lineno)
        bad = [c for c, v in enumerate(values, start=1) if not 0 <= v < q]
        if bad:
            raise RangeError(f"exponent out of range [0, {q}) at line {lineno}, column {bad[0]}")
        rows.append(values)
        if len(rows) == n:
            yield LogMatrix(q, np.array(rows, dtype=np.int64))
            header = None
    if header is not None:
        raise ParseError(f"truncated record starting at line {header[2]}")


def parse_log(text):
    """Parse every record in ``text``; returns a list of LogMatrix."""
    return list(iter_log(text.splitlines()))


def emit_log(records):
    """Serialise one LogMatrix or a sequence of them."""
    if isinstance(records, LogMatrix):
        records = [records]
    chunks = []
    for L in records:
        body = "\n".join(" ".join(str(int(v)) for v in row) for row in L.exps)
        chunks.append(f"BH {L.n} {L.q}\n{body}\n")
    return "\n".join(chunks)


@lru_cache(maxsize=None)
def _roots(q):
    return np.exp(2j * np.pi * np.arange(q) / q)


def to_complex(L):
    """Entries ``exp(2 pi i e / q)`` looked up from one table of roots."""
    return _roots(L.q)[L.exps]


def from_complex(X, q, tol=DEFAULT_TOL):
    """Recover exponents of a matrix whose entries are q-th roots of unity."""
    X = check_matrix(X)
    m = np.rint(np.angle(X) * q / (2 * np.pi)).astype(np.int64) % q
    if np.abs(X - _roots(q)[m]).max(initial=0.0) > tol:
        raise RangeError(f"entries are not {q}-th roots of unity within {tol}")
    return LogMatrix(q, m)


def is_butson(X, q, tol=DEFAULT_TOL):
    """True iff ``X`` is Hadamard with every entry near a q-th root of unity."""
    X = check_matrix(X)
    if not is_hadamard(X, tol):
        return False
    m = np.rint(np.angle(X) * q / (2 * np.pi)).astype(np.int64) % q
    return bool(np.abs(X - _roots(q)[m]).max(initial=0.0) <= tol)


def _poly_rem(num, den):
    """Remainder of integer polynomials (coefficients low to high, ``den`` monic)."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return num[:dd]


def _poly_div_exact(num, den):
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        quot[i - dd] = c
        if c:
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    assert not any(num[:dd])
    return quot


@lru_cache(maxsize=None)
def cyclotomic(q):
    """Integer coefficients (low to high) of the q-th cyclotomic polynomial."""
    poly = [-1] + [0] * (q - 1) + [1]
    for k in range(1, q):
        if q % k == 0:
            poly = _poly_div_exact(poly, cyclotomic(k))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction(q):
    # row m: coefficients of x^m reduced modulo the cyclotomic polynomial
    phi = cyclotomic(q)
    deg = len(phi) - 1
    out = np.zeros((q, deg), dtype=np.int64)
    for m in range(q):
        mono = [0] * m + [1]
        out[m] = (_poly_rem(mono, phi) + [0] * deg)[:deg]
    return out


def is_hadamard_exact(L):
    """Orthogonality of all row pairs decided in exact integer arithmetic.

    ``sum_k w^(e_ik - e_jk) = 0`` holds iff the polynomial with coefficient
    ``#{k : e_ik - e_jk = m mod q}`` at ``x^m`` vanishes modulo the q-th
    cyclotomic polynomial.
    """
    E = L.exps
    n, q = L.n, L.q
    iu, ju = np.triu_indices(n, 1)
    if iu.size == 0:
        return True
    diffs = (E[iu] - E[ju]) % q
    counts = np.zeros((iu.size, q), dtype=np.int64)
    np.add.at(counts, (np.repeat(np.arange(iu.size), n), diffs.ravel()), 1)
    return bool(not np.any(counts @ _reduction(q)))
