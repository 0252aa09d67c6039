"""Plain-text matrix formats.

Complex format: the order ``N`` on the first line, then ``N`` rows of ``N``
complex literals such as ``0.5-0.866j``; ``#`` starts a comment. Files that
start with a ``BH n q`` header are read in logarithmic Butson form instead.
"""

import sys

import numpy as np

from .butson import iter_log, to_complex
from .exceptions import ParseError


def _strip(line):
    return line.split("#", 1)[0].strip()


def parse_complex(text):
    lines = [(no, _strip(raw)) for no, raw in enumerate(text.splitlines(), start=1)]
    lines = [(no, line) for no, line in lines if line]
    if not lines:
        raise ParseError("empty matrix text")
    no, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"expected the matrix order, got {head!r}", no, 1) from None
    if n < 1:
        raise ParseError("matrix order must be positive", no, 1)
    rows = lines[1:]
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, found {len(rows)}", rows[-1][0] if rows else no)
    X = np.empty((n, n), dtype=complex)
    for i, (no, line) in enumerate(rows):
        toks = line.split()
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, found {len(toks)}", no)
        for j, tok in enumerate(toks):
            try:
                X[i, j] = complex(tok.replace("i", "j"))
            except ValueError:
                raise ParseError(f"bad complex literal {tok!r}", no, j + 1) from None
    return X


def _fmt(z):
    return f"{z.real:.17g}{z.imag:+.17g}j"


def emit_complex(X):
    X = np.asarray(X, dtype=complex)
    body = "\n".join(" ".join(_fmt(z) for z in row) for row in X)
    return f"{X.shape[0]}\n{body}\n"


def parse_matrix(text):
    """Read either text format; a log file contributes its first record."""
    for raw in text.splitlines():
        line = _strip(raw)
        if line:
            if line.startswith("BH"):
                for record in iter_log(text.splitlines()):
                    return to_complex(record)
            break
    return parse_complex(text)


def read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_matrix(path):
    """Matrix from ``path`` (``-`` for standard input)."""
    return parse_matrix(read_text(path))


def save_matrix(path, X):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_complex(X))
