"""Plain-text matrix files.

Grammar (``#`` starts a comment that runs to end of line; blank lines are
ignored but still counted for error positions)::

    m=<int> poly=<0x..|0b..>
    n=<int>
    <n lines of n whitespace-separated hex literals>

Example::

    m=3 poly=0b1011
    n=2
    2 3
    3 2
"""

import re

from .gf2m import FieldError, FieldSpec, parse_poly
from .matgf import MAX_ORDER, MatrixGF

_HEADER = re.compile(r"^m=(\d+)\s+poly=(0[xX][0-9a-fA-F]+|0[bB][01]+)$")
_ORDER = re.compile(r"^n=(\d+)$")
_HEX = re.compile(r"^(0[xX])?[0-9a-fA-F]+$")


class MatrixFileError(ValueError):
    def __init__(self, message, line):
        super().__init__(f"{message} at line {line}")
        self.line = line


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body


def parse_matrix_file(text):
    """Parse ``text`` (str or UTF-8 bytes) into a validated MatrixGF."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = list(_content_lines(text))
    if not lines:
        raise MatrixFileError("missing header", 1)

    lineno, body = lines[0]
    hm = _HEADER.match(body)
    if not hm:
        raise MatrixFileError("malformed header (expected 'm=<int> poly=<0x..|0b..>')", lineno)
    try:
        field = FieldSpec(int(hm.group(1)), parse_poly(hm.group(2)))
    except FieldError as exc:
        raise MatrixFileError(str(exc), lineno) from None

    if len(lines) < 2:
        raise MatrixFileError("missing order line 'n=<int>'", lineno + 1)
    lineno, body = lines[1]
    om = _ORDER.match(body)
    if not om:
        raise MatrixFileError("malformed order line (expected 'n=<int>')", lineno)
    n = int(om.group(1))
    if not 1 <= n <= MAX_ORDER:
        raise MatrixFileError(f"order {n} outside 1..{MAX_ORDER}", lineno)

    rows = lines[2:]
    if len(rows) != n:
        last = rows[-1][0] + 1 if rows else lineno + 1
        where = rows[n][0] if len(rows) > n else last
        raise MatrixFileError(f"expected {n} matrix rows, found {len(rows)}", where)
    grid = []
    for lineno, body in rows:
        tokens = body.split()
        if len(tokens) != n:
            raise MatrixFileError(f"expected {n} entries, found {len(tokens)}", lineno)
        row = []
        for tok in tokens:
            if not _HEX.match(tok):
                raise MatrixFileError(f"bad element literal {tok!r}", lineno)
            value = int(tok, 16)
            if value >= field.order:
                raise MatrixFileError("element out of range", lineno)
            row.append(value)
        grid.append(row)
    return MatrixGF(field, grid)


def render_matrix(A):
    f = A.field
    lines = [f"m={f.m} poly=0x{f.poly:x}", f"n={A.n}"]
    lines += [" ".join(f.format(a) for a in r) for r in A.rows]
    return "\n".join(lines) + "\n"
