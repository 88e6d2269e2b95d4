"""Plain-text matrix file format.

    # comment lines start with '#' and are ignored, as are blank lines
    q n k ip          <- field order, columns, rows, E (Euclidean) or H (Hermitian)
    <n symbols>       <- k rows of whitespace-separated symbols
    ...

Symbols follow the field alphabet: 0/1 for GF(2), decimal digits for prime
fields, and 0 1 w v for GF(4) (w a primitive element, v = w^2).  Parsing a
code validates full row rank; raw blocks (the D and C completions fed to
the embed command) skip that check.
"""

from __future__ import annotations

import numpy as np

from .code import EUCLIDEAN, HERMITIAN, LinearCode
from .errors import ParseError, RankDeficientError
from .gf import field
from .matgf import GfMatrix

_IP_TOKENS = {"E": EUCLIDEAN, "H": HERMITIAN}
_IP_NAMES = {EUCLIDEAN: "E", HERMITIAN: "H"}


def read_matrix(text: str) -> tuple[GfMatrix, str]:
    """Parse a matrix file into (matrix, inner product kind).

    Raises ParseError with a line/token location for malformed headers,
    unknown symbols, and row or column count mismatches.
    """
    lines = text.split("\n")
    content = [(i + 1, ln.strip()) for i, ln in enumerate(lines)
               if ln.strip() and not ln.lstrip().startswith("#")]
    if not content:
        raise ParseError("empty matrix file")
    head_line, head = content[0]
    parts = head.split()
    if len(parts) != 4:
        raise ParseError(f"header must be 'q n k ip', got {head!r}", line=head_line)
    try:
        q, n, k = (int(p) for p in parts[:3])
    except ValueError:
        raise ParseError(f"header must start with three integers, got {head!r}",
                         line=head_line) from None
    try:
        f = field(q)
    except ValueError as exc:
        raise ParseError(str(exc), line=head_line, column=1) from None
    if n < 0 or k < 0:
        raise ParseError("dimensions must be nonnegative", line=head_line)
    ip_token = parts[3]
    if ip_token not in _IP_TOKENS:
        raise ParseError(f"inner product must be E or H, got {ip_token!r}",
                         line=head_line, column=4)
    if ip_token == "H" and q != 4:
        raise ParseError("inner product H requires q = 4", line=head_line, column=4)
    body = content[1:]
    if len(body) != k:
        raise ParseError(f"expected {k} matrix rows, found {len(body)}",
                         line=body[-1][0] if body else head_line)
    rows = np.zeros((k, n), dtype=np.uint8)
    for r, (line_no, ln) in enumerate(body):
        tokens = ln.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} symbols, found {len(tokens)}", line=line_no)
        for cidx, tok in enumerate(tokens):
            try:
                rows[r, cidx] = f.from_symbol(tok)
            except ValueError as exc:
                raise ParseError(str(exc), line=line_no, column=cidx + 1) from None
    return GfMatrix(f, rows), _IP_TOKENS[ip_token]


def parse_code(text: str) -> LinearCode:
    """Parse a matrix file into a LinearCode, validating full row rank."""
    m, ip = read_matrix(text)
    try:
        return LinearCode(m, ip)
    except RankDeficientError as exc:
        raise ParseError(str(exc)) from None


def render_matrix(m: GfMatrix, ip: str, comment: str | None = None) -> str:
    """Render a matrix to the file format; inverse of read_matrix."""
    f = m.field
    out = []
    if comment:
        for ln in comment.split("\n"):
            out.append(f"# {ln}" if ln else "#")
    out.append(f"{f.order} {m.cols} {m.rows} {_IP_NAMES[ip]}")
    for row in m.data:
        out.append(" ".join(f.to_symbol(int(v)) for v in row))
    return "\n".join(out) + "\n"


def render_code(c: LinearCode, comment: str | None = None) -> str:
    return render_matrix(c.gen, c.inner_product, comment=comment)
