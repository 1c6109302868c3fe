"""Reading matrices from JSON and Matrix Market documents.

JSON documents look like ``{"n": 2, "entries": [[1, {"re": 0, "im": 1}], ...]}``:
row-major rows, each entry either a real number or a ``{"re", "im"}`` object.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import MatrixFormatError

MM_FIELDS = {"real", "integer", "complex"}
MM_SYMMETRIES = {"general", "symmetric", "hermitian"}


def _number(x, where: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise MatrixFormatError(f"{where}: expected a number, got {x!r}")
    return float(x)


def _json_entry(x, i: int, j: int) -> complex:
    where = f"entry ({i}, {j})"
    if isinstance(x, dict):
        extra = set(x) - {"re", "im"}
        if extra or "re" not in x:
            raise MatrixFormatError(f"{where}: complex entries need keys 're' and optional 'im'")
        return complex(_number(x["re"], where), _number(x.get("im", 0.0), where))
    return complex(_number(x, where), 0.0)


def parse_json_matrix(text: str) -> np.ndarray:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "entries" not in doc:
        raise MatrixFormatError("JSON matrix must be an object with an 'entries' array")
    rows = doc["entries"]
    if not isinstance(rows, list) or not rows:
        raise MatrixFormatError("'entries' must be a nonempty array of rows")
    n = doc.get("n", len(rows))
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise MatrixFormatError(f"'n' must be a positive integer, got {n!r}")
    if len(rows) != n:
        raise MatrixFormatError(f"'n' is {n} but 'entries' has {len(rows)} rows")
    out = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(rows, 1):
        if not isinstance(row, list) or len(row) != n:
            raise MatrixFormatError(f"row {i} must have {n} entries")
        for j, x in enumerate(row, 1):
            out[i - 1, j - 1] = _json_entry(x, i, j)
    return out


def _mm_values(tokens: list[str], field: str, where: str) -> complex:
    want = 2 if field == "complex" else 1
    if len(tokens) != want:
        raise MatrixFormatError(f"{where}: expected {want} value(s), got {len(tokens)}")
    try:
        vals = [float(t) for t in tokens]
    except ValueError:
        raise MatrixFormatError(f"{where}: cannot parse {' '.join(tokens)!r} as numbers") from None
    return complex(vals[0], vals[1] if want == 2 else 0.0)


def _mirror(a: np.ndarray, i: int, j: int, v: complex, symmetry: str):
    a[i, j] = v
    if i != j and symmetry != "general":
        a[j, i] = v.conjugate() if symmetry == "hermitian" else v


def parse_matrix_market(text: str) -> np.ndarray:
    """Dense complex array from a Matrix Market ``coordinate`` or ``array`` document.

    For ``symmetric`` and ``hermitian`` storage only one triangle is read and
    the other is filled by mirroring (with conjugation for ``hermitian``).
    ``pattern`` fields and ``skew-symmetric`` storage are rejected.
    """
    lines = text.splitlines()
    if not lines:
        raise MatrixFormatError("empty Matrix Market document")
    header = lines[0].split()
    if len(header) != 5 or header[0].lower() != "%%matrixmarket" or header[1].lower() != "matrix":
        raise MatrixFormatError("line 1: expected '%%MatrixMarket matrix <format> <field> <symmetry>'")
    fmt, field, symmetry = (h.lower() for h in header[2:])
    if fmt not in ("coordinate", "array"):
        raise MatrixFormatError(f"line 1: unsupported format {fmt!r}")
    if field not in MM_FIELDS:
        raise MatrixFormatError(f"line 1: unsupported field {field!r}")
    if symmetry not in MM_SYMMETRIES:
        raise MatrixFormatError(f"line 1: unsupported symmetry {symmetry!r}")

    body = [(no, ln.split()) for no, ln in enumerate(lines[1:], 2) if ln.strip() and not ln.lstrip().startswith("%")]
    if not body:
        raise MatrixFormatError("missing size line")
    size_no, size = body[0]
    try:
        dims = [int(x) for x in size]
    except ValueError:
        raise MatrixFormatError(f"line {size_no}: cannot parse size line") from None
    expect = 3 if fmt == "coordinate" else 2
    if len(dims) != expect:
        raise MatrixFormatError(f"line {size_no}: expected {expect} integers in size line")
    rows, cols = dims[0], dims[1]
    if rows != cols or rows < 1:
        raise MatrixFormatError(f"line {size_no}: matrix must be square and nonempty, got {rows}x{cols}")
    n = rows
    a = np.zeros((n, n), dtype=np.complex128)
    data = body[1:]

    if fmt == "coordinate":
        nnz = dims[2]
        if len(data) != nnz:
            raise MatrixFormatError(f"size line declares {nnz} entries, found {len(data)}")
        for no, tok in data:
            try:
                i, j = int(tok[0]), int(tok[1])
            except (ValueError, IndexError):
                raise MatrixFormatError(f"line {no}: cannot parse row/column indices") from None
            if not (1 <= i <= n and 1 <= j <= n):
                raise MatrixFormatError(f"line {no}: entry ({i}, {j}) out of range for n = {n}")
            v = _mm_values(tok[2:], field, f"line {no}, entry ({i}, {j})")
            if symmetry != "general" and i < j:
                i, j, v = j, i, (v.conjugate() if symmetry == "hermitian" else v)
            _mirror(a, i - 1, j - 1, v, symmetry)
        return a

    # array format: column-major, lower triangle only unless general
    cells = [(j, i) for j in range(n) for i in range(j if symmetry != "general" else 0, n)]
    if len(data) != len(cells):
        raise MatrixFormatError(f"expected {len(cells)} array values, found {len(data)}")
    for (no, tok), (j, i) in zip(data, cells):
        _mirror(a, i, j, _mm_values(tok, field, f"line {no}, entry ({i + 1}, {j + 1})"), symmetry)
    return a


def infer_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return "json"
    if suffix in (".mtx", ".mm"):
        return "mm"
    raise MatrixFormatError(f"cannot infer format from {str(path)!r}; pass --format json or --format mm")


def read_matrix(path: str | Path, fmt: str | None = None) -> np.ndarray:
    fmt = fmt or infer_format(path)
    text = Path(path).read_text()
    if fmt == "json":
        return parse_json_matrix(text)
    if fmt == "mm":
        return parse_matrix_market(text)
    raise MatrixFormatError(f"unknown format {fmt!r}")


def matrix_to_json(a) -> dict:
    """Inverse of :func:`parse_json_matrix`; real entries are written as plain numbers."""
    a = np.asarray(a, dtype=np.complex128)
    rows = [
        [x.real if x.imag == 0 else {"re": x.real, "im": x.imag} for x in row.tolist()]
        for row in a
    ]
    return {"n": a.shape[0], "entries": rows}
