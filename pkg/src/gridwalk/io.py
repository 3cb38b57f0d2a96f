"""CSV / JSON serialisation for matrices, curves and reports.

Floats are printed with 17 significant digits so every value read back is
bit-identical to the one written.  CSV uses ``,`` between fields, ``.`` as
decimal point, ``\\n`` line endings and always starts with a header row.
Lines starting with ``#`` carry ``key=value`` summary metadata.
"""

from __future__ import annotations

import json

import numpy as np
import scipy.sparse as sp


def fmt(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def table_to_csv(columns: dict, summary: dict | None = None) -> str:
    names = list(columns)
    cols = [np.asarray(columns[c]) for c in names]
    lines = [",".join(names)]
    for i in range(len(cols[0]) if cols else 0):
        lines.append(",".join(fmt(c[i]) for c in cols))
    for key, value in (summary or {}).items():
        lines.append(f"# {key}={fmt(value)}")
    return "\n".join(lines) + "\n"


def _parse(token: str):
    for cast in (int, float):
        try:
            return cast(token)
        except ValueError:
            pass
    return token


def csv_to_table(text: str) -> tuple[dict, dict]:
    """Inverse of :func:`table_to_csv`: ``(columns, summary)``."""
    columns: dict = {}
    summary: dict = {}
    header = None
    rows = []
    for line in text.splitlines():
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            summary[key] = _parse(value)
            continue
        if header is None:
            header = line.split(",")
            continue
        rows.append([_parse(tok) for tok in line.split(",")])
    for j, name in enumerate(header or []):
        columns[name] = np.array([r[j] for r in rows])
    return columns, summary


def table_to_json(columns: dict, meta: dict | None = None) -> str:
    payload = dict(meta or {})
    payload["columns"] = {k: np.asarray(v).tolist() for k, v in columns.items()}
    return json.dumps(payload, indent=2) + "\n"


def json_to_table(text: str) -> tuple[dict, dict]:
    payload = json.loads(text)
    columns = {k: np.array(v) for k, v in payload.pop("columns").items()}
    return columns, payload


def matrix_to_csv(P) -> str:
    """Dense CSV, one row per state; first column is the 1-based state."""
    D = sp.csr_array(P).toarray()
    n = D.shape[0]
    lines = ["state," + ",".join(str(j) for j in range(1, n + 1))]
    for i in range(n):
        lines.append(str(i + 1) + "," + ",".join(fmt(v) for v in D[i]))
    return "\n".join(lines) + "\n"


def csv_to_matrix(text: str) -> np.ndarray:
    rows = [line.split(",")[1:] for line in text.splitlines()[1:] if line]
    return np.array([[float(v) for v in r] for r in rows])


def matrix_to_json(P) -> str:
    """Coordinate list with 1-based ``rows``/``cols``."""
    C = sp.coo_array(sp.csr_array(P))
    order = np.lexsort((C.col, C.row))
    payload = {
        "n": int(C.shape[0]),
        "rows": (C.row[order] + 1).tolist(),
        "cols": (C.col[order] + 1).tolist(),
        "vals": C.data[order].tolist(),
    }
    return json.dumps(payload) + "\n"


def json_to_matrix(text: str) -> sp.csr_array:
    d = json.loads(text)
    rows = np.asarray(d["rows"], dtype=np.intp) - 1
    cols = np.asarray(d["cols"], dtype=np.intp) - 1
    return sp.csr_array((d["vals"], (rows, cols)), shape=(d["n"], d["n"]))
