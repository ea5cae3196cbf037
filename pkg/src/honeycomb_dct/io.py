"""
CSV and JSON formats for point sets, coefficient maps, matrices and vectors.

Floats are written with Python's shortest round-trip representation unless a
number of decimals is requested for display.
"""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from .errors import DimensionMismatch
from .honeycomb import ExtensionCoeffs, HoneycombFamily
from .lattice import PointSetKind, generate_points
from .transform import SampleVector, SpectrumVector, TransformMatrix

__all__ = [
    "format_float",
    "format_complex",
    "triples_to_csv",
    "triples_to_json",
    "coeffs_to_json",
    "coeffs_from_json",
    "matrix_to_csv",
    "matrix_to_json",
    "matrix_from_csv",
    "samples_to_csv",
    "samples_from_csv",
    "spectrum_to_csv",
    "spectrum_from_csv",
    "rows_to_csv",
    "dumps",
]


def format_float(v: float, digits: int | None = None) -> str:
    v = float(v)
    if digits is None:
        return repr(v)
    out = f"{v:.{digits}f}"
    # avoid "-0.000"
    if float(out) == 0:
        out = f"{0.0:.{digits}f}"
    return out


def format_complex(z: complex, digits: int | None = None) -> str:
    z = complex(z)
    re = format_float(z.real, digits)
    im = format_float(z.imag, digits)
    if not im.startswith("-"):
        im = "+" + im
    return f"{re}{im}i"


def parse_complex(text: str) -> complex:
    return complex(text.strip().replace("i", "j"))


def dumps(obj) -> str:
    return json.dumps(obj, indent=None, separators=(",", ":")) + "\n"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def triples_to_csv(items) -> str:
    """Points or weights as ``index,c0,c1,c2,M`` rows."""
    return _csv_text(["index", "c0", "c1", "c2", "M"], [[i, *it.triple, it.M] for i, it in enumerate(items)])


def triples_to_json(items, M: int) -> str:
    return dumps({"M": M, "triples": [list(it.triple) for it in items]})


def coeffs_to_json(fam: HoneycombFamily) -> str:
    entries = [
        {
            "weight": list(w.triple),
            "plus": [[z.real, z.imag] for z in c.plus],
            "minus": [[z.real, z.imag] for z in c.minus],
        }
        for w, c in zip(fam.weights, fam.coeffs)
    ]
    return dumps({"M": fam.M, "kind": fam.kind, "coeffs": entries})


def coeffs_from_json(text: str) -> tuple[int | None, dict]:
    """Read a coefficient map; returns ``(M or None, {triple: ExtensionCoeffs})``."""
    doc = json.loads(text)
    entries = doc["coeffs"] if isinstance(doc, dict) else doc
    table = {}
    for e in entries:
        triple = tuple(int(v) for v in e["weight"])
        if triple in table:
            raise DimensionMismatch(f"duplicate weight {triple} in coefficient map")
        pair = [[complex(*v) if isinstance(v, (list, tuple)) else complex(v) for v in e[k]] for k in ("plus", "minus")]
        table[triple] = ExtensionCoeffs(tuple(pair[0]), tuple(pair[1]))
    M = doc.get("M") if isinstance(doc, dict) else None
    return M, table


def matrix_to_csv(mat: TransformMatrix, digits: int | None = None) -> str:
    """Row-major matrix; real matrices as plain numbers, complex ones as ``a+bi``."""
    data = mat.data
    real = not np.iscomplexobj(data) or not np.any(data.imag)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in data:
        if real:
            writer.writerow([format_float(np.real(v), digits) for v in row])
        else:
            writer.writerow([format_complex(v, digits) for v in row])
    return buf.getvalue()


def matrix_from_csv(text: str) -> np.ndarray:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    return np.array([[parse_complex(v) for v in r] for r in rows])


def matrix_to_json(mat: TransformMatrix) -> str:
    data = np.asarray(mat.data, dtype=complex)
    return dumps(
        {
            "M": mat.M,
            "kind": mat.kind,
            "kernel": mat.kernel,
            "type": mat.label,
            "re": data.real.tolist(),
            "im": data.imag.tolist(),
        }
    )


def samples_to_csv(sv: SampleVector, digits: int | None = None) -> str:
    rows = [
        [i, *p.triple, format_float(np.real(v), digits), format_float(np.imag(v), digits)]
        for i, (p, v) in enumerate(zip(sv.points, sv.values))
    ]
    return _csv_text(["index", "s0", "s1", "s2", "re", "im"], rows)


def samples_from_csv(text: str, domain: PointSetKind) -> SampleVector:
    """Parse ``s0,s1,s2,re,im`` rows (any order) into a canonical sample vector."""
    domain = PointSetKind(domain)
    reader = csv.DictReader(io.StringIO(text))
    missing_cols = {"s0", "s1", "s2", "re"} - set(reader.fieldnames or [])
    if missing_cols:
        raise DimensionMismatch(f"sample file lacks columns {sorted(missing_cols)}")
    values = {}
    M = None
    for row in reader:
        triple = (int(row["s0"]), int(row["s1"]), int(row["s2"]))
        if M is None:
            M = sum(triple)
        if sum(triple) != M:
            raise DimensionMismatch(f"row {triple} does not sum to M={M}")
        if triple in values:
            raise DimensionMismatch(f"duplicate node {triple}")
        values[triple] = complex(float(row["re"]), float(row.get("im") or 0.0))
    if M is None:
        raise DimensionMismatch("empty sample file")
    points = generate_points(domain, M)
    expected = {p.triple for p in points}
    if set(values) != expected:
        raise DimensionMismatch(
            f"sample nodes do not match {domain.value} for M={M}: "
            f"missing={sorted(expected - set(values))} extra={sorted(set(values) - expected)}"
        )
    arr = np.array([values[p.triple] for p in points])
    return SampleVector(M, domain, arr)


def spectrum_to_csv(fam: HoneycombFamily, spec: SpectrumVector, digits: int | None = None) -> str:
    rows = []
    i = 0
    for sign, vec in (("+", spec.plus), ("-", spec.minus)):
        for w, v in zip(fam.weights, vec):
            rows.append([i, sign, *w.triple, format_float(np.real(v), digits), format_float(np.imag(v), digits)])
            i += 1
    return _csv_text(["index", "sign", "l0", "l1", "l2", "re", "im"], rows)


def spectrum_from_csv(text: str, fam: HoneycombFamily) -> SpectrumVector:
    reader = csv.DictReader(io.StringIO(text))
    coeffs = {}
    for row in reader:
        key = (row["sign"].strip(), int(row["l0"]), int(row["l1"]), int(row["l2"]))
        if key in coeffs:
            raise DimensionMismatch(f"duplicate spectral entry {key}")
        coeffs[key] = complex(float(row["re"]), float(row.get("im") or 0.0))
    expected = {(s, *w.triple) for s in "+-" for w in fam.weights}
    if set(coeffs) != expected:
        raise DimensionMismatch("spectrum entries do not match the family's weight set")
    plus = np.array([coeffs[("+", *w.triple)] for w in fam.weights])
    minus = np.array([coeffs[("-", *w.triple)] for w in fam.weights])
    return SpectrumVector(fam.M, fam.kind, plus, minus)


def rows_to_csv(rows: list[dict], digits: int | None = None) -> str:
    if not rows:
        return ""
    header = list(rows[0])
    out = []
    for r in rows:
        out.append([format_float(v, digits) if isinstance(v, float) else v for v in r.values()])
    return _csv_text(header, out)

