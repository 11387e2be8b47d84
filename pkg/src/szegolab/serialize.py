"""CSV/JSON serialisation.  Floats use 17 significant digits; CSV footers are ``# {json}`` lines."""
from __future__ import annotations

import csv
import io as _io
import json
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .circle import BoundarySamples, make_grid


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def to_json(obj) -> str:
    """Deterministic JSON with 17-significant-digit floats; non-finite floats become strings."""
    if isinstance(obj, Enum):
        obj = obj.value
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt(obj) if math.isfinite(obj) else json.dumps(str(float(obj)))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _csv(header, rows, footer=None) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(v) for v in row])
    if footer is not None:
        buf.write("# " + to_json(footer) + "\n")
    return buf.getvalue()


@dataclass
class Table:
    """Command output: optional rows plus a metadata dict, renderable as CSV or JSON.

    CSV puts ``meta`` in a ``# {json}`` footer; a table without rows renders as
    ``key,value`` lines.  JSON is ``meta`` with the rows appended under ``"rows"``.
    ``short_floats`` switches JSON floats to the shortest round-trip form.
    """

    header: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)
    short_floats: bool = False

    def to_csv(self) -> str:
        if not self.header:
            return _csv(["key", "value"], ((k, _cell(v)) for k, v in self.meta.items()))
        return _csv(self.header, self.rows, self.meta or None)

    def to_json(self) -> str:
        obj = dict(self.meta)
        if self.header:
            obj["rows"] = [dict(zip(self.header, row)) for row in self.rows]
        if self.short_floats:
            return json.dumps(_plain(obj)) + "\n"
        return to_json(obj) + "\n"

    def render(self, fmt_name: str) -> str:
        if fmt_name == "csv":
            return self.to_csv()
        if fmt_name == "json":
            return self.to_json()
        raise ValueError(f"unknown format {fmt_name!r}")


def _cell(v):
    if isinstance(v, (float, np.floating)):
        return v
    if isinstance(v, (str, bool, int, np.integer, np.bool_)):
        return v
    return to_json(v)


def _plain(obj):
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    return obj


def _csv_cell(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return fmt(v)
    return v


def samples_to_csv(f: BoundarySamples) -> str:
    return _csv(
        ["theta", "re", "im"],
        ((t, v.real, v.imag) for t, v in zip(f.grid.nodes, f.values)),
    )


def samples_from_csv(text: str) -> BoundarySamples:
    rows = [r for r in csv.reader(_io.StringIO(text)) if r and not r[0].startswith("#")]
    if rows[0] != ["theta", "re", "im"]:
        raise ValueError("expected header theta,re,im")
    data = np.array([[float(x) for x in r] for r in rows[1:]])
    grid = make_grid(len(data))
    if not np.allclose(data[:, 0], grid.nodes, rtol=0, atol=1e-12):
        raise ValueError("theta column does not match a half-offset grid")
    return BoundarySamples(grid, data[:, 1] + 1j * data[:, 2])


def scan_report_table(report) -> Table:
    meta = {
        "alpha": report.alpha,
        "s": report.s,
        "p": report.p,
        "a": report.a,
        "b": report.b,
        "fitted_slope": report.fitted_slope,
        "predicted_slope": report.predicted_slope,
        "verdict": report.verdict,
        "pass": report.matches(),
    }
    return Table(["delta", "quotient"], [tuple(r) for r in report.ladder], meta)


def scan_report_to_csv(report) -> str:
    return scan_report_table(report).to_csv()


def blowup_report_table(report) -> Table:
    meta = {
        "alpha": report.alpha,
        "p": report.p,
        "growth": report.growth,
        "variation": report.variation,
        "verdict": report.verdict,
    }
    rows = [(int(n), float(e)) for n, e in zip(report.grid_sizes, report.estimates)]
    return Table(["n_points", "lower_bound"], rows, meta)


def blowup_report_to_csv(report) -> str:
    return blowup_report_table(report).to_csv()


def projection_table(points, values, meta=None) -> Table:
    rows = [
        (float(z.real), float(z.imag), float(v.real), float(v.imag))
        for z, v in zip(np.atleast_1d(points).astype(complex), np.atleast_1d(values))
    ]
    return Table(["re_z", "im_z", "re_val", "im_val"], rows, meta or {})


def projection_to_csv(points, values) -> str:
    return projection_table(points, values).to_csv()


def read_footer(text: str) -> dict:
    last = [line for line in text.splitlines() if line.startswith("# ")][-1]
    return json.loads(last[2:])
