"""Dataset files: CSV with a ``# key=value`` metadata header, or JSON."""
from __future__ import annotations

import csv
import io
import json
import math
import sys

import numpy as np


def _format(v):
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if isinstance(v, (list, tuple)):
        return ",".join(_format(x) for x in v)
    return str(v)


def parse_value(text: str):
    """Inverse of the header formatting: None/bool/int/float/list/str."""
    s = text.strip()
    if s == "None":
        return None
    if s in ("True", "False"):
        return s == "True"
    if "," in s:
        return [parse_value(x) for x in s.split(",")]
    for conv in (int, float):
        try:
            return conv(s)
        except ValueError:
            pass
    return s


def _jsonable(v):
    if isinstance(v, np.ndarray):
        return [_jsonable(x) for x in v.tolist()]
    if isinstance(v, (np.floating, float)):
        v = float(v)
        return v if math.isfinite(v) else None
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def render_dataset(columns: dict, metadata: dict, fmt: str = "csv") -> str:
    if fmt == "json":
        doc = {"metadata": {k: _jsonable(v) for k, v in metadata.items()},
               "columns": {k: _jsonable(np.asarray(v)) for k, v in columns.items()}}
        return json.dumps(doc, indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    buf = io.StringIO()
    for k, v in metadata.items():
        buf.write(f"# {k}={_format(v)}\n")
    names = list(columns)
    cols = [np.atleast_1d(np.asarray(columns[k])) for k in names]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(names)
    for row in zip(*cols):
        writer.writerow([_format(x.item() if hasattr(x, "item") else x) for x in row])
    return buf.getvalue()


def write_dataset(path, columns: dict, metadata: dict, fmt: str = "csv") -> None:
    text = render_dataset(columns, metadata, fmt)
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def read_dataset(path):
    """Return (metadata, columns) from a file written by ``write_dataset``."""
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        return doc["metadata"], {k: np.asarray(v) for k, v in doc["columns"].items()}
    meta, body = {}, []
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            meta[key] = parse_value(value)
        elif line.strip():
            body.append(line)
    rows = list(csv.reader(body))
    names, data = rows[0], rows[1:]
    columns = {}
    for j, name in enumerate(names):
        vals = [r[j] for r in data]
        try:
            columns[name] = np.array([float(v) for v in vals])
        except ValueError:
            columns[name] = np.array(vals)
    return meta, columns
