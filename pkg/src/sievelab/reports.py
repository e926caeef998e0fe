"""CSV and JSON report writers.

One schema per command, header order fixed, floats serialized with
repr-style shortest round-trip formatting.  Identical rows produce
byte-identical files, which is what the golden-file tests diff against.
"""

import csv
import json
import sys


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_csv(rows, columns, path=None):
    """Write dict rows in the given column order; '-' or None means stdout."""
    out = sys.stdout if path in (None, "-") else open(path, "w", newline="")
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row.get(c)) for c in columns])
    finally:
        if out is not sys.stdout:
            out.close()


def write_json(rows, columns, path=None):
    """JSON mirror of the CSV: a list with one object per row."""
    payload = [{c: row.get(c) for c in columns} for row in rows]
    text = json.dumps(payload, indent=2, default=str)
    if path in (None, "-"):
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def write_rows(rows, columns, path=None, fmt="csv"):
    if fmt == "csv":
        write_csv(rows, columns, path)
    elif fmt == "json":
        write_json(rows, columns, path)
    else:
        raise ValueError("unknown format %r" % (fmt,))
