"""CSV tables and run manifests."""

from __future__ import annotations

import csv
import datetime as _dt
import json
import sys
from pathlib import Path

from hypershape.errors import HypershapeError

IRIS_FEATURES = ("sepal_length", "sepal_width", "petal_length", "petal_width")
IRIS_SPECIES = ("setosa", "versicolor", "virginica")
BIN_CONVENTION = "equal-width, left-closed, last bin right-closed; ranges default to data min/max"


class CsvFormatError(HypershapeError):
    """Malformed or non-numeric CSV input."""


def bundled_iris() -> Path:
    return Path(__file__).with_name("data") / "iris.csv"


def format_value(v) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_table(path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([format_value(v) for v in row])


def write_rows(fh, header, rows) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([format_value(v) for v in row])


def read_table(path) -> tuple[list[str], list[list[str]]]:
    """Header and raw string rows of a CSV file."""
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise CsvFormatError(f"{path}: file is empty")
            rows = [r for r in reader if r]
    except OSError as exc:
        raise CsvFormatError(f"cannot read {path}: {exc}")
    header = [h.strip() for h in header]
    for i, r in enumerate(rows, start=2):
        if len(r) != len(header):
            raise CsvFormatError(
                f"{path}: row {i} has {len(r)} fields, header has {len(header)}"
            )
    return header, rows


def numeric_columns(path, header, rows, columns) -> list[list[float]]:
    """Parse the named columns as floats; errors name the row and column."""
    idx = []
    for c in columns:
        if c not in header:
            raise CsvFormatError(f"{path}: no column named {c!r} (have {header})")
        idx.append(header.index(c))
    out = []
    for lineno, r in enumerate(rows, start=2):
        vals = []
        for c, j in zip(columns, idx):
            cell = r[j].strip()
            try:
                v = float(cell)
            except ValueError:
                raise CsvFormatError(f"{path}: row {lineno}, column {c!r}: {cell!r} is not a number")
            if v != v or v in (float("inf"), float("-inf")):
                raise CsvFormatError(f"{path}: row {lineno}, column {c!r}: {cell!r} is not finite")
            vals.append(v)
        out.append(vals)
    return out


def manifest(command: str, **fields) -> dict:
    from hypershape import __version__
    from hypershape._backend import BACKEND
    from hypershape.sim import RNG_ALGORITHM

    record = {
        "command": command,
        "argv": sys.argv[1:],
        "version": __version__,
        "kernel_backend": BACKEND,
        "rng_algorithm": RNG_ALGORITHM,
        "bin_convention": BIN_CONVENTION,
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
    }
    record.update(fields)
    return record


def write_manifest(output: Path, record: dict) -> Path:
    """Write ``<output>.manifest.json`` next to ``output``."""
    output = Path(output)
    path = output.with_name(output.name + ".manifest.json")
    body = dict(record, output=output.name)
    path.write_text(json.dumps(body, indent=2, sort_keys=True) + "\n")
    return path
