import csv
import json
from pathlib import Path

from loguru import logger

from primesmooth.errors import RangeError, ReportIOError
from primesmooth.verify.records import CSV_HEADER, SweepRecord


def write_report(records, path, format: str = 'csv'):
    """
    Writes sweep records as CSV (fixed header, LF line endings) or as a JSON
    array of flat objects with the same field names.
    """
    if format not in ('csv', 'json'):
        raise RangeError(f"Report format must be csv or json, got {format!r}")
    path = Path(path)
    try:
        with open(path, 'w', newline='') as f:
            if format == 'csv':
                writer = csv.DictWriter(f, fieldnames=CSV_HEADER, lineterminator='\n')
                writer.writeheader()
                for r in records:
                    writer.writerow(r.to_row())
            else:
                json.dump([r.to_json() for r in records], f, indent=2)
                f.write('\n')
    except OSError as e:
        raise ReportIOError(f"Cannot write report {path}: {e}", path=path) from e
    logger.info(f"Wrote {len(records)} records to {path} ({format})")


def read_report(path) -> list[dict]:
    """Rows of a CSV report as dicts of strings, in file order"""
    path = Path(path)
    try:
        with open(path, newline='') as f:
            reader = csv.DictReader(f)
            if reader.fieldnames != CSV_HEADER:
                raise RangeError(f"{path} does not carry the sweep report header")
            return list(reader)
    except OSError as e:
        raise ReportIOError(f"Cannot read report {path}: {e}", path=path) from e


def read_records(path) -> list[SweepRecord]:
    rows = read_report(path)
    cells = {}
    records = []
    for row in rows:
        key = (row['theorem'], row['p'])
        records.append(SweepRecord.from_row(row, cell=cells.get(key, 0)))
        cells[key] = cells.get(key, 0) + 1
    return records


def write_rows(rows: list[dict], fieldnames: list[str], path):
    """Plain CSV writer for audit tables"""
    path = Path(path)
    try:
        with open(path, 'w', newline='') as f:
            writer = csv.DictWriter(f, fieldnames=fieldnames, lineterminator='\n')
            writer.writeheader()
            writer.writerows(rows)
    except OSError as e:
        raise ReportIOError(f"Cannot write {path}: {e}", path=path) from e
