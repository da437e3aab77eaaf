"""Coefficient JSON/CSV parsing and report serialization.

Coefficient objects carry the keys a0, b1..b3, c1..c3, d1..d3, e1..e3, f0;
values are integers, "p/q" rational strings, or decimal strings.  Unknown
keys are rejected; missing keys default to 0.  Rationals serialize back as
"p/q" strings so pipelines stay lossless.
"""
from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Optional

from .core import COEFF_FIELDS, DarbouxCoefficients
from .errors import ParseError
from .recognizer import Verdict
from .scalar import EXACT, Scalar, format_scalar, parse_scalar


def parse_coefficients(obj, mode: str = EXACT) -> DarbouxCoefficients:
    """Parse a coefficient mapping (or a {"coefficients": ...} wrapper, as
    emitted by the generator)."""
    if not isinstance(obj, dict):
        raise ParseError(f"expected a JSON object, got {type(obj).__name__}")
    if "coefficients" in obj:
        inner = obj["coefficients"]
        return parse_coefficients(inner, mode)
    unknown = sorted(set(obj) - set(COEFF_FIELDS))
    if unknown:
        raise ParseError(f"unknown coefficient key(s): {', '.join(unknown)}")
    values = {}
    for key in COEFF_FIELDS:
        if key in obj:
            try:
                values[key] = parse_scalar(obj[key], mode)
            except ParseError as exc:
                raise ParseError(f"key {key!r}: {exc}") from exc
        else:
            values[key] = parse_scalar(0, mode)
    return DarbouxCoefficients(**values)


def parse_coefficients_json(text: str, mode: str = EXACT) -> DarbouxCoefficients:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return parse_coefficients(obj, mode)


def coefficients_to_json(c: DarbouxCoefficients) -> dict:
    return {k: format_scalar(getattr(c, k)) for k in COEFF_FIELDS
            if getattr(c, k) != 0}


def scalar_json(v: Optional[Scalar]):
    if v is None:
        return None
    return format_scalar(v)


def verdict_to_json(v: Verdict) -> dict:
    out = {"kind": v.kind, "case": v.case_label or "none"}
    if v.witness is not None:
        out["witness"] = {"name": v.witness[0], "value": scalar_json(v.witness[1])}
    out["residuals"] = {k: scalar_json(val) for k, val in v.residuals.items()}
    if v.notes:
        out["notes"] = list(v.notes)
    return out


CSV_HEADER = list(COEFF_FIELDS)


def read_csv_coefficients(text: str, mode: str = EXACT) -> Iterable[DarbouxCoefficients]:
    """14-column CSV with header a0,b1,...,f0 (spreadsheet interchange)."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        return
    header = [h.strip() for h in header]
    if header != CSV_HEADER:
        raise ParseError(
            f"CSV header must be {','.join(CSV_HEADER)}, got {','.join(header)}")
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 14:
            raise ParseError(f"CSV line {lineno}: expected 14 columns, got {len(row)}")
        values = {}
        for key, cell in zip(CSV_HEADER, row):
            cell = cell.strip()
            try:
                values[key] = parse_scalar(cell if cell else 0, mode)
            except ParseError as exc:
                raise ParseError(f"CSV line {lineno}, column {key}: {exc}") from exc
        yield DarbouxCoefficients(**values)
