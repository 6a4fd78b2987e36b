"""File formats: state JSON, spectrum CSV and report JSON.

State JSON::

    {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]}

Spectrum CSV is a single line of comma-separated decimals. Floats are written
with ``repr`` so every double round-trips exactly.
"""

import json
import os
from pathlib import Path
from typing import Union

import numpy as np

from .errors import MalformedInput, SepspecError, ValidationFailure
from .states import CriteriaReport, DensityMatrix, Spectrum, make_density

PathOrText = Union[str, os.PathLike]


def _read(source: PathOrText) -> str:
    if isinstance(source, os.PathLike):
        return Path(source).read_text(encoding="utf-8")
    s = str(source)
    if "\n" not in s and len(s) < 4096 and s.lstrip()[:1] not in ("{", "[") and os.path.isfile(s):
        return Path(s).read_text(encoding="utf-8")
    return s


def dumps(obj, pretty: bool = False) -> str:
    """Deterministic JSON text for machine output."""
    return json.dumps(obj, indent=2 if pretty else None, sort_keys=False,
                      allow_nan=False, ensure_ascii=False)


def parse_state(source: PathOrText) -> DensityMatrix:
    """Parse a state from a JSON file path or JSON text."""
    text = _read(source)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise MalformedInput("top level must be an object with 'dims' and 'matrix'")
    for key in ("dims", "matrix"):
        if key not in doc:
            raise MalformedInput(f"missing field '{key}'")
    dims = doc["dims"]
    if (not isinstance(dims, list) or len(dims) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 1 for x in dims)):
        raise MalformedInput("field 'dims' must be a list of two positive integers")
    rows = doc["matrix"]
    d = dims[0] * dims[1]
    if not isinstance(rows, list) or len(rows) != d:
        raise MalformedInput(f"field 'matrix' must have {d} rows")
    m = np.empty((d, d), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != d:
            raise MalformedInput(f"matrix[{i}]: expected {d} entries")
        for j, entry in enumerate(row):
            if (not isinstance(entry, list) or len(entry) != 2
                    or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry)):
                raise MalformedInput(f"matrix[{i}][{j}]: expected [re, im]")
            m[i, j] = complex(entry[0], entry[1])
    try:
        return make_density(m, (dims[0], dims[1]))
    except SepspecError as exc:
        raise ValidationFailure(f"{type(exc).__name__}: {exc}") from exc


def state_to_dict(rho: DensityMatrix) -> dict:
    m = rho.matrix
    return {
        "dims": [int(rho.dims[0]), int(rho.dims[1])],
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    }


def write_state(rho: DensityMatrix, path: PathOrText = None) -> str:
    text = dumps(state_to_dict(rho)) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def parse_spectrum(source: PathOrText) -> Spectrum:
    """Parse a one-line CSV spectrum from a path or text."""
    text = _read(source).strip()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise MalformedInput(f"expected one line of values, got {len(lines)}")
    values = []
    for k, tok in enumerate(lines[0].split(",")):
        try:
            values.append(float(tok))
        except ValueError:
            raise MalformedInput(f"line 1, field {k + 1}: cannot parse {tok.strip()!r}") from None
    try:
        return Spectrum.from_values(values)
    except SepspecError as exc:
        raise ValidationFailure(f"{type(exc).__name__}: {exc}") from exc


def write_spectrum(spectrum: Spectrum) -> str:
    return ",".join(repr(float(x)) for x in spectrum.values) + "\n"


def write_report(report: CriteriaReport, pretty: bool = False) -> str:
    return dumps(report.to_dict(), pretty=pretty)
