"""Sequence and profile files.

Sequence JSON::

    {"modulus": N, "exponents": [...], "meta": {"construction": ..., "n": ..., "variant": ...}}

Sequence CSV: ``#`` comment lines carrying ``key=value`` metadata (always
including ``modulus``), then the header ``index,exponent`` and one row per
entry. Profile CSV: header ``shift,re,im,abs,is_zero``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path

from .construction import Sequence
from .correlation import CorrelationProfile


class SequenceFileError(ValueError):
    pass


@dataclass
class SequenceFile:
    sequence: Sequence
    meta: dict = field(default_factory=dict)

    @property
    def modulus(self) -> int:
        return self.sequence.modulus

    @property
    def exponents(self) -> list[int]:
        return [int(e) for e in self.sequence.exponents]


def _make_sequence(exponents, modulus) -> Sequence:
    if isinstance(modulus, bool) or not isinstance(modulus, int) or modulus < 1:
        raise SequenceFileError(f"modulus must be a positive integer, got {modulus!r}")
    if not exponents:
        raise SequenceFileError("exponent list is empty")
    for i, e in enumerate(exponents):
        if isinstance(e, bool) or not isinstance(e, int):
            raise SequenceFileError(f"exponent at index {i} is not an integer: {e!r}")
        if not 0 <= e < modulus:
            raise SequenceFileError(
                f"exponent at index {i} is {e}, outside [0, {modulus})"
            )
    return Sequence(exponents, modulus)


def dumps_json(sf: SequenceFile) -> str:
    doc = {"modulus": sf.modulus, "exponents": sf.exponents, "meta": sf.meta}
    return json.dumps(doc, indent=2) + "\n"


def loads_json(text: str) -> SequenceFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SequenceFileError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "modulus" not in doc or "exponents" not in doc:
        raise SequenceFileError("JSON sequence needs 'modulus' and 'exponents'")
    if not isinstance(doc["exponents"], list):
        raise SequenceFileError("'exponents' must be a list")
    meta = doc.get("meta") or {}
    return SequenceFile(_make_sequence(doc["exponents"], doc["modulus"]), meta)


def _meta_value(text: str):
    try:
        return int(text)
    except ValueError:
        return text


def dumps_csv(sf: SequenceFile) -> str:
    buf = io.StringIO()
    buf.write(f"# modulus={sf.modulus}\n")
    for k, v in sf.meta.items():
        buf.write(f"# {k}={v}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "exponent"])
    for i, e in enumerate(sf.exponents):
        w.writerow([i, e])
    return buf.getvalue()


def loads_csv(text: str, modulus: int | None = None) -> SequenceFile:
    meta: dict = {}
    body = []
    for line in text.splitlines():
        if line.startswith("#"):
            key, sep, value = line[1:].strip().partition("=")
            if sep:
                meta[key.strip()] = _meta_value(value.strip())
        elif line.strip():
            body.append(line)
    file_modulus = meta.pop("modulus", None)
    if modulus is None:
        modulus = file_modulus
    if modulus is None:
        raise SequenceFileError("CSV has no '# modulus=' line and none was given")
    rows = list(csv.reader(body))
    if not rows or [c.strip() for c in rows[0]] != ["index", "exponent"]:
        raise SequenceFileError("CSV header must be 'index,exponent'")
    exponents = []
    for lineno, row in enumerate(rows[1:]):
        if len(row) != 2:
            raise SequenceFileError(f"row {lineno} must have two fields")
        try:
            idx, e = int(row[0]), int(row[1])
        except ValueError as exc:
            raise SequenceFileError(f"row {lineno}: {exc}") from exc
        if idx != lineno:
            raise SequenceFileError(f"row {lineno} has index {idx}")
        exponents.append(e)
    return SequenceFile(_make_sequence(exponents, modulus), meta)


def save_sequence(sf: SequenceFile, path, fmt: str = "json") -> None:
    text = dumps_json(sf) if fmt == "json" else dumps_csv(sf)
    Path(path).write_text(text)


def load_sequence(path, modulus: int | None = None) -> SequenceFile:
    """Read a sequence file, JSON or CSV (decided by content)."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return loads_json(text)
    return loads_csv(text, modulus)


def profile_csv(p: CorrelationProfile) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["shift", "re", "im", "abs", "is_zero"])
    zero = p.is_zero()
    for t, v in enumerate(p.values.tolist()):
        w.writerow([t, repr(v.real), repr(v.imag), repr(abs(v)), int(zero[t])])
    return buf.getvalue()
