"""Knot records in JSON-lines form, plus the bundled table of small knots.

One object per line::

    {"name": "3_1", "seifert": [[-1, 1], [0, -1]], "provenance": "..."}

Blank lines are ignored.  ``provenance`` is optional.
"""

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import prod

from .errors import CatalogError, ContractError, SeifertValidationError
from .invariants import SeifertMatrix, double_cover_homology, signed_determinant, validate_seifert

CATALOG_ENV = "KNOT_CATALOG"


@dataclass(frozen=True)
class KnotRecord:
    name: str
    seifert: SeifertMatrix
    provenance: str = ""

    def to_json(self):
        return json.dumps(
            {"name": self.name, "seifert": self.seifert.to_list(), "provenance": self.provenance}
        )


def parse_catalog(text):
    records = []
    seen = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CatalogError(lineno, f"malformed JSON: {exc.msg}") from None
        if not isinstance(obj, dict):
            raise CatalogError(lineno, "record must be a JSON object")
        name = obj.get("name")
        if not isinstance(name, str) or not name:
            raise CatalogError(lineno, "missing or non-string 'name'")
        if name in seen:
            raise CatalogError(lineno, f"duplicate knot name {name!r}")
        matrix = obj.get("seifert")
        if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
            raise CatalogError(lineno, f"{name}: 'seifert' must be an array of arrays")
        try:
            seifert = validate_seifert(matrix)
        except SeifertValidationError as exc:
            raise CatalogError(lineno, f"{name}: {exc}") from None
        provenance = obj.get("provenance", "")
        if not isinstance(provenance, str):
            raise CatalogError(lineno, f"{name}: 'provenance' must be a string")
        seen.add(name)
        records.append(KnotRecord(name, seifert, provenance))
    return records


def serialize_catalog(records):
    return "".join(r.to_json() + "\n" for r in records)


def _check_record(record):
    det = signed_determinant(record.seifert)
    factors = double_cover_homology(record.seifert)
    if det % 2 == 0 or prod(factors) != abs(det):
        raise ContractError(
            f"{record.name}: Delta(-1) = {det} inconsistent with H_1 factors {factors}"
        )


@lru_cache(maxsize=None)
def _bundled():
    text = resources.files("untwist").joinpath("data/knots.jsonl").read_text(encoding="utf-8")
    records = parse_catalog(text)
    for r in records:
        _check_record(r)
    return tuple(records)


def bundled_catalog():
    return list(_bundled())


def load_catalog(path=None):
    """Load ``path``, else the file named by ``$KNOT_CATALOG``, else the bundled table."""
    path = path or os.environ.get(CATALOG_ENV)
    if not path:
        return bundled_catalog()
    with open(path, encoding="utf-8") as fh:
        return parse_catalog(fh.read())


def lookup(records, name):
    for r in records:
        if r.name == name:
            return r
    raise KeyError(name)
