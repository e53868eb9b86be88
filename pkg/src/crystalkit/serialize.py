"""JSON documents for the three element kinds.

    {"kind":"ms","rank":n,"segments":[[start,end,mult],...]}   sorted by (start, end)
    {"kind":"tab","rank":n,"rows":[[...],...]}
    {"kind":"pbw","rank":n,"exponents":[a_1,...,a_N]}
"""
from __future__ import annotations

import json
from typing import Any, Union

from .core import ParseError, ValidationError
from .multisegment import Multisegment
from .pbw import LusztigDatum
from .tableau import Tableau, embed

Element = Union[Multisegment, Tableau, LusztigDatum]
KINDS = ("ms", "tab", "pbw")


def kind_of(elem: Element) -> str:
    if isinstance(elem, Multisegment):
        return "ms"
    if isinstance(elem, Tableau):
        return "tab"
    if isinstance(elem, LusztigDatum):
        return "pbw"
    raise TypeError(f"not a crystal element: {elem!r}")


def to_doc(elem: Element) -> dict[str, Any]:
    kind = kind_of(elem)
    doc: dict[str, Any] = {"kind": kind, "rank": elem.rank}
    if kind == "ms":
        doc["segments"] = [[s.start, s.end, m] for s, m in elem.items()]
    elif kind == "tab":
        doc["rows"] = [list(r) for r in elem.rows]
    else:
        doc["exponents"] = list(elem.exponents)
    return doc


def _int(value: Any, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def _int_list(value: Any, what: str) -> list[int]:
    if not isinstance(value, list):
        raise ParseError(f"{what} must be a list")
    return [_int(v, what) for v in value]


def from_doc(doc: Any) -> Element:
    """Build an element; structural problems raise ParseError, broken invariants ValidationError."""
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    rank = _int(doc.get("rank"), "rank")
    if kind == "ms":
        raw = doc.get("segments")
        if not isinstance(raw, list):
            raise ParseError("ms document needs a 'segments' list")
        mult: dict[tuple[int, int], int] = {}
        for item in raw:
            triple = _int_list(item, "segment")
            if len(triple) != 3:
                raise ParseError(f"segment entries are [start,end,mult], got {item!r}")
            start, end, m = triple
            if m < 1:
                raise ValidationError(f"multiplicity must be at least 1, got {m}")
            mult[(start, end)] = mult.get((start, end), 0) + m
        return Multisegment(rank, mult)
    if kind == "tab":
        rows = doc.get("rows")
        if not isinstance(rows, list):
            raise ParseError("tab document needs a 'rows' list")
        return Tableau(rank, [_int_list(r, "row entry") for r in rows])
    return LusztigDatum(rank, _int_list(doc.get("exponents"), "exponent"))


def dumps(doc: Any) -> str:
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


def loads(text: str) -> Element:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    return from_doc(doc)


def canonical(elem: Element) -> str:
    return dumps(to_doc(elem))


def label(elem: Element) -> str:
    """Short human-readable form used for graph nodes."""
    return elem.text()


def size_of(elem: Element) -> int:
    """Grading used for sorting: boxes of the multisegment the element stands for."""
    if isinstance(elem, Tableau):
        return embed(elem).size
    return elem.size
