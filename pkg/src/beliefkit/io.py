"""JSON bba documents.

Schema::

    {"frame": ["a", "b", "c"],
     "masses": [{"set": ["a"], "mass": 0.5}, ...]}

Output is canonical: masses sorted by ascending mask value, reals printed
with 17 significant digits (enough to round-trip a double), one entry per
line. Rewriting a file a second time is byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import MassFunction, make_bba, make_frame, parse_subset
from .errors import ParseError


def loads_bba(text: str) -> MassFunction:
    """Parse and validate a bba document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "frame" not in doc or "masses" not in doc:
        raise ParseError('document must be an object with "frame" and "masses"')
    labels = doc["frame"]
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise ParseError('"frame" must be a list of strings')
    frame = make_frame(labels)
    entries = []
    if not isinstance(doc["masses"], list):
        raise ParseError('"masses" must be a list')
    for item in doc["masses"]:
        if (
            not isinstance(item, dict)
            or not isinstance(item.get("set"), list)
            or not isinstance(item.get("mass"), (int, float))
        ):
            raise ParseError('each mass entry needs a "set" list and a "mass" number')
        entries.append((parse_subset(frame, item["set"]), float(item["mass"])))
    return make_bba(frame, entries)


def dumps_bba(m: MassFunction) -> str:
    """Serialize a bba in canonical form."""
    lines = ["{", f'  "frame": {json.dumps(list(m.frame.labels))},', '  "masses": [']
    rows = []
    for mask, mass in m.sorted_items():
        names = json.dumps(list(m.frame.names(mask)))
        rows.append(f'    {{"set": {names}, "mass": {mass:.17g}}}')
    lines.append(",\n".join(rows))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_bba(path: str | Path) -> MassFunction:
    return loads_bba(Path(path).read_text())


def write_bba(m: MassFunction, path: str | Path) -> None:
    Path(path).write_text(dumps_bba(m))
