"""JSON description of a transformation.

Example::

    {
      "d": 5,
      "alphabet": ["a", "b", "c"],
      "order2": ["b", "c", "a"],
      "origin": "0",
      "lengths": {"a": "-2 + sqrt(5)", "b": "3/2 - 1/2*sqrt(5)", "c": "3/2 - 1/2*sqrt(5)"}
    }

Lengths and origin are expressions in the grammar of
:func:`~iet_rauzy.qfield.parse_quadnum`.  :func:`dump_iet` writes the
canonical form, which :func:`load_iet` reads back to the same transformation.
"""

import json
import os

from .errors import ParseError
from .iet import Iet
from .qfield import parse_quadnum

__all__ = ["load_iet", "parse_iet_file", "dump_iet", "iet_to_dict"]

_KEYS = ("d", "alphabet", "order2", "origin", "lengths")


def _locate(text, needle):
    """1-based (line, column) of the first occurrence of ``needle``."""
    k = text.find(needle)
    if k < 0:
        return None, None
    line = text.count("\n", 0, k) + 1
    return line, k - (text.rfind("\n", 0, k) + 1) + 1


def load_iet(text):
    """Build an :class:`Iet` from JSON text."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", line=1, column=1)
    missing = [k for k in _KEYS if k not in data]
    if missing:
        raise ParseError(f"missing keys: {', '.join(missing)}")
    extra = sorted(set(data) - set(_KEYS))
    if extra:
        line, col = _locate(text, json.dumps(extra[0]))
        raise ParseError(f"unknown key {extra[0]!r}", line=line, column=col)
    d = data["d"]
    if isinstance(d, bool) or not isinstance(d, int):
        raise ParseError(f"d must be an integer, got {d!r}", *_locate(text, '"d"'))
    for key in ("alphabet", "order2"):
        v = data[key]
        if not isinstance(v, list) or not all(isinstance(x, str) for x in v):
            raise ParseError(f"{key} must be a list of strings", *_locate(text, f'"{key}"'))
    if not data["alphabet"]:
        raise ParseError("empty alphabet", *_locate(text, '"alphabet"'))
    if not isinstance(data["lengths"], dict):
        raise ParseError("lengths must be an object", *_locate(text, '"lengths"'))

    def expr(value, where):
        if not isinstance(value, str):
            raise ParseError(f"{where}: expected an expression string, got {value!r}",
                             *_locate(text, f'"{where}"'))
        try:
            return parse_quadnum(value, d)
        except ParseError as exc:
            line, col = _locate(text, json.dumps(value))
            raise ParseError(f"{where}: {exc}", line=line, column=col) from None

    origin = expr(data["origin"], "origin")
    lengths = {a: expr(v, a) for a, v in data["lengths"].items()}
    return Iet(data["alphabet"], data["order2"], lengths, origin)


def parse_iet_file(source):
    """Read a specification from a path, or from JSON text if ``source``
    looks like an object literal."""
    if isinstance(source, (str, os.PathLike)) and not str(source).lstrip().startswith("{"):
        try:
            with open(source, encoding="utf-8") as fh:
                source = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    return load_iet(source)


def iet_to_dict(T):
    return {
        "d": T.d,
        "alphabet": list(T.alphabet),
        "order2": list(T.order2),
        "origin": str(T.origin),
        "lengths": {a: str(T.lengths[a]) for a in T.alphabet},
    }


def dump_iet(T):
    """Canonical JSON text of ``T`` (two-space indent, trailing newline)."""
    return json.dumps(iet_to_dict(T), indent=2, ensure_ascii=False) + "\n"
