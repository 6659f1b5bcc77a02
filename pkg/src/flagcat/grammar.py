"""Text grammar shared by every label and by the CLI.

* partition: ``3,1``; ``-`` or the empty string is the empty partition
* weight tuple: ``2,0,1``, optionally wrapped in parentheses
* partition tuple: components joined by ``;``, e.g. ``2,1;-;1``
"""
from __future__ import annotations

from .exceptions import ParseError
from .partitions import Partition, PartitionTuple, make_partition
from .weighted import WeightTuple


def _ints(text: str, what: str) -> list[int]:
    out = []
    for token in text.split(","):
        token = token.strip()
        try:
            out.append(int(token))
        except ValueError:
            raise ParseError(f"bad integer in {what}", token) from None
    return out


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        return make_partition(_ints(text, "partition"))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), text) from None


def format_partition(p: Partition) -> str:
    return ",".join(map(str, p)) if p else "-"


def parse_weight_tuple(text: str, n: int | None = None) -> WeightTuple:
    raw = text.strip()
    if raw.startswith("(") and raw.endswith(")"):
        raw = raw[1:-1]
    if not raw:
        raise ParseError("empty weight tuple", text)
    a = tuple(_ints(raw, "weight tuple"))
    if any(x < 0 for x in a):
        raise ParseError("negative entry in weight tuple", text)
    if n is not None and len(a) != n:
        raise ParseError(f"expected {n} entries", text)
    return a


def format_weight_tuple(a: WeightTuple) -> str:
    return ",".join(map(str, a))


def parse_partition_tuple(text: str, n: int | None = None) -> PartitionTuple:
    lam = tuple(parse_partition(part) for part in text.split(";"))
    if n is not None and len(lam) != n:
        raise ParseError(f"expected {n} components", text)
    return lam


def format_partition_tuple(lam: PartitionTuple) -> str:
    return ";".join(format_partition(p) for p in lam)


def split_label(text: str) -> tuple[str, str, str]:
    """Split ``X(...)`` or ``X[...]`` into ``(letters, bracket, body)``."""
    text = text.strip()
    for open_, close in ("()", "[]"):
        start = text.find(open_)
        if start > 0 and text.endswith(close):
            return text[:start], open_, text[start + 1 : -1]
    raise ParseError("expected a label like P(2,0) or M[1;1]", text)
