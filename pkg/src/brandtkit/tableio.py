"""Text file format for multiplication tables.

Line 1: ``n <size>``; optional ``zero <index>``; then <size> rows of
<size> space-separated element indices (row i lists the products i*j);
after the table, optional ``label <index> <string>`` lines.  Lines
starting with ``#`` are comments.
"""

from __future__ import annotations

from . import errors
from .core import FiniteSemigroup, from_table


def loads(text: str) -> FiniteSemigroup:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("n "):
        raise errors.TableFormatError("first line must be 'n <size>'")
    try:
        size = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise errors.TableFormatError(f"bad size line {lines[0]!r}") from exc
    if size < 1:
        raise errors.TableFormatError("size must be positive")
    pos = 1
    zero = None
    if pos < len(lines) and lines[pos].startswith("zero"):
        parts = lines[pos].split()
        try:
            zero = int(parts[1])
        except (IndexError, ValueError) as exc:
            raise errors.TableFormatError(f"bad zero line {lines[pos]!r}") from exc
        pos += 1
    if len(lines) < pos + size:
        raise errors.TableFormatError(f"expected {size} table rows, found {len(lines) - pos}")
    table = []
    for i in range(size):
        parts = lines[pos + i].split()
        if len(parts) != size:
            raise errors.TableFormatError(f"row {i} has {len(parts)} entries, expected {size}")
        try:
            table.append([int(p) for p in parts])
        except ValueError as exc:
            raise errors.TableFormatError(f"non-integer entry in row {i}") from exc
    pos += size
    labels = None
    for ln in lines[pos:]:
        parts = ln.split(maxsplit=2)
        if parts[0] != "label" or len(parts) < 3:
            raise errors.TableFormatError(f"unexpected line {ln!r} after the table")
        if labels is None:
            labels = [str(i) for i in range(size)]
        try:
            idx = int(parts[1])
            labels[idx] = parts[2]
        except (ValueError, IndexError) as exc:
            raise errors.TableFormatError(f"bad label line {ln!r}") from exc
    return from_table(table, zero=zero, labels=labels)


def dumps(S: FiniteSemigroup) -> str:
    out = [f"n {S.size}"]
    if S.zero is not None:
        out.append(f"zero {S.zero}")
    for i in range(S.size):
        out.append(" ".join(str(v) for v in S.table[i]))
    if S.labels is not None:
        for i, lab in enumerate(S.labels):
            out.append(f"label {i} {lab}")
    return "\n".join(out) + "\n"


def load(path) -> FiniteSemigroup:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dump(S: FiniteSemigroup, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(S))
