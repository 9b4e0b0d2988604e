"""The .cys text format.

Line 1 is n; each of the next n lines holds the n space-separated one-line
images of psi(s_i).  '#' starts a comment (whole line or trailing); blank
lines are ignored.  :func:`format_cys` emits the canonical form, which
:func:`parse_cys` round-trips byte-identically.

A census file is a sequence of .cys blocks separated by blank lines followed
by a summary footer of ``total=``, ``dmax=`` and ``hist <class>=<count>``
lines.
"""

from __future__ import annotations

from typing import Iterator

from .core import CycleSet
from .errors import FormatError

_FOOTER_PREFIXES = ("total=", "dmax=", "hist ")


def _data_lines(text: str) -> Iterator[str]:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_cys(text: str) -> CycleSet:
    lines = list(_data_lines(text))
    if not lines:
        raise FormatError("empty .cys input")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"first data line must be n, got {lines[0]!r}") from None
    if n < 1:
        raise FormatError(f"n must be positive, got {n}")
    if len(lines) != n + 1:
        raise FormatError(f"expected {n} rows after n, got {len(lines) - 1}")
    rows = []
    for k, line in enumerate(lines[1:], start=1):
        try:
            images = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise FormatError(f"row {k} is not a list of integers: {line!r}") from None
        rows.append(images)
    return CycleSet(n, tuple(rows))


def format_cys(cs: CycleSet) -> str:
    lines = [str(cs.n)]
    lines.extend(" ".join(map(str, row)) for row in cs.rows)
    return "\n".join(lines) + "\n"


def read_cys(path: str) -> CycleSet:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cys(fh.read())


def write_cys(path: str, cs: CycleSet) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_cys(cs))


def parse_census_text(text: str) -> tuple[list[CycleSet], list[str]]:
    """Split census file text into its .cys blocks and footer lines."""
    blocks: list[CycleSet] = []
    footer: list[str] = []
    block: list[str] = []
    in_footer = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not in_footer and line.startswith(_FOOTER_PREFIXES):
            in_footer = True
        if in_footer:
            if line:
                footer.append(line)
            continue
        if not line:
            if block:
                blocks.append(parse_cys("\n".join(block)))
                block = []
            continue
        block.append(line)
    if block:
        blocks.append(parse_cys("\n".join(block)))
    return blocks, footer


def parse_census(path: str) -> tuple[list[CycleSet], list[str]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_census_text(fh.read())
