"""Plain, CSV, and b-file text renderings of indexed integer sequences."""

from enum import Enum


class OutputFormat(Enum):
    PLAIN = "plain"
    CSV = "csv"
    BFILE = "bfile"


def format_plain(values):
    """All values on one line, space-separated."""
    return " ".join(str(v) for v in values) + "\n"


def format_csv(pairs):
    """One "<index>,<value>" record per line."""
    return "".join(f"{i},{v}\n" for i, v in pairs)


def format_bfile(pairs):
    """One "<index> <value>" record per line, single space, newline-terminated."""
    return "".join(f"{i} {v}\n" for i, v in pairs)


def parse_bfile(text):
    """Inverse of format_bfile: the list of (index, value) pairs."""
    pairs = []
    for line in text.splitlines():
        i_str, v_str = line.split()
        pairs.append((int(i_str), int(v_str)))
    return pairs


def render_terms(values, fmt, offset=0):
    """Render values in the requested format; indices start at `offset`."""
    if fmt is OutputFormat.PLAIN:
        return format_plain(values)
    pairs = ((i + offset, v) for i, v in enumerate(values))
    if fmt is OutputFormat.CSV:
        return format_csv(pairs)
    if fmt is OutputFormat.BFILE:
        return format_bfile(pairs)
    raise ValueError(f"unknown format {fmt!r}")
