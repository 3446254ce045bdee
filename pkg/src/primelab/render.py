"""Table rendering shared by the command-line surface.

Integers print at full precision, reals at six significant digits, and
the numeric payload is identical across the csv and markdown renderers.
"""

import io

FORMATS = ("csv", "markdown", "plain")


def format_cell(v):
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return f"{v:.6g}"
    if isinstance(v, complex):
        return f"{v.real:.6g}{v.imag:+.6g}i"
    return str(v)


def render_table(headers, rows, fmt="plain"):
    """Render rows of cells under one of the supported formats."""
    cells = [[format_cell(v) for v in row] for row in rows]
    if fmt == "csv":
        out = io.StringIO()
        out.write(",".join(headers) + "\n")
        for row in cells:
            out.write(",".join(row) + "\n")
        return out.getvalue().rstrip("\n")
    widths = [
        max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
        for i, h in enumerate(headers)
    ]
    lines = []
    if fmt == "markdown":
        lines.append("| " + " | ".join(h.ljust(w) for h, w in zip(headers, widths)) + " |")
        lines.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
        for row in cells:
            lines.append("| " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |")
    elif fmt == "plain":
        lines.append("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip())
        for row in cells:
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return "\n".join(lines)


def parse_csv(text):
    """Inverse of the csv renderer: (headers, rows of strings)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    headers = lines[0].split(",")
    return headers, [ln.split(",") for ln in lines[1:]]
