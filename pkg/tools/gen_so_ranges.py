#!/usr/bin/env python3
"""Regenerate the bundled So range table from a UnicodeData.txt file.

Usage:
    python tools/gen_so_ranges.py UnicodeData.txt > src/lexirank/data/so_ranges.txt

The input is the semicolon-separated character database from a Unicode
Character Database release (the shipped table was produced from the
8.0.0 release). Every codepoint with general category So is collected,
including the First/Last range pairs the format uses for large blocks,
and emitted as sorted inclusive U+XXXX..U+YYYY intervals.
"""

import sys


def so_codepoint_intervals(lines):
    """Yield (lo, hi) inclusive intervals of So codepoints, merged."""
    points = []
    pending_first = None
    for line in lines:
        line = line.strip()
        if not line:
            continue
        fields = line.split(";")
        cp = int(fields[0], 16)
        name, category = fields[1], fields[2]
        if name.endswith(", First>"):
            pending_first = (cp, category)
            continue
        if name.endswith(", Last>"):
            if pending_first is None:
                raise ValueError(f"range Last without First at U+{cp:04X}")
            first_cp, first_cat = pending_first
            pending_first = None
            if first_cat == "So":
                points.append((first_cp, cp))
            continue
        if category == "So":
            points.append((cp, cp))

    points.sort()
    merged = []
    for lo, hi in points:
        if merged and lo <= merged[-1][1] + 1:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


def main(argv):
    if len(argv) != 2:
        print(__doc__, file=sys.stderr)
        return 2
    with open(argv[1], encoding="utf-8") as f:
        intervals = so_codepoint_intervals(f)
    print("# General category So (Symbol, Other), Unicode 8.0.0.")
    print("# One inclusive codepoint interval per line, sorted ascending.")
    print("# Generated from the Unicode 8.0.0 character database; regenerate with")
    print("#   python tools/gen_so_ranges.py UnicodeData.txt > so_ranges.txt")
    for lo, hi in intervals:
        print(f"U+{lo:04X}..U+{hi:04X}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
