#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from the Python unicodedata module.

Emits two sorted tables:
  * compatibility folds for Arabic presentation forms (U+FB50..U+FDFF,
    U+FE70..U+FEFF), taken from NFKC;
  * canonical combining classes for non-spacing marks in the Arabic blocks.
"""
import sys
import unicodedata

RANGES = [(0xFB50, 0xFDFF), (0xFE70, 0xFEFF)]
MARK_RANGES = [(0x0610, 0x061A), (0x064B, 0x065F), (0x0670, 0x0670),
               (0x06D6, 0x06ED), (0x08D3, 0x08FF)]


def cxx_utf8(s):
    return "".join("\\x%02x" % b for b in s.encode("utf-8"))


def main(out):
    lines = ["// Generated by scripts/gen_unicode_tables.py (Unicode %s). Do not edit."
             % unicodedata.unidata_version, ""]
    lines.append("static constexpr PresentationFold kPresentationFolds[] = {")
    for lo, hi in RANGES:
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            if unicodedata.category(ch) == "Cn":
                continue
            folded = unicodedata.normalize("NFKC", ch)
            if folded != ch:
                lines.append('    {0x%04X, "%s"},' % (cp, cxx_utf8(folded)))
    lines.append("};")
    lines.append("")
    lines.append("static constexpr CombiningClass kArabicCombiningClasses[] = {")
    for lo, hi in MARK_RANGES:
        for cp in range(lo, hi + 1):
            ccc = unicodedata.combining(chr(cp))
            if ccc:
                lines.append("    {0x%04X, %d}," % (cp, ccc))
    lines.append("};")
    with open(out, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/unicode_tables.inc")
