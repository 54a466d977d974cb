"""Colouring file format.

Line 1: ``q k l n`` as space-separated decimals, then n lines of k symbols
from 0-9a-z (value = digit, or letter index + 10).  Lines starting with #
are comments; ``# mode=walks`` marks an identification-only colouring.
A trailing newline is required.  Files written by this module round-trip
byte-identically through read + write.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .words import Colouring, CyclicWord


@dataclass
class ColouringFile:
    colouring: Colouring
    mode: Optional[str] = None  # None (cycles) or "walks"


def dumps(cf: ColouringFile) -> str:
    c = cf.colouring
    lines = []
    if cf.mode:
        lines.append(f"# mode={cf.mode}")
    lines.append(f"{c.q} {c.k} {c.l} {c.n}")
    lines.extend(str(w) for w in c.words)
    return "\n".join(lines) + "\n"


def loads(text: str) -> ColouringFile:
    if not text.endswith("\n"):
        raise ValueError("missing trailing newline")
    mode = None
    header = None
    words = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.startswith("#"):
            stripped = line[1:].strip()
            if stripped.startswith("mode="):
                mode = stripped[len("mode="):]
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 4:
                raise ValueError(f"line {lineno}: header must be 'q k l n'")
            header = tuple(int(p) for p in parts)
        else:
            words.append(CyclicWord(line.strip()))
    if header is None:
        raise ValueError("missing header line")
    q, k, l, n = header
    if len(words) != n:
        raise ValueError(f"header declares n={n} but found {len(words)} words")
    return ColouringFile(Colouring(q, k, l, words), mode)


def write_colouring(path, cf: ColouringFile):
    with open(path, "w") as fh:
        fh.write(dumps(cf))


def read_colouring(path) -> ColouringFile:
    with open(path) as fh:
        return loads(fh.read())
