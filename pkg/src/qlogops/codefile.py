"""Plain-text code description files.

One matrix row per line; ``NAME:`` on its own line starts a section and
``#`` starts a comment.  The file kind follows from the sections present:

``pauli``
    Pauli strings over ``IXYZ``, either before any header or under
    ``GENERATORS:``; optional ``NORMALIZER:`` section.
``css``
    ``G1:`` and ``G2:`` (required), ``H1:`` and ``H2:`` (optional), rows
    over ``01``.
``crss``
    ``G:`` (required) and ``H:`` (optional), rows over ``01wW`` where ``w``
    is omega and ``W`` its conjugate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .codes import CssCodePair, Gf4Code
from .errors import ParseError
from .gf2 import BinMatrix
from .gf4 import Gf4Matrix
from .pauli import GeneratorSet, parse_pauli

__all__ = ["CodeFile", "parse_code_file", "load_code_file"]

_HEADER = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)\s*:$")
_KIND_OF_SECTION = {
    "GENERATORS": "pauli",
    "NORMALIZER": "pauli",
    "G1": "css",
    "G2": "css",
    "H1": "css",
    "H2": "css",
    "G": "crss",
    "H": "crss",
}
_ALPHABET = {"pauli": "IXYZ", "css": "01", "crss": "01wW"}
_REQUIRED = {"pauli": (), "css": ("G1", "G2"), "crss": ("G",)}


@dataclass
class CodeFile:
    kind: str
    sections: dict[str, list[str]] = field(default_factory=dict)
    # 1-based line number of every stored row, for error messages
    lines: dict[str, list[int]] = field(default_factory=dict, repr=False)

    def width(self) -> int:
        for rows in self.sections.values():
            if rows:
                return len(rows[0])
        return 0

    def generators(self) -> GeneratorSet:
        return GeneratorSet(self.width(), [parse_pauli(s) for s in self.sections.get("GENERATORS", [])])

    def normalizer(self) -> Optional[GeneratorSet]:
        if "NORMALIZER" not in self.sections:
            return None
        return GeneratorSet(self.width(), [parse_pauli(s) for s in self.sections["NORMALIZER"]])

    def _binary(self, name: str) -> Optional[BinMatrix]:
        if name not in self.sections:
            return None
        rows = self.sections[name]
        return BinMatrix.from_strings(rows) if rows else BinMatrix.zeros(0, self.width())

    def _gf4(self, name: str) -> Optional[Gf4Matrix]:
        if name not in self.sections:
            return None
        rows = self.sections[name]
        return Gf4Matrix.from_strings(rows) if rows else Gf4Matrix.zeros(0, self.width())

    def css_code(self) -> CssCodePair:
        return CssCodePair(self._binary("G1"), self._binary("G2"), self._binary("H1"), self._binary("H2"))

    def gf4_code(self) -> Gf4Code:
        return Gf4Code(self._gf4("G"), self._gf4("H"))

    def has(self, name: str) -> bool:
        return name in self.sections


def parse_code_file(text: str) -> CodeFile:
    sections: dict[str, list[str]] = {}
    lines: dict[str, list[int]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        m = _HEADER.match(content)
        if m:
            name = m.group(1).upper()
            if name not in _KIND_OF_SECTION:
                raise ParseError(f"unknown section {m.group(1)!r}", line=lineno)
            if name in sections:
                raise ParseError(f"duplicate section {name!r}", line=lineno)
            sections[name] = []
            lines[name] = []
            current = name
            continue
        if current is None:
            current = "GENERATORS"
            sections[current] = []
            lines[current] = []
        # keep the column of each character in the raw line for messages
        offset = len(raw) - len(raw.lstrip())
        row = []
        for j, ch in enumerate(raw.split("#", 1)[0].strip(), start=offset + 1):
            if not ch.isspace():
                row.append((ch, j))
        sections[current].append(row)  # type: ignore[arg-type]
        lines[current].append(lineno)

    kinds = {_KIND_OF_SECTION[s] for s in sections}
    if len(kinds) > 1:
        raise ParseError(f"sections of different file kinds mixed: {sorted(sections)}")
    kind = kinds.pop() if kinds else "pauli"
    alphabet = _ALPHABET[kind]

    width = None
    clean: dict[str, list[str]] = {}
    for name, rows in sections.items():
        clean[name] = []
        for row, lineno in zip(rows, lines[name]):
            for ch, col in row:
                if ch not in alphabet:
                    raise ParseError(f"illegal character {ch!r} in {kind} file", line=lineno, position=col)
            s = "".join(ch for ch, _ in row)
            if width is None:
                width = len(s)
            elif len(s) != width:
                raise ParseError(f"row has length {len(s)}, expected {width}", line=lineno)
            clean[name].append(s)
    for name in _REQUIRED[kind]:
        if name not in clean:
            raise ParseError(f"{kind} file requires section {name}:")
    return CodeFile(kind, clean, lines)


def load_code_file(path) -> CodeFile:
    return parse_code_file(Path(path).read_text())
