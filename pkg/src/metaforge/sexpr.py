"""S-expression reader and printer for spec, property, and proof files.

Atoms are symbols (identifiers, including keywords like ``:primary``) or
integers; lists are parenthesized.  ``;`` starts a line comment.  Every parsed
node remembers the line/column it started at so later passes can report
positioned errors.
"""
from __future__ import annotations

from dataclasses import dataclass, field


class SexprError(Exception):
    """Raised on malformed input, with a 1-based line/column position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Sym:
    name: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)

    def __repr__(self) -> str:
        return f"Sym({self.name})"


@dataclass(frozen=True)
class Int:
    value: int
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)

    def __repr__(self) -> str:
        return f"Int({self.value})"


@dataclass(frozen=True)
class SList:
    items: tuple
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)

    def __repr__(self) -> str:
        return f"SList({list(self.items)!r})"

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def __iter__(self):
        return iter(self.items)


Node = Sym | Int | SList

_DELIMS = "()"
_WS = " \t\r\n"


def _is_int_token(tok: str) -> bool:
    body = tok[1:] if tok[0] in "+-" else tok
    return bool(body) and body.isdigit()


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def _advance(self, c: str) -> None:
        self.pos += 1
        if c == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1

    def _skip_space(self) -> None:
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c in _WS:
                self._advance(c)
            elif c == ";":
                while self.pos < len(self.text) and self.text[self.pos] != "\n":
                    self._advance(self.text[self.pos])
            else:
                return

    def read_all(self) -> list[Node]:
        forms = []
        while True:
            self._skip_space()
            if self.pos >= len(self.text):
                return forms
            forms.append(self._read())

    def _read(self) -> Node:
        self._skip_space()
        if self.pos >= len(self.text):
            raise SexprError("unexpected end of input", self.line, self.col)
        line, col = self.line, self.col
        c = self.text[self.pos]
        if c == "(":
            self._advance(c)
            items = []
            while True:
                self._skip_space()
                if self.pos >= len(self.text):
                    raise SexprError("unclosed '('", line, col)
                if self.text[self.pos] == ")":
                    self._advance(")")
                    return SList(tuple(items), line, col)
                items.append(self._read())
        if c == ")":
            raise SexprError("unmatched ')'", line, col)
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in _WS + _DELIMS + ";":
            self._advance(self.text[self.pos])
        tok = self.text[start:self.pos]
        if _is_int_token(tok):
            return Int(int(tok), line, col)
        return Sym(tok, line, col)


def parse(text: str) -> list[Node]:
    """Read every top-level form in ``text``."""
    return _Reader(text).read_all()


def parse_one(text: str) -> Node:
    forms = parse(text)
    if len(forms) != 1:
        raise SexprError(f"expected exactly one form, got {len(forms)}", 1, 1)
    return forms[0]


def show(node: Node) -> str:
    """Print a node on one line."""
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Int):
        return str(node.value)
    return "(" + " ".join(show(x) for x in node.items) + ")"


def show_pretty(node: Node, indent: int = 0, width: int = 96) -> str:
    """Print with light two-level indentation for readable spec files."""
    flat = show(node)
    if len(flat) + indent <= width or not isinstance(node, SList):
        return flat
    head = node.items[0] if node.items else None
    parts = [show(head)] if head is not None else []
    lines = ["(" + " ".join(parts)]
    pad = " " * (indent + 2)
    for item in node.items[1:]:
        lines.append(pad + show_pretty(item, indent + 2, width))
    return "\n".join(lines) + ")"
