"""Plain-text code files.

Format: a header line ``q n`` followed by one codeword per line, each as n
decimal symbols separated by single spaces. Every line ends with a newline;
comments and blank lines are not allowed.
"""

from __future__ import annotations

from pathlib import Path

from sepcodes.core import Code, CodeError, CodeParams


class CodeFileError(CodeError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _ints(text: str, line: int) -> list[int]:
    fields = text.split(" ")
    if any(f == "" for f in fields):
        raise CodeFileError(line, "fields must be separated by single spaces")
    out = []
    for f in fields:
        if not (f.isascii() and f.isdigit()):
            raise CodeFileError(line, f"not a decimal integer: {f!r}")
        out.append(int(f))
    return out


def parse(text: str) -> Code:
    if not text:
        raise CodeFileError(1, "empty file")
    if not text.endswith("\n"):
        raise CodeFileError(text.count("\n") + 1, "missing final newline")
    lines = text[:-1].split("\n")
    header = _ints(lines[0], 1)
    if len(header) != 2:
        raise CodeFileError(1, "header must be 'q n'")
    try:
        params = CodeParams(*header)
    except CodeError as exc:
        raise CodeFileError(1, str(exc)) from None
    words = []
    seen: dict[tuple[int, ...], int] = {}
    for lineno, raw in enumerate(lines[1:], start=2):
        w = tuple(_ints(raw, lineno))
        if len(w) != params.n:
            raise CodeFileError(lineno, f"expected {params.n} symbols, got {len(w)}")
        for s in w:
            if s >= params.q:
                raise CodeFileError(lineno, f"symbol {s} out of range for q={params.q}")
        if w in seen:
            raise CodeFileError(lineno, f"duplicate of line {seen[w]}")
        seen[w] = lineno
        words.append(w)
    return Code(params, tuple(words))


def render(code: Code) -> str:
    lines = [f"{code.params.q} {code.params.n}"]
    lines += [" ".join(map(str, w)) for w in code.words]
    return "\n".join(lines) + "\n"


def read(path: str | Path) -> Code:
    return parse(Path(path).read_text())


def write(code: Code, path: str | Path) -> None:
    Path(path).write_text(render(code))
