"""The ``mscb`` line format.

::

    mscb 1            # magic + version, first non-comment line
    n 4               # vertex count
    e 0 1             # one line per edge
    b 2 0 1           # bundle: weight, then members, in family order
    c 9               # optional budget
    l 0 1 3           # list-coloring sources only: vertex, allowed colors

``#`` starts a comment. :func:`emit` writes the canonical form (edges
sorted, bundle members sorted, no comments), so ``emit(parse(t)) == t``
for canonical ``t``.
"""

from __future__ import annotations

import json
from pathlib import Path

from mscb.core import Graph, Instance, MSCBError, SolveResult
from mscb.reductions import ListColoringInstance

MAGIC = "mscb"
VERSION = "1"


class ParseError(MSCBError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        toks = []
        col = 0
        for part in body.split():
            col = body.index(part, col)
            toks.append((part, col + 1))
            col += len(part)
        yield lineno, toks


def _int(tok: tuple[str, int], lineno: int) -> int:
    try:
        return int(tok[0])
    except ValueError:
        raise ParseError(f"expected an integer, got {tok[0]!r}", lineno, tok[1]) from None


def _parse(text: str, allow_lists: bool):
    n: int | None = None
    edges: list[tuple[int, int]] = []
    bundles: list[tuple[int, list[int]]] = []
    budget: int | None = None
    lists: dict[int, list[int]] = {}
    seen_magic = False

    def vertex(tok, lineno):
        v = _int(tok, lineno)
        if n is None:
            raise ParseError("vertex before the 'n' line", lineno, tok[1])
        if not 0 <= v < n:
            raise ParseError(f"vertex out of range: {v} not in [0,{n})", lineno, tok[1])
        return v

    for lineno, toks in _tokens(text):
        head, col = toks[0]
        args = toks[1:]
        if not seen_magic:
            if head != MAGIC or len(args) != 1:
                raise ParseError("missing 'mscb <version>' header", lineno, col)
            if args[0][0] != VERSION:
                raise ParseError(f"unsupported version {args[0][0]!r}", lineno, args[0][1])
            seen_magic = True
            continue
        if head == "n":
            if n is not None:
                raise ParseError("duplicate 'n' line", lineno, col)
            if len(args) != 1:
                raise ParseError("'n' takes one argument", lineno, col)
            n = _int(args[0], lineno)
            if n < 0:
                raise ParseError("negative vertex count", lineno, args[0][1])
        elif head == "e":
            if len(args) != 2:
                raise ParseError("'e' takes two vertices", lineno, col)
            edges.append((vertex(args[0], lineno), vertex(args[1], lineno)))
        elif head == "b":
            if not args:
                raise ParseError("'b' needs a weight", lineno, col)
            w = _int(args[0], lineno)
            if w < 1:
                raise ParseError(f"non-positive weight {w}", lineno, args[0][1])
            if len(args) < 2:
                raise ParseError("empty bundle", lineno, col)
            bundles.append((w, [vertex(t, lineno) for t in args[1:]]))
        elif head == "c":
            if len(args) != 1:
                raise ParseError("'c' takes one argument", lineno, col)
            budget = _int(args[0], lineno)
            if budget < 1:
                raise ParseError(f"non-positive budget {budget}", lineno, args[0][1])
        elif head == "l" and allow_lists:
            if len(args) < 2:
                raise ParseError("'l' needs a vertex and at least one color", lineno, col)
            v = vertex(args[0], lineno)
            colors = [_int(t, lineno) for t in args[1:]]
            for c, t in zip(colors, args[1:]):
                if c not in (1, 2, 3):
                    raise ParseError(f"list color {c} not in 1..3", lineno, t[1])
            lists[v] = colors
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, col)
    if not seen_magic:
        raise ParseError("empty document", 1)
    if n is None:
        raise ParseError("missing 'n' line", 1)
    return n, edges, bundles, budget, lists


def parse(text: str) -> Instance:
    n, edges, bundles, budget, _ = _parse(text, allow_lists=False)
    return Instance.build(n, edges, bundles, budget)


def emit(instance: Instance, comments: list[str] | None = None) -> str:
    lines = [f"{MAGIC} {VERSION}"]
    lines += [f"# {c}" for c in comments or []]
    lines.append(f"n {instance.n}")
    lines += [f"e {u} {v}" for u, v in instance.graph.edges]
    for b in instance.bundles:
        lines.append(" ".join(["b", str(b.weight), *map(str, b.members)]))
    if instance.budget is not None:
        lines.append(f"c {instance.budget}")
    return "\n".join(lines) + "\n"


def canonical(text: str) -> str:
    return emit(parse(text))


def parse_list_coloring(text: str) -> ListColoringInstance:
    n, edges, _, _, lists = _parse(text, allow_lists=True)
    missing = [v for v in range(n) if v not in lists]
    if missing:
        raise ParseError(f"no 'l' line for vertex {missing[0]}", 1)
    return ListColoringInstance(Graph(n, tuple(edges)), tuple(tuple(lists[v]) for v in range(n)))


def emit_list_coloring(lc: ListColoringInstance) -> str:
    lines = [f"{MAGIC} {VERSION}", f"n {lc.graph.n}"]
    lines += [f"e {u} {v}" for u, v in lc.graph.edges]
    for v, lst in enumerate(lc.lists):
        lines.append(" ".join(["l", str(v), *map(str, lst)]))
    return "\n".join(lines) + "\n"


def read_instance(path: str | Path) -> Instance:
    return parse(Path(path).read_text(encoding="utf-8"))


def write_instance(instance: Instance, path: str | Path, comments: list[str] | None = None) -> None:
    Path(path).write_text(emit(instance, comments), encoding="utf-8")


def result_line(result: SolveResult) -> str:
    colors = ",".join(map(str, result.coloring))
    return f"cost={result.cost} solver={result.solver} colors={colors}"


def result_json(result: SolveResult) -> str:
    return json.dumps(result.to_dict(), sort_keys=True)
