"""Network files (JSON), configuration literals and Graphviz DOT export."""

from __future__ import annotations

import json
import os
import tempfile

import numpy as np

from .asyncdyn import async_graph
from .netcore import MAX_N, BooleanNetwork, Configuration, SignedDigraph


class FormatError(ValueError):
    """Malformed network file or literal."""


def network_to_dict(f: BooleanNetwork) -> dict:
    return {"n": f.n, "tables": ["".join("1" if b else "0" for b in row) for row in f.tables.tolist()]}


def network_from_dict(doc) -> BooleanNetwork:
    if not isinstance(doc, dict) or "n" not in doc or "tables" not in doc:
        raise FormatError("network file must be an object with fields 'n' and 'tables'")
    n, tables = doc["n"], doc["tables"]
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_N:
        raise FormatError(f"'n' must be an integer in 1..{MAX_N}, got {n!r}")
    if not isinstance(tables, list) or len(tables) != n:
        raise FormatError(f"'tables' must be a list of {n} strings")
    rows = []
    for k, t in enumerate(tables):
        if not isinstance(t, str) or len(t) != 1 << n or set(t) - {"0", "1"}:
            raise FormatError(f"table {k + 1} must be a string of {1 << n} characters '0'/'1'")
        rows.append(np.frombuffer(t.encode("ascii"), dtype=np.uint8) - ord("0"))
    return BooleanNetwork(n, rows)


def dumps_network(f: BooleanNetwork) -> str:
    return json.dumps(network_to_dict(f), indent=2) + "\n"


def loads_network(text: str) -> BooleanNetwork:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from e
    return network_from_dict(doc)


def load_network(path) -> BooleanNetwork:
    with open(path, encoding="utf-8") as fh:
        return loads_network(fh.read())


def write_atomic(path, text: str) -> None:
    """Write via a temporary file in the same directory, then rename over ``path``."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_network(f: BooleanNetwork, path) -> None:
    write_atomic(path, dumps_network(f))


def parse_literal(text: str, n: int) -> Configuration:
    try:
        x = Configuration.from_literal(text.strip())
    except ValueError as e:
        raise FormatError(str(e)) from e
    if x.n != n:
        raise FormatError(f"literal {text!r} has length {x.n}, network has n={n}")
    return x


def parse_schedule(text: str, n: int) -> list[int]:
    try:
        sched = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as e:
        raise FormatError(f"schedule must be comma-separated integers: {text!r}") from e
    bad = [i for i in sched if not 1 <= i <= n]
    if bad:
        raise FormatError(f"schedule entries {bad} outside 1..{n}")
    return sched


def interaction_graph_dot(G: SignedDigraph) -> str:
    lines = ["digraph G {"]
    for v in range(1, G.n + 1):
        lines.append(f"  {v};")
    for j, i, s in G.sorted_arcs():
        color = "darkgreen" if s > 0 else "red"
        label = "+" if s > 0 else "-"
        lines.append(f'  {j} -> {i} [label="{label}", color={color}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def async_graph_dot(f: BooleanNetwork) -> str:
    g = async_graph(f)
    lit = [Configuration(f.n, b).literal for b in range(1 << f.n)]
    lines = ["digraph Gamma {"]
    for b in range(1 << f.n):
        shape = "doublecircle" if not g.adjacency[b] else "circle"
        lines.append(f'  "{lit[b]}" [shape={shape}];')
    for x, y in g.transitions():
        lines.append(f'  "{lit[x]}" -> "{lit[y]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
