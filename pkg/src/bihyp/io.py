"""JSON and plain-text edge-list formats.

JSON::

    {"n": 5, "edges": [[0, 1, 2], ...]}                 # C = D
    {"n": 5, "c_edges": [...], "d_edges": [...]}        # general

Optional keys ``labels`` and ``provenance`` are carried through.

Edge list::

    #bi                 (or #mixed)
    5 3                 n, then the common edge size (0 if not uniform)
    0 1 2               one edge per line; mixed files prefix C/D
    C 0 1 2
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import BiHypergraph, MixedHypergraph, ModelError


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def to_dict(h: MixedHypergraph) -> dict:
    out: dict = {"n": h.n}
    if h.is_bi:
        out["edges"] = [list(e) for e in h.edges]
    else:
        out["c_edges"] = [list(e) for e in h.c_edges]
        out["d_edges"] = [list(e) for e in h.d_edges]
    if h.labels:
        out["labels"] = list(h.labels)
    if h.provenance:
        out["provenance"] = dict(h.provenance)
    return out


def from_dict(doc: dict) -> MixedHypergraph:
    try:
        n = int(doc["n"])
        labels = doc.get("labels")
        prov = doc.get("provenance")
        if "edges" in doc:
            return BiHypergraph(n, doc["edges"], labels=labels, provenance=prov)
        c = doc.get("c_edges", [])
        d = doc.get("d_edges", [])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed hypergraph document: {exc}") from None
    h = MixedHypergraph(n, c, d, labels=labels, provenance=prov)
    return h.as_bi() if h.is_bi else h


def dumps_json(h: MixedHypergraph) -> str:
    return json.dumps(to_dict(h), separators=(", ", ": ")) + "\n"


def loads_json(text: str) -> MixedHypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object", 1)
    return from_dict(doc)


def dumps_edgelist(h: MixedHypergraph) -> str:
    r = h.rank or 0
    lines = ["#bi" if h.is_bi else "#mixed", f"{h.n} {r}"]
    if h.is_bi:
        lines += [" ".join(map(str, e)) for e in h.edges]
    else:
        lines += ["C " + " ".join(map(str, e)) for e in h.c_edges]
        lines += ["D " + " ".join(map(str, e)) for e in h.d_edges]
    return "\n".join(lines) + "\n"


def loads_edgelist(text: str) -> MixedHypergraph:
    rows = [(i, line.strip()) for i, line in enumerate(text.splitlines(), 1)]
    rows = [(i, s) for i, s in rows if s]
    if not rows:
        raise ParseError("empty input", 1)
    i, head = rows[0]
    if head not in ("#bi", "#mixed"):
        raise ParseError("first line must be #bi or #mixed", i)
    bi = head == "#bi"
    if len(rows) < 2:
        raise ParseError("missing 'n r' line", i + 1)
    i, nr = rows[1]
    try:
        n, r = (int(x) for x in nr.split())
    except ValueError:
        raise ParseError("expected 'n r'", i) from None
    c, d = [], []
    for i, s in rows[2:]:
        if s.startswith("#"):
            continue
        tokens = s.split()
        fam = None
        if not bi:
            fam, tokens = tokens[0].upper(), tokens[1:]
            if fam not in ("C", "D"):
                raise ParseError(f"mixed edge lines start with C or D, got {fam!r}", i)
        try:
            e = [int(x) for x in tokens]
        except ValueError:
            raise ParseError(f"non-integer vertex in {s!r}", i) from None
        if not e:
            raise ParseError("empty edge", i)
        if r and len(e) != r:
            raise ParseError(f"edge of size {len(e)} in a file declared {r}-uniform", i)
        if any(not 0 <= v < n for v in e):
            raise ParseError(f"vertex out of range 0..{n - 1}", i)
        (d if fam == "D" else c).append(e)
    try:
        if bi:
            return BiHypergraph(n, c)
        return MixedHypergraph(n, c, d)
    except ModelError as exc:
        raise ParseError(str(exc)) from None


def dumps(h: MixedHypergraph, fmt: str = "json") -> str:
    return dumps_json(h) if fmt == "json" else dumps_edgelist(h)


def read(path: str | Path) -> MixedHypergraph:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        return loads_json(text)
    return loads_edgelist(text)


def write(h: MixedHypergraph, path: str | Path) -> None:
    path = Path(path)
    path.write_text(dumps(h, "json" if path.suffix == ".json" else "txt"))
