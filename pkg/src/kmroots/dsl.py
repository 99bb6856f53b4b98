"""Line-oriented text format for Coxeter diagrams and Cartan matrices.

::

    rank 4
    edge 1 2 3
    edge 2 3 4>      # arrow towards the shorter root: a_23 = -1, a_32 = -2
    edge 3 4 inf     # equal lengths: a_34 = a_43 = -2

Nodes are 1-based.  ``#`` starts a comment.  Text with an arrow or an
``inf`` edge describes a Cartan matrix; otherwise it describes a Coxeter
diagram (use ``kind="gcm"`` to read simply-laced text as a matrix).
"""

from __future__ import annotations

import re

from .diagrams import INF, CoxeterDiagram, GeneralizedCartanMatrix, _LABEL_OF_PRODUCT, label_text
from .errors import BadLabel, DiagramSyntaxError, DuplicateEdge, IndexOutOfRange, InvalidCartanMatrix, SelfLoop

_LABELS = {"3": 3, "4": 4, "6": 6, "inf": INF}
# (a_ij, a_ji) for an arrow pointing from i to j
_ARROW_ENTRIES = {4: (-1, -2), 6: (-1, -3), INF: (-1, -4)}
_PLAIN_ENTRIES = {3: (-1, -1), INF: (-2, -2)}

_TOKEN = re.compile(r"\S+")


def _tokens(line: str):
    return [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(line)]


def _int(tok, col, lineno):
    if not re.fullmatch(r"[0-9]+", tok):
        raise DiagramSyntaxError(f"expected a positive integer, got {tok!r}", lineno, col)
    return int(tok)


def parse_edges(text: str):
    """``(rank, [(i, j, label, arrow), ...])`` with 0-based nodes and arrow in ``{'>', '<', ''}``."""
    rank = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        head, col = toks[0]
        if head == "rank":
            if rank is not None:
                raise DiagramSyntaxError("rank given twice", lineno, col)
            if len(toks) != 2:
                raise DiagramSyntaxError("expected 'rank <k>'", lineno, col)
            rank = _int(toks[1][0], toks[1][1], lineno)
            if rank < 1:
                raise DiagramSyntaxError("rank must be positive", lineno, toks[1][1])
            continue
        if head != "edge":
            raise DiagramSyntaxError(f"unknown keyword {head!r}", lineno, col)
        if rank is None:
            raise DiagramSyntaxError("edge before rank", lineno, col)
        if len(toks) != 4:
            raise DiagramSyntaxError("expected 'edge <i> <j> <label>[<|>]'", lineno, col)
        i = _int(toks[1][0], toks[1][1], lineno)
        j = _int(toks[2][0], toks[2][1], lineno)
        for v, c in ((i, toks[1][1]), (j, toks[2][1])):
            if not 1 <= v <= rank:
                raise IndexOutOfRange(f"node {v} outside 1..{rank}", lineno, c)
        if i == j:
            raise SelfLoop(f"edge from node {i} to itself", lineno, toks[1][1])
        lab, lcol = toks[3]
        arrow = ""
        if lab[-1:] in "<>" and lab:
            arrow = lab[-1]
            lab = lab[:-1]
        if lab not in _LABELS:
            raise BadLabel(f"label must be one of 3, 4, 6, inf; got {toks[3][0]!r}", lineno, lcol)
        m = _LABELS[lab]
        if arrow and m == 3:
            raise BadLabel("a simple edge cannot carry an arrow", lineno, lcol)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DuplicateEdge(f"second edge between {key[0]} and {key[1]}", lineno, col)
        seen.add(key)
        edges.append((i - 1, j - 1, m, arrow, lineno, lcol))
    if rank is None:
        raise DiagramSyntaxError("missing 'rank <k>' line", 1, 1)
    return rank, edges


def parse_diagram(text: str, kind: str = "auto") -> CoxeterDiagram | GeneralizedCartanMatrix:
    """Parse DSL text; ``kind`` is ``"auto"``, ``"coxeter"`` or ``"gcm"``."""
    if kind not in ("auto", "coxeter", "gcm"):
        raise ValueError(f"unknown kind {kind!r}")
    rank, edges = parse_edges(text)
    if kind == "auto":
        kind = "gcm" if any(arrow or m == INF for _, _, m, arrow, _, _ in edges) else "coxeter"
    if kind == "coxeter":
        return CoxeterDiagram(rank, frozenset((i, j, m) for i, j, m, _, _, _ in edges))
    rows = [[2 if a == b else 0 for b in range(rank)] for a in range(rank)]
    for i, j, m, arrow, lineno, col in edges:
        if arrow:
            near, far = _ARROW_ENTRIES[m]
            if arrow == "<":
                i, j = j, i
            rows[i][j], rows[j][i] = near, far
        else:
            if m not in _PLAIN_ENTRIES:
                raise BadLabel(f"a {label_text(m)} edge needs an arrow in a Cartan matrix", lineno, col)
            rows[i][j], rows[j][i] = _PLAIN_ENTRIES[m]
    try:
        return GeneralizedCartanMatrix.of(rows)
    except InvalidCartanMatrix as exc:  # pragma: no cover - entries above are always admissible
        raise DiagramSyntaxError(str(exc), 1, 1) from exc


def parse_gcm(text: str) -> GeneralizedCartanMatrix:
    return parse_diagram(text, kind="gcm")


def parse_coxeter(text: str) -> CoxeterDiagram:
    return parse_diagram(text, kind="coxeter")


def serialize(obj: CoxeterDiagram | GeneralizedCartanMatrix) -> str:
    """Canonical text: ``rank`` line then edges sorted by node pair, newline terminated."""
    lines = []
    if isinstance(obj, CoxeterDiagram):
        lines.append(f"rank {obj.nodes}")
        for i, j, m in obj.sorted_edges():
            lines.append(f"edge {i + 1} {j + 1} {label_text(m)}")
    else:
        n = obj.n_plus_1
        lines.append(f"rank {n}")
        a = obj.entries
        for i in range(n):
            for j in range(i + 1, n):
                if a[i][j] == 0:
                    continue
                m = _LABEL_OF_PRODUCT[a[i][j] * a[j][i]]
                if a[i][j] == a[j][i]:
                    arrow = ""
                elif abs(a[i][j]) < abs(a[j][i]):
                    arrow = ">"
                else:
                    arrow = "<"
                lines.append(f"edge {i + 1} {j + 1} {label_text(m)}{arrow}")
    return "\n".join(lines) + "\n"


def one_line(obj) -> str:
    """Single-line form (``;`` separated) used for graph labels."""
    return "; ".join(serialize(obj).strip().splitlines())


def parse_roots(text: str) -> list[tuple[int, ...]]:
    """One integer vector per line (spaces or commas), ``#`` comments allowed."""
    out = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].replace(",", " ")
        toks = _tokens(line)
        if not toks:
            continue
        vec = []
        for tok, col in toks:
            if not re.fullmatch(r"-?[0-9]+", tok):
                raise DiagramSyntaxError(f"expected an integer, got {tok!r}", lineno, col)
            vec.append(int(tok))
        if width is not None and len(vec) != width:
            raise DiagramSyntaxError(f"expected {width} coordinates, got {len(vec)}", lineno, 1)
        width = len(vec)
        out.append(tuple(vec))
    return out
