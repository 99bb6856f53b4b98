"""Coxeter presentations and Todd-Coxeter coset enumeration.

Strategy (fixed, so results and coset counts are reproducible): HLT.
Subgroup generators are scanned from coset 0; then cosets are processed in
order, every relator is scanned-and-filled from each live coset and the
row is completed.  When the number of live cosets reaches the budget a
lookahead pass scans every relator from every coset without defining
anything; if that frees no room the enumeration gives up with ``Exceeded``.

All generators are involutions, so the table stores ``c . s`` only and
``c . s = d`` always comes with ``d . s = c``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .diagrams import INF, CoxeterDiagram, GeneralizedCartanMatrix
from .errors import Exceeded, NotRealRoot
from .roots import apply_word, express_as_w_alpha, is_sign_coherent

DEFAULT_MAX_COSETS = 10**6


@dataclass(frozen=True)
class CoxeterPresentation:
    """Involutive generators ``0..n-1`` with braid orders ``orders[i][j]`` (inf: no relation)."""

    orders: tuple[tuple, ...]

    @property
    def ngens(self) -> int:
        return len(self.orders)

    def relators(self) -> list[tuple[int, ...]]:
        rels = []
        n = self.ngens
        for i in range(n):
            for j in range(i + 1, n):
                m = self.orders[i][j]
                if m != INF:
                    rels.append((i, j) * int(m))
        return rels


def coxeter_presentation(diagram: CoxeterDiagram | GeneralizedCartanMatrix) -> CoxeterPresentation:
    if isinstance(diagram, GeneralizedCartanMatrix):
        diagram = diagram.coxeter_diagram()
    return CoxeterPresentation(diagram.label_matrix)


def reflection_word(A: GeneralizedCartanMatrix, root) -> list[int]:
    """A word for the reflection in a positive real root: ``w s_i w^-1`` where ``root = w(alpha_i)``."""
    root = tuple(root)
    if not any(root) or not all(x >= 0 for x in root) or not is_sign_coherent(root):
        raise NotRealRoot(f"{root} is not a positive root")
    word, i = express_as_w_alpha(A, root)
    return list(word) + [i] + list(reversed(word))


def word_action(A: GeneralizedCartanMatrix, word, v):
    return apply_word(A, word, v)


@dataclass(frozen=True)
class CosetTable:
    """Closed coset table; row 0 is the subgroup itself."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def index(self) -> int:
        return len(self.rows)

    def act(self, coset: int, word) -> int:
        for x in word:
            coset = self.rows[coset][x]
        return coset

    def permutation(self, gen: int) -> tuple[int, ...]:
        return tuple(r[gen] for r in self.rows)

    def is_valid(self, relators) -> bool:
        n = len(self.rows)
        for c in range(n):
            for x, d in enumerate(self.rows[c]):
                if not (0 <= d < n) or self.rows[d][x] != c:
                    return False
            for rel in relators:
                if self.act(c, rel) != c:
                    return False
        seen = {0}
        stack = [0]
        while stack:
            c = stack.pop()
            for d in self.rows[c]:
                if d not in seen:
                    seen.add(d)
                    stack.append(d)
        return len(seen) == n


class _Enumerator:
    def __init__(self, ngens: int, relators, max_cosets: int):
        self.ngens = ngens
        self.relators = relators
        self.max_cosets = max_cosets
        self.table: list[list[int]] = [[-1] * ngens]
        self.parent = [0]
        self.alive = 1
        self.queue: list[tuple[int, int]] = []

    def rep(self, c: int) -> int:
        p = self.parent
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def new_coset(self) -> int:
        if self.alive >= self.max_cosets:
            self.lookahead()
            if self.alive >= self.max_cosets:
                raise Exceeded(self.max_cosets)
        c = len(self.table)
        self.table.append([-1] * self.ngens)
        self.parent.append(c)
        self.alive += 1
        return c

    def define(self, c: int, x: int) -> int:
        d = self.new_coset()
        self.table[c][x] = d
        self.table[d][x] = c
        return d

    def scan(self, c: int, word, fill: bool) -> None:
        table = self.table
        f, i = c, 0
        b, j = c, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] >= 0:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j]] >= 0:
                b = table[b][word[j]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                x = word[i]
                table[f][x] = b
                table[b][x] = f
                return
            if not fill:
                return
            self.define(f, word[i])

    def coincidence(self, a: int, b: int) -> None:
        self.merge(a, b)
        table = self.table
        q = self.queue
        k = 0
        while k < len(q):
            dead = q[k][0]
            k += 1
            for x in range(self.ngens):
                e = table[dead][x]
                if e < 0:
                    continue
                if table[e][x] == dead:
                    table[e][x] = -1
                r1 = self.rep(dead)
                r2 = self.rep(e)
                t1 = table[r1][x]
                if t1 >= 0:
                    self.merge(r2, t1)
                else:
                    t2 = table[r2][x]
                    if t2 >= 0:
                        self.merge(r1, t2)
                    else:
                        table[r1][x] = r2
                        table[r2][x] = r1
        self.queue = []

    def merge(self, a: int, b: int) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.alive -= 1
        self.queue.append((b, a))

    def lookahead(self) -> None:
        for c in range(len(self.table)):
            for rel in self.relators:
                if not self.is_live(c):
                    break
                self.scan(c, rel, fill=False)

    def run(self, subgroup_words) -> CosetTable:
        for w in subgroup_words:
            if w:
                self.scan(0, list(w), fill=True)
        c = 0
        while c < len(self.table):
            for rel in self.relators:
                if not self.is_live(c):
                    break
                self.scan(c, rel, fill=True)
            if self.is_live(c):
                for x in range(self.ngens):
                    if self.table[c][x] < 0:
                        self.define(c, x)
            c += 1
        live = [c for c in range(len(self.table)) if self.is_live(c)]
        number = {c: k for k, c in enumerate(live)}
        rows = tuple(tuple(number[self.rep(self.table[c][x])] for x in range(self.ngens)) for c in live)
        return CosetTable(rows)


def enumerate_cosets(pres: CoxeterPresentation, subgroup_words, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """Closed coset table of the subgroup generated by ``subgroup_words``."""
    return _Enumerator(pres.ngens, pres.relators(), max_cosets).run(subgroup_words)


def todd_coxeter(pres: CoxeterPresentation, subgroup_words, max_cosets: int = DEFAULT_MAX_COSETS) -> int:
    """Index of the subgroup generated by ``subgroup_words``; raises ``Exceeded`` past the budget."""
    return enumerate_cosets(pres, subgroup_words, max_cosets).index


def group_order(pres: CoxeterPresentation, max_cosets: int = DEFAULT_MAX_COSETS) -> int:
    return todd_coxeter(pres, [], max_cosets)


def is_finite_label(m) -> bool:
    return m != INF and not (isinstance(m, float) and math.isinf(m))
