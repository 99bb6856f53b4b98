"""Generalized Cartan matrices, Coxeter diagrams and their types.

Also enumerates the Coxeter diagrams of hyperbolic simplices with dihedral
angles pi/2, pi/3, pi/4, pi/6 (and 0 in dimension 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from .canon import canonical_permutation
from .errors import InvalidCartanMatrix, NotSymmetrizable
from .linalg import signature
from .numfield import SQRT2, SQRT3

INF = math.inf
LABELS = (3, 4, 6, INF)

FINITE = "Finite"
AFFINE = "Affine"
INDEFINITE = "Indefinite"

# Coxeter label <-> product a_ij * a_ji
_LABEL_OF_PRODUCT = {0: 2, 1: 3, 2: 4, 3: 6, 4: INF}
_LABEL_CODE = {2: 0, 3: 1, 4: 2, 6: 3, INF: 4}


def label_text(m) -> str:
    return "inf" if m == INF else str(m)


def _components(n: int, adjacent) -> list[list[int]]:
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(n):
                if not seen[w] and adjacent(v, w):
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class MatrixType:
    tag: str
    indecomposable: bool
    symmetrizable: bool
    hyperbolic: bool


@dataclass(frozen=True)
class GeneralizedCartanMatrix:
    """Integer matrix with 2 on the diagonal, a_ij <= 0 off it, a_ij = 0 iff a_ji = 0.

    Convention: ``a_ij = <alpha_i^vee, alpha_j>``, so the simple reflection
    acts by ``s_i(alpha_j) = alpha_j - a_ij alpha_i``.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InvalidCartanMatrix("matrix is not square")
            if row[i] != 2:
                raise InvalidCartanMatrix(f"a_{i}{i} = {row[i]} != 2")
            for j in range(n):
                if i == j:
                    continue
                if row[j] > 0:
                    raise InvalidCartanMatrix(f"a_{i}{j} = {row[j]} > 0")
                if (row[j] == 0) != (rows[j][i] == 0):
                    raise InvalidCartanMatrix(f"zero pattern not symmetric at ({i}, {j})")

    @classmethod
    def of(cls, rows) -> "GeneralizedCartanMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n_plus_1(self) -> int:
        return len(self.entries)

    rank = n_plus_1

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def components(self) -> list[list[int]]:
        return _components(self.n_plus_1, lambda i, j: i != j and self.entries[i][j] != 0)

    @property
    def indecomposable(self) -> bool:
        return len(self.components()) == 1

    @cached_property
    def _sym(self):
        try:
            return symmetrize(self)
        except NotSymmetrizable:
            return None

    @property
    def symmetrizer(self) -> tuple[Fraction, ...]:
        if self._sym is None:
            raise NotSymmetrizable(str(self.entries))
        return self._sym[0]

    @property
    def sym_matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        if self._sym is None:
            raise NotSymmetrizable(str(self.entries))
        return self._sym[1]

    @cached_property
    def int_form(self) -> tuple[tuple[int, ...], ...]:
        """B scaled by the lcm of its denominators: an integral symmetric form."""
        b = self.sym_matrix
        den = 1
        for row in b:
            for x in row:
                den = den * x.denominator // math.gcd(den, x.denominator)
        return tuple(tuple(int(x * den) for x in row) for row in b)

    def principal(self, idx) -> "GeneralizedCartanMatrix":
        return GeneralizedCartanMatrix(tuple(tuple(self.entries[i][j] for j in idx) for i in idx))

    def permuted(self, perm) -> "GeneralizedCartanMatrix":
        """Relabel so that new node k is old node ``perm[k]``."""
        return self.principal(perm)

    def transpose(self) -> "GeneralizedCartanMatrix":
        return GeneralizedCartanMatrix(tuple(zip(*self.entries)))

    def coxeter_diagram(self) -> "CoxeterDiagram":
        n = self.n_plus_1
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                p = self.entries[i][j] * self.entries[j][i]
                if p:
                    if p not in _LABEL_OF_PRODUCT:
                        raise InvalidCartanMatrix(f"a_ij a_ji = {p} is outside the supported angle set")
                    edges.append((i, j, _LABEL_OF_PRODUCT[p]))
        return CoxeterDiagram(n, frozenset(edges))

    @cached_property
    def canonical(self) -> tuple[tuple, tuple[int, ...]]:
        """``(key, perm)`` with ``self.permuted(perm)`` the canonical representative."""
        codes = [[self.entries[i][j] for j in range(self.n_plus_1)] for i in range(self.n_plus_1)]
        return canonical_permutation(codes)

    def canonical_form(self) -> "GeneralizedCartanMatrix":
        return self.permuted(self.canonical[1])

    def __str__(self):
        return "[" + ", ".join("[" + ",".join(str(x) for x in r) + "]" for r in self.entries) + "]"


@dataclass(frozen=True)
class CoxeterDiagram:
    """Undirected graph on ``nodes`` vertices; edge ``(i, j, m)`` means angle pi/m (0 for inf)."""

    nodes: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        norm = set()
        seen = set()
        for i, j, m in self.edges:
            if i == j:
                raise ValueError("self loop")
            if not (0 <= i < self.nodes and 0 <= j < self.nodes):
                raise ValueError("node index out of range")
            if m not in LABELS:
                raise ValueError(f"bad label {m}")
            a, b = min(i, j), max(i, j)
            if (a, b) in seen:
                raise ValueError("duplicate edge")
            seen.add((a, b))
            norm.add((a, b, m))
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def label_matrix(self) -> tuple[tuple, ...]:
        m = [[1 if i == j else 2 for j in range(self.nodes)] for i in range(self.nodes)]
        for i, j, lab in self.edges:
            m[i][j] = m[j][i] = lab
        return tuple(tuple(r) for r in m)

    def label(self, i, j):
        return self.label_matrix[i][j]

    def sorted_edges(self) -> list[tuple[int, int, object]]:
        return sorted(self.edges, key=lambda e: (e[0], e[1]))

    def gram(self):
        """Twice the cosine matrix: 2 on the diagonal, -2 cos(pi/m) off it."""
        return _gram2(self.label_matrix)

    def components(self) -> list[list[int]]:
        lm = self.label_matrix
        return _components(self.nodes, lambda i, j: i != j and lm[i][j] != 2)

    def subdiagram(self, idx) -> "CoxeterDiagram":
        pos = {v: k for k, v in enumerate(idx)}
        return CoxeterDiagram(
            len(idx),
            frozenset((pos[i], pos[j], m) for i, j, m in self.edges if i in pos and j in pos),
        )

    def permuted(self, perm) -> "CoxeterDiagram":
        return self.subdiagram(list(perm))

    @cached_property
    def canonical(self) -> tuple[tuple, tuple[int, ...]]:
        lm = self.label_matrix
        n = self.nodes
        codes = [[0 if i == j else _LABEL_CODE[lm[i][j]] for j in range(n)] for i in range(n)]
        return canonical_permutation(codes)

    def canonical_form(self) -> "CoxeterDiagram":
        return self.permuted(self.canonical[1])

    def label_multiset(self) -> tuple:
        """Multiset of all pairwise labels (2 for absent edges), sorted."""
        lm = self.label_matrix
        return tuple(sorted(lm[i][j] for i in range(self.nodes) for j in range(i + 1, self.nodes)))

    def is_compact(self) -> bool:
        """True when every proper subdiagram is of finite type."""
        for v in range(self.nodes):
            rest = [u for u in range(self.nodes) if u != v]
            if diagram_tag(self.subdiagram(rest)) != FINITE:
                return False
        return True

    def __str__(self):
        parts = [f"rank {self.nodes}"] + [f"edge {i + 1} {j + 1} {label_text(m)}" for i, j, m in self.sorted_edges()]
        return "; ".join(parts)


_GRAM_ENTRY = {1: 2, 2: 0, 3: -1, 4: -SQRT2, 6: -SQRT3, INF: -2}


def _gram2(label_matrix):
    return [[_GRAM_ENTRY[m] for m in row] for row in label_matrix]


def _component_tag(sig: tuple[int, int, int], size: int) -> str:
    pos, neg, zero = sig
    if pos == size:
        return FINITE
    if neg == 0 and zero == 1:
        return AFFINE
    return INDEFINITE


def _combine(tags) -> str:
    tags = list(tags)
    if any(t == INDEFINITE for t in tags):
        return INDEFINITE
    if any(t == AFFINE for t in tags):
        return AFFINE
    return FINITE


def _tag_of_symmetric(matrix, comps) -> str:
    tags = []
    for comp in comps:
        sub = [[matrix[i][j] for j in comp] for i in comp]
        tags.append(_component_tag(signature(sub), len(comp)))
    return _combine(tags)


def symmetrize(A: GeneralizedCartanMatrix) -> tuple[tuple[Fraction, ...], tuple[tuple[Fraction, ...], ...]]:
    """Return ``(d, B)`` with ``d_i a_ij = d_j a_ji`` and ``B = diag(d) A``.

    ``d`` is normalised so that its minimum over each connected component is 1.
    """
    a = A.entries
    n = A.n_plus_1
    d: list[Fraction | None] = [None] * n
    for comp in A.components():
        root = comp[0]
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or a[i][j] == 0:
                    continue
                want = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    raise NotSymmetrizable(f"cycle products differ for {A}")
        low = min(d[i] for i in comp)
        for i in comp:
            d[i] = d[i] / low
    B = tuple(tuple(d[i] * a[i][j] for j in range(n)) for i in range(n))
    return tuple(d), B


def signature_of(B) -> tuple[int, int, int]:
    return signature([list(r) for r in B])


def _tag_only(A: GeneralizedCartanMatrix) -> str:
    return _tag_of_symmetric(A.sym_matrix, A.components())


def classify_type(A: GeneralizedCartanMatrix) -> MatrixType:
    """Finite / Affine / Indefinite tag plus indecomposable, symmetrizable, hyperbolic flags."""
    if A._sym is None:
        raise NotSymmetrizable(str(A))
    tag = _tag_only(A)
    indecomposable = A.indecomposable
    hyperbolic = False
    if tag == INDEFINITE and indecomposable:
        n = A.n_plus_1
        hyperbolic = all(
            _tag_only(A.principal([j for j in range(n) if j != i])) != INDEFINITE for i in range(n)
        )
    return MatrixType(tag, indecomposable, True, hyperbolic)


def is_hyperbolic(A: GeneralizedCartanMatrix) -> bool:
    if A._sym is None:
        return False
    return classify_type(A).hyperbolic


def diagram_tag(D: CoxeterDiagram) -> str:
    return _tag_of_symmetric(D.gram(), D.components())


def classify_diagram(D: CoxeterDiagram) -> MatrixType:
    tag = diagram_tag(D)
    indecomposable = len(D.components()) == 1
    hyperbolic = False
    if tag == INDEFINITE and indecomposable:
        hyperbolic = all(
            diagram_tag(D.subdiagram([j for j in range(D.nodes) if j != i])) != INDEFINITE
            for i in range(D.nodes)
        )
    return MatrixType(tag, indecomposable, True, hyperbolic)


# ---------------------------------------------------------------- enumeration


def _admissible(lm, idx) -> bool:
    """Every component of the subdiagram on ``idx`` is finite or affine."""
    comps = _components(len(idx), lambda a, b: a != b and lm[idx[a]][idx[b]] != 2)
    for comp in comps:
        nodes = [idx[c] for c in comp]
        if len(nodes) == 1:
            continue
        sub = [[_GRAM_ENTRY[lm[i][j]] for j in nodes] for i in nodes]
        if _component_tag(signature(sub), len(nodes)) == INDEFINITE:
            return False
    return True


def _from_label_matrix(lm) -> CoxeterDiagram:
    n = len(lm)
    return CoxeterDiagram(n, frozenset((i, j, lm[i][j]) for i in range(n) for j in range(i + 1, n) if lm[i][j] != 2))


@lru_cache(maxsize=None)
def _connected_by_rank(rank: int) -> tuple[tuple[CoxeterDiagram, ...], tuple[CoxeterDiagram, ...]]:
    """Connected diagrams of the given rank whose proper subdiagrams are all admissible.

    Returns ``(finite_or_affine, hyperbolic)``, each canonical and sorted.
    """
    if rank == 1:
        return (CoxeterDiagram(1),), ()
    fa_prev, _ = _connected_by_rank(rank - 1)
    labels = (2, 3, 4, 6, INF) if rank <= 3 else (2, 3, 4, 6)
    found_fa: dict = {}
    found_hyp: dict = {}
    new = rank - 1
    for base in fa_prev:
        lm0 = [list(r) + [2] for r in base.label_matrix] + [[2] * (rank - 1) + [1]]

        def dfs(j, lm):
            if j == rank - 1:
                if all(lm[new][k] == 2 for k in range(new)):
                    return
                for u in range(rank - 1):
                    if not _admissible(lm, [v for v in range(rank) if v != u]):
                        return
                D = _from_label_matrix(lm)
                if len(D.components()) != 1:
                    return
                key, perm = D.canonical
                if key in found_fa or key in found_hyp:
                    return
                tag = diagram_tag(D)
                if tag != INDEFINITE:
                    found_fa[key] = D.permuted(perm)
                elif signature(D.gram()) == (rank - 1, 1, 0):
                    found_hyp[key] = D.permuted(perm)
                return
            for lab in labels:
                lm[new][j] = lm[j][new] = lab
                if j + 1 < rank - 1 and not _admissible(lm, list(range(j + 1)) + [new]):
                    continue
                dfs(j + 1, lm)
            lm[new][j] = lm[j][new] = 2

        dfs(0, lm0)
    fa = tuple(found_fa[k] for k in sorted(found_fa))
    hyp = tuple(found_hyp[k] for k in sorted(found_hyp))
    return fa, hyp


def connected_finite_affine_diagrams(rank: int) -> list[CoxeterDiagram]:
    return list(_connected_by_rank(rank)[0])


def enumerate_hyperbolic_simplex_diagrams(rank: int) -> list[CoxeterDiagram]:
    """All hyperbolic Coxeter simplex diagrams on ``rank`` nodes, up to isomorphism.

    Labels come from {3, 4, 6}, plus inf when rank == 3.  The result is
    canonically labelled and sorted by canonical key.
    """
    if rank < 3:
        raise ValueError("rank must be at least 3")
    return list(_connected_by_rank(rank)[1])
