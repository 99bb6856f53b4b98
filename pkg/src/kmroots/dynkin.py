"""Dynkin diagrams over a Coxeter diagram: root-length (arrow) assignments.

Each multiple edge gets a choice of Cartan entries; an assignment is valid
exactly when the resulting matrix is symmetrizable.  The clockwise /
counterclockwise arrow rule for cycles is a consequence of that test, not
an input to it.
"""

from __future__ import annotations

from itertools import product

from .canon import automorphisms
from .diagrams import INF, CoxeterDiagram, GeneralizedCartanMatrix, _LABEL_CODE

# (a_ij, a_ji) choices per Coxeter label, for i < j
EDGE_CHOICES = {
    3: ((-1, -1),),
    4: ((-1, -2), (-2, -1)),
    6: ((-1, -3), (-3, -1)),
    INF: ((-2, -2), (-1, -4), (-4, -1)),
}


def fundamental_cycles(adjacency: list[list[bool]]) -> list[list[int]]:
    """One cycle (as a closed node walk, first node not repeated) per non-tree edge."""
    n = len(adjacency)
    parent = [-1] * n
    depth = [-1] * n
    tree = set()
    for root in range(n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        queue = [root]
        for v in queue:
            for w in range(n):
                if adjacency[v][w] and depth[w] < 0:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    tree.add((min(v, w), max(v, w)))
                    queue.append(w)
    cycles = []
    for u in range(n):
        for v in range(u + 1, n):
            if not adjacency[u][v] or (u, v) in tree:
                continue
            left, right = [u], [v]
            a, b = u, v
            while a != b:
                if depth[a] >= depth[b]:
                    a = parent[a]
                    left.append(a)
                else:
                    b = parent[b]
                    right.append(b)
            # left ends at the common ancestor, right ends there too
            cycles.append(left + right[-2::-1])
    return cycles


def is_symmetrizable(A: GeneralizedCartanMatrix) -> bool:
    """True iff along every cycle the products of a_ij and of a_ji agree."""
    a = A.entries
    n = A.n_plus_1
    adj = [[i != j and a[i][j] != 0 for j in range(n)] for i in range(n)]
    for cycle in fundamental_cycles(adj):
        fwd = back = 1
        for k, x in enumerate(cycle):
            y = cycle[(k + 1) % len(cycle)]
            fwd *= a[x][y]
            back *= a[y][x]
        if fwd != back:
            return False
    return True


def dual(A: GeneralizedCartanMatrix) -> GeneralizedCartanMatrix:
    """The transposed matrix: same Weyl group, root lengths inverted."""
    return A.transpose()


def _gcm_from_choice(diagram: CoxeterDiagram, edges, choice) -> GeneralizedCartanMatrix:
    n = diagram.nodes
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for (i, j, _), (aij, aji) in zip(edges, choice):
        rows[i][j] = aij
        rows[j][i] = aji
    return GeneralizedCartanMatrix.of(rows)


def enumerate_dynkin(diagram: CoxeterDiagram, up_to_automorphism: bool = False) -> list[GeneralizedCartanMatrix]:
    """All symmetrizable Cartan matrices whose Coxeter diagram is ``diagram``.

    With ``up_to_automorphism`` only the smallest matrix (by entries) of each
    orbit under the diagram's automorphism group is kept.
    """
    edges = diagram.sorted_edges()
    found = []
    for choice in product(*(EDGE_CHOICES[m] for _, _, m in edges)):
        A = _gcm_from_choice(diagram, edges, choice)
        if is_symmetrizable(A):
            found.append(A)
    if up_to_automorphism:
        lm = diagram.label_matrix
        n = diagram.nodes
        codes = [[0 if i == j else _LABEL_CODE[lm[i][j]] for j in range(n)] for i in range(n)]
        auts = automorphisms(codes)
        reps = {}
        for A in found:
            orbit = [A.principal(p) for p in auts]
            rep = min(orbit, key=lambda M: M.entries)
            reps[rep.entries] = rep
        found = list(reps.values())
    found.sort(key=lambda M: M.entries)
    return found


def arrows(A: GeneralizedCartanMatrix) -> dict[tuple[int, int], int | None]:
    """Orientation of each multiple edge: the node the arrow points to (the shorter root).

    Simple edges and undirected inf edges map to ``None``.
    """
    out = {}
    n = A.n_plus_1
    for i in range(n):
        for j in range(i + 1, n):
            aij, aji = A.entries[i][j], A.entries[j][i]
            if aij == 0:
                continue
            if aij == aji:
                out[(i, j)] = None
            else:
                # |a_ij| < |a_ji| means alpha_i is the longer root
                out[(i, j)] = j if abs(aij) < abs(aji) else i
    return out
