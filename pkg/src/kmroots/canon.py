"""Canonical labelling of small edge-coloured graphs.

Individualisation-refinement: colour refinement splits the nodes into an
ordered partition; a non-discrete partition is split further by
individualising each node of its first non-trivial cell in turn.  Every
discrete leaf gives a relabelling, and the lexicographically smallest code
matrix over all leaves is the canonical form.  No pruning is done, so the
leaves reaching the minimum are in bijection with the automorphisms.
"""

from __future__ import annotations


def _ranks(sig) -> list[int]:
    table = {s: k for k, s in enumerate(sorted(set(sig)))}
    return [table[s] for s in sig]


def _refine(codes, colors: list[int]) -> list[int]:
    n = len(codes)
    while True:
        new = _ranks([
            (colors[i], tuple(sorted((codes[i][j], codes[j][i], colors[j]) for j in range(n) if j != i)))
            for i in range(n)
        ])
        # refinement only splits cells, so an unchanged cell count means a fixed point
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _leaves(codes, colors):
    colors = _refine(codes, colors)
    n = len(codes)
    if len(set(colors)) == n:
        perm = tuple(sorted(range(n), key=colors.__getitem__))
        yield perm
        return
    sizes: dict[int, int] = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    target = min(c for c, k in sizes.items() if k > 1)
    for v in range(n):
        if colors[v] != target:
            continue
        split = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
        yield from _leaves(codes, split)


def _key(codes, perm):
    n = len(perm)
    return tuple(codes[perm[i]][perm[j]] for i in range(n) for j in range(n) if i != j)


def _search(codes):
    n = len(codes)
    initial = _ranks([tuple(sorted((codes[i][j], codes[j][i]) for j in range(n) if j != i)) for i in range(n)])
    best_key = None
    best = []
    for perm in _leaves(codes, initial):
        key = _key(codes, perm)
        if best_key is None or key < best_key:
            best_key, best = key, [perm]
        elif key == best_key:
            best.append(perm)
    return best_key, best


def canonical_permutation(codes) -> tuple[tuple, tuple[int, ...]]:
    """Return ``(key, perm)``: node ``perm[k]`` of the input becomes node ``k``.

    ``key`` is the relabelled code matrix read row-major with the diagonal
    skipped; two inputs are isomorphic iff their keys are equal.
    """
    if len(codes) == 0:
        return (), ()
    key, perms = _search(codes)
    return key, perms[0]


def automorphisms(codes) -> list[tuple[int, ...]]:
    """All permutations ``p`` with ``codes[p[i]][p[j]] == codes[i][j]``, sorted."""
    n = len(codes)
    if n == 0:
        return [()]
    _, perms = _search(codes)
    base = perms[0]
    result = set()
    for perm in perms:
        # perm[k] and base[k] occupy the same canonical slot k
        p = [0] * n
        for k in range(n):
            p[base[k]] = perm[k]
        result.add(tuple(p))
    return sorted(result)
