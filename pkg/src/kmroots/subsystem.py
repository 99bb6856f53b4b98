"""Maximal rank subsystems of a root system given by their simple roots.

An :class:`Embedding` lists the simple roots of the subsystem as positive
real roots of the ambient system.  Its chamber contains the ambient
chamber and is tiled by Weyl translates of it; :func:`tile` walks that
tiling, which gives the subgroup index, the interior walls, a coset table
and all the Weyl-equivalent placements of the same subsystem.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .diagrams import GeneralizedCartanMatrix, is_hyperbolic
from .errors import (
    AcutePair,
    DependentRoots,
    HeightBoundTooSmall,
    MismatchedChain,
    NotCrystallographic,
    NotDoublingFacet,
    NotHyperbolicSubtype,
    NotRealRoot,
)
from .lattice import Lattice, lattice_contains, lattice_index
from .linalg import inverse, rank
from .roots import (
    apply_word,
    is_imaginary_root,
    is_real_root,
    pairing_int,
    real_roots_up_to_height,
    simple_reflect,
    simple_root,
    sorted_roots,
)


def induced_gcm(ambient: GeneralizedCartanMatrix, roots) -> GeneralizedCartanMatrix:
    """Cartan matrix ``2(b_i|b_j)/(b_i|b_i)`` of a set of positive real roots."""
    roots = [tuple(r) for r in roots]
    for r in roots:
        if len(r) != ambient.n_plus_1:
            raise ValueError(f"root {r} has the wrong length")
        if not all(x >= 0 for x in r) or not is_real_root(ambient, r):
            raise NotRealRoot(f"{r} is not a positive real root")
    if rank(roots) != len(roots):
        raise DependentRoots("roots are linearly dependent")
    gram = [[pairing_int(ambient, a, b) for b in roots] for a in roots]
    k = len(roots)
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            if i != j and gram[i][j] > 0:
                raise AcutePair(f"roots {roots[i]} and {roots[j]} form an acute angle")
            num = 2 * gram[i][j]
            if num % gram[i][i]:
                raise NotCrystallographic(f"entry ({i}, {j}) = {Fraction(num, gram[i][i])}")
            row.append(num // gram[i][i])
        rows.append(row)
    return GeneralizedCartanMatrix.of(rows)


@dataclass(frozen=True)
class Embedding:
    ambient: GeneralizedCartanMatrix
    sub_roots: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "sub_roots", tuple(tuple(int(x) for x in r) for r in self.sub_roots))
        if len(self.sub_roots) != self.ambient.n_plus_1:
            raise ValueError(f"expected {self.ambient.n_plus_1} subsystem roots, got {len(self.sub_roots)}")
        # validates the roots
        object.__setattr__(self, "_induced", induced_gcm(self.ambient, self.sub_roots))

    @property
    def induced(self) -> GeneralizedCartanMatrix:
        return self._induced

    @property
    def rank(self) -> int:
        return len(self.sub_roots)

    @cached_property
    def sub_lattice(self) -> Lattice:
        return Lattice(self.sub_roots)

    @cached_property
    def lattice_index(self) -> int:
        return lattice_index(self.sub_lattice, Lattice.standard(self.ambient.n_plus_1))

    @cached_property
    def _inverse(self):
        return inverse([list(r) for r in self.sub_roots])

    def to_sub(self, v):
        """Coordinates of an ambient vector in the basis of subsystem simple roots (integers or ``None``)."""
        inv = self._inverse
        n = len(v)
        out = []
        for j in range(n):
            s = sum((v[i] * inv[i][j] for i in range(n) if v[i]), Fraction(0))
            if s.denominator != 1:
                return None
            out.append(int(s))
        return tuple(out)

    def to_ambient(self, c):
        n = self.ambient.n_plus_1
        return tuple(sum(c[k] * self.sub_roots[k][i] for k in range(len(c))) for i in range(n))

    def max_height(self) -> int:
        return max(sum(r) for r in self.sub_roots)

    def permuted(self, perm) -> "Embedding":
        """Relabel the ambient nodes (new node k = old node ``perm[k]``)."""
        return Embedding(self.ambient.permuted(perm), tuple(tuple(r[p] for p in perm) for r in self.sub_roots))

    def reordered(self, order) -> "Embedding":
        """Reorder the subsystem simple roots."""
        return Embedding(self.ambient, tuple(self.sub_roots[k] for k in order))


def identity_embedding(A: GeneralizedCartanMatrix) -> Embedding:
    n = A.n_plus_1
    return Embedding(A, tuple(simple_root(n, i) for i in range(n)))


# ------------------------------------------------------------------ doubling


def doubling_subsystem(ambient: GeneralizedCartanMatrix, i: int, j: int) -> Embedding:
    """Double the chamber across facet ``i`` whose only non-orthogonal neighbour is ``j``.

    The new simple roots are ``alpha_j - a_ij alpha_i`` (in slot ``i``) and
    ``alpha_k`` for ``k != i``; the root lattice drops to index ``|a_ij|``.
    """
    a = ambient.entries
    n = ambient.n_plus_1
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise NotDoublingFacet("bad indices")
    neighbours = [k for k in range(n) if k != i and a[i][k] != 0]
    if neighbours != [j]:
        raise NotDoublingFacet(f"node {i} is not a leaf attached to {j}")
    if abs(a[j][i]) > abs(a[i][j]):
        raise NotDoublingFacet("|a_ji| > |a_ij|: use the dual matrix")
    if abs(a[i][j]) < 2:
        raise NotDoublingFacet("|a_ij| = 1 gives the whole group back")
    # s_i(alpha_j) takes the place of alpha_i; s_i fixes every other simple root
    roots = [simple_root(n, k) for k in range(n)]
    v = [0] * n
    v[j] = 1
    v[i] = -a[i][j]
    roots[i] = tuple(v)
    return Embedding(ambient, tuple(roots))


def doubling_configurations(A: GeneralizedCartanMatrix):
    """Pairs ``(i, j)`` for which :func:`doubling_subsystem` applies to ``A``."""
    a = A.entries
    n = A.n_plus_1
    out = []
    for i in range(n):
        nb = [k for k in range(n) if k != i and a[i][k] != 0]
        if len(nb) == 1:
            j = nb[0]
            if abs(a[j][i]) <= abs(a[i][j]) and abs(a[i][j]) >= 2:
                out.append((i, j))
    return out


# ------------------------------------------------------------------ tiling


@dataclass
class Tiling:
    """Copies of the ambient chamber inside the subsystem chamber.

    ``frames[c]`` are the subsystem simple roots seen from copy ``c`` (that is
    ``w^-1(beta)`` when copy ``c`` is ``w(F)``), ``words[c]`` is a word for
    ``w``, ``table[c][i]`` is the copy across wall ``i`` (``c`` itself when
    that wall lies on the boundary), and ``walls`` lists the interior walls
    once each as ``(c, i)``.
    """

    embedding: Embedding
    frames: list = field(default_factory=list)
    words: list = field(default_factory=list)
    table: list = field(default_factory=list)
    walls: list = field(default_factory=list)

    @property
    def index(self) -> int:
        return len(self.frames)

    def wall_root(self, c: int, i: int):
        """The positive ambient root vanishing on interior wall ``i`` of copy ``c``."""
        A = self.embedding.ambient
        v = apply_word(A, self.words[c], simple_root(A.n_plus_1, i))
        if all(x <= 0 for x in v):
            v = tuple(-x for x in v)
        return v

    def interior_roots(self) -> list:
        return sorted_roots({self.wall_root(c, i) for c, i in self.walls})


class TilingTooLarge(Exception):
    pass


def tile(e: Embedding, max_copies: int = 100000) -> Tiling:
    A = e.ambient
    n = A.n_plus_1
    units = {simple_root(n, i): i for i in range(n)}
    start = tuple(e.sub_roots)
    t = Tiling(e, [start], [[]], [], [])
    seen = {start: 0}
    k = 0
    while k < len(t.frames):
        frame = t.frames[k]
        boundary = {units[r] for r in frame if r in units}
        row = []
        for i in range(n):
            if i in boundary:
                row.append(k)
                continue
            nxt = tuple(simple_reflect(A, i, r) for r in frame)
            c = seen.get(nxt)
            if c is None:
                if len(t.frames) >= max_copies:
                    raise TilingTooLarge(f"more than {max_copies} copies")
                c = len(t.frames)
                seen[nxt] = c
                t.frames.append(nxt)
                t.words.append(t.words[k] + [i])
            row.append(c)
            if k < c:
                t.walls.append((k, i))
        t.table.append(row)
        k += 1
    return t


def _word_permutation(table, word):
    n = len(table)
    perm = list(range(n))
    for x in word:
        perm = [table[p][x] for p in perm]
    return perm


def intermediate_orbits(t: Tiling, generators=None):
    """For every interior wall, the size of the orbit of copy 0 under <W1, r_wall>.

    The orbit size is ``[<W1, r> : W1]``; the decomposition is minimal iff
    every interior wall gives the full set of copies.
    """
    from .coset import reflection_word

    e = t.embedding
    table = t.table
    n = t.index
    if generators is None:
        generators = [_word_permutation(table, reflection_word(e.ambient, b)) for b in e.sub_roots]
    word_perm = {0: list(range(n))}
    # permutations of the copy words, built along the BFS tree
    for c in range(1, n):
        w = t.words[c]
        parent = t.table[c][w[-1]]
        pp = word_perm[parent]
        word_perm[c] = [table[p][w[-1]] for p in pp]
    out = []
    for c, i in t.walls:
        pw = word_perm[c]
        inv = [0] * n
        for x, y in enumerate(pw):
            inv[y] = x
        r = [inv[table[pw[x]][i]] for x in range(n)]
        seen = {0}
        stack = [0]
        gens = generators + [r]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        out.append(((c, i), len(seen)))
    return out


def is_minimal(e: Embedding, t: Tiling | None = None) -> bool:
    """No reflection subgroup lies strictly between the subsystem's Weyl group and the whole group."""
    t = t or tile(e)
    if t.index == 1:
        return False
    return all(size == t.index for _, size in intermediate_orbits(t))


def decomposed_angles(e: Embedding, t: Tiling | None = None) -> list:
    """Interior wall roots lying in the span of two subsystem simple roots."""
    t = t or tile(e)
    out = []
    roots = e.sub_roots
    for u in t.interior_roots():
        for a in range(len(roots)):
            for b in range(a + 1, len(roots)):
                if rank([roots[a], roots[b], u]) == 2:
                    out.append((a, b, u))
    return out


def canonical_frame_key(frame) -> tuple:
    roots = sorted_roots(frame)
    non_simple = sum(1 for r in roots if sum(r) != 1)
    return (non_simple, max(sum(r) for r in roots), sum(sum(r) for r in roots), tuple(roots))


def canonical_embedding(e: Embedding, t: Tiling | None = None) -> Embedding:
    """Representative of the Weyl-translates of ``e`` with the ambient chamber inside.

    Fewest roots that are not ambient simple roots, then smallest maximal
    height, then smallest total height, then lexicographically smallest
    sorted root list; roots are returned sorted.
    """
    t = t or tile(e)
    best = min(t.frames, key=canonical_frame_key)
    return Embedding(e.ambient, tuple(canonical_frame_key(best)[2]))


# ------------------------------------------------------------------ condition (*)


@dataclass(frozen=True)
class StarVerdict:
    """Outcome of a bounded (*) check.

    ``holds`` with ``checked_height``; otherwise ``witness = (alpha, beta,
    alpha + beta)`` in ambient coordinates, or, when no summand pair was
    found below the bound, ``counterexample``: a real root of the ambient
    system in the sublattice but outside the subsystem.
    """

    holds: bool
    checked_height: int
    witness: tuple | None = None
    counterexample: tuple | None = None

    @property
    def status(self) -> str:
        if self.holds:
            return f"HoldsUpTo({self.checked_height})"
        if self.witness is not None:
            return "FailsWithWitness({}, {}, {})".format(*self.witness)
        return f"FailsWithLatticeCounterexample({self.counterexample})"


def sub_real_roots(e: Embedding, H: int) -> dict:
    """Positive real roots of the subsystem with ambient height <= H, as ``{ambient: sub_coords}``."""
    hts = [sum(r) for r in e.sub_roots]
    out = {}
    for c in real_roots_up_to_height(e.induced, H):
        v = e.to_ambient(c)
        if sum(v) <= H:
            out[v] = c
    # sub-height <= ambient height because every sub simple root has height >= 1
    assert all(h >= 1 for h in hts)
    return out


def _is_sub_root(e: Embedding, c) -> bool:
    return is_real_root(e.induced, c) or is_imaginary_root(e.induced, c)


def find_witness(e: Embedding, v, sub_roots_by_ambient: dict):
    """A pair of subsystem roots summing to ``v``; ``None`` if none is found below the bound."""
    c = e.to_sub(v)
    for a_amb in sorted_roots(sub_roots_by_ambient):
        a = sub_roots_by_ambient[a_amb]
        b = tuple(x - y for x, y in zip(c, a))
        if any(b) and _is_sub_root(e, b):
            b_amb = tuple(x - y for x, y in zip(v, a_amb))
            return a_amb, b_amb, tuple(v)
    return None


def check_star_bounded(e: Embedding, H: int) -> StarVerdict:
    """(*) restricted to ambient roots of height <= H.

    Every positive real root of the ambient system of height <= H that lies
    in the sublattice must be a real root of the subsystem.  Imaginary roots
    need no check: the subsystem's imaginary roots are exactly the ambient
    ones in its lattice.
    """
    if not is_hyperbolic(e.induced):
        raise NotHyperbolicSubtype(f"induced matrix {e.induced} is not hyperbolic")
    if H < e.max_height():
        raise HeightBoundTooSmall(f"H = {H} is below the subsystem root height {e.max_height()}")
    lat = e.sub_lattice
    violations = []
    for v in sorted_roots(real_roots_up_to_height(e.ambient, H)):
        if not lattice_contains(lat, v):
            continue
        c = e.to_sub(v)
        if not is_real_root(e.induced, c):
            violations.append(v)
    if not violations:
        return StarVerdict(True, H)
    subs = sub_real_roots(e, H)
    for v in violations:
        w = find_witness(e, v, subs)
        if w is not None:
            return StarVerdict(False, H, witness=w)
    return StarVerdict(False, H, counterexample=violations[0])


def condition_i_bounded(e: Embedding, H: int) -> bool:
    """Real roots of the subsystem equal the ambient real roots in the sublattice, below height H."""
    mine = set(sub_real_roots(e, H))
    lat = e.sub_lattice
    theirs = {v for v in real_roots_up_to_height(e.ambient, H) if lattice_contains(lat, v)}
    return mine == theirs


def condition_pairs_bounded(e: Embedding, H: int) -> bool:
    """(*) on real roots tested pair by pair, for sums and differences of height <= H.

    For subsystem real roots a, b: if a + b or a - b is a real root of the
    ambient system it must be a real root of the subsystem.  Imaginary sums
    need no check (see :func:`check_star_bounded`).
    """
    subs = set(sub_real_roots(e, H))
    real = real_roots_up_to_height(e.ambient, H)
    pool = sorted_roots(subs)
    for k, a in enumerate(pool):
        for b in pool[k + 1 :]:
            s = tuple(x + y for x, y in zip(a, b))
            if sum(s) <= H and s in real and s not in subs:
                return False
            d = tuple(x - y for x, y in zip(a, b))
            if sum(d) < 0:
                d = tuple(-x for x in d)
            if d in real and d not in subs:
                return False
    return True


def star_exact(e: Embedding, t: Tiling | None = None):
    """Unbounded (*) test: ``(holds, offending_root)``.

    A mirror of the ambient group either is a mirror of the subsystem group
    or crosses the interior of some subsystem chamber, and then a subsystem
    translate of it is an interior wall of the tiling.  So (*) fails iff
    some interior wall root lies in the sublattice.
    """
    t = t or tile(e)
    lat = e.sub_lattice
    for u in t.interior_roots():
        if lattice_contains(lat, u):
            return False, u
    return True, None


# ------------------------------------------------------------------ towers


def chain_compose(inner: Embedding, outer: Embedding) -> Embedding:
    """Subsystem of a subsystem, expressed in the outermost root system."""
    if inner.ambient.entries != outer.induced.entries:
        raise MismatchedChain("inner ambient matrix differs from the outer induced matrix")
    return Embedding(outer.ambient, tuple(outer.to_ambient(r) for r in inner.sub_roots))


def transport(outer: Embedding, v):
    """Image in the outer ambient system of a vector given in the outer subsystem's basis."""
    return outer.to_ambient(v)


def vertex_stabilizer_property(e: Embedding) -> bool:
    """All but at most one subsystem simple root are ambient simple roots."""
    n = e.ambient.n_plus_1
    units = {simple_root(n, i) for i in range(n)}
    return sum(1 for r in e.sub_roots if r in units) >= e.rank - 1


def dual_embedding(e: Embedding) -> Embedding:
    """The same chamber decomposition read in the dual root system (transposed matrix)."""
    A = e.ambient
    n = A.n_plus_1
    simple_norms = [pairing_int(A, simple_root(n, i), simple_root(n, i)) for i in range(n)]
    roots = []
    for b in e.sub_roots:
        nb = pairing_int(A, b, b)
        coords = []
        for i in range(n):
            num = b[i] * simple_norms[i]
            if num % nb:
                raise NotCrystallographic("coroot is not integral")
            coords.append(num // nb)
        roots.append(tuple(coords))
    return Embedding(A.transpose(), tuple(roots))
