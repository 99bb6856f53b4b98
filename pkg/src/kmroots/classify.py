"""Classification of maximal rank hyperbolic root subsystems.

Search
    Every minimal decomposition of a hyperbolic Coxeter simplex has a vertex
    whose stabilizer is the same in both groups, so its subsystem keeps all
    but one ambient simple root.  :func:`one_facet_candidates` tries every
    positive real root (up to a height bound) as the replacement for each
    facet.  Non-minimal subsystems come from composing minimal ones along
    chains of simplex subsystems.

Normal forms
    Root systems are identified by the canonical relabelling of their
    Cartan matrices; an embedding is identified by the Weyl translate of
    its chamber chosen by :func:`kmroots.subsystem.canonical_embedding`,
    minimised further over the ambient diagram automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .canon import automorphisms
from .coset import DEFAULT_MAX_COSETS, coxeter_presentation, reflection_word, todd_coxeter
from .diagrams import GeneralizedCartanMatrix, enumerate_hyperbolic_simplex_diagrams, is_hyperbolic
from .dynkin import enumerate_dynkin
from .errors import KmRootsError, UnverifiedRecord
from .lattice import Lattice, lattice_index
from .roots import pairing_int, real_roots_up_to_height, simple_root, sorted_roots
from .subsystem import (
    Embedding,
    canonical_frame_key,
    chain_compose,
    check_star_bounded,
    decomposed_angles,
    dual_embedding,
    is_minimal,
    star_exact,
    tile,
    vertex_stabilizer_property,
)

HOLDS = "holds"
FAILS = "fails"
HOLDS_VIA_NONMINIMAL = "holds_via_nonminimal"
STAR_VALUES = (HOLDS, FAILS, HOLDS_VIA_NONMINIMAL)

DEFAULT_HEIGHT = 20
SEARCH_RANKS = range(3, 11)


# ------------------------------------------------------------------ root systems


def canonical_gcm(A: GeneralizedCartanMatrix) -> GeneralizedCartanMatrix:
    return A.canonical_form()


@lru_cache(maxsize=None)
def root_systems(rank: int) -> tuple[GeneralizedCartanMatrix, ...]:
    """All hyperbolic root systems of the given rank, canonically labelled and sorted."""
    found = {}
    for D in enumerate_hyperbolic_simplex_diagrams(rank):
        for A in enumerate_dynkin(D):
            C = canonical_gcm(A)
            found[C.entries] = C
    return tuple(found[k] for k in sorted(found))


def system_id(A: GeneralizedCartanMatrix) -> str:
    """Stable name ``H<rank>-<k>`` of a hyperbolic root system (any labelling)."""
    C = canonical_gcm(A)
    systems = root_systems(C.n_plus_1)
    for k, S in enumerate(systems):
        if S.entries == C.entries:
            return f"H{C.n_plus_1}-{k + 1}"
    raise KeyError("not a hyperbolic root system")


def system_by_id(ident: str) -> GeneralizedCartanMatrix:
    try:
        r, k = ident[1:].split("-")
        return root_systems(int(r))[int(k) - 1]
    except (ValueError, IndexError) as exc:
        raise KeyError(ident) from exc


def ambient_automorphisms(A: GeneralizedCartanMatrix) -> list[tuple[int, ...]]:
    return automorphisms([list(r) for r in A.entries])


# ------------------------------------------------------------------ normal forms


def normalize(e: Embedding) -> Embedding:
    """W-canonical placement, minimised over ambient automorphisms, roots ordered by the induced canonical labelling.

    The ambient matrix is kept as given; the result is a function of the
    orbit of ``e`` under the Weyl group and the diagram automorphisms.
    """
    A = e.ambient
    best = None
    for p in ambient_automorphisms(A):
        # p maps node p[k] to node k and fixes A
        moved = Embedding(A, tuple(tuple(r[q] for q in p) for r in e.sub_roots))
        t = tile(moved)
        frame = min(t.frames, key=canonical_frame_key)
        key = canonical_frame_key(frame)
        if best is None or key < best:
            best = key
    roots = best[-1]
    plain = Embedding(A, tuple(roots))
    perm = plain.induced.canonical[1]
    return plain.reordered(perm)


def embedding_key(e: Embedding) -> tuple:
    return (e.ambient.entries, normalize(e).sub_roots)


# ------------------------------------------------------------------ search


def one_facet_candidates(A: GeneralizedCartanMatrix, H: int) -> list[Embedding]:
    """Subsystems keeping all but one simple root, the last one of height <= H."""
    n = A.n_plus_1
    roots = sorted_roots(real_roots_up_to_height(A, H))
    out = []
    for k in range(n):
        others = [simple_root(n, j) for j in range(n) if j != k]
        for g in roots:
            if g[k] == 0 or sum(g) == 1:
                continue
            if any(pairing_int(A, g, o) > 0 for o in others):
                continue
            try:
                e = Embedding(A, tuple(others[:k]) + (g,) + tuple(others[k:]))
            except KmRootsError:
                continue
            if is_hyperbolic(e.induced):
                out.append(e)
    return out


@dataclass
class Found:
    """A subsystem class together with what is known about the chains producing it."""

    embedding: Embedding
    minimal: bool
    index: int
    star: bool
    holding_chain: bool = False  # some chain of simplex subsystems with all links satisfying (*)
    chains: list = field(default_factory=list)  # lists of (ambient id, sub id) per link


@lru_cache(maxsize=None)
def _minimal_of(entries, H: int) -> tuple:
    A = GeneralizedCartanMatrix(entries)
    out = {}
    for e in one_facet_candidates(A, H):
        t = tile(e)
        if not is_minimal(e, t):
            continue
        n = normalize(e)
        if n.sub_roots not in out:
            out[n.sub_roots] = n
    return tuple(out[k] for k in sorted(out, key=lambda r: (max(map(sum, r)), r)))


def minimal_subsystems(A: GeneralizedCartanMatrix, H: int = DEFAULT_HEIGHT) -> list[Embedding]:
    """Minimal subsystems of ``A`` (normalised, distinct up to W and diagram automorphisms)."""
    return list(_minimal_of(A.entries, H))


@lru_cache(maxsize=None)
def _closure(entries, H: int) -> dict:
    A = GeneralizedCartanMatrix(entries)
    found: dict[tuple, Found] = {}
    my_id = system_id(A)
    for m in minimal_subsystems(A, H):
        hold_m = star_exact(m)[0]
        sub = canonical_gcm(m.induced)
        sub_id = system_id(sub)
        key = m.sub_roots
        f = found.get(key)
        if f is None:
            f = found[key] = Found(m, True, tile(m).index, hold_m)
        f.holding_chain = f.holding_chain or hold_m
        f.chains.append([(my_id, sub_id)])
        # m.induced equals the canonical matrix of the subsystem by construction
        assert m.induced.entries == sub.entries
        # inner classes are taken up to automorphisms of the subsystem diagram,
        # which need not extend to the ambient one: compose every relabelling
        sub_auts = ambient_automorphisms(sub)
        for g in _closure(sub.entries, H).values():
            composites = {}
            for p in sub_auts:
                comp = normalize(chain_compose(g.embedding.permuted(p), m))
                composites[comp.sub_roots] = comp
            for ck, comp in composites.items():
                h = found.get(ck)
                if h is None:
                    t = tile(comp)
                    h = found[ck] = Found(comp, False, t.index, star_exact(comp, t)[0])
                h.holding_chain = h.holding_chain or (hold_m and g.holding_chain)
                for ch in g.chains:
                    h.chains.append([(my_id, sub_id)] + ch)
    return found


def subsystem_classes(A: GeneralizedCartanMatrix, H: int = DEFAULT_HEIGHT) -> list[Found]:
    """Minimal subsystems and their compositions for a canonically labelled ``A``."""
    C = canonical_gcm(A)
    if C.entries != A.entries:
        raise ValueError("expected a canonically labelled matrix")
    found = _closure(A.entries, H)
    return [found[k] for k in sorted(found, key=lambda r: (max(map(sum, r)), r))]


def find_subsystems(A: GeneralizedCartanMatrix, H: int = DEFAULT_HEIGHT) -> list[Embedding]:
    """Maximal rank hyperbolic subsystems of ``A`` found up to height ``H``.

    One-facet replacements of height <= H together with all their chain
    compositions, one representative per class under the Weyl group and
    the diagram automorphisms, in canonical order.  Completeness is
    relative to ``H`` and to chains through simplex subsystems.
    """
    if not is_hyperbolic(A):
        raise ValueError("ambient matrix must be hyperbolic")
    perm = A.canonical[1]
    C = A.permuted(perm)
    out = {}
    for e in one_facet_candidates(C, H):
        n = normalize(e)
        out[n.sub_roots] = n
    for f in subsystem_classes(C, H):
        out[f.embedding.sub_roots] = f.embedding
    inv = [0] * len(perm)
    for k, p in enumerate(perm):
        inv[p] = k
    return [out[key].permuted(inv) for key in sorted(out, key=lambda r: (max(map(sum, r)), r))]


def lookup_class(e: Embedding, H: int = DEFAULT_HEIGHT) -> Found | None:
    """The searched class of ``e`` (any ambient labelling), or ``None`` if the search did not reach it."""
    c = e.permuted(e.ambient.canonical[1])
    return _closure(c.ambient.entries, H).get(normalize(c).sub_roots)


# ------------------------------------------------------------------ records


@dataclass(frozen=True)
class DecompositionRecord:
    """One edge of the classification: an ambient system and the simple roots of a subsystem.

    ``sub_roots`` are coordinates in the simple roots of ``ambient`` in the
    labelling of ``ambient`` as stored.
    """

    ambient: GeneralizedCartanMatrix
    sub_roots: tuple[tuple[int, ...], ...]
    expected_group_index: int
    expected_lattice_index: int
    star: str
    minimal: bool
    provenance: str

    def __post_init__(self):
        object.__setattr__(self, "sub_roots", tuple(tuple(int(x) for x in r) for r in self.sub_roots))
        if self.star not in STAR_VALUES:
            raise ValueError(f"star must be one of {STAR_VALUES}")

    @property
    def ambient_id(self) -> str:
        return system_id(self.ambient)

    @property
    def sub_id(self) -> str:
        return system_id(self.embedding().induced)

    def embedding(self) -> Embedding:
        return Embedding(self.ambient, self.sub_roots)

    @property
    def height(self) -> int:
        return max(sum(r) for r in self.sub_roots)


def root_length_count(A: GeneralizedCartanMatrix) -> int:
    return len(set(A.symmetrizer))


def _components_of_minimal_graph(ranks) -> dict:
    """Connected components (by minimal subsystem edges) of the hyperbolic root systems."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    for r in ranks:
        for A in root_systems(r):
            parent.setdefault(system_id(A), system_id(A))
            for m in minimal_subsystems(A):
                edges.append((system_id(A), system_id(m.induced)))
    for a, b in edges:
        parent.setdefault(b, b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return {x: find(x) for x in parent}


def provenance_tag(A: GeneralizedCartanMatrix, component: str, undecomposed: bool = False) -> str:
    """Descriptive origin of a record: dimension, connected class of the minimal graph, root lengths."""
    tag = f"dim {A.n_plus_1 - 1}, class {component}, {root_length_count(A)} root lengths"
    if undecomposed:
        tag += UNDECOMPOSED_SUFFIX
    return tag


UNDECOMPOSED_SUFFIX = "; no decomposed angle"


def has_no_decomposed_angle(e: Embedding, t=None) -> bool:
    """Minimal decomposition in which no dihedral angle of the big simplex is decomposed."""
    t = t or tile(e)
    return is_minimal(e, t) and not decomposed_angles(e, t)


def build_records(ranks=SEARCH_RANKS, H: int = DEFAULT_HEIGHT) -> list[DecompositionRecord]:
    """Catalog records: every minimal pair, and every non-minimal pair drawn as a dotted edge.

    Non-minimal pairs reachable by a chain of minimal links that all
    satisfy (*) are left out, as are non-minimal pairs for which (*) fails.
    """
    comps = _components_of_minimal_graph(ranks)
    records = []
    for r in ranks:
        for A in root_systems(r):
            aid = system_id(A)
            for f in subsystem_classes(A, H):
                e = f.embedding
                if not f.minimal and (not f.star or f.holding_chain):
                    continue
                t = tile(e)
                undecomposed = f.minimal and has_no_decomposed_angle(e, t)
                if f.minimal:
                    star = HOLDS if f.star else FAILS
                else:
                    star = HOLDS_VIA_NONMINIMAL
                records.append(
                    DecompositionRecord(
                        ambient=A,
                        sub_roots=e.sub_roots,
                        expected_group_index=t.index,
                        expected_lattice_index=e.lattice_index,
                        star=star,
                        minimal=f.minimal,
                        provenance=provenance_tag(A, comps[aid], undecomposed),
                    )
                )
    return records


def star_holds(record: DecompositionRecord) -> bool:
    return record.star != FAILS


def exceptional_decompositions(ranks=SEARCH_RANKS, H: int = DEFAULT_HEIGHT) -> list[tuple]:
    """Non-minimal decompositions with no root-length choice admitting a chain of minimal links satisfying (*).

    A decomposition is identified by the Coxeter diagrams of both simplices
    and the subgroup index.  Returns ``(dim, index, upper diagram, lower
    diagram, pairs)`` sorted by dimension and index, where ``pairs`` lists
    ``(ambient id, sub id, star holds, holding chain exists)`` over the
    root-length choices.
    """
    groups: dict = {}
    for r in ranks:
        for A in root_systems(r):
            for f in subsystem_classes(A, H):
                if f.minimal:
                    continue
                e = f.embedding
                key = (A.coxeter_diagram().canonical_form(), e.induced.coxeter_diagram().canonical_form(), f.index)
                groups.setdefault(key, []).append((system_id(A), system_id(e.induced), f.star, f.holding_chain))
    out = []
    for (up, low, idx), pairs in groups.items():
        if not any(h for *_, h in pairs):
            out.append((up.nodes - 1, idx, up, low, tuple(pairs)))
    out.sort(key=lambda x: (x[0], x[1], str(x[2]), str(x[3])))
    return out


# ------------------------------------------------------------------ verification


@dataclass
class VerificationReport:
    record: DecompositionRecord
    checks: dict = field(default_factory=dict)  # field -> (expected, computed)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(a == b for a, b in self.checks.values())

    def mismatches(self) -> dict:
        return {k: v for k, v in self.checks.items() if v[0] != v[1]}

    def lines(self) -> list[str]:
        if self.error:
            return [f"error: {self.error}"]
        return [
            f"{k}: expected {a}, computed {b} {'ok' if a == b else 'MISMATCH'}" for k, (a, b) in self.checks.items()
        ]


def verify_catalog(
    record: DecompositionRecord, H: int = DEFAULT_HEIGHT, max_cosets: int = DEFAULT_MAX_COSETS
) -> VerificationReport:
    """Recompute everything a record claims; mismatches go into the report, not exceptions."""
    rep = VerificationReport(record)
    try:
        A = record.ambient
        e = Embedding(A, record.sub_roots)
        if not is_hyperbolic(A):
            raise ValueError("ambient matrix is not hyperbolic")
    except (KmRootsError, KeyError, ValueError) as exc:
        rep.error = f"{type(exc).__name__}: {exc}"
        return rep
    if not is_hyperbolic(e.induced):
        rep.error = f"induced matrix {e.induced} is not hyperbolic"
        return rep
    words = [reflection_word(A, b) for b in e.sub_roots]
    idx = todd_coxeter(coxeter_presentation(A), words, max_cosets)
    rep.checks["group_index"] = (record.expected_group_index, idx)
    rep.checks["lattice_index"] = (record.expected_lattice_index, lattice_index(e.sub_lattice, Lattice.standard(A.n_plus_1)))
    t = tile(e)
    rep.checks["minimal"] = (record.minimal, is_minimal(e, t))
    holds = star_exact(e, t)[0]
    bounded = check_star_bounded(e, max(H, e.max_height())).holds
    rep.checks["star"] = (record.star != FAILS, holds)
    rep.checks["star_bounded"] = (record.star != FAILS, bounded)
    if record.minimal:
        rep.checks["vertex_stabilizer"] = (True, vertex_stabilizer_property(e))
    return rep


# ------------------------------------------------------------------ Hasse graph


@dataclass(frozen=True)
class HasseEdge:
    upper: str
    lower: str
    group_index: int
    lattice_index: int
    style: str  # solid, dashed, dotted
    minimal: bool
    sub_roots: tuple

    @property
    def label(self) -> str:
        if not self.minimal:
            return ""
        text = str(self.group_index)
        if self.style == "solid" and self.lattice_index != 2:
            text += f" ({self.lattice_index})"
        return text


@dataclass(frozen=True)
class HasseGraph:
    nodes: tuple[str, ...]  # system ids, see :func:`system_id`
    edges: tuple[HasseEdge, ...]

    def node_matrix(self, ident: str) -> GeneralizedCartanMatrix:
        return system_by_id(ident)


def build_hasse(records, verified: set | None = None) -> HasseGraph:
    """Hasse graph of verified records with recomputed annotations.

    ``verified`` holds the positions of records already checked by the
    caller; any other record is verified here and must pass.
    """
    records = list(records)
    nodes = set()
    edges = []
    for k, rec in enumerate(records):
        if verified is None or k not in verified:
            rep = verify_catalog(rec)
            if not rep.ok:
                raise UnverifiedRecord(f"record {k} ({rec.provenance}) failed verification: {rep.mismatches() or rep.error}")
        e = rec.embedding()
        t = tile(e)
        minimal = is_minimal(e, t)
        holds = star_exact(e, t)[0]
        if minimal:
            style = "solid" if holds else "dashed"
        elif not holds:
            continue  # (*) fails: not drawn
        else:
            found = lookup_class(e)
            tower = found.holding_chain if found is not None else rec.star == HOLDS
            if tower:
                continue  # a chain of minimal links satisfying (*) explains it: not drawn
            style = "dotted"
        lower = system_id(e.induced)
        nodes.update((rec.ambient_id, lower))
        edges.append(HasseEdge(rec.ambient_id, lower, t.index, e.lattice_index, style, minimal, e.sub_roots))
    edges.sort(key=lambda x: (_id_key(x.upper), _id_key(x.lower), x.sub_roots))
    return HasseGraph(tuple(sorted(nodes, key=_id_key)), tuple(edges))


def _id_key(ident: str):
    r, k = ident[1:].split("-")
    return int(r), int(k)


def properness_witness(e: Embedding) -> tuple[str, int]:
    """Which lattice (root or coroot) the subsystem spans properly, with the index."""
    li = e.lattice_index
    if li >= 2:
        return "L", li
    d = dual_embedding(e)
    return "L_dual", d.lattice_index
