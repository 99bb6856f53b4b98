import dataclasses
from itertools import combinations, permutations

import pytest

from kmroots.classify import (
    FAILS,
    HOLDS,
    HOLDS_VIA_NONMINIMAL,
    HasseEdge,
    ambient_automorphisms,
    build_hasse,
    embedding_key,
    find_subsystems,
    lookup_class,
    minimal_subsystems,
    normalize,
    properness_witness,
    root_systems,
    system_by_id,
    system_id,
    verify_catalog,
)
from kmroots.diagrams import enumerate_hyperbolic_simplex_diagrams, is_hyperbolic
from kmroots.dynkin import enumerate_dynkin
from kmroots.errors import KmRootsError, UnverifiedRecord
from kmroots.roots import is_real_root, pairing_int, real_roots_up_to_height
from kmroots.subsystem import Embedding, is_minimal, tile, vertex_stabilizer_property


def brute_force_classes(rank):
    """Cartan matrices of the rank up to simultaneous row/column permutation."""
    out = set()
    for D in enumerate_hyperbolic_simplex_diagrams(rank):
        for A in enumerate_dynkin(D):
            rows = A.entries
            out.add(min(tuple(tuple(rows[p[i]][p[j]] for j in range(rank)) for i in range(rank)) for p in permutations(range(rank))))
    return out


@pytest.mark.parametrize("rank", [3, 4])
def test_root_systems_are_permutation_classes(rank):
    systems = root_systems(rank)
    assert len(systems) == len(brute_force_classes(rank))
    assert all(is_hyperbolic(A) for A in systems)


def test_system_ids_round_trip():
    for rank in range(3, 11):
        for k, A in enumerate(root_systems(rank)):
            ident = f"H{rank}-{k + 1}"
            assert system_id(A) == ident
            assert system_by_id(ident) == A
            perm = tuple(reversed(range(rank)))
            assert system_id(A.permuted(perm)) == ident
    with pytest.raises(KeyError):
        system_by_id("H11-1")


def test_normalize_is_a_class_invariant(catalog):
    for rec in catalog[::4]:
        e = rec.embedding()
        n = normalize(e)
        assert normalize(n).sub_roots == n.sub_roots
        assert n.induced == n.induced.canonical_form()
        for frame in tile(e).frames[:5]:
            assert normalize(Embedding(e.ambient, tuple(frame))).sub_roots == n.sub_roots
        for p in ambient_automorphisms(e.ambient):
            moved = Embedding(e.ambient, tuple(tuple(r[q] for q in p) for r in e.sub_roots))
            assert normalize(moved).sub_roots == n.sub_roots


def test_find_subsystems_sound():
    for A in root_systems(3)[:6] + root_systems(5)[:2]:
        for e in find_subsystems(A, 12):
            assert e.ambient == A
            assert all(is_real_root(A, r) for r in e.sub_roots)
            assert is_hyperbolic(e.induced)
            assert all(pairing_int(A, a, b) <= 0 for a, b in combinations(e.sub_roots, 2))


def brute_force_subsystems(A, H):
    roots = sorted(real_roots_up_to_height(A, H))
    out = set()
    n = A.n_plus_1
    for combo in combinations(roots, n):
        if any(pairing_int(A, a, b) > 0 for a, b in combinations(combo, 2)):
            continue
        try:
            e = Embedding(A, combo)
        except KmRootsError:
            continue
        if is_hyperbolic(e.induced) and combo != tuple(sorted(tuple(int(i == j) for j in range(n)) for i in range(n))):
            out.add(embedding_key(e))
    return out


@pytest.mark.parametrize("k", [0, 5, 17, 30, 43])
def test_find_subsystems_complete_rank3(k):
    A = root_systems(3)[k]
    found = {embedding_key(e) for e in find_subsystems(A, 20)}
    assert brute_force_subsystems(A, 6) <= found


def test_minimal_subsystems_are_vertex_stabilizers():
    for A in root_systems(4)[:8]:
        for e in minimal_subsystems(A):
            assert vertex_stabilizer_property(e)
            assert is_minimal(e)


def test_catalog_records_verify(catalog):
    for rec in catalog[::9]:
        rep = verify_catalog(rec)
        assert rep.ok, rep.lines()
        assert "group_index" in rep.checks and "star_bounded" in rep.checks


def test_verify_reports_mismatch(catalog):
    rec = dataclasses.replace(catalog[0], expected_group_index=catalog[0].expected_group_index + 1)
    rep = verify_catalog(rec)
    assert not rep.ok
    assert set(rep.mismatches()) == {"group_index"}
    assert any("MISMATCH" in line for line in rep.lines())


def test_verify_reports_invalid_roots(catalog):
    rec = dataclasses.replace(catalog[0], sub_roots=((1,) + (0,) * (catalog[0].ambient.n_plus_1 - 1),) * catalog[0].ambient.n_plus_1)
    rep = verify_catalog(rec)
    assert not rep.ok and rep.error


def test_build_hasse_rejects_unverified(catalog):
    bad = dataclasses.replace(catalog[0], star=FAILS if catalog[0].star != FAILS else HOLDS)
    with pytest.raises(UnverifiedRecord):
        build_hasse([bad])


def test_hasse_styles_follow_records(catalog):
    g = build_hasse(catalog, verified=set(range(len(catalog))))
    assert len(g.edges) == len(catalog)
    style_of = {HOLDS: "solid", FAILS: "dashed", HOLDS_VIA_NONMINIMAL: "dotted"}
    by_roots = {(rec.ambient_id, rec.embedding().sub_roots): rec for rec in catalog}
    for e in g.edges:
        rec = by_roots[(e.upper, e.sub_roots)]
        assert e.style == style_of[rec.star]
        assert e.minimal == rec.minimal


def test_edge_labels():
    e = HasseEdge("H4-1", "H4-2", 12, 3, "solid", True, ())
    assert e.label == "12 (3)"
    assert dataclasses.replace(e, lattice_index=2).label == "12"
    assert dataclasses.replace(e, style="dashed").label == "12"
    assert dataclasses.replace(e, minimal=False, style="dotted").label == ""


def test_lookup_class_finds_catalog_records(catalog):
    for rec in catalog[::6]:
        f = lookup_class(rec.embedding())
        assert f is not None
        assert f.minimal == rec.minimal
        assert f.index == rec.expected_group_index


def test_properness_witness(catalog):
    for rec in catalog:
        if rec.minimal:
            which, idx = properness_witness(rec.embedding())
            assert idx >= 2
            if rec.expected_lattice_index >= 2:
                assert which == "L" and idx == rec.expected_lattice_index


@pytest.mark.slow
def test_find_subsystems_recovers_catalog(catalog):
    found = {}
    for rec in catalog:
        A = rec.ambient
        if A.entries not in found:
            found[A.entries] = {embedding_key(e) for e in find_subsystems(A, 20)}
        assert embedding_key(rec.embedding()) in found[A.entries], rec.provenance
