from hypothesis import given, settings, strategies as st

import pytest

from kmroots.classify import root_systems
from kmroots.diagrams import GeneralizedCartanMatrix
from kmroots.errors import NonIntegralReflection, NotRealRoot
from kmroots.roots import (
    apply_word,
    express_as_w_alpha,
    height,
    is_imaginary_root,
    is_real_root,
    is_sign_coherent,
    norm,
    real_roots_up_to_height,
    reflect,
    simple_root,
)

G = GeneralizedCartanMatrix.of
A2 = G([[2, -1], [-1, 2]])
AFF = G([[2, -2], [-2, 2]])
HYP = G([[2, -3], [-3, 2]])


def word_orbit_oracle(rows, H, length=8):
    """Positive real roots of height <= H from all words of length <= ``length``."""
    n = len(rows)

    def s(i, v):
        c = sum(rows[i][j] * v[j] for j in range(n))
        return tuple(v[k] - c * (k == i) for k in range(n))

    level = {tuple(int(k == i) for k in range(n)) for i in range(n)}
    seen = set(level)
    for _ in range(length):
        level = {s(i, v) for v in level for i in range(n)} - seen
        seen |= level
    return {v for v in seen if all(x >= 0 for x in v) and 0 < sum(v) <= H}


def rank_le_3_systems():
    small = [A2, AFF, HYP, G([[2, -1], [-4, 2]]), G([[2, -2], [-1, 2]]), G([[2, -3], [-1, 2]]), G([[2, -5], [-1, 2]])]
    return small + list(root_systems(3))


def test_reflect_examples():
    assert reflect((1, 0), (1, 0), A2) == (-1, 0)
    assert reflect((1, 0), (0, 1), A2) == (1, 1)
    with pytest.raises(NonIntegralReflection):
        reflect((1, 0), (3, 1), A2)


def test_real_roots_examples():
    assert real_roots_up_to_height(A2, 2) == {(1, 0), (0, 1), (1, 1)}
    assert real_roots_up_to_height(AFF, 5) == {(1, 0), (0, 1), (2, 1), (1, 2), (3, 2), (2, 3)}
    assert real_roots_up_to_height(HYP, 4) == word_orbit_oracle(HYP.to_list(), 4)


def test_bfs_matches_word_enumeration_rank_le_3():
    for A in rank_le_3_systems():
        rows = A.to_list()
        for H in (1, 3, 6):
            assert real_roots_up_to_height(A, H) == word_orbit_oracle(rows, H), (A, H)


def test_generated_roots_are_sign_coherent_real():
    for A in list(root_systems(3))[:10] + list(root_systems(4))[:10]:
        for v in real_roots_up_to_height(A, 8):
            assert is_sign_coherent(v)
            assert norm(A, v) > 0
            assert is_real_root(A, v)
            assert is_real_root(A, tuple(-x for x in v))


def test_is_real_root_examples():
    for i in range(2):
        assert is_real_root(A2, simple_root(2, i))
    assert not is_real_root(AFF, (1, 1))
    assert not is_real_root(A2, (2, 1))


def test_is_imaginary_root_examples():
    assert not is_imaginary_root(A2, (0, 0))
    assert is_imaginary_root(AFF, (1, 1))
    assert not is_imaginary_root(A2, (1, 1))
    assert is_imaginary_root(HYP, (1, 1))


def test_express_as_w_alpha_examples():
    assert express_as_w_alpha(A2, (0, 1)) == ([], 1)
    # s_1(alpha_2) = alpha_1 + alpha_2 (0-based generator indices)
    assert express_as_w_alpha(A2, (1, 1)) == ([0], 1)
    with pytest.raises(NotRealRoot):
        express_as_w_alpha(AFF, (1, 1))


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 43), st.integers(1, 10))
def test_express_round_trips(k, H):
    A = root_systems(3)[k]
    for v in real_roots_up_to_height(A, H):
        word, i = express_as_w_alpha(A, v)
        assert apply_word(A, word, simple_root(A.n_plus_1, i)) == v
        assert len(word) < height(v)


@settings(deadline=None)
@given(st.integers(0, 43), st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_reflection_is_isometric_involution(k, v):
    A = root_systems(3)[k]
    for beta in sorted(real_roots_up_to_height(A, 4)):
        w = reflect(tuple(v), beta, A)
        assert norm(A, w) == norm(A, tuple(v))
        assert reflect(w, beta, A) == tuple(v)
