from fractions import Fraction
from itertools import permutations

from hypothesis import given, settings, strategies as st

from kmroots.linalg import determinant, inverse, mat_mul, rank, signature


def naive_det(m):
    n = len(m)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])
        term = (-1) ** inv
        for i in range(n):
            term *= m[i][p[i]]
        total += term
    return total


def signature_by_minors_oracle(m):
    """Inertia via characteristic polynomial sign changes (Descartes, exact for symmetric matrices)."""
    n = len(m)
    # characteristic polynomial coefficients by Faddeev-LeVerrier
    coeffs = [Fraction(1)]
    M = [[Fraction(0)] * n for _ in range(n)]
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        AM = mat_mul(m, M)
        M = [[AM[i][j] + coeffs[-1] * ident[i][j] for j in range(n)] for i in range(n)]
        AM = mat_mul(m, M)
        c = -sum(AM[i][i] for i in range(n)) / k
        coeffs.append(c)
    # p(x) = sum coeffs[k] x^(n-k)
    zero = 0
    while zero < n and coeffs[n - zero] == 0:
        zero += 1
    poly = coeffs[: n + 1 - zero]

    def changes(seq):
        s = [x for x in seq if x != 0]
        return sum(1 for a, b in zip(s, s[1:]) if (a > 0) != (b > 0))

    pos = changes(poly)
    neg_poly = [c * (-1) ** (len(poly) - 1 - i) for i, c in enumerate(poly)]
    neg = changes(neg_poly)
    return pos, neg, zero


sym = st.integers(2, 5).flatmap(
    lambda n: st.lists(st.integers(-3, 3), min_size=n * n, max_size=n * n).map(
        lambda xs: [[xs[min(i, j) * n + max(i, j)] for j in range(n)] for i in range(n)]
    )
)


def test_signature_examples():
    assert signature([[2, -1], [-1, 2]]) == (2, 0, 0)
    assert signature([[2, -2], [-2, 2]]) == (1, 0, 1)
    assert signature([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]) == (3, 0, 0)


@settings(max_examples=200)
@given(sym)
def test_signature_matches_charpoly_oracle(m):
    assert signature(m) == signature_by_minors_oracle(m)


@given(sym)
def test_determinant_matches_leibniz(m):
    assert determinant(m) == naive_det(m)


@given(sym)
def test_inverse_and_rank(m):
    n = len(m)
    if naive_det(m) != 0:
        assert rank(m) == n
        inv = inverse(m)
        prod = mat_mul(m, inv)
        assert all(prod[i][j] == int(i == j) for i in range(n) for j in range(n))
    else:
        assert rank(m) < n
