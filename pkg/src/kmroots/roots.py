"""Roots of a symmetrizable Cartan matrix.

Root vectors are integer tuples in the simple-root basis.  Real roots are
found and recognised by height descent under simple reflections;
imaginary roots by norm and sign coherence (which for hyperbolic matrices
is the whole story).
"""

from __future__ import annotations

from fractions import Fraction

from .diagrams import GeneralizedCartanMatrix
from .errors import NonIntegralReflection, NotRealRoot

RootVector = tuple[int, ...]


def height(v) -> int:
    return sum(v)


def simple_root(n: int, i: int) -> RootVector:
    return tuple(int(k == i) for k in range(n))


def pairing_int(A: GeneralizedCartanMatrix, v, w) -> int:
    """``(v|w)`` scaled by the integral form of ``A``."""
    B = A.int_form
    n = len(v)
    return sum(v[i] * B[i][j] * w[j] for i in range(n) if v[i] for j in range(n) if w[j])


def inner(A: GeneralizedCartanMatrix, v, w) -> Fraction:
    B = A.sym_matrix
    n = len(v)
    return sum((v[i] * B[i][j] * w[j] for i in range(n) if v[i] for j in range(n) if w[j]), Fraction(0))


def norm(A: GeneralizedCartanMatrix, v) -> Fraction:
    return inner(A, v, v)


def is_sign_coherent(v) -> bool:
    return all(x >= 0 for x in v) or all(x <= 0 for x in v)


def simple_reflect(A: GeneralizedCartanMatrix, i: int, v) -> RootVector:
    c = sum(a * x for a, x in zip(A.entries[i], v))
    if c == 0:
        return tuple(v)
    out = list(v)
    out[i] -= c
    return tuple(out)


def apply_word(A: GeneralizedCartanMatrix, word, v) -> RootVector:
    """``s_{w[0]} s_{w[1]} ... s_{w[-1]} (v)``: the last letter acts first."""
    for i in reversed(word):
        v = simple_reflect(A, i, v)
    return tuple(v)


def reflect(v, beta, A: GeneralizedCartanMatrix) -> RootVector:
    """``r_beta(v) = v - 2(v|beta)/(beta|beta) beta``."""
    bb = pairing_int(A, beta, beta)
    if bb <= 0:
        raise ValueError("reflection needs a vector of positive norm")
    num = 2 * pairing_int(A, v, beta)
    if num % bb:
        raise NonIntegralReflection(f"2(v|beta)/(beta|beta) = {Fraction(num, bb)} is not an integer")
    c = num // bb
    return tuple(x - c * b for x, b in zip(v, beta))


def real_roots_up_to_height(A: GeneralizedCartanMatrix, H: int) -> frozenset:
    """Positive real roots of height at most ``H``.

    Breadth-first from the simple roots, keeping only reflections that raise
    the height.  Every positive real root has a height-decreasing descent to
    a simple root, so the ascending closure below ``H`` is complete.
    """
    n = A.n_plus_1
    start = [simple_root(n, i) for i in range(n)]
    seen = set(start)
    frontier = start
    rows = A.entries
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                c = sum(a * x for a, x in zip(rows[i], v))
                if c >= 0:
                    continue
                if sum(v) - c > H:
                    continue
                w = list(v)
                w[i] -= c
                w = tuple(w)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def sorted_roots(roots) -> list[RootVector]:
    """Canonical order: by height, then lexicographically."""
    return sorted(roots, key=lambda v: (sum(v), v))


def descend(A: GeneralizedCartanMatrix, v):
    """Descent of a positive vector to a simple root.

    Returns ``(word, i)`` with ``v = s_{word[0]} ... s_{word[-1]} (alpha_i)``,
    or ``None`` when the descent gets stuck or leaves the positive cone.
    """
    v = list(v)
    n = len(v)
    rows = A.entries
    word = []
    while True:
        if any(x < 0 for x in v) or not any(v):
            return None
        nz = [k for k in range(n) if v[k]]
        if len(nz) == 1 and v[nz[0]] == 1:
            return word, nz[0]
        step = None
        for i in range(n):
            c = sum(a * x for a, x in zip(rows[i], v))
            if c > 0:
                step = (i, c)
                break
        if step is None:
            return None
        i, c = step
        v[i] -= c
        word.append(i)


def real_root_witness(A: GeneralizedCartanMatrix, v):
    """``(word, i)`` with ``w(alpha_i) = v``, or ``None`` if ``v`` is not a real root."""
    v = tuple(v)
    if not any(v) or not is_sign_coherent(v):
        return None
    if all(x <= 0 for x in v):
        found = descend(A, tuple(-x for x in v))
        if found is None:
            return None
        word, i = found
        return word + [i], i
    return descend(A, v)


def is_real_root(A: GeneralizedCartanMatrix, v) -> bool:
    return real_root_witness(A, v) is not None


def is_imaginary_root(A: GeneralizedCartanMatrix, v) -> bool:
    """Nonzero, sign coherent, and of non-positive norm.

    Complete for hyperbolic matrices, where every such lattice vector is a root.
    """
    v = tuple(v)
    if not any(v) or not is_sign_coherent(v):
        return False
    return pairing_int(A, v, v) <= 0


def is_root(A: GeneralizedCartanMatrix, v) -> bool:
    return is_real_root(A, v) or is_imaginary_root(A, v)


def express_as_w_alpha(A: GeneralizedCartanMatrix, v):
    """Word ``[k1, ..., km]`` and index ``i`` with ``s_k1 ... s_km (alpha_i) = v``."""
    found = real_root_witness(A, v)
    if found is None:
        raise NotRealRoot(f"{tuple(v)} is not a real root")
    return found
