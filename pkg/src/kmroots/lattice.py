"""Integer lattices given by generator rows: Hermite normal form, index, membership."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import NotSublattice, RankDeficient
from .linalg import determinant


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a x + b y = g``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf_with_pivots(M) -> tuple[list[list[int]], list[int]]:
    rows = [[int(x) for x in r] for r in M]
    m = len(rows)
    if m == 0:
        return [], []
    n = len(rows[0])
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        for k in range(r + 1, m):
            if rows[k][c] == 0:
                continue
            a, b = rows[r][c], rows[k][c]
            g, x, y = _xgcd(a, b)
            ra, rb = rows[r], rows[k]
            # unimodular 2x2 step: [x y; -b/g a/g]
            new_r = [x * p + y * q for p, q in zip(ra, rb)]
            new_k = [(-b // g) * p + (a // g) * q for p, q in zip(ra, rb)]
            rows[r], rows[k] = new_r, new_k
        if rows[r][c] == 0:
            continue
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
        piv = rows[r][c]
        for k in range(r):
            q = rows[k][c] // piv
            if q:
                rows[k] = [p - q * s for p, s in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    if r < m:
        raise RankDeficient(f"generators have rank {r} < {m}")
    return rows, pivots


def hnf(M) -> list[list[int]]:
    """Row-style Hermite normal form: upper echelon, positive pivots, entries above each pivot in [0, pivot)."""
    return hnf_with_pivots(M)[0]


@dataclass(frozen=True)
class Lattice:
    """Lattice spanned by integer ``basis`` rows (full rank in this package)."""

    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(tuple(int(x) for x in r) for r in self.basis))

    @classmethod
    def of(cls, rows) -> "Lattice":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def standard(cls, n: int) -> "Lattice":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @cached_property
    def _hnf(self):
        return hnf_with_pivots(self.basis)

    @property
    def hnf(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(r) for r in self._hnf[0])

    @cached_property
    def determinant(self) -> int:
        return abs(determinant([list(r) for r in self.basis]))

    @property
    def dim(self) -> int:
        return len(self.basis[0]) if self.basis else 0

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.hnf == other.hnf

    def __hash__(self):
        return hash(self.hnf)

    def __contains__(self, v) -> bool:
        return lattice_contains(self, v)

    def coordinates(self, v):
        """Integer row vector ``x`` with ``x . hnf = v``, or ``None``."""
        rows, pivots = self._hnf
        v = [int(x) for x in v]
        if len(v) != self.dim:
            raise ValueError("dimension mismatch")
        x = []
        for r, c in enumerate(pivots):
            q, rem = divmod(v[c], rows[r][c])
            if rem:
                return None
            x.append(q)
            if q:
                v = [a - q * b for a, b in zip(v, rows[r])]
        if any(v):
            return None
        return x


def lattice_contains(lat: Lattice, v) -> bool:
    return lat.coordinates(v) is not None


def lattice_index(sub: Lattice, ambient: Lattice) -> int:
    """``[ambient : sub]``; raises ``NotSublattice`` if some generator of ``sub`` is outside."""
    if sub.dim != ambient.dim or len(sub.basis) != len(ambient.basis):
        raise ValueError("lattices must be full rank of the same dimension")
    for row in sub.basis:
        if not lattice_contains(ambient, row):
            raise NotSublattice(f"{row} is not in the ambient lattice")
    da, ds = ambient.determinant, sub.determinant
    if da == 0 or ds == 0:
        raise RankDeficient("lattice is not full rank")
    return ds // da
