"""Exact integer linear algebra over arbitrary-precision integers.

Hermite and Smith normal forms, integer lattices in canonical (row-style
Hermite) form, and closed subgroups of a torus encoded by their annihilator
character lattice.  All values are immutable and all operations are pure,
so everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Iterable, Sequence

from .errors import ConsistencyError, InputError

Vector = tuple[int, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``x*a + y*b = g``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major, arbitrary precision."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InputError("matrix shape must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise InputError("entry count does not match matrix shape")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [tuple(int(e) for e in row) for row in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise InputError("ragged rows")
        else:
            width = 0 if cols is None else cols
        if cols is not None and rows and width != cols:
            raise InputError(f"rows have length {width}, expected {cols}")
        flat = tuple(e for row in rows for e in row)
        return IntMatrix(len(rows), width if rows else (cols or 0), flat)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> tuple[Vector, ...]:
        return tuple(self.row(i) for i in range(self.rows))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError("matrix shapes do not compose")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other[k, j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def det(self) -> int:
        """Exact determinant via fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise InputError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(self.row(i)) for i in range(n)]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    if m.rows != m.cols:
        raise InputError("inverse of a non-square matrix")
    n = m.rows
    aug = [[Fraction(m[i, j]) for j in range(n)] + [Fraction(int(i == k)) for k in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ConsistencyError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [e * inv for e in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [e - f * p for e, p in zip(aug[i], aug[c])]
    flat = []
    for i in range(n):
        for j in range(n):
            v = aug[i][n + j]
            if v.denominator != 1:
                raise ConsistencyError("matrix is not unimodular")
            flat.append(int(v))
    return IntMatrix(n, n, tuple(flat))


@dataclass(frozen=True)
class SmithDecomposition:
    """``P @ R @ Q = D`` with P, Q unimodular and D diagonal."""

    P: IntMatrix
    Q: IntMatrix
    D: IntMatrix
    invariant_factors: tuple[int, ...]


def snf(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular transforms.

    Returns a decomposition whose diagonal entries are positive and form a
    divisibility chain d_1 | d_2 | ... ; the zero matrix is allowed.
    """
    p, r = m.rows, m.cols
    d = [list(m.row(i)) for i in range(p)]
    pm = [[int(i == j) for j in range(p)] for i in range(p)]
    qm = [[int(i == j) for j in range(r)] for i in range(r)]

    def row_axpy(dst: int, src: int, q: int) -> None:
        d[dst] = [a - q * b for a, b in zip(d[dst], d[src])]
        pm[dst] = [a - q * b for a, b in zip(pm[dst], pm[src])]

    def col_axpy(dst: int, src: int, q: int) -> None:
        for i in range(p):
            d[i][dst] -= q * d[i][src]
        for i in range(r):
            qm[i][dst] -= q * qm[i][src]

    def row_swap(i1: int, i2: int) -> None:
        d[i1], d[i2] = d[i2], d[i1]
        pm[i1], pm[i2] = pm[i2], pm[i1]

    def col_swap(j1: int, j2: int) -> None:
        for i in range(p):
            d[i][j1], d[i][j2] = d[i][j2], d[i][j1]
        for i in range(r):
            qm[i][j1], qm[i][j2] = qm[i][j2], qm[i][j1]

    def row_negate(i: int) -> None:
        d[i] = [-e for e in d[i]]
        pm[i] = [-e for e in pm[i]]

    t = 0
    while t < min(p, r):
        # move an entry of smallest nonzero magnitude into the pivot slot
        best = None
        pos = None
        for i in range(t, p):
            for j in range(t, r):
                v = abs(d[i][j])
                if v and (best is None or v < best):
                    best, pos = v, (i, j)
        if pos is None:
            break
        if pos[0] != t:
            row_swap(t, pos[0])
        if pos[1] != t:
            col_swap(t, pos[1])
        while True:
            if d[t][t] < 0:
                row_negate(t)
            # clear column t; a nonzero remainder becomes the smaller pivot
            restart = False
            for i in range(t + 1, p):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    if q:
                        row_axpy(i, t, q)
                    if d[i][t]:
                        row_swap(t, i)
                        restart = True
                        break
            if restart:
                continue
            # clear row t the same way
            for j in range(t + 1, r):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    if q:
                        col_axpy(j, t, q)
                    if d[t][j]:
                        col_swap(t, j)
                        restart = True
                        break
            if restart:
                continue
            # force divisibility of the remaining block by the pivot
            offender = None
            for i in range(t + 1, p):
                if any(d[i][j] % d[t][t] for j in range(t + 1, r)):
                    offender = i
                    break
            if offender is None:
                break
            row_axpy(t, offender, -1)
        t += 1

    dm = IntMatrix.from_rows(d, r)
    factors = tuple(d[i][i] for i in range(min(p, r)) if d[i][i] != 0)
    return SmithDecomposition(
        P=IntMatrix.from_rows(pm, p),
        Q=IntMatrix.from_rows(qm, r),
        D=dm,
        invariant_factors=factors,
    )


def hermite_basis(ambient: int, rows: Iterable[Sequence[int]]) -> tuple[Vector, ...]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Pivots are positive, entries above a pivot are reduced into
    ``[0, pivot)``, pivot columns strictly increase, and zero rows are
    dropped, so two iterables span the same lattice iff the results are
    identical.
    """
    mat: list[list[int]] = []
    for row in rows:
        row = [int(e) for e in row]
        if len(row) != ambient:
            raise InputError(f"vector of length {len(row)} in ambient rank {ambient}")
        if any(row):
            mat.append(row)
    nr = 0
    for c in range(ambient):
        piv = next((i for i in range(nr, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[nr], mat[piv] = mat[piv], mat[nr]
        for i in range(nr + 1, len(mat)):
            if mat[i][c] == 0:
                continue
            a, b = mat[nr][c], mat[i][c]
            g, x, y = xgcd(a, b)
            u, v = a // g, b // g
            top = [x * s + y * t for s, t in zip(mat[nr], mat[i])]
            bot = [-v * s + u * t for s, t in zip(mat[nr], mat[i])]
            mat[nr], mat[i] = top, bot
        if mat[nr][c] < 0:
            mat[nr] = [-e for e in mat[nr]]
        pivval = mat[nr][c]
        for i in range(nr):
            q = mat[i][c] // pivval
            if q:
                mat[i] = [e - q * s for e, s in zip(mat[i], mat[nr])]
        nr += 1
    return tuple(tuple(r) for r in mat[:nr])


@dataclass(frozen=True)
class Lattice:
    """Integer sublattice of Z^r held in canonical Hermite form."""

    ambient_rank: int
    basis: tuple[Vector, ...]

    def __post_init__(self):
        if self.basis != hermite_basis(self.ambient_rank, self.basis):
            raise InputError("lattice basis is not in canonical form")

    @staticmethod
    def span(ambient_rank: int, vectors: Iterable[Sequence[int]] = ()) -> "Lattice":
        return Lattice(ambient_rank, hermite_basis(ambient_rank, vectors))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def sum(self, other: "Lattice") -> "Lattice":
        if self.ambient_rank != other.ambient_rank:
            raise InputError("lattice sum needs equal ambient ranks")
        return Lattice.span(self.ambient_rank, self.basis + other.basis)


@dataclass(frozen=True)
class TorusSubgroup:
    """Closed subgroup of T^r, identified by its annihilator lattice.

    The annihilator holds all characters k with <k, phi> in 2*pi*Z on the
    subgroup; it determines the subgroup uniquely, and the full torus is
    the zero lattice.
    """

    ambient_rank: int
    annihilator: Lattice

    def __post_init__(self):
        if self.annihilator.ambient_rank != self.ambient_rank:
            raise InputError("annihilator rank does not match ambient rank")

    @staticmethod
    def full_torus(r: int) -> "TorusSubgroup":
        return TorusSubgroup(r, Lattice.span(r))

    @property
    def dim(self) -> int:
        return self.ambient_rank - self.annihilator.rank

    @property
    def codim(self) -> int:
        return self.annihilator.rank

    @property
    def is_full(self) -> bool:
        return self.annihilator.rank == 0

    def sort_key(self):
        return (self.codim, self.annihilator.basis)

    def __str__(self) -> str:
        if self.is_full:
            return f"T^{self.ambient_rank}"
        rows = ",".join(str(tuple(r)) for r in self.annihilator.basis)
        return f"H[{rows}]"


def subgroup_canonical(r: int, characters: Iterable[Sequence[int]]) -> TorusSubgroup:
    """Subgroup cut out by the given characters, canonically encoded."""
    return TorusSubgroup(r, Lattice.span(r, characters))


def subgroup_intersect(h: TorusSubgroup, h2: TorusSubgroup) -> TorusSubgroup:
    """Intersection; the annihilator of the result is the lattice sum."""
    if h.ambient_rank != h2.ambient_rank:
        raise InputError("cannot intersect subgroups of different tori")
    return TorusSubgroup(h.ambient_rank, h.annihilator.sum(h2.annihilator))


def codim_generators(h: TorusSubgroup) -> tuple[Vector, ...]:
    """Exactly codim(h) characters whose kernels intersect to ``h``.

    Uses the Smith form D = P R Q of the annihilator basis R: the j-th
    character is the j-th invariant factor times the j-th row of Q^-1,
    which spans the same lattice as R.
    """
    if h.is_full:
        return ()
    rmat = IntMatrix.from_rows(h.annihilator.basis, h.ambient_rank)
    dec = snf(rmat)
    qinv = inverse_unimodular(dec.Q)
    out = []
    for j, dj in enumerate(dec.invariant_factors):
        out.append(tuple(dj * qinv[j, c] for c in range(h.ambient_rank)))
    return tuple(out)


def contains(h: TorusSubgroup, q: Sequence[Fraction | int]) -> bool:
    """Membership of the torus element exp(2*pi*i*q) in ``h``, exactly."""
    if len(q) != h.ambient_rank:
        raise InputError(f"point of length {len(q)} in ambient rank {h.ambient_rank}")
    qv = [Fraction(e) for e in q]
    for k in h.annihilator.basis:
        if sum(ki * qi for ki, qi in zip(k, qv)).denominator != 1:
            return False
    return True


def extend_by_full_torus(h: TorusSubgroup, l: int) -> TorusSubgroup:
    """``h x T^l`` inside ``T^(r+l)``; annihilator characters zero-padded."""
    if l < 0:
        raise InputError("extension rank must be nonnegative")
    padded = tuple(row + (0,) * l for row in h.annihilator.basis)
    # zero-padding preserves Hermite canonical form
    return TorusSubgroup(h.ambient_rank + l, Lattice(h.ambient_rank + l, padded))
