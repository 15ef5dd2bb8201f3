import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torbif.errors import InputError
from torbif.intlat import (
    IntMatrix,
    Lattice,
    TorusSubgroup,
    codim_generators,
    contains,
    extend_by_full_torus,
    hermite_basis,
    inverse_unimodular,
    snf,
    subgroup_canonical,
    subgroup_intersect,
    xgcd,
)

# --- independent oracles -----------------------------------------------------


def laplace_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, v in enumerate(rows[0]):
        if v:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * v * laplace_det(minor)
    return total


def factors_by_minor_gcds(m: IntMatrix) -> tuple[int, ...]:
    """Invariant factors as successive quotients of k-minor gcds."""
    out = []
    prev = 1
    for k in range(1, min(m.rows, m.cols) + 1):
        g = 0
        for rsel in itertools.combinations(range(m.rows), k):
            for csel in itertools.combinations(range(m.cols), k):
                sub = [[m[i, j] for j in csel] for i in rsel]
                g = math.gcd(g, laplace_det(sub))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return tuple(out)


def rank_by_gauss(rows) -> int:
    mat = [[Fraction(e) for e in row] for row in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][c]:
                f = mat[i][c] / mat[rank][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-10, 10), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


# --- xgcd / matrices ----------------------------------------------------------


@given(st.integers(-200, 200), st.integers(-200, 200))
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert g == math.gcd(a, b)
    assert x * a + y * b == g


def test_matrix_shape_errors():
    with pytest.raises(InputError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(InputError):
        IntMatrix.from_rows([[1, 2], [3]])


# --- Smith normal form --------------------------------------------------------


def test_snf_identity():
    dec = snf(IntMatrix.identity(2))
    assert dec.D == IntMatrix.identity(2)
    assert dec.invariant_factors == (1, 1)


def test_snf_diagonal_2_3():
    # gcd-of-minors oracle: d1 = gcd(2, 3) = 1, d1*d2 = |det| = 6
    m = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert factors_by_minor_gcds(m) == (1, 6)
    assert snf(m).invariant_factors == (1, 6)


def test_snf_full_2x2():
    m = IntMatrix.from_rows([[2, 4], [6, 8]])
    assert factors_by_minor_gcds(m) == (2, 4)
    assert snf(m).invariant_factors == (2, 4)


def test_snf_zero_matrix():
    dec = snf(IntMatrix.from_rows([[0, 0], [0, 0]]))
    assert dec.invariant_factors == ()
    assert dec.D.entries == (0, 0, 0, 0)


@settings(max_examples=150, deadline=None)
@given(small_matrices)
def test_snf_decomposition_properties(rows):
    m = IntMatrix.from_rows(rows)
    dec = snf(m)
    assert (dec.P @ m @ dec.Q) == dec.D
    assert abs(laplace_det(list(map(list, dec.P.to_rows())))) == 1
    assert abs(laplace_det(list(map(list, dec.Q.to_rows())))) == 1
    fs = dec.invariant_factors
    assert all(f > 0 for f in fs)
    assert all(fs[i + 1] % fs[i] == 0 for i in range(len(fs) - 1))
    assert fs == factors_by_minor_gcds(m)


def test_inverse_unimodular_roundtrip():
    m = IntMatrix.from_rows([[2, 1], [1, 1]])
    assert (m @ inverse_unimodular(m)) == IntMatrix.identity(2)


# --- Hermite form and lattices --------------------------------------------------


def test_hermite_reduces_above_pivots():
    basis = hermite_basis(2, [(1, 1), (1, -1)])
    assert basis == ((1, 1), (0, 2))


def test_lattice_rejects_noncanonical_basis():
    with pytest.raises(InputError):
        Lattice(2, ((2, 2), (1, 1)))


# --- subgroup encodings ---------------------------------------------------------


def test_subgroup_single_character():
    h = subgroup_canonical(2, [(1, 1)])
    assert h.dim == 1 and h.codim == 1


def test_subgroup_finite():
    # stacked lattice has rank 2
    assert rank_by_gauss([(1, 1), (1, -1)]) == 2
    h = subgroup_canonical(2, [(1, 1), (1, -1)])
    assert h.dim == 0


def test_subgroup_spanning_equivalence():
    # (2,2) lies in the span of (1,1)
    a = subgroup_canonical(2, [(1, 1), (2, 2)])
    b = subgroup_canonical(2, [(1, 1)])
    assert a == b


def test_subgroup_character_length_error():
    with pytest.raises(InputError):
        subgroup_canonical(2, [(1, 1, 1)])


# --- intersection ----------------------------------------------------------------


def test_intersect_transversal():
    h = subgroup_intersect(subgroup_canonical(2, [(1, 0)]), subgroup_canonical(2, [(0, 1)]))
    assert h.dim == 0
    assert rank_by_gauss([(1, 0), (0, 1)]) == 2


def test_intersect_with_full_torus():
    h = subgroup_canonical(2, [(1, 1)])
    assert subgroup_intersect(h, TorusSubgroup.full_torus(2)) == h


def test_intersect_dimension_lemma_instance():
    # H = kernel of (2,0) in T^2, extended by T^1, cut by the character (1,1,3)
    h = subgroup_canonical(2, [(2, 0)])
    meet = subgroup_intersect(extend_by_full_torus(h, 1), subgroup_canonical(3, [(1, 1, 3)]))
    assert meet.dim == 1  # l + dim H - 1 = 1 + 1 - 1


def test_intersect_rank_mismatch():
    with pytest.raises(InputError):
        subgroup_intersect(subgroup_canonical(1, [(1,)]), subgroup_canonical(2, [(1, 0)]))


# --- codimension generators -------------------------------------------------------


def test_codim_generators_codim_one():
    h = subgroup_canonical(2, [(1, 1)])
    gens = codim_generators(h)
    assert len(gens) == 1
    assert subgroup_canonical(2, gens) == h


def test_codim_generators_two_characters():
    h = subgroup_canonical(2, [(2, 0), (0, 3)])
    gens = codim_generators(h)
    assert len(gens) == 2
    assert subgroup_canonical(2, gens) == h


def test_codim_generators_trivial_subgroup():
    h = subgroup_canonical(2, [(1, 0), (0, 1)])
    gens = codim_generators(h)
    assert len(gens) == 2
    assert subgroup_canonical(2, gens) == h
    assert h.annihilator.basis == ((1, 0), (0, 1))


def test_codim_generators_full_torus_empty():
    assert codim_generators(TorusSubgroup.full_torus(3)) == ()


# --- membership --------------------------------------------------------------------


def test_contains_examples():
    h = subgroup_canonical(2, [(1, 1)])
    assert contains(h, (Fraction(1, 2), Fraction(1, 2)))
    finite = subgroup_canonical(2, [(1, 1), (1, -1)])
    assert not contains(finite, (Fraction(1, 4), Fraction(1, 4)))
    assert contains(finite, (0, 0))


def test_contains_length_error():
    with pytest.raises(InputError):
        contains(subgroup_canonical(2, [(1, 1)]), (Fraction(1, 2),))


# --- extension ---------------------------------------------------------------------


def test_extend_examples():
    h = extend_by_full_torus(subgroup_canonical(2, [(1, 1)]), 1)
    assert h.annihilator.basis == ((1, 1, 0),)
    assert extend_by_full_torus(TorusSubgroup.full_torus(2), 2) == TorusSubgroup.full_torus(4)
    point = subgroup_canonical(2, [(1, 0), (0, 1)])
    assert extend_by_full_torus(point, 3).dim == 3


# --- randomized structure properties --------------------------------------------------


characters = st.integers(1, 3).flatmap(
    lambda r: st.lists(
        st.lists(st.integers(-5, 5), min_size=r, max_size=r), min_size=0, max_size=3
    ).map(lambda chars: (r, chars))
)


@settings(max_examples=100, deadline=None)
@given(characters)
def test_subgroup_canonical_order_independent(data):
    r, chars = data
    h = subgroup_canonical(r, chars)
    assert subgroup_canonical(r, list(reversed(chars))) == h
    assert subgroup_canonical(r, h.annihilator.basis) == h


@settings(max_examples=100, deadline=None)
@given(characters)
def test_intersection_commutative_associative(data):
    r, chars = data
    half = len(chars) // 2
    h1 = subgroup_canonical(r, chars[:half])
    h2 = subgroup_canonical(r, chars[half:])
    meet = subgroup_intersect(h1, h2)
    assert meet == subgroup_intersect(h2, h1)
    assert meet.dim <= min(h1.dim, h2.dim)
