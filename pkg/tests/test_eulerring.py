import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torbif.errors import InputError
from torbif.eulerring import (
    EulerElement,
    codim_part,
    deg_minus_id,
    lift,
    linear_combine,
    star,
)
from torbif.intlat import subgroup_canonical
from torbif.torusrep import TorusRep, direct_sum


def gen(r, *chars):
    return EulerElement.generator(subgroup_canonical(r, chars))


def element_strategy(rank: int, max_terms: int = 4):
    weight = st.lists(st.integers(-4, 4), min_size=rank, max_size=rank).filter(any)
    subgroup = st.lists(weight.map(tuple), min_size=0, max_size=2).map(
        lambda chars: subgroup_canonical(rank, chars)
    )
    coeff = st.integers(-5, 5).filter(bool)
    return st.lists(st.tuples(subgroup, coeff), min_size=0, max_size=max_terms).map(
        lambda terms: EulerElement.make(rank, terms)
    )


def rep_strategy(rank: int):
    weight = st.lists(st.integers(-4, 4), min_size=rank, max_size=rank).filter(any)
    pairs = st.lists(st.tuples(weight.map(tuple), st.integers(1, 2)), max_size=3)
    return st.builds(lambda t, ws: TorusRep.make(rank, t, ws), st.integers(0, 2), pairs)


# --- linear combinations -------------------------------------------------------


def test_linear_combine_cancellation():
    unit = EulerElement.unit(2)
    assert linear_combine([1, -1], [unit, unit]) == EulerElement.zero(2)


def test_linear_combine_merges():
    x = gen(2, (1, 0))
    assert linear_combine([2, 3], [x, x]) == 5 * x


def test_zero_coefficients_dropped():
    combined = linear_combine([1, 0], [EulerElement.unit(2), gen(2, (1, 1))])
    assert combined == EulerElement.unit(2)
    assert len(combined.terms) == 1


def test_rank_mismatch_raises():
    with pytest.raises(InputError):
        linear_combine([1, 1], [EulerElement.unit(1), EulerElement.unit(2)])
    with pytest.raises(InputError):
        star(EulerElement.unit(1), EulerElement.unit(2))


# --- star product ---------------------------------------------------------------


def test_star_transversal_generators():
    # kernels of (1,0) and (0,1) meet in the trivial subgroup, dims 1+1 = 2+0
    prod = star(gen(2, (1, 0)), gen(2, (0, 1)))
    assert prod == gen(2, (1, 0), (0, 1))


def test_star_self_product_vanishes():
    for r in (1, 2, 3):
        h = gen(r, tuple([1] + [0] * (r - 1)))
        assert star(h, h) == EulerElement.zero(r)


@settings(max_examples=80, deadline=None)
@given(element_strategy(2))
def test_star_unit_law(x):
    assert star(EulerElement.unit(2), x) == x


# --- degree of -Id -----------------------------------------------------------------


def test_deg_trivial_line():
    assert deg_minus_id(TorusRep.trivial(1, 1)) == -EulerElement.unit(1)


def test_deg_single_rotation():
    expected = EulerElement.unit(1) - gen(1, (1,))
    assert deg_minus_id(TorusRep.rotation(1, [1])) == expected


def test_deg_doubled_rotation():
    # (I - chi)^2 = I - 2 chi since chi * chi = 0
    expected = EulerElement.unit(1) - 2 * gen(1, (1,))
    assert deg_minus_id(TorusRep.rotation(2, [1])) == expected


def test_deg_mirror_pair_in_rank_two():
    v = TorusRep.make(2, 0, {(1, 1): 1, (1, -1): 1})
    order_two = gen(2, (1, 1), (1, -1))
    expected = EulerElement.unit(2) - gen(2, (1, 1)) - gen(2, (1, -1)) + order_two
    assert deg_minus_id(v) == expected


def test_deg_zero_rep_is_unit():
    assert deg_minus_id(TorusRep.zero(2)) == EulerElement.unit(2)


# --- codimension projection ----------------------------------------------------------


def test_codim_part():
    x = EulerElement.unit(1) - 2 * gen(1, (1,))
    assert codim_part(x, 0) == EulerElement.unit(1)
    assert codim_part(x, 1) == -2 * gen(1, (1,))
    v = TorusRep.make(2, 0, {(1, 1): 1, (1, -1): 1})
    assert codim_part(deg_minus_id(v), 2) == gen(2, (1, 1), (1, -1))


# --- lifting -----------------------------------------------------------------------


def test_lift_examples():
    assert lift(EulerElement.unit(1), 2) == EulerElement.unit(3)
    assert lift(EulerElement.zero(1), 2) == EulerElement.zero(3)
    # the point subgroup of T^1 lifts to the kernel of (1, 0) in T^2
    assert lift(gen(1, (1,)), 1) == gen(2, (1, 0))


@settings(max_examples=60, deadline=None)
@given(element_strategy(2), element_strategy(2), st.integers(1, 2))
def test_lift_is_ring_homomorphism(x, y, l):
    assert lift(star(x, y), l) == star(lift(x, l), lift(y, l))
    assert lift(x + y, l) == lift(x, l) + lift(y, l)


# --- ring axioms ----------------------------------------------------------------------


@settings(max_examples=80, deadline=None)
@given(element_strategy(2), element_strategy(2), element_strategy(2))
def test_ring_axioms(x, y, z):
    assert star(x, y) == star(y, x)
    assert star(star(x, y), z) == star(x, star(y, z))
    assert star(x, y + z) == star(x, y) + star(x, z)


@settings(max_examples=60, deadline=None)
@given(element_strategy(3), element_strategy(3))
def test_high_codimension_ideal(x, y):
    deep = EulerElement(
        y.ambient_rank, tuple((h, c) for h, c in y.terms if h.codim >= 2)
    )
    prod = star(x, deep)
    assert all(h.codim >= 2 for h, _ in prod.terms)


# --- truncation and multiplicativity ----------------------------------------------------


@settings(max_examples=80, deadline=None)
@given(rep_strategy(2))
def test_truncation_conformance(v):
    deg = deg_minus_id(v)
    low = codim_part(deg, 0) + codim_part(deg, 1)
    expected = EulerElement.unit(2)
    for m, k in v.weights:
        expected = expected - k * EulerElement.generator(subgroup_canonical(2, [m]))
    sign = -1 if v.dim % 2 else 1
    assert low == sign * expected


@settings(max_examples=60, deadline=None)
@given(rep_strategy(2), rep_strategy(2))
def test_deg_multiplicative(v, w):
    assert deg_minus_id(direct_sum(v, w)) == star(deg_minus_id(v), deg_minus_id(w))
