from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torbif.errors import InputError
from torbif.torusrep import TorusRep, canonical_weight, character, direct_sum, tensor


def rep_strategy(rank: int, max_weights: int = 3):
    weight = st.lists(st.integers(-5, 5), min_size=rank, max_size=rank).filter(any)
    pairs = st.lists(
        st.tuples(weight.map(tuple), st.integers(1, 2)), min_size=0, max_size=max_weights
    )
    return st.builds(
        lambda triv, ws: TorusRep.make(rank, triv, ws), st.integers(0, 2), pairs
    )


def complexified_tensor(w: TorusRep, v: TorusRep) -> TorusRep:
    """Brute-force decomposition through complex weight multisets."""

    def cw(rep):
        out = {}
        zero = (0,) * rep.ambient_rank
        if rep.trivial_mult:
            out[zero] = rep.trivial_mult
        for m, k in rep.weights:
            out[m] = out.get(m, 0) + k
            neg = tuple(-x for x in m)
            out[neg] = out.get(neg, 0) + k
        return out

    comb = {}
    for a, ka in cw(w).items():
        for b, kb in cw(v).items():
            comb[a + b] = comb.get(a + b, 0) + ka * kb
    rank = w.ambient_rank + v.ambient_rank
    trivial = comb.pop((0,) * rank, 0)
    folded = {}
    for m, k in comb.items():
        if canonical_weight(m) == m:
            assert comb[tuple(-x for x in m)] == k
            folded[m] = k
    return TorusRep.make(rank, trivial, folded)


# --- construction ----------------------------------------------------------


def test_zero_weight_rejected():
    with pytest.raises(InputError):
        TorusRep.make(2, 0, [((0, 0), 1)])


def test_negative_multiplicity_rejected():
    with pytest.raises(InputError):
        TorusRep.make(1, 0, [((1,), -1)])


def test_rotation_of_zero_weight_is_trivial():
    assert TorusRep.rotation(3, (0, 0)) == TorusRep.trivial(2, 3)


def test_dim():
    v = TorusRep.make(2, 1, {(1, 0): 2})
    assert v.dim == 5


# --- direct sum -------------------------------------------------------------


def test_direct_sum_merges_multiplicities():
    assert direct_sum(TorusRep.rotation(1, [1]), TorusRep.rotation(1, [1])) == TorusRep.rotation(2, [1])


def test_direct_sum_with_trivial():
    v = direct_sum(TorusRep.trivial(1, 1), TorusRep.rotation(1, [1]))
    assert v.trivial_mult == 1 and v.weight_dict() == {(1,): 1}


def test_direct_sum_sign_canonicalization():
    # the weight -m block is equivalent to the weight m block
    assert direct_sum(TorusRep.rotation(1, [-1]), TorusRep.rotation(1, [1])) == TorusRep.rotation(2, [1])


# --- tensor -----------------------------------------------------------------


def test_tensor_splits_into_mirror_pair():
    t = tensor(TorusRep.rotation(1, [1]), TorusRep.rotation(1, [1]))
    assert t == TorusRep.make(2, 0, {(1, 1): 1, (1, -1): 1})


def test_tensor_with_trivial_factor():
    t = tensor(TorusRep.trivial(1, 1), TorusRep.rotation(1, [3]))
    assert t == TorusRep.make(2, 0, {(0, 3): 1})


def test_tensor_bilinear_multiplicities():
    t = tensor(TorusRep.rotation(2, [1]), TorusRep.rotation(3, [2]))
    assert t == TorusRep.make(2, 0, {(1, 2): 6, (1, -2): 6})
    assert t.dim == 24  # 4 * 6


# --- character ----------------------------------------------------------------


def test_character_at_identity_is_dimension():
    assert character(TorusRep.rotation(1, [1]), (0,)) == pytest.approx(2.0)


def test_character_halfturn():
    assert character(TorusRep.rotation(1, [1]), (Fraction(1, 2),)) == pytest.approx(-2.0)


def test_character_of_trivial_block():
    assert character(TorusRep.trivial(1, 1), (Fraction(3, 7),)) == pytest.approx(1.0)


# --- properties ------------------------------------------------------------------


@settings(max_examples=100, deadline=None)
@given(rep_strategy(1), rep_strategy(2))
def test_tensor_dimension_multiplicative(w, v):
    assert tensor(w, v).dim == w.dim * v.dim


@settings(max_examples=100, deadline=None)
@given(rep_strategy(2), rep_strategy(1))
def test_tensor_matches_complexified_bruteforce(w, v):
    assert tensor(w, v) == complexified_tensor(w, v)


points = st.lists(
    st.builds(Fraction, st.integers(-12, 12), st.integers(1, 12)), min_size=1, max_size=1
)


@settings(max_examples=100, deadline=None)
@given(rep_strategy(1), rep_strategy(1), points, points)
def test_tensor_character_is_product(w, v, q1, q2):
    lhs = character(tensor(w, v), tuple(q1) + tuple(q2))
    assert abs(lhs - character(w, tuple(q1)) * character(v, tuple(q2))) < 1e-9


@settings(max_examples=60, deadline=None)
@given(rep_strategy(2), rep_strategy(2), rep_strategy(2), rep_strategy(1))
def test_sum_algebra(a, b, c, w):
    assert direct_sum(a, b) == direct_sum(b, a)
    assert direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c))
    assert tensor(direct_sum(a, b), w) == direct_sum(tensor(a, w), tensor(b, w))
