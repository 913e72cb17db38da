import itertools
from fractions import Fraction

import pytest

from phasetop.covectors import (
    PhaseVector,
    all_ones,
    enumerate_covectors,
    find_zero_triple,
    format_phase_vector,
    format_sign_vector,
    is_covector,
    leq_vec,
    parse_phase_vector,
    parse_sign_vector,
    rescale,
    sign_is_covector,
    sign_leq_vec,
    sign_zero_in_sum,
    support,
    zero_in_sum,
)
from phasetop.phase import Phase, ZERO, hyper_sum_list

F = Fraction


def V(*ts):
    return PhaseVector.of(ts)


def test_zero_in_sum_edge_cases():
    assert zero_in_sum([])
    assert zero_in_sum([ZERO, ZERO])
    assert not zero_in_sum([Phase.of(F(1, 3))])
    assert not zero_in_sum([ZERO, Phase.of(F(1, 3))])


def test_zero_in_sum_pairs():
    assert zero_in_sum([Phase.of(0), Phase.of(F(1, 2))])  # antipodal
    assert not zero_in_sum([Phase.of(0), Phase.of(0)])
    assert not zero_in_sum([Phase.of(0), Phase.of(F(1, 4))])


def test_zero_in_sum_spread_triple():
    # enclosing arc of {0, 3/8, 3/4} has length 5/8 >= 1/2
    assert zero_in_sum([Phase.of(0), Phase.of(F(3, 8)), Phase.of(F(3, 4))])
    # {0, 1/8, 1/4} fits in an open half circle
    assert not zero_in_sum([Phase.of(0), Phase.of(F(1, 8)), Phase.of(F(1, 4))])


def test_zero_in_sum_agrees_with_fold_oracle():
    # independent check against actual iterated hyperaddition, small grid
    grid = [ZERO] + [Phase.of(F(k, 4)) for k in range(4)]
    for combo in itertools.product(grid, repeat=3):
        folded = hyper_sum_list(list(combo))
        assert zero_in_sum(combo) == folded.contains(ZERO)


def test_is_covector_basics():
    ones = all_ones(3)
    assert is_covector(ones, V(0, "1/2", None))
    assert not is_covector(ones, V(0, None, None))  # |supp| = 1
    assert is_covector(ones, V(None, None, None))  # zero vector
    assert is_covector(ones, V(0, "1/3", "2/3"))
    assert not is_covector(ones, V(0, "1/8", "1/4"))


def test_is_covector_twisted_units():
    v = PhaseVector.of([0, "1/4"])
    # products have phases (1/2, 0): antipodal
    assert is_covector(v, V("1/2", "3/4"))
    with pytest.raises(ValueError):
        is_covector(V(0, None), V(0, 0))
    with pytest.raises(ValueError):
        is_covector(all_ones(2), V(0, 0, 0))


def test_leq_vec():
    assert leq_vec(V(None, 0), V("1/3", 0))
    assert not leq_vec(V(0, None), V("1/2", 0))
    x = V("1/5", None, "2/3")
    assert leq_vec(x, x)
    with pytest.raises(ValueError):
        leq_vec(V(0), V(0, 0))


def test_leq_vec_is_partial_order_on_grid():
    grid = [ZERO] + [Phase.of(F(k, 2)) for k in range(2)]
    vecs = [PhaseVector(c) for c in itertools.product(grid, repeat=2)]
    for x in vecs:
        assert leq_vec(x, x)
        for y in vecs:
            if leq_vec(x, y) and leq_vec(y, x):
                assert x == y
            for z in vecs:
                if leq_vec(x, y) and leq_vec(y, z):
                    assert leq_vec(x, z)


def test_support_is_one_based():
    assert support(V(None, "1/2", 0)) == (2, 3)
    assert support(V(None, None)) == ()


def test_find_zero_triple_examples():
    assert find_zero_triple(V(0, "3/8", "3/4", "1/16")) == (1, 2, 3)
    assert find_zero_triple(V(0, "1/8", "1/4")) is None
    # a support-3 covector yields its own support
    x = V(None, 0, "1/3", "2/3")
    assert find_zero_triple(x) == (2, 3, 4)
    # vectors shorter than 3 have no triples at all
    assert find_zero_triple(V(0, "1/2")) is None


def test_find_zero_triple_on_enumerated_covectors():
    ones = all_ones(4)
    for x in enumerate_covectors("phase", 4, 4):
        t = find_zero_triple(x)
        if len(support(x)) >= 3:
            assert t is not None
        if t is not None:
            j, k, l = t
            assert j < k < l
            assert zero_in_sum([x[j - 1], x[k - 1], x[l - 1]])
            assert is_covector(ones, x)


def test_rescale_round_trip_and_covector_transport():
    v = PhaseVector.of(["1/3", "1/5", "1/7"])
    v_inv = PhaseVector.of([-e.angle.turns for e in v])
    ones = all_ones(3)
    for x in enumerate_covectors("phase", 3, 4):
        assert rescale(v_inv, rescale(v, x)) == x
        assert is_covector(v, x) == is_covector(ones, rescale(v, x))
    assert rescale(ones, V(0, "1/4", None)) == V(0, "1/4", None)
    with pytest.raises(ValueError):
        rescale(V(0, None), V(0, 0))


def test_covector_up_closure_within_support():
    # smaller covectors extend: if x <= y, x has a zero triple through the
    # last coordinate, and x_n is nonzero, then y has zero in the same triple
    ones = all_ones(3)
    covs = [x for x in enumerate_covectors("phase", 3, 2)]
    for y in covs:
        for x in covs:
            if not leq_vec(x, y) or x == y:
                continue
            if x[2].is_zero or len(support(x)) < 2:
                continue
            for j, k in itertools.combinations(range(2), 2):
                if zero_in_sum([x[j], x[k], x[2]]):
                    assert zero_in_sum([y[j], y[k], y[2]])


def test_enumerate_covectors_phase_n2():
    got = enumerate_covectors("phase", 2, 4)
    assert [str(x) for x in got] == ["0,1/2", "1/4,3/4", "1/2,0", "3/4,1/4"]
    got = enumerate_covectors("phase", 2, 2)
    assert [str(x) for x in got] == ["0,1/2", "1/2,0"]


def test_enumerate_covectors_excludes_zero_and_singles():
    for x in enumerate_covectors("phase", 3, 2):
        assert len(support(x)) >= 2


def test_enumerate_covectors_rejects_bad_args():
    with pytest.raises(ValueError):
        enumerate_covectors("phase", 3, 3)  # odd grid
    with pytest.raises(ValueError):
        enumerate_covectors("phase", 3)  # missing m
    with pytest.raises(ValueError):
        enumerate_covectors("quaternion", 3, 2)
    with pytest.raises(ValueError):
        enumerate_covectors("sign", 1)


def test_enumerate_covectors_sign_counts():
    # both signs present: 3^n - 2*2^n + 1 vectors
    for n in (2, 3, 4, 5):
        got = enumerate_covectors("sign", n)
        assert len(got) == 3**n - 2 * 2**n + 1
    assert len(enumerate_covectors("sign", 3)) == 12


def test_vector_text_round_trip():
    x = parse_phase_vector("0, 1/2, z")
    assert x == V(0, "1/2", None)
    assert format_phase_vector(x) == "0,1/2,z"
    s = parse_sign_vector("+,-,0")
    assert s == (1, -1, 0)
    assert format_sign_vector(s) == "+,-,0"
    with pytest.raises(ValueError):
        parse_sign_vector("+,2")
    with pytest.raises(ValueError):
        parse_phase_vector("0;1/2")


def test_sign_predicates():
    assert sign_zero_in_sum([])
    assert not sign_zero_in_sum([1])
    assert sign_zero_in_sum([1, -1])
    assert not sign_zero_in_sum([1, 1])
    assert sign_is_covector((1, 1, 1), (1, -1, 0))
    assert not sign_is_covector((1, 1, 1), (1, 1, 0))
    assert sign_is_covector((1, 1, 1), (0, 0, 0))
    # twisting by -1 flips a sign
    assert sign_is_covector((1, -1), (1, 1))
    assert sign_leq_vec((0, 1), (1, 1))
    assert not sign_leq_vec((-1, 1), (1, 1))
    with pytest.raises(ValueError):
        sign_is_covector((1, 0), (1, 1))
