import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewring.classify import PRESENTATIONS, kernel_from_text, named_group
from skewring.groupcore import derived_and_squares, elementary_abelian, with_e_factor
from skewring.orient import (
    Orientation,
    OrientationError,
    all_subgroups,
    brute_force_kernels,
    enumerate_kernels,
    make_orientation,
    quotient_coordinates,
    quotient_rank,
    sigma,
)

from .oracles import index_two_subsets


def test_make_orientation(q8):
    a, b = q8.generator_elems
    o = make_orientation(q8, [a])
    assert len(o.kernel) == 4
    with pytest.raises(OrientationError):
        make_orientation(q8, [a, b])
    g = named_group("G[16,13]")
    assert len(make_orientation(g, g.generator_elems[:2]).kernel) == 8


def test_sigma(q8):
    a, b = q8.generator_elems
    o = make_orientation(q8, [a])
    assert sigma(o, q8.power(a, 2)) == 1
    assert sigma(o, b) == -1
    assert sigma(o, 0) == 1
    assert o.signs.count(-1) == 4


def test_sigma_is_homomorphism(g16_4):
    for n in enumerate_kernels(g16_4):
        o = Orientation(g16_4, n)
        assert all(o.sigma(g16_4.mul(x, y)) == o.sigma(x) * o.sigma(y)
                   for x in range(16) for y in range(16))


def test_kernel_from_other_group_rejected(q8, d4):
    with pytest.raises(OrientationError):
        Orientation(q8, enumerate_kernels(d4)[0])


def test_g16_8_kernels(g16_8):
    ks = {k.members for k in enumerate_kernels(g16_8)}
    expect = {kernel_from_text(g16_8, t).members for t in ("a", "a^2, b", "a^2, ab")}
    assert ks == expect


@pytest.mark.parametrize("name, count", [
    ("Q8", 3), ("G[16,8]", 3), ("G[16,9]", 3), ("G[16,4]", 3), ("G[16,13]", 7),
    ("G[32,35]", 7), ("G[32,30]", 7), ("G[32,31]", 7), ("G[32,24]", 7), ("S3", 1),
])
def test_kernel_counts(name, count):
    assert len(enumerate_kernels(named_group(name))) == count


def test_q8_kernels_are_cyclic_subgroups(q8):
    a, b = q8.generator_elems
    expect = {kernel_from_text(q8, t).members for t in ("a", "b", "ab")}
    assert {k.members for k in enumerate_kernels(q8)} == expect


@pytest.mark.parametrize("name", ["Q8", "D4", "S3", "G[16,3]", "G[16,4]", "G[16,8]", "G[16,9]",
                                  "G[16,13]", "Q8xC2"])
def test_kernels_match_subset_scan(name):
    g = named_group(name)
    assert {k.member_set for k in enumerate_kernels(g)} == set(index_two_subsets(g))


@pytest.mark.parametrize("name", sorted(PRESENTATIONS))
@pytest.mark.parametrize("r", [0, 1])
def test_kernel_count_law(name, r):
    g = with_e_factor(named_group(name), r)
    ks = enumerate_kernels(g)
    k = quotient_rank(g)
    assert len(ks) == 2**k - 1
    assert len({s.members for s in ks}) == len(ks)
    if g.order <= 32:
        assert {s.members for s in brute_force_kernels(g)} == {s.members for s in ks}


def test_kernels_contain_frattini():
    g = named_group("G[32,31]")
    f = derived_and_squares(g).member_set
    for k in enumerate_kernels(g):
        assert f <= k.member_set and k.is_normal()


def test_quotient_coordinates_are_homomorphic(g16_4):
    basis, coords = quotient_coordinates(g16_4)
    assert len(basis) == 2
    for x in range(16):
        for y in range(16):
            xy = coords[g16_4.mul(x, y)]
            assert xy == tuple((p + q) % 2 for p, q in zip(coords[x], coords[y]))


def test_elementary_abelian_rank():
    assert quotient_rank(elementary_abelian(4)) == 4
    assert len(enumerate_kernels(elementary_abelian(4))) == 15


def test_brute_force_limit():
    with pytest.raises(OrientationError):
        brute_force_kernels(with_e_factor(named_group("G[32,31]"), 1))


@given(st.sampled_from(["Q8", "D4", "S3", "G[16,4]"]))
def test_all_subgroups_lagrange(name):
    g = named_group(name)
    for s in all_subgroups(g):
        assert g.order % len(s) == 0
