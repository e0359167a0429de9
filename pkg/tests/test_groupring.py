import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewring.classify import kernel_from_text, named_group
from skewring.coeffring import INT64_MAX, CoeffRing
from skewring.groupcore import cyclic, direct_product, with_e_factor
from skewring.groupring import (
    Family,
    GroupRingElement,
    GroupRingError,
    antisym_generators,
    commutator,
    is_skew_commutative,
    phi_sigma,
)
from skewring.orient import Orientation, enumerate_kernels

Z, Z4, Z8 = CoeffRing(0), CoeffRing(4), CoeffRing(8)


def el(g, r, text_terms):
    """Build an element from (word text, coefficient) pairs."""
    return GroupRingElement.from_terms(g, r, [(g.evaluate(kernel_word(g, w)), c) for w, c in text_terms])


def kernel_word(g, w):
    from skewring.presdsl import parse_word
    return parse_word(w, g.gen_names)


def naive_mul(x, y):
    g, m = x.group, x.ring.modulus
    out = {}
    for a, ca in enumerate(x.coeffs):
        for b, cb in enumerate(y.coeffs):
            if ca and cb:
                k = g.rows[a][b]
                out[k] = out.get(k, 0) + int(ca) * int(cb)
    vec = np.zeros(g.order, dtype=np.int64)
    for k, v in out.items():
        vec[k] = v % m if m else v
    return vec


def test_basis_products(q8):
    a, b = q8.generator_elems
    x = GroupRingElement.basis(q8, Z, a)
    y = GroupRingElement.basis(q8, Z, b)
    assert x * y == GroupRingElement.basis(q8, Z, q8.mul(a, b))
    one = GroupRingElement.basis(q8, Z, 0)
    assert x * one == x and one * x == x


def test_zero_divisor_in_cyclic_group():
    c4 = cyclic(4)
    x = el(c4, Z, [("1", 1), ("a^2", 1)])
    y = el(c4, Z, [("1", 1), ("a^2", -1)])
    assert (x * y).is_zero()


def test_phi_sigma_on_basis(q8):
    a, b = q8.generator_elems
    o = Orientation(q8, kernel_from_text(q8, "a"))
    assert phi_sigma(o, GroupRingElement.basis(q8, Z, a)) == GroupRingElement.basis(q8, Z, q8.inv[a])
    assert phi_sigma(o, GroupRingElement.basis(q8, Z, b)) == GroupRingElement.basis(q8, Z, q8.inv[b], -1)


def test_q8_generators_over_z(q8):
    o = Orientation(q8, kernel_from_text(q8, "a"))
    gens = antisym_generators(o, Z)
    expect = {el(q8, Z, [("a", 1), ("a^3", -1)]), el(q8, Z, [("b", 1), ("a^2b", 1)]),
              el(q8, Z, [("ab", 1), ("a^3b", 1)])}
    # a generator and its negative span the same module
    got = {x if x.coeffs[x.support()[0]] > 0 else -x for x in gens}
    assert len(gens) == 3 and got == expect


def test_q8_generators_over_z4(q8):
    o = Orientation(q8, kernel_from_text(q8, "a"))
    gens = antisym_generators(o, Z4)
    torsion = set(gens.by_family(Family.TORSION_IN_N))
    assert len(gens) == 5
    assert torsion == {el(q8, Z4, [("1", 2)]), el(q8, Z4, [("a^2", 2)])}


def test_d4_families(d4):
    n = kernel_from_text(d4, "r^2, s")
    o = Orientation(d4, n)
    gens = antisym_generators(o, Z)
    sums = gens.by_family(Family.SUM_OUTSIDE_N)
    invols = gens.by_family(Family.INVOLUTION_OUTSIDE_N)
    assert el(d4, Z, [("r", 1), ("r^3", 1)]) in sums
    assert el(d4, Z, [("rs", 1)]) in invols and el(d4, Z, [("r^3s", 1)]) in invols


def test_generators_are_antisymmetric():
    for name in ["Q8", "D4", "G[16,4]", "G[16,9]"]:
        g = named_group(name)
        for n in enumerate_kernels(g):
            o = Orientation(g, n)
            for r in (Z, Z4, Z8):
                for x in antisym_generators(o, r):
                    assert phi_sigma(o, x) == -x


def test_commutator_examples(q8, g16_4):
    x = el(q8, Z, [("a", 1), ("a^3", -1)])
    assert commutator(x, x).is_zero()
    y = el(q8, Z, [("b", 1), ("a^2b", 1)])
    assert commutator(x, y).is_zero()
    s = el(g16_4, Z, [("a", 1), ("a^-1", 1)])
    t = el(g16_4, Z, [("b", 1), ("b^-1", -1)])
    c = commutator(s, t)
    target = el(g16_4, Z, [("ab", 2), ("a^-1b", 2), ("ab^-1", -2), ("a^-1b^-1", -2)])
    assert c == target or c == -target


@pytest.mark.parametrize("name, kernel, ring, expect", [
    ("Q8", "a", Z, True),
    ("G[16,4]", "a^2, b", Z, False),
    ("G[16,9]", "a^2, b", Z4, True),
    ("G[16,9]", "a^2, b", Z, False),
    ("G[16,13]", "a, b", Z, True),
])
def test_verdicts(name, kernel, ring, expect):
    g = named_group(name)
    v = is_skew_commutative(Orientation(g, kernel_from_text(g, kernel)), ring)
    assert v.commutative is expect
    if not expect:
        s, t = v.witness_pair
        assert not commutator(s, t).is_zero()
        assert v.summary().startswith("[")


def test_g16_4_witness_pair(g16_4):
    v = is_skew_commutative(Orientation(g16_4, kernel_from_text(g16_4, "a^2, b")), Z)
    s, t = v.witness_pair
    pair = {s, t}
    plus = el(g16_4, Z, [("a", 1), ("a^-1", 1)])
    minus = el(g16_4, Z, [("b", 1), ("b^-1", -1)])
    assert (plus in pair or -plus in pair) and (minus in pair or -minus in pair)


def test_abelian_groups_always_commute():
    for g in [cyclic(8), direct_product(cyclic(4), cyclic(2, "b"))]:
        for n in enumerate_kernels(g):
            for r in (Z, Z4, Z8):
                assert is_skew_commutative(Orientation(g, n), r).commutative


@pytest.mark.parametrize("name", ["Q8", "D4", "S3", "G[16,4]", "G[16,8]", "G[32,31]", "Q8xC2"])
def test_vector_matches_pairwise_and_dedup(name):
    g = named_group(name)
    for n in enumerate_kernels(g):
        o = Orientation(g, n)
        for r in (Z, Z4, Z8):
            v = is_skew_commutative(o, r)
            p = is_skew_commutative(o, r, method="pairwise")
            raw = is_skew_commutative(o, r, dedup=False)
            assert v.commutative == p.commutative == raw.commutative
            assert v.witness == p.witness and v.failing_pairs == p.failing_pairs


def test_errors(q8, d4):
    x = GroupRingElement.basis(q8, Z, 1)
    with pytest.raises(GroupRingError):
        x + GroupRingElement.basis(d4, Z, 1)
    with pytest.raises(GroupRingError):
        x + GroupRingElement.basis(q8, Z4, 1)
    with pytest.raises(GroupRingError):
        GroupRingElement(q8, Z, [1, 2])
    with pytest.raises(TypeError):
        x + 1
    with pytest.raises(ValueError):
        is_skew_commutative(Orientation(q8, enumerate_kernels(q8)[0]), Z, method="fast")
    big = GroupRingElement.basis(q8, Z, 1, INT64_MAX // 4)
    with pytest.raises(OverflowError):
        big * big


def test_str(q8):
    assert str(GroupRingElement.zero(q8, Z)) == "0"
    assert str(el(q8, Z4, [("1", 2), ("a", 3)])) == "2 - a"


def coeff_vectors(n):
    return st.lists(st.integers(-5, 5), min_size=n, max_size=n)


@given(st.data())
def test_mul_matches_naive(data):
    g = named_group(data.draw(st.sampled_from(["Q8", "D4", "G[16,4]"])))
    r = data.draw(st.sampled_from([Z, Z4, Z8]))
    x = GroupRingElement(g, r, data.draw(coeff_vectors(g.order)))
    y = GroupRingElement(g, r, data.draw(coeff_vectors(g.order)))
    assert np.array_equal((x * y).coeffs, naive_mul(x, y))


@given(st.data())
def test_phi_involutive_and_antimultiplicative(data):
    g = named_group(data.draw(st.sampled_from(["Q8", "D4", "S3", "G[16,13]", "G[32,30]"])))
    n = data.draw(st.sampled_from(enumerate_kernels(g)))
    o = Orientation(g, n)
    r = data.draw(st.sampled_from([Z, Z4]))
    x = GroupRingElement(g, r, data.draw(coeff_vectors(g.order)))
    y = GroupRingElement(g, r, data.draw(coeff_vectors(g.order)))
    assert phi_sigma(o, phi_sigma(o, x)) == x
    assert phi_sigma(o, x * y) == phi_sigma(o, y) * phi_sigma(o, x)
    assert phi_sigma(o, x + y) == phi_sigma(o, x) + phi_sigma(o, y)


def test_phi_on_all_basis_pairs_e_extended():
    g = with_e_factor(named_group("G[16,4]"), 1)
    o = Orientation(g, enumerate_kernels(g)[3])
    basis = [GroupRingElement.basis(g, Z, x) for x in range(g.order)]
    for u, v in itertools.product(basis, repeat=2):
        assert phi_sigma(o, u * v) == phi_sigma(o, v) * phi_sigma(o, u)
