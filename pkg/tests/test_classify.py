import pytest

from skewring.classify import (
    CASE_IDS,
    CASE_RINGS,
    TheoremCase,
    build_catalog,
    catalog_entry,
    classify,
    crosscheck_alternate_forms,
    extend_kernel,
    kernel_from_text,
    named_group,
    predict,
    reference_pairs,
)
from skewring.coeffring import REPRESENTATIVES, RingClass
from skewring.groupcore import cyclic, subgroup_closure, with_e_factor
from skewring.groupring import is_skew_commutative
from skewring.orient import Orientation, enumerate_kernels

R2, C4, OTHER = RingClass.R2_ZERO, RingClass.CHAR_4, RingClass.OTHER


def test_catalog_shape():
    cat = build_catalog()
    assert [e.case_id for e in cat] == ["C1", "C2", "C5", "C6", "C7", "C8", "C9", "C10"]
    assert set(CASE_RINGS) == set(CASE_IDS)


def test_catalog_examples():
    c7 = catalog_entry("C7")
    assert c7.base.order == 16 and len(c7.good_kernels) == 3
    c8 = catalog_entry("C8")
    assert c8.base.order == 32 and len(c8.good_kernels) == 1
    c1 = catalog_entry("C1")
    assert c1.base.order == 16
    assert c1.good_kernels[0] == kernel_from_text(c1.base, "a^2, ab")
    with pytest.raises(KeyError):
        catalog_entry("C11")


def test_catalog_kernels_good_over_representative():
    for e in build_catalog():
        for k in e.good_kernels:
            for rc in e.ring_requirement:
                v = is_skew_commutative(Orientation(e.base, k), REPRESENTATIVES[rc])
                assert v.commutative, (e.case_id, k.label(), rc)


def test_classify_examples(q8, q8c2, d4):
    assert classify(q8, kernel_from_text(q8, "a"), R2) == TheoremCase("C4i")
    n = subgroup_closure(q8c2, q8c2.generator_elems[:2])
    assert classify(q8c2, n, C4) == TheoremCase("C4ii")
    assert classify(q8c2, n, R2) is None
    assert classify(d4, kernel_from_text(d4, "r^2, s"), R2) == TheoremCase("C3")
    g = named_group("G[16,13]")
    assert classify(g, kernel_from_text(g, "a, bc"), R2) is None
    h = with_e_factor(named_group("G[16,4]"), 1)
    case = classify(h, kernel_from_text(h, "a, b^2, e"), OTHER)
    assert case is not None and case.case_id == "C5"


def test_predict_examples(g16_8):
    assert predict(g16_8, kernel_from_text(g16_8, "a"), R2) is False
    g = named_group("G[32,30]")
    assert predict(g, kernel_from_text(g, "b, c, d"), R2) is True
    c4 = cyclic(4)
    for rc in RingClass:
        assert predict(c4, enumerate_kernels(c4)[0], rc) is True


def test_preconditions(q8, d4):
    with pytest.raises(ValueError):
        classify(cyclic(4), enumerate_kernels(cyclic(4))[0], R2)
    with pytest.raises(ValueError):
        classify(q8, enumerate_kernels(d4)[0], R2)
    with pytest.raises(ValueError):
        classify(q8, subgroup_closure(q8, []), R2)


def test_case_string():
    assert str(TheoremCase("C5", "<a,b^2>xE")) == "C5 <a,b^2>xE"
    assert str(TheoremCase("C3")) == "C3"


def test_extend_kernel_index_two():
    e = catalog_entry("C9")
    for r in range(3):
        g, ks = reference_pairs("C9", r)
        assert g.order == e.base.order * 2**r
        assert all(2 * len(k) == g.order and k.is_normal() for k in ks)
    assert extend_kernel(e.base, e.good_kernels[0], e.base, 0) is e.good_kernels[0]


def test_non_2group_never_predicted():
    s3 = named_group("S3")
    for n in enumerate_kernels(s3):
        for rc in RingClass:
            assert classify(s3, n, rc) is None


@pytest.mark.parametrize("name", ["G[16,4]", "G[32,35]", "Q8xC2", "G[16,13]"])
def test_prediction_matches_brute_force(name):
    g = named_group(name)
    for n in enumerate_kernels(g):
        for rc, r in REPRESENTATIVES.items():
            assert predict(g, n, rc) == is_skew_commutative(Orientation(g, n), r).commutative


def test_alternate_forms_agree():
    checks = crosscheck_alternate_forms()
    assert len(checks) == 10
    bad = [c.item for c in checks if not c.ok]
    assert bad == []
