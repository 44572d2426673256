import random

import pytest

from rayclass.arith import euler_phi, primes_up_to
from rayclass.classfield import (
    FundamentalDiscriminant,
    fundamental_discriminants,
    squares_group,
    takagi_group_quadratic,
)
from rayclass.errors import RamifiedError
from rayclass.groups import group_from_unit_residues, subgroup_generated
from rayclass.splitting import (
    Cyclotomic,
    CyclotomicSubfield,
    Quadratic,
    gauss_lemma_is_transfer,
    qr_via_splitting,
    qr_via_transfer,
    spl_set,
    splits_completely_in_class_field,
    splitting_cyclotomic,
    splitting_in_subfield,
    splitting_quadratic,
    transfer_kernel_classfield,
    transfer_sign,
)
from rayclass.symbols import (
    default_half_system,
    kronecker,
    legendre_brute,
    pstar,
    random_half_system,
)


def unit_group_with_labels(m):
    G = group_from_unit_residues(m)
    return G, {G.label_of(i): i for i in G.elements}


def test_splitting_quadratic():
    assert splitting_quadratic(19, 5).word == "split"
    assert splitting_quadratic(3, -4).word == "inert"
    assert splitting_quadratic(2, -4).word == "ramified"
    for q in (2, 3, 5, 19):
        assert splitting_quadratic(q, 5).degree == 2


def test_splitting_cyclotomic():
    assert splitting_cyclotomic(13, 12) == splitting_cyclotomic(13, 12)
    st = splitting_cyclotomic(13, 12)
    assert (st.e, st.f, st.g) == (1, 1, 4)
    st = splitting_cyclotomic(5, 12)
    assert (st.e, st.f, st.g) == (1, 2, 2)
    st = splitting_cyclotomic(2, 12)
    assert (st.e, st.f, st.g) == (2, 2, 1)


def test_splitting_cyclotomic_degree_sweep():
    for m in range(3, 40):
        for q in primes_up_to(60):
            assert splitting_cyclotomic(q, m).degree == euler_phi(m)


def test_splitting_in_subfield():
    G, labels = unit_group_with_labels(7)
    full = subgroup_generated(G, set(labels.values()))
    st = splitting_in_subfield(5, 7, full)
    assert (st.e, st.f, st.g) == (1, 1, 1)  # fixed field is Q
    squares = subgroup_generated(G, {labels[2]})
    st = splitting_in_subfield(2, 7, squares)
    assert st.f == 1 and st.g == 2  # 2 splits in Q(sqrt(-7))
    assert kronecker(-7, 2) == 1
    with pytest.raises(RamifiedError):
        splitting_in_subfield(7, 7, squares)


def test_subfield_compatibility_with_cyclotomic():
    for m in (5, 7, 12, 15):
        G, labels = unit_group_with_labels(m)
        trivial = subgroup_generated(G, set())
        full = subgroup_generated(G, set(labels.values()))
        for q in primes_up_to(40):
            if m % q == 0:
                continue
            assert splitting_in_subfield(q, m, trivial) == splitting_cyclotomic(q, m)
            assert splitting_in_subfield(q, m, full).degree == 1


def test_maximal_real_subfield():
    # U = {+-1} fixes the maximal real subfield: q has f = 1 iff q = +-1 mod p
    p = 11
    G, labels = unit_group_with_labels(p)
    U = subgroup_generated(G, {labels[p - 1]})
    for q in primes_up_to(100):
        if q == p:
            continue
        st = splitting_in_subfield(q, p, U)
        assert (st.f == 1) == (q % p in (1, p - 1))


def test_quadratic_subfield_compatibility():
    for p in (5, 7, 11, 13):
        G, labels = unit_group_with_labels(p)
        squares = subgroup_generated(G, {labels[x * x % p] for x in range(1, p)})
        d = pstar(p)
        for q in primes_up_to(200):
            if q == 2 or q == p:
                continue
            assert splitting_in_subfield(q, p, squares) == splitting_quadratic(q, d)


def test_splits_completely_in_class_field():
    sq5 = squares_group(5)
    for q in primes_up_to(60):
        if q == 5:
            continue
        assert splits_completely_in_class_field(q, sq5) == (legendre_brute(q, 5) == 1)
    H = takagi_group_quadratic(5)
    assert splits_completely_in_class_field(11, H)


def test_spl_sets():
    assert spl_set(Quadratic(FundamentalDiscriminant(5)), 50) == [11, 19, 29, 31, 41]
    assert spl_set(Cyclotomic(5), 50) == [11, 31, 41]
    G, labels = unit_group_with_labels(7)
    squares = subgroup_generated(G, {labels[2]})
    fld = CyclotomicSubfield(7, squares)
    assert spl_set(fld, 60) == [q for q in primes_up_to(60) if q != 7 and kronecker(-7, q) == 1]


def test_transfer_kernel_classfield():
    H, fld = transfer_kernel_classfield(3)
    assert H.subgroup.order == 1 and fld.d.d == -3
    H, fld = transfer_kernel_classfield(7)
    assert sorted(H.parent.group.label_of(i) for i in H.subgroup.members) == [1, 2, 4]
    assert fld.d.d == -7
    H, fld = transfer_kernel_classfield(5)
    assert sorted(H.parent.group.label_of(i) for i in H.subgroup.members) == [1, 4]
    assert fld.d.d == 5


def test_gauss_lemma_is_transfer():
    report = gauss_lemma_is_transfer(7, 1, default_half_system(7))
    assert report.ok and report.transfer_value == 1
    report = gauss_lemma_is_transfer(7, 3, default_half_system(7))
    assert report.ok and report.transfer_value == -1
    assert sorted(report.transfer_signs) == sorted(report.gauss_signs) == [-1, 1, 1]
    report = gauss_lemma_is_transfer(7, 2, default_half_system(7))
    assert report.ok and sorted(report.gauss_signs) == [-1, -1, 1]


def test_gauss_lemma_is_transfer_random_systems():
    rng = random.Random(17)
    for p in (5, 11, 23):
        for a in range(1, p):
            for _ in range(5):
                assert gauss_lemma_is_transfer(p, a, random_half_system(p, rng)).ok


def test_qr_via_splitting_examples():
    chk = qr_via_splitting(5, 11)
    assert (chk.lhs, chk.rhs, chk.equal) == (1, 1, True)
    chk = qr_via_splitting(3, 5)
    assert (chk.lhs, chk.rhs, chk.equal) == (-1, -1, True)
    chk = qr_via_splitting(7, 3)
    assert (chk.lhs, chk.rhs, chk.equal) == (-1, -1, True)


def test_qr_via_transfer_examples():
    chk = qr_via_transfer(7, 3)
    assert (chk.lhs, chk.rhs, chk.equal) == (-1, -1, True)
    chk = qr_via_transfer(5, 11)
    assert (chk.lhs, chk.rhs, chk.equal) == (1, 1, True)
    chk = qr_via_transfer(7, 29)  # 29 = 1 mod 7
    assert chk.rhs == 1 and chk.equal


def test_qr_pairs_small_sweep():
    odd = [p for p in primes_up_to(60) if p > 2]
    for p in odd:
        for q in odd:
            if p == q:
                continue
            assert qr_via_splitting(p, q).equal
            assert qr_via_transfer(p, q).equal


def test_spl_three_ways_agree():
    for p in (3, 5, 7, 11, 13):
        H, fld = transfer_kernel_classfield(p)
        in_spl = set(spl_set(fld, 300))
        for q in primes_up_to(300):
            if q == p:
                continue
            assert (q in in_spl) == (transfer_sign(p, q) == 1) == (legendre_brute(q, p) == 1)
