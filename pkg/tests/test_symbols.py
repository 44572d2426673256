import random
from math import gcd

import pytest

from rayclass.errors import (
    InvalidArgumentError,
    InvalidHalfSystemError,
    NotCoprimeError,
)
from rayclass.symbols import (
    HalfSystem,
    default_half_system,
    gauss_lemma,
    jacobi,
    kronecker,
    legendre_brute,
    legendre_euler,
    pstar,
    random_half_system,
)


def test_legendre_brute_examples():
    assert legendre_brute(1, 11) == 1
    assert legendre_brute(3, 7) == -1
    assert legendre_brute(2, 7) == 1
    assert legendre_brute(14, 7) == 0


def test_legendre_brute_rejects_composite():
    with pytest.raises(InvalidArgumentError):
        legendre_brute(3, 15)
    with pytest.raises(InvalidArgumentError):
        legendre_brute(3, 2)


def test_legendre_euler_examples():
    assert legendre_euler(3, 7) == -1
    assert legendre_euler(4, 7) == 1
    assert legendre_euler(14, 7) == 0


def test_gauss_lemma_examples():
    A = default_half_system(7)
    assert A.elements == (1, 2, 3)
    value, trace = gauss_lemma(3, 7, A)
    assert value == -1
    assert tuple(r.sign for r in trace.rows) == (1, -1, 1)
    value, trace = gauss_lemma(2, 7, A)
    assert value == 1
    assert tuple(r.sign for r in trace.rows) == (1, -1, -1)
    value, trace = gauss_lemma(1, 7, A)
    assert value == 1
    assert all(r.sign == 1 for r in trace.rows)


def test_gauss_lemma_trace_invariants():
    rng = random.Random(7)
    for p in (5, 7, 11, 13, 31):
        for system in (default_half_system(p), random_half_system(p, rng)):
            for a in range(1, p):
                value, trace = gauss_lemma(a, p, system)
                targets = [r.target for r in trace.rows]
                assert sorted(targets) == list(range(len(system.elements)))
                for r in trace.rows:
                    lhs = a * system.elements[r.index] % p
                    assert lhs == r.sign * system.elements[r.target] % p
                prod = 1
                for r in trace.rows:
                    prod *= r.sign
                assert prod == trace.sign_product == value


def test_gauss_lemma_not_coprime():
    with pytest.raises(NotCoprimeError):
        gauss_lemma(7, 7, default_half_system(7))


def test_half_system_validation():
    with pytest.raises(InvalidHalfSystemError):
        HalfSystem(p=7, elements=(1, 2))
    with pytest.raises(InvalidHalfSystemError):
        HalfSystem(p=7, elements=(1, 2, 5))  # 2 and 5 represent the same pair


def test_three_route_agreement_small():
    for p in (3, 5, 7, 11, 13, 17, 19, 23):
        A = default_half_system(p)
        for a in range(1, p):
            expected = legendre_brute(a, p)
            assert legendre_euler(a, p) == expected
            assert gauss_lemma(a, p, A)[0] == expected


def test_jacobi_examples():
    assert jacobi(5, 1) == 1
    assert jacobi(-2, 1) == 1
    assert jacobi(2, 15) == 1
    assert jacobi(3, 7) == -1


def test_jacobi_matches_legendre_and_is_multiplicative():
    for n in (3, 5, 7, 11, 13, 17):
        for a in range(-10, 30):
            assert jacobi(a, n) == legendre_brute(a, n)
    for a in range(1, 20):
        for n1 in (3, 5, 9, 15):
            for n2 in (3, 7, 11):
                assert jacobi(a, n1 * n2) == jacobi(a, n1) * jacobi(a, n2)


def test_jacobi_rejects_even_or_nonpositive():
    with pytest.raises(InvalidArgumentError):
        jacobi(2, 6)
    with pytest.raises(InvalidArgumentError):
        jacobi(2, -3)


def test_kronecker_examples():
    assert kronecker(7, 1) == 1
    assert kronecker(5, 19) == 1
    assert kronecker(-4, 3) == -1


def test_kronecker_edge_conventions():
    assert kronecker(1, 0) == 1
    assert kronecker(-1, 0) == 1
    assert kronecker(5, 0) == 0
    for d in (-11, -4, 5, 13):
        assert kronecker(d, -1) == (1 if d > 0 else -1)
    # (d/2): 0 for even d, +1 for d = +-1 mod 8, -1 for d = +-3 mod 8
    assert kronecker(8, 2) == 0
    assert kronecker(17, 2) == 1
    assert kronecker(7, 2) == 1
    assert kronecker(5, 2) == -1
    assert kronecker(-3, 2) == -1


def test_kronecker_completely_multiplicative():
    rng = random.Random(11)
    for d in (-8, -4, -3, 5, 12, 13, 21):
        for _ in range(200):
            a = rng.randint(-50, 50)
            b = rng.randint(-50, 50)
            assert kronecker(d, a * b) == kronecker(d, a) * kronecker(d, b)


def test_kronecker_periodicity_for_fundamental_d():
    for d in (-20, -8, -7, -4, -3, 5, 8, 12, 13):
        for a in range(1, 3 * abs(d)):
            assert kronecker(d, a) == kronecker(d, a + abs(d))


def test_pstar():
    assert pstar(5) == 5
    assert pstar(3) == -3
    assert pstar(7) == -7
    for p in (3, 5, 7, 11, 13, 17, 19):
        assert pstar(p) % 4 == 1
    with pytest.raises(InvalidArgumentError):
        pstar(2)
    with pytest.raises(InvalidArgumentError):
        pstar(9)


def test_half_system_independence():
    rng = random.Random(3)
    for p in (5, 13, 29):
        A0 = default_half_system(p)
        for a in range(1, p):
            if gcd(a, p) != 1:
                continue
            expected = gauss_lemma(a, p, A0)[0]
            for _ in range(10):
                assert gauss_lemma(a, p, random_half_system(p, rng))[0] == expected
