import pytest

from rayclass.arith import (
    euler_phi,
    factorize,
    is_prime,
    mod_pow,
    mult_order,
    primes_up_to,
)
from rayclass.errors import InvalidArgumentError, NotCoprimeError


def sieve_oracle(n):
    """Independent sieve of Eratosthenes, kept separate from the library's."""
    flags = [True] * (n + 1)
    flags[0] = flags[1] = False
    for p in range(2, int(n**0.5) + 1):
        if flags[p]:
            for k in range(p * p, n + 1, p):
                flags[k] = False
    return flags


def test_mod_pow_examples():
    assert mod_pow(2, 10, 1000) == 24
    assert mod_pow(12345, 0, 7) == 1
    assert mod_pow(3, 3, 7) == 6


def test_mod_pow_large_inputs():
    b = 2**62 - 57
    m = 2**63 - 25
    assert mod_pow(b, 3, m) == b**3 % m


def test_mod_pow_bad_modulus():
    with pytest.raises(InvalidArgumentError):
        mod_pow(2, 3, 1)


def test_is_prime_examples():
    assert not is_prime(1)
    assert not is_prime(561)  # Carmichael number
    assert is_prime(7919)


def test_is_prime_against_sieve():
    flags = sieve_oracle(10**5)
    for n in range(10**5 + 1):
        assert is_prime(n) == flags[n], n


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime((2**31 - 1) * (2**31 - 11))


def test_factorize_examples():
    assert tuple(factorize(1)) == ()
    assert tuple(factorize(12)) == ((2, 2), (3, 1))
    assert tuple(factorize(1000003 * 1000033)) == ((1000003, 1), (1000033, 1))


def test_factorize_reconstructs():
    for n in range(2, 10**4 + 1):
        assert factorize(n).value == n


def test_factorize_rejects_zero():
    with pytest.raises(InvalidArgumentError):
        factorize(0)


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(12) == 4
    for p in (2, 3, 5, 101, 7919):
        assert euler_phi(p) == p - 1


def test_euler_theorem_sanity():
    from math import gcd

    for m in range(2, 2001):
        phi = euler_phi(m)
        for a in range(1, m):
            if gcd(a, m) == 1:
                assert mod_pow(a, phi, m) == 1


def test_mult_order_examples():
    assert mult_order(1, 5) == 1
    assert mult_order(2, 7) == 3
    assert mult_order(5, 12) == 2


def test_mult_order_divides_phi():
    from math import gcd

    for m in range(2, 200):
        phi = euler_phi(m)
        for a in range(1, m):
            if gcd(a, m) == 1:
                k = mult_order(a, m)
                assert phi % k == 0
                assert mod_pow(a, k, m) == 1
                if k > 1:
                    assert all(mod_pow(a, j, m) != 1 for j in range(1, min(k, 12)))


def test_mult_order_not_coprime():
    with pytest.raises(NotCoprimeError):
        mult_order(6, 9)


def test_primes_up_to():
    assert primes_up_to(1) == []
    assert primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]
