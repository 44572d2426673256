"""Exact integer arithmetic substrate: primality, factorization, totients, orders.

Everything here is deterministic and exact for 64-bit inputs; Python's
arbitrary-precision integers make the 128-bit intermediate requirement moot.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import InvalidArgumentError, NotCoprimeError

# Deterministic Miller-Rabin witness set, sufficient for all n < 2^64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_BOUND = 10**6


def mod_pow(base: int, exp: int, m: int) -> int:
    """base**exp mod m for m >= 2 and exp >= 0."""
    if m < 2:
        raise InvalidArgumentError(f"modulus must be >= 2, got {m}")
    if exp < 0:
        raise InvalidArgumentError(f"exponent must be nonnegative, got {exp}")
    return pow(base, exp, m)


def is_prime(n: int) -> bool:
    """Exact primality test (deterministic Miller-Rabin) for 64-bit n."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeFactorization:
    """Sorted (prime, exponent) pairs; the empty tuple factors 1."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        last = 1
        for p, e in self.factors:
            if p <= last:
                raise InvalidArgumentError("primes must be strictly increasing")
            if e < 1:
                raise InvalidArgumentError("exponents must be >= 1")
            if not is_prime(p):
                raise InvalidArgumentError(f"{p} is not prime")
            last = p

    @property
    def value(self) -> int:
        n = 1
        for p, e in self.factors:
            n *= p**e
        return n

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of odd composite n (Brent's cycle-finding variant)."""
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def factorize(n: int) -> PrimeFactorization:
    """Complete prime factorization of n >= 1."""
    if n < 1:
        raise InvalidArgumentError(f"can only factor positive integers, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            n //= p
            out[p] = out.get(p, 0) + 1
    # 30-wheel trial division; Pollard rho mops up anything past the bound.
    d = 7
    increments = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d <= _TRIAL_BOUND and d * d <= n:
        while n % d == 0:
            n //= d
            out[d] = out.get(d, 0) + 1
        d += increments[i]
        i = (i + 1) % 8
    _factor_into(n, out)
    return PrimeFactorization(tuple(sorted(out.items())))


def euler_phi(n: int) -> int:
    """Count of residues in [1, n] coprime to n."""
    if n < 1:
        raise InvalidArgumentError(f"euler_phi requires n >= 1, got {n}")
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def mult_order(a: int, m: int) -> int:
    """Least k >= 1 with a**k == 1 mod m; requires gcd(a, m) = 1."""
    if m < 2:
        raise InvalidArgumentError(f"modulus must be >= 2, got {m}")
    if gcd(a, m) != 1:
        raise NotCoprimeError(f"{a} is not coprime to {m}")
    # Start at phi(m) and strip prime factors while the power stays 1.
    order = euler_phi(m)
    for p, _ in factorize(order):
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by a sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, n + 1) if sieve[i]]
