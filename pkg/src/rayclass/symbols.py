"""Quadratic residue symbols by three independent routes, plus Jacobi/Kronecker.

The three Legendre routes (square enumeration, Euler's criterion, the
half-system sign product) are deliberately kept independent of each other so
that they can serve as oracles for one another.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .arith import is_prime
from .errors import (
    InternalInconsistencyError,
    InvalidArgumentError,
    InvalidHalfSystemError,
    NotCoprimeError,
)


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise InvalidArgumentError(f"{p} is not an odd prime")


@dataclass(frozen=True)
class HalfSystem:
    """(p-1)/2 residues mod p meeting each pair {a, -a} exactly once."""

    p: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        _require_odd_prime(self.p)
        m = (self.p - 1) // 2
        if len(self.elements) != m:
            raise InvalidHalfSystemError(
                f"expected {m} elements for p={self.p}, got {len(self.elements)}"
            )
        seen = set(self.elements)
        if len(seen) != m or seen | {self.p - a for a in seen} != set(range(1, self.p)):
            raise InvalidHalfSystemError(
                f"{self.elements} does not represent each pair {{a, -a}} mod {self.p} exactly once"
            )

    def index_of(self, residue: int) -> int:
        return self.elements.index(residue)


@dataclass(frozen=True)
class GaussLemmaRow:
    """One congruence a*a_j = sign * a_{target} mod p."""

    index: int
    product: int  # a * a_j reduced to [1, p-1]
    sign: int
    target: int


@dataclass(frozen=True)
class GaussLemmaTrace:
    a: int
    rows: tuple[GaussLemmaRow, ...]
    sign_product: int


def legendre_brute(a: int, p: int) -> int:
    """Legendre symbol by enumerating squares mod p. The slow oracle."""
    _require_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    return 1 if any(x * x % p == a for x in range(1, p)) else -1


def legendre_euler(a: int, p: int) -> int:
    """Legendre symbol via a^((p-1)/2) mod p."""
    _require_odd_prime(p)
    r = pow(a, (p - 1) // 2, p)
    if r == 0:
        return 0
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    # Euler's criterion admits no other value for prime p.
    raise InternalInconsistencyError(f"a^((p-1)/2) = {r} mod {p}; {p} is not prime")


def gauss_lemma(a: int, p: int, system: HalfSystem) -> tuple[int, GaussLemmaTrace]:
    """Legendre symbol as the product of half-system signs, with full trace."""
    if system.p != p:
        raise InvalidArgumentError(f"half-system is for p={system.p}, not {p}")
    if gcd(a, p) != 1:
        raise NotCoprimeError(f"{a} is not coprime to {p}")
    positions = {res: j for j, res in enumerate(system.elements)}
    rows = []
    sign_product = 1
    for j, aj in enumerate(system.elements):
        t = a * aj % p
        if t in positions:
            sign, target = 1, positions[t]
        else:
            sign, target = -1, positions[p - t]
        rows.append(GaussLemmaRow(index=j, product=t, sign=sign, target=target))
        sign_product *= sign
    return sign_product, GaussLemmaTrace(a=a % p, rows=tuple(rows), sign_product=sign_product)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1, by reciprocity reduction (no factoring)."""
    if n <= 0 or n % 2 == 0:
        raise InvalidArgumentError(f"Jacobi symbol needs odd positive n, got {n}")
    a %= n
    sign = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def kronecker(d: int, a: int) -> int:
    """Kronecker symbol (d/a), totally defined and completely multiplicative in a."""
    if a == 0:
        return 1 if d in (1, -1) else 0
    sign = 1
    if a < 0:
        a = -a
        if d < 0:
            sign = -sign
    while a % 2 == 0:
        if d % 2 == 0:
            return 0
        a //= 2
        if d % 8 in (3, 5):
            sign = -sign
    return sign * jacobi(d, a)


def pstar(p: int) -> int:
    """The signed prime (-1)^((p-1)/2) * p, always = 1 mod 4."""
    _require_odd_prime(p)
    return p if p % 4 == 1 else -p


def default_half_system(p: int) -> HalfSystem:
    """The canonical half-system {1, ..., (p-1)/2}."""
    _require_odd_prime(p)
    return HalfSystem(p=p, elements=tuple(range(1, (p - 1) // 2 + 1)))


def random_half_system(p: int, rng: random.Random) -> HalfSystem:
    """A uniformly random half-system: pick one representative of each pair {a, -a}."""
    _require_odd_prime(p)
    elements = tuple(a if rng.random() < 0.5 else p - a for a in range(1, (p - 1) // 2 + 1))
    return HalfSystem(p=p, elements=elements)
