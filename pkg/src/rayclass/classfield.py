"""Ray class groups of Q, ideal groups, Artin symbols, conductors, witnesses.

A modulus is a positive integer m0 plus an optional infinite place.  With the
infinite place, ray classes mod m0*oo biject with coprime residues mod m0 via
the unique positive generator of each ideal; without it, (a) = (-a) forces the
quotient by the class of -1, and classes are labeled by min(r, m0 - r).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd

from .arith import euler_phi, factorize, is_prime, mult_order, primes_up_to
from .errors import (
    InvalidArgumentError,
    InvalidDiscriminantError,
    NotCoprimeError,
    NotInTakagiGroupError,
    RamifiedError,
    WitnessNotFoundError,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    TABLE_BOUND,
    group_from_unit_residues,
)
from .errors import TooLargeError
from .symbols import kronecker


@dataclass(frozen=True)
class Modulus:
    """Finite part m0 >= 1 plus optionally the real place."""

    m0: int
    infinite: bool = False

    def __post_init__(self) -> None:
        if self.m0 < 1:
            raise InvalidArgumentError(f"finite part must be >= 1, got {self.m0}")

    def __str__(self) -> str:
        return f"({self.m0}){'oo' if self.infinite else ''}"


def is_fundamental_discriminant(d: int) -> bool:
    """True for discriminants of quadratic fields: 1 mod 4 squarefree, or 4m, m = 2,3 mod 4 squarefree."""
    if d == 0 or d == 1:
        return False
    if d % 4 == 1:
        return _squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def _squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(abs(n)))


@dataclass(frozen=True)
class FundamentalDiscriminant:
    d: int

    def __post_init__(self) -> None:
        if not is_fundamental_discriminant(self.d):
            raise InvalidDiscriminantError(f"{self.d} is not a fundamental discriminant")

    def __int__(self) -> int:
        return self.d

    @property
    def modulus(self) -> Modulus:
        """(|d|), with the infinite place exactly when d < 0."""
        return Modulus(abs(self.d), infinite=self.d < 0)


def fundamental_discriminants(limit: int) -> list[FundamentalDiscriminant]:
    """All fundamental discriminants with |d| <= limit, sorted by |d| then sign."""
    out = []
    for n in range(2, limit + 1):
        for d in (n, -n):
            if is_fundamental_discriminant(d):
                out.append(FundamentalDiscriminant(d))
    return out


@dataclass(frozen=True, eq=False)
class RayClassGroup:
    """D_m / P_m^(1) for Q, materialized as a labeled table group."""

    modulus: Modulus
    group: FiniteGroup

    @property
    def order(self) -> int:
        return self.group.order

    @cached_property
    def _id_of_label(self) -> dict[int, int]:
        return {self.group.label_of(i): i for i in self.group.elements}

    def canonical_label(self, residue: int) -> int:
        m0 = self.modulus.m0
        if m0 == 1:
            return 1
        r = residue % m0
        if gcd(r, m0) != 1:
            raise NotCoprimeError(f"{residue} is not coprime to {m0}")
        if not self.modulus.infinite:
            r = min(r, m0 - r)
        return r

    def class_of(self, residue: int) -> "RayClass":
        return RayClass(parent=self, element=self._id_of_label[self.canonical_label(residue)])


@dataclass(frozen=True)
class RayClass:
    parent: RayClassGroup
    element: int

    @property
    def label(self) -> int:
        return self.parent.group.label_of(self.element)

    @property
    def order(self) -> int:
        return self.parent.group.element_order(self.element)

    def __mul__(self, other: "RayClass") -> "RayClass":
        if other.parent is not self.parent:
            raise InvalidArgumentError("classes belong to different ray class groups")
        return RayClass(self.parent, self.parent.group.op(self.element, other.element))

    def inverse(self) -> "RayClass":
        return RayClass(self.parent, self.parent.group.inv(self.element))

    @property
    def is_identity(self) -> bool:
        return self.element == self.parent.group.identity


@dataclass(frozen=True, eq=False)
class IdealGroupH:
    """An ideal group P_m^(1) <= H <= D_m, tagged with where it came from."""

    parent: RayClassGroup
    subgroup: Subgroup
    provenance: str

    def contains(self, cls: RayClass) -> bool:
        return cls.element in self.subgroup


def _trivial_labeled_group() -> FiniteGroup:
    return FiniteGroup(table=((0,),), identity=0, labels=(1,))


def ray_class_group(m: Modulus) -> RayClassGroup:
    """Materialize D_m / P_m^(1) with residue labels."""
    m0 = m.m0
    if euler_phi(m0) > TABLE_BOUND:
        raise TooLargeError(f"phi({m0}) exceeds the table bound {TABLE_BOUND}")
    if m0 <= 2:
        return RayClassGroup(modulus=m, group=_trivial_labeled_group())
    if m.infinite:
        return RayClassGroup(modulus=m, group=group_from_unit_residues(m0))
    # Quotient of (Z/m0)^x by {+-1}: label each class {r, m0-r} by its least member.
    reps = [r for r in range(1, m0 // 2 + 1) if gcd(r, m0) == 1]
    index = {r: i for i, r in enumerate(reps)}

    def reduce(t: int) -> int:
        return index[min(t, m0 - t)]

    table = tuple(tuple(reduce(a * b % m0) for b in reps) for a in reps)
    group = FiniteGroup(table=table, identity=index[1], labels=tuple(reps))
    return RayClassGroup(modulus=m, group=group)


def ideal_class(G: RayClassGroup, num: int, den: int = 1) -> RayClass:
    """Class of the fractional ideal (num/den); signs are irrelevant to ideals."""
    if num == 0 or den <= 0:
        raise InvalidArgumentError("need a nonzero numerator and positive denominator")
    m0 = G.modulus.m0
    if gcd(abs(num) * den, m0) != 1:
        raise NotCoprimeError(f"{num}/{den} is not coprime to {m0}")
    return G.class_of(abs(num)) * G.class_of(den).inverse()


def takagi_group_quadratic(d: FundamentalDiscriminant | int) -> IdealGroupH:
    """Norm group of Q(sqrt(d)): the classes (a) with Kronecker symbol (d/a) = +1."""
    if isinstance(d, int):
        d = FundamentalDiscriminant(d)
    G = ray_class_group(d.modulus)
    members = tuple(
        sorted(i for i in G.group.elements if kronecker(d.d, G.group.label_of(i)) == 1)
    )
    sub = Subgroup(parent=G.group, members=members)
    sub.validate()
    return IdealGroupH(parent=G, subgroup=sub, provenance=f"takagi-quadratic({d.d})")


def takagi_group_cyclotomic(m: int) -> IdealGroupH:
    """Norm group of Q(zeta_m) mod m*oo: the principal ray alone."""
    if m < 3:
        raise InvalidArgumentError(f"cyclotomic construction needs m >= 3, got {m}")
    G = ray_class_group(Modulus(m, infinite=True))
    sub = Subgroup(parent=G.group, members=(G.group.identity,))
    return IdealGroupH(parent=G, subgroup=sub, provenance=f"takagi-cyclotomic({m})")


def squares_group(p: int) -> IdealGroupH:
    """The ideal group of square classes mod p*oo; index 2 in the ray class group."""
    if p == 2 or not is_prime(p):
        raise InvalidArgumentError(f"{p} is not an odd prime")
    G = ray_class_group(Modulus(p, infinite=True))
    members = tuple(sorted({G.group.op(i, i) for i in G.group.elements}))
    sub = Subgroup(parent=G.group, members=members)
    sub.validate()
    return IdealGroupH(parent=G, subgroup=sub, provenance=f"squares({p})")


def index(H: IdealGroupH) -> int:
    """(D_m : H)."""
    return H.parent.order // H.subgroup.order


@dataclass(frozen=True)
class FirstInequalityResult:
    index: int
    degree: int
    holds: bool      # index <= degree
    divides: bool    # the post-CFT refinement

    def __bool__(self) -> bool:
        return self.holds


def first_inequality_check(H: IdealGroupH, degree: int) -> FirstInequalityResult:
    """Check (D_m : H) <= degree, and whether the index divides the degree."""
    if degree < 1:
        raise InvalidArgumentError(f"degree must be positive, got {degree}")
    idx = index(H)
    return FirstInequalityResult(
        index=idx, degree=degree, holds=idx <= degree, divides=degree % idx == 0
    )


def artin_symbol_cyclotomic(p: int, m: int) -> RayClass:
    """Frobenius of p in Q(zeta_m)/Q as the class of p mod m*oo."""
    if not is_prime(p):
        raise InvalidArgumentError(f"{p} is not prime")
    if m < 3:
        raise InvalidArgumentError(f"need m >= 3, got {m}")
    if m % p == 0:
        raise RamifiedError(f"{p} divides {m}")
    return ray_class_group(Modulus(m, infinite=True)).class_of(p)


def artin_symbol_quadratic(q: int, d: FundamentalDiscriminant | int) -> int:
    """Frobenius of q in Q(sqrt(d))/Q as a sign, i.e. the Kronecker symbol (d/q)."""
    if isinstance(d, int):
        d = FundamentalDiscriminant(d)
    if not is_prime(q):
        raise InvalidArgumentError(f"{q} is not prime")
    if d.d % q == 0:
        raise RamifiedError(f"{q} ramifies in discriminant {d.d}")
    return kronecker(d.d, q)


@dataclass(frozen=True)
class ConstancyReport:
    """Per-ray-class symbol values for primes up to a bound, plus any violation."""

    d: int
    bound: int
    class_values: tuple[tuple[int, int], ...]  # (class label, symbol value), sorted
    counterexample: tuple[int, int] | None      # (prime, clashing value) if any

    @property
    def constant_on_classes(self) -> bool:
        return self.counterexample is None


def artin_class_constancy_check(d: FundamentalDiscriminant | int, bound: int) -> ConstancyReport:
    """Partition primes <= bound by ray class mod (|d|, oo iff d<0); check (d/.) constant per class."""
    if isinstance(d, int):
        d = FundamentalDiscriminant(d)
    G = ray_class_group(d.modulus)
    values: dict[int, int] = {}
    counterexample = None
    for p in primes_up_to(bound):
        if abs(d.d) % p == 0:
            continue
        label = G.class_of(p).label
        chi = kronecker(d.d, p)
        if label in values:
            if values[label] != chi and counterexample is None:
                counterexample = (p, chi)
        else:
            values[label] = chi
    return ConstancyReport(
        d=d.d,
        bound=bound,
        class_values=tuple(sorted(values.items())),
        counterexample=counterexample,
    )


def _divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def _character_factors_through(d: int, m: Modulus) -> bool:
    """Does (d/.) on positive integers coprime to d factor through ray classes mod m?"""
    dd = abs(d)
    fibers: dict[int, int] = {}
    for r in range(1, dd + 1):
        if gcd(r, dd) != 1:
            continue
        t = r % m.m0
        if not m.infinite:
            t = min(t, (m.m0 - t) % m.m0)
        chi = kronecker(d, r)
        if fibers.setdefault(t, chi) != chi:
            return False
    return True


def conductor_quadratic(d: FundamentalDiscriminant | int) -> Modulus:
    """Smallest modulus (finite part dividing |d|) the quadratic character factors through."""
    if isinstance(d, int):
        d = FundamentalDiscriminant(d)
    for f in _divisors(abs(d.d)):
        for infinite in (False, True):
            m = Modulus(f, infinite=infinite)
            if _character_factors_through(d.d, m):
                return m
    raise InvalidArgumentError(f"character mod {d.d} factors through no divisor modulus")  # unreachable


def takagi_witness(
    a: int, d: FundamentalDiscriminant | int, prime_bound: int = 10**4
) -> tuple[tuple[int, int], ...]:
    """Factor the class of a as (split primes) * (something = 1 mod |d| and > 0).

    Returns (prime, exponent) pairs with (d/p) = +1 such that
    s = a * prod p**(-e) is a positive rational with numerator = denominator
    mod |d|.  The decomposition is re-verified before returning.
    """
    if isinstance(d, int):
        d = FundamentalDiscriminant(d)
    dd = abs(d.d)
    if a <= 0:
        raise InvalidArgumentError(f"need a positive integer, got {a}")
    if gcd(a, dd) != 1:
        raise NotCoprimeError(f"{a} is not coprime to {d.d}")
    if kronecker(d.d, a) != 1:
        raise NotInTakagiGroupError(f"({d.d}/{a}) = {kronecker(d.d, a)}, not +1")

    target = a % dd
    witness: tuple[tuple[int, int], ...] | None = None
    if target == 1 % dd:
        witness = ()
    else:
        split_primes = _split_primes(d.d, prime_bound)
        # A single prime = a mod |d| gives s = a/p; Dirichlet guarantees one at
        # desk scale. Fall back to a breadth-first walk over split-prime classes.
        for p in split_primes:
            if p % dd == target:
                witness = ((p, 1),)
                break
        if witness is None:
            witness = _witness_bfs(target, dd, split_primes)
    if witness is None:
        raise WitnessNotFoundError(
            f"no witness for a={a}, d={d.d} with primes up to {prime_bound}"
        )
    _verify_witness(a, d.d, witness)
    return witness


@lru_cache(maxsize=256)
def _split_primes(d: int, bound: int) -> tuple[int, ...]:
    return tuple(
        p for p in primes_up_to(bound) if abs(d) % p != 0 and kronecker(d, p) == 1
    )


def _witness_bfs(
    target: int, dd: int, split_primes: list[int]
) -> tuple[tuple[int, int], ...] | None:
    """BFS over residues mod dd, multiplying by split primes or their inverses."""
    from collections import deque

    gens = split_primes[:64]
    start = 1 % dd
    paths: dict[int, tuple[tuple[int, int], ...]] = {start: ()}
    queue = deque([start])
    while queue:
        r = queue.popleft()
        path = paths[r]
        for p in gens:
            for step in (1, -1):
                nr = r * pow(p, step, dd) % dd
                if nr in paths:
                    continue
                paths[nr] = path + ((p, step),)
                if nr == target:
                    return _collect_exponents(paths[nr])
                queue.append(nr)
    return paths.get(target) and _collect_exponents(paths[target])


def _collect_exponents(path: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    exps: dict[int, int] = {}
    for p, step in path:
        exps[p] = exps.get(p, 0) + step
    return tuple(sorted((p, e) for p, e in exps.items() if e != 0))


def _verify_witness(a: int, d: int, witness: tuple[tuple[int, int], ...]) -> None:
    dd = abs(d)
    num, den = a, 1
    for p, e in witness:
        if kronecker(d, p) != 1:
            raise WitnessNotFoundError(f"witness prime {p} has symbol != +1")
        if e > 0:
            den *= p**e
        else:
            num *= p ** (-e)
    if num % dd != den % dd:
        raise WitnessNotFoundError(f"witness for a={a}, d={d} fails s = 1 mod {dd}")
