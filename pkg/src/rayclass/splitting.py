"""Prime decomposition laws and the two quadratic-reciprocity drivers.

One driver compares the Kummer-side splitting of q in Q(sqrt(p*)) with the
class-field-side splitting (square classes mod p*oo); the other evaluates the
transfer of q's residue class to {+-1} via the literal coset formula and
compares it with the Kronecker symbol (p*/q).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .arith import euler_phi, is_prime, mult_order
from .classfield import (
    FundamentalDiscriminant,
    IdealGroupH,
    Modulus,
    ideal_class,
    ray_class_group,
    squares_group,
)
from .errors import InternalInconsistencyError, InvalidArgumentError, NotCoprimeError, RamifiedError
from .groups import (
    FiniteGroup,
    Subgroup,
    coset_decomposition,
    decomposition_from_reps,
    derived_subgroup,
    group_from_unit_residues,
    kernel_of,
    subgroup_generated,
    transfer,
    transfer_homomorphism,
)
from .symbols import HalfSystem, gauss_lemma, GaussLemmaTrace, kronecker, pstar


@dataclass(frozen=True)
class SplittingType:
    """Ramification index e, residue degree f, number of primes g; e*f*g = degree."""

    e: int
    f: int
    g: int

    @property
    def degree(self) -> int:
        return self.e * self.f * self.g

    @property
    def word(self) -> str:
        """split / inert / ramified, for the degree-2 trichotomy."""
        if self.e > 1:
            return "ramified"
        if self.f == 1 and self.g == self.degree:
            return "split"
        if self.f == self.degree:
            return "inert"
        return "mixed"


@dataclass(frozen=True)
class Quadratic:
    d: FundamentalDiscriminant

    @property
    def degree(self) -> int:
        return 2


@dataclass(frozen=True)
class Cyclotomic:
    m: int

    @property
    def degree(self) -> int:
        return euler_phi(self.m)


@dataclass(frozen=True, eq=False)
class CyclotomicSubfield:
    """Subfield of Q(zeta_m) fixed by a subgroup U of the unit residues mod m."""

    m: int
    subgroup: Subgroup

    @property
    def degree(self) -> int:
        return self.subgroup.parent.order // self.subgroup.order


FieldDescriptor = Quadratic | Cyclotomic | CyclotomicSubfield


def splitting_quadratic(q: int, d: FundamentalDiscriminant | int) -> SplittingType:
    """Decomposition of q in Q(sqrt(d)) from the Kronecker symbol."""
    if isinstance(d, int):
        d = FundamentalDiscriminant(d)
    if not is_prime(q):
        raise InvalidArgumentError(f"{q} is not prime")
    chi = kronecker(d.d, q)
    if chi == 1:
        return SplittingType(e=1, f=1, g=2)
    if chi == -1:
        return SplittingType(e=1, f=2, g=1)
    return SplittingType(e=2, f=1, g=1)


def splitting_cyclotomic(q: int, m: int) -> SplittingType:
    """Decomposition of q in Q(zeta_m): e = phi(q^k), f = ord(q mod m/q^k)."""
    if m < 3:
        raise InvalidArgumentError(f"need m >= 3, got {m}")
    if not is_prime(q):
        raise InvalidArgumentError(f"{q} is not prime")
    qk = 1
    m1 = m
    while m1 % q == 0:
        m1 //= q
        qk *= q
    e = euler_phi(qk)
    f = 1 if m1 <= 2 else mult_order(q, m1)
    return SplittingType(e=e, f=f, g=euler_phi(m) // (e * f))


def splitting_in_subfield(q: int, m: int, U: Subgroup) -> SplittingType:
    """Decomposition of unramified q in the subfield of Q(zeta_m) fixed by U."""
    if not is_prime(q):
        raise InvalidArgumentError(f"{q} is not prime")
    if m % q == 0:
        raise RamifiedError(f"{q} divides {m}; ramified case unsupported here")
    G = U.parent
    labels = {G.label_of(i): i for i in G.elements}
    sigma = labels[q % m]
    # f = order of sigma*U in G/U: least k with sigma^k in U.
    f = 1
    x = sigma
    while x not in U:
        x = G.op(x, sigma)
        f += 1
    degree = G.order // U.order
    return SplittingType(e=1, f=f, g=degree // f)


def splits_completely_in_class_field(q: int, H: IdealGroupH) -> bool:
    """True iff the class of (q) lies in the ideal group H."""
    if not is_prime(q):
        raise InvalidArgumentError(f"{q} is not prime")
    if gcd(q, H.parent.modulus.m0) != 1:
        raise NotCoprimeError(f"{q} divides the modulus {H.parent.modulus}")
    return H.contains(ideal_class(H.parent, q))


def spl_set(field: FieldDescriptor, bound: int) -> list[int]:
    """All primes <= bound that are unramified with e = f = 1 in the field."""
    from .arith import primes_up_to

    if bound < 2:
        raise InvalidArgumentError(f"bound must be >= 2, got {bound}")
    out = []
    for q in primes_up_to(bound):
        if isinstance(field, Quadratic):
            if kronecker(field.d.d, q) == 1:
                out.append(q)
        elif isinstance(field, Cyclotomic):
            st = splitting_cyclotomic(q, field.m)
            if st.e == 1 and st.f == 1:
                out.append(q)
        else:
            if field.m % q == 0:
                continue
            st = splitting_in_subfield(q, field.m, field.subgroup)
            if st.f == 1:
                out.append(q)
    return out


def transfer_kernel_classfield(p: int) -> tuple[IdealGroupH, Quadratic]:
    """Kernel of the transfer (Z/p)^x -> {+-1} as an ideal group; class field Q(sqrt(p*))."""
    if p == 2 or not is_prime(p):
        raise InvalidArgumentError(f"{p} is not an odd prime")
    rcg = ray_class_group(Modulus(p, infinite=True))
    G = rcg.group
    minus_one = rcg.class_of(p - 1).element
    U = subgroup_generated(G, {minus_one})
    hom = transfer_homomorphism(G, U)
    kernel = kernel_of(hom)
    sq = squares_group(p)
    if kernel.members != sq.subgroup.members:
        raise InternalInconsistencyError(
            f"transfer kernel mod {p} differs from the square classes"
        )
    H = IdealGroupH(parent=rcg, subgroup=kernel, provenance=f"custom(transfer-kernel mod {p}oo)")
    return H, Quadratic(FundamentalDiscriminant(pstar(p)))


@dataclass(frozen=True)
class BridgeReport:
    """Transfer-vs-Gauss-Lemma comparison over one half-system."""

    p: int
    a: int
    transfer_value: int                       # +-1
    symbol_value: int                         # +-1
    transfer_signs: tuple[int, ...]           # u_j mapped to +-1, in rep order
    gauss_signs: tuple[int, ...]              # s_j in half-system order
    gauss_trace: GaussLemmaTrace
    signs_match: bool
    values_match: bool

    @property
    def ok(self) -> bool:
        return self.signs_match and self.values_match


def gauss_lemma_is_transfer(p: int, a: int, system: HalfSystem) -> BridgeReport:
    """Run the transfer to {+-1} with the half-system as coset reps, next to Gauss's Lemma."""
    if system.p != p:
        raise InvalidArgumentError(f"half-system is for p={system.p}, not {p}")
    if gcd(a, p) != 1:
        raise NotCoprimeError(f"{a} is not coprime to {p}")
    G = group_from_unit_residues(p)
    labels = {G.label_of(i): i for i in G.elements}
    U = subgroup_generated(G, {labels[p - 1]})
    # Cosets of {+-1} are exactly the pairs {a_j, -a_j}: the half-system is a
    # transversal, which is the entire content of the bridge.
    dec = decomposition_from_reps(G, U, tuple(labels[aj] for aj in system.elements))
    result = transfer(G, U, labels[a % p], dec, derived=derived_subgroup(U))
    to_sign = {labels[1]: 1, labels[p - 1]: -1}
    transfer_signs = tuple(to_sign[u] for _, _, u in result.contributions)
    transfer_value = to_sign[result.value]
    symbol, trace = gauss_lemma(a, p, system)
    gauss_signs = tuple(row.sign for row in trace.rows)
    return BridgeReport(
        p=p,
        a=a % p,
        transfer_value=transfer_value,
        symbol_value=symbol,
        transfer_signs=transfer_signs,
        gauss_signs=gauss_signs,
        gauss_trace=trace,
        signs_match=sorted(transfer_signs) == sorted(gauss_signs),
        values_match=transfer_value == symbol,
    )


@dataclass(frozen=True)
class ReciprocityCheck:
    p: int
    q: int
    lhs: int  # (p*/q)
    rhs: int
    equal: bool


def _require_distinct_odd_primes(p: int, q: int) -> None:
    for n in (p, q):
        if n == 2 or not is_prime(n):
            raise InvalidArgumentError(f"{n} is not an odd prime")
    if p == q:
        raise InvalidArgumentError("primes must be distinct")


def qr_via_splitting(p: int, q: int) -> ReciprocityCheck:
    """Compare (p*/q) with the class-field splitting of q mod p*oo (square classes)."""
    _require_distinct_odd_primes(p, q)
    lhs = kronecker(pstar(p), q)
    rhs = 1 if splits_completely_in_class_field(q, squares_group(p)) else -1
    return ReciprocityCheck(p=p, q=q, lhs=lhs, rhs=rhs, equal=lhs == rhs)


@lru_cache(maxsize=64)
def _transfer_setup(p: int):
    """Memoized (G, label index, U, decomposition, U') for the mod-p transfer to {+-1}."""
    G = group_from_unit_residues(p)
    labels = {G.label_of(i): i for i in G.elements}
    U = subgroup_generated(G, {labels[p - 1]})
    return G, labels, U, coset_decomposition(G, U), derived_subgroup(U)


def transfer_sign(p: int, a: int) -> int:
    """Transfer of a's class under (Z/p)^x -> {+-1}, as +-1, with setup cached per p."""
    if gcd(a, p) != 1:
        raise NotCoprimeError(f"{a} is not coprime to {p}")
    G, labels, U, dec, derived = _transfer_setup(p)
    result = transfer(G, U, labels[a % p], dec, derived)
    return 1 if result.value == G.identity else -1


def qr_via_transfer(p: int, q: int) -> ReciprocityCheck:
    """Compare (p*/q) with the transfer of q's class under (Z/p)^x -> {+-1}."""
    _require_distinct_odd_primes(p, q)
    lhs = kronecker(pstar(p), q)
    rhs = transfer_sign(p, q)
    return ReciprocityCheck(p=p, q=q, lhs=lhs, rhs=rhs, equal=lhs == rhs)
