"""Finite groups as explicit multiplication tables, cosets, and the transfer map.

Elements are the integers 0..order-1; an optional label map carries the
external meaning (e.g. coprime residues).  The transfer of g from G to a
subgroup U is computed by the literal coset formula: pick representatives r_i,
solve g*r_i = r_j * u_j with u_j in U, and multiply the u_j modulo the
commutator subgroup of U.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from itertools import product as iter_product

from .arith import euler_phi
from .errors import InvalidArgumentError, InvalidHomomorphismError, TooLargeError

TABLE_BOUND = 4096


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A group given by its full multiplication table (identity semantics for eq/hash)."""

    table: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[int, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = [-1] * self.order
        for a in self.elements:
            for b in self.elements:
                if self.table[a][b] == self.identity:
                    inv[a] = b
                    break
            if inv[a] < 0 or self.table[inv[a]][a] != self.identity:
                raise InvalidArgumentError(f"element {a} has no two-sided inverse")
        return tuple(inv)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(a), -k)
        result = self.identity
        square = a
        while k:
            if k & 1:
                result = self.table[result][square]
            square = self.table[square][square]
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in self.elements for b in self.elements)

    @cached_property
    def is_cyclic(self) -> bool:
        return any(self.element_order(a) == self.order for a in self.elements)

    def label_of(self, a: int) -> int:
        return self.labels[a] if self.labels is not None else a

    def check_associative(self) -> bool:
        """Exhaustive associativity check; quadratic-times-order, for tests only."""
        t = self.table
        return all(
            t[t[a][b]][c] == t[a][t[b][c]]
            for a in self.elements
            for b in self.elements
            for c in self.elements
        )


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of a table group, stored as a sorted tuple of element ids."""

    parent: FiniteGroup
    members: tuple[int, ...]

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, a: int) -> bool:
        return a in self.member_set

    def validate(self) -> None:
        G = self.parent
        s = self.member_set
        if G.identity not in s:
            raise InvalidArgumentError("subgroup is missing the identity")
        for a in s:
            if G.inv(a) not in s:
                raise InvalidArgumentError(f"subgroup not closed under inversion at {a}")
            for b in s:
                if G.op(a, b) not in s:
                    raise InvalidArgumentError(f"subgroup not closed at {a}*{b}")
        if G.order % len(s) != 0:
            raise InvalidArgumentError("subgroup order does not divide group order")


@dataclass(frozen=True)
class CosetDecomposition:
    """Left coset representatives r_i for G/U, with an element -> coset lookup."""

    parent: FiniteGroup
    subgroup: Subgroup
    reps: tuple[int, ...]

    @cached_property
    def coset_of(self) -> tuple[int, ...]:
        """coset_of[g] = index i with g in reps[i]*U."""
        G = self.parent
        out = [-1] * G.order
        for i, r in enumerate(self.reps):
            for u in self.subgroup.members:
                g = G.op(r, u)
                if out[g] != -1:
                    raise InvalidArgumentError("coset representatives are not disjoint")
                out[g] = i
        if any(c < 0 for c in out):
            raise InvalidArgumentError("cosets do not cover the group")
        return tuple(out)


@dataclass(frozen=True)
class TransferResult:
    """Transfer value (canonical rep of the coset mod U') plus the per-rep trace."""

    value: int
    contributions: tuple[tuple[int, int, int], ...]  # (rep index i, target index j, u in U)


@dataclass(frozen=True)
class TabulatedHom:
    """A map G -> G tabulated per element; values are canonical coset reps modulo `modulo`."""

    domain: FiniteGroup
    values: tuple[int, ...]
    modulo: Subgroup  # values live in its parent and are reduced mod this subgroup


def _check_bound(order: int) -> None:
    if order > TABLE_BOUND:
        raise TooLargeError(f"group of order {order} exceeds table bound {TABLE_BOUND}")


def group_from_unit_residues(m: int) -> FiniteGroup:
    """(Z/m)^x as a table group, elements labeled by coprime residues."""
    if m < 2:
        raise InvalidArgumentError(f"modulus must be >= 2, got {m}")
    _check_bound(euler_phi(m))
    residues = [r for r in range(1, m) if gcd(r, m) == 1]
    index = {r: i for i, r in enumerate(residues)}
    table = tuple(
        tuple(index[a * b % m] for b in residues) for a in residues
    )
    return FiniteGroup(table=table, identity=index[1], labels=tuple(residues))


def cyclic_group(n: int) -> FiniteGroup:
    """Z/n with addition."""
    if n < 1:
        raise InvalidArgumentError(f"cyclic group order must be >= 1, got {n}")
    _check_bound(n)
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(table=table, identity=0)


def direct_product(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    """Componentwise product; element (a, b) gets id a*|G2| + b."""
    n1, n2 = G1.order, G2.order
    _check_bound(n1 * n2)
    table = tuple(
        tuple(G1.table[a1][b1] * n2 + G2.table[a2][b2] for b1, b2 in iter_product(range(n1), range(n2)))
        for a1, a2 in iter_product(range(n1), range(n2))
    )
    return FiniteGroup(table=table, identity=G1.identity * n2 + G2.identity)


def klein_four_group() -> FiniteGroup:
    return direct_product(cyclic_group(2), cyclic_group(2))


def subgroup_generated(G: FiniteGroup, gens: set[int] | frozenset[int] | tuple[int, ...]) -> Subgroup:
    """Smallest subgroup containing gens, by closure iteration."""
    gens = set(gens)
    if not gens <= set(G.elements):
        raise InvalidArgumentError(f"generators {gens} are not all elements of the group")
    members = {G.identity}
    frontier = list(gens - members)
    members |= gens
    while frontier:
        x = frontier.pop()
        for g in list(members):
            for y in (G.op(x, g), G.op(g, x), G.inv(x)):
                if y not in members:
                    members.add(y)
                    frontier.append(y)
    return Subgroup(parent=G, members=tuple(sorted(members)))


def full_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(parent=G, members=tuple(G.elements))


def derived_subgroup(U: Subgroup) -> Subgroup:
    """Subgroup generated by the commutators of U's members."""
    G = U.parent
    commutators = {
        G.op(G.op(a, b), G.op(G.inv(a), G.inv(b)))
        for a in U.members
        for b in U.members
    }
    sub = subgroup_generated(G, commutators)
    # Commutators of members stay inside U, so this is a subgroup of U too.
    return sub


def coset_decomposition(G: FiniteGroup, U: Subgroup) -> CosetDecomposition:
    """Canonical decomposition: least element id per left coset, reps ascending."""
    seen = [False] * G.order
    reps = []
    for g in G.elements:
        if not seen[g]:
            reps.append(g)
            for u in U.members:
                seen[G.op(g, u)] = True
    return CosetDecomposition(parent=G, subgroup=U, reps=tuple(reps))


def decomposition_from_reps(G: FiniteGroup, U: Subgroup, reps: tuple[int, ...]) -> CosetDecomposition:
    """Decomposition with caller-chosen reps; validated via the coset lookup table."""
    dec = CosetDecomposition(parent=G, subgroup=U, reps=tuple(reps))
    dec.coset_of  # force validation
    return dec


def _reduce_mod(G: FiniteGroup, x: int, derived: Subgroup) -> int:
    """Canonical (least-id) representative of the coset x * U'."""
    if derived.order == 1:
        return x
    return min(G.op(x, d) for d in derived.members)


def transfer(
    G: FiniteGroup,
    U: Subgroup,
    g: int,
    decomposition: CosetDecomposition | None = None,
    derived: Subgroup | None = None,
) -> TransferResult:
    """Transfer of g: solve g*r_i = r_j*u_j per coset, return prod u_j mod U'."""
    if decomposition is None:
        decomposition = coset_decomposition(G, U)
    if derived is None:
        derived = derived_subgroup(U)
    reps = decomposition.reps
    coset_of = decomposition.coset_of
    contributions = []
    prod = G.identity
    for i, r in enumerate(reps):
        t = G.op(g, r)
        j = coset_of[t]
        u = G.op(G.inv(reps[j]), t)
        contributions.append((i, j, u))
        prod = G.op(prod, u)
    return TransferResult(value=_reduce_mod(G, prod, derived), contributions=tuple(contributions))


def transfer_homomorphism(G: FiniteGroup, U: Subgroup) -> TabulatedHom:
    """Tabulate the transfer G -> U (values reduced mod U') for every element."""
    dec = coset_decomposition(G, U)
    derived = derived_subgroup(U)
    reps = dec.reps
    coset_of = dec.coset_of
    op = G.op
    inv_reps = tuple(G.inv(r) for r in reps)
    values = []
    for g in G.elements:
        prod = G.identity
        for r in reps:
            t = op(g, r)
            u = op(inv_reps[coset_of[t]], t)
            prod = op(prod, u)
        values.append(_reduce_mod(G, prod, derived))
    return TabulatedHom(domain=G, values=tuple(values), modulo=derived)


def kernel_of(hom: TabulatedHom) -> Subgroup:
    """Preimage of the identity coset; verifies the homomorphism property first."""
    G = hom.domain
    values = hom.values
    derived = hom.modulo
    for a in G.elements:
        for b in G.elements:
            if _reduce_mod(G, G.op(values[a], values[b]), derived) != values[G.op(a, b)]:
                raise InvalidHomomorphismError(
                    f"map is not a homomorphism at ({a}, {b})"
                )
    # The identity coset of U' is U' itself.
    members = tuple(sorted(g for g in G.elements if values[g] in derived.member_set))
    sub = Subgroup(parent=G, members=members)
    sub.validate()
    return sub
