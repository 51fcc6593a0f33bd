"""Reduction of graded implications to ordinary ones over a two-valued lifted table.

Objects of the lift are pairs ``(x, a)`` with ``a`` a fixpoint of the hedge,
attributes are pairs ``(y, b)`` with ``b`` any degree, and ``(x, a)`` has
``(y, b)`` iff ``a ⊗ b <= I(x, y)``. The lift is stored as an ordinary
:class:`DataTable` over the two-element chain, so the classical Galois
operators and base algorithms apply to it unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bases import base_from_system, pseudo_intents_glob
from .errors import DomainError
from .fsets import AttributeUniverse, LSet
from .implications import Implication, Theory, validity_in_table
from .lattice import GLOBALIZATION, LUKASIEWICZ, ChainLattice
from .tables import DataTable

BOOLEAN = ChainLattice(1, LUKASIEWICZ, GLOBALIZATION)


def lifted_name(lat: ChainLattice, name: str, a: int) -> str:
    return f"{name}@{lat.format_degree(a, decimal=True)}"


@dataclass(frozen=True)
class LiftedTable:
    lattice: ChainLattice
    source: DataTable
    object_pairs: tuple[tuple[str, int], ...]
    attribute_pairs: tuple[tuple[str, int], ...]
    binary: DataTable

    @property
    def universe(self) -> AttributeUniverse:
        return self.binary.universe

    def has(self, x: str, a: int, y: str, b: int) -> bool:
        i = self.object_pairs.index((x, a))
        j = self.attribute_pairs.index((y, b))
        return self.binary.entries[i][j] == 1

    def up(self, C: LSet) -> LSet:
        return self.binary.up(C)

    def down(self, D: LSet) -> LSet:
        return self.binary.down(D)

    def closure(self, D: LSet) -> LSet:
        return self.binary.closure(D)


def lift_table(lat: ChainLattice, t: DataTable) -> LiftedTable:
    table = t.with_lattice(lat)
    fix = lat.fixpoints()
    obj_pairs = tuple((x, a) for x in table.objects for a in fix)
    att_pairs = tuple((y, b) for y in table.universe for b in lat.degrees)
    mul = lat.mul_table
    rows = []
    for x, a in obj_pairs:
        row = table.row(x)
        rows.append(tuple(1 if mul[a][b] <= row[y] else 0 for y, b in att_pairs))
    binary = DataTable(BOOLEAN,
                       tuple(lifted_name(lat, x, a) for x, a in obj_pairs),
                       AttributeUniverse(tuple(lifted_name(lat, y, b) for y, b in att_pairs)),
                       tuple(rows))
    return LiftedTable(lat, table, obj_pairs, att_pairs, binary)


def lifted_universe(lat: ChainLattice, universe: AttributeUniverse) -> AttributeUniverse:
    return AttributeUniverse(tuple(lifted_name(lat, y, b) for y in universe for b in lat.degrees))


def ceil_set(lat: ChainLattice, B: LSet, target: AttributeUniverse | None = None) -> LSet:
    """``⌈B⌉ = {(y, a) | a <= B(y)}`` over the lifted attributes."""
    target = target or lifted_universe(lat, B.universe)
    if len(target) != len(B.universe) * (lat.n + 1):
        raise DomainError("target universe is not the lift of the source universe")
    return LSet(target, tuple(1 if a <= b else 0 for b in B.degrees for a in lat.degrees))


def floor_set(lat: ChainLattice, D: LSet, universe: AttributeUniverse) -> LSet:
    """``⌊D⌋(y) = sup {a | (y, a) in D}``."""
    width = lat.n + 1
    if len(D.universe) != len(universe) * width:
        raise DomainError("the crisp set does not live on the lift of this universe")
    return LSet(universe, tuple(
        max((a for a in lat.degrees if D.degrees[i * width + a]), default=0)
        for i in range(len(universe))))


def ceil_objects(lifted: LiftedTable, A: LSet) -> LSet:
    """Object-side ``⌈A⌉ = {(x, a) | a fixpoint, a <= A(x)}``."""
    if A.universe.attributes != lifted.source.objects:
        raise DomainError("expected an L-set over the objects of the source table")
    pos = {x: i for i, x in enumerate(lifted.source.objects)}
    return LSet(lifted.binary.object_universe,
                tuple(1 if a <= A.degrees[pos[x]] else 0 for x, a in lifted.object_pairs))


def floor_objects(lifted: LiftedTable, C: LSet) -> LSet:
    values = {x: 0 for x in lifted.source.objects}
    for (x, a), bit in zip(lifted.object_pairs, C.degrees):
        if bit:
            values[x] = max(values[x], a)
    return LSet(lifted.source.object_universe, tuple(values[x] for x in lifted.source.objects))


def transfer_theory_up(lat: ChainLattice, T: Theory, target: AttributeUniverse | None = None) -> Theory:
    """``⌈T⌉``: the crisp theory ``{⌈A⌉ => ⌈B⌉}``."""
    target = target or lifted_universe(lat, T.universe)
    return Theory.crisp(target, (Implication(ceil_set(lat, i.antecedent, target),
                                             ceil_set(lat, i.consequent, target)) for i in T), BOOLEAN.n)


def transfer_theory_down(lat: ChainLattice, Tx: Theory, universe: AttributeUniverse) -> Theory:
    """``⌊T×⌋``: the crisp theory ``{⌊C⌋ => ⌊D⌋}``."""
    return Theory.crisp(universe, (Implication(floor_set(lat, i.antecedent, universe),
                                               floor_set(lat, i.consequent, universe)) for i in Tx), lat.n)


def lift_base(lat: ChainLattice, t: DataTable) -> Theory:
    """Classical pseudo-intent base of the lift (two-valued, so globalization applies)."""
    lifted = lift_table(lat, t)
    return base_from_system(BOOLEAN, lifted.binary, pseudo_intents_glob(BOOLEAN, lifted.binary))


def verify_lift_validity(lat: ChainLattice, t: DataTable, imp: Implication) -> tuple[bool, bool]:
    """(``||A => B||_t = 1``, ``⌈A⌉ => ⌈B⌉`` valid in the lift); the two must agree."""
    lifted = lift_table(lat, t)
    target = lifted.universe
    up = Implication(ceil_set(lat, imp.antecedent, target), ceil_set(lat, imp.consequent, target))
    return (validity_in_table(lat, imp, lifted.source) == lat.n,
            validity_in_table(BOOLEAN, up, lifted.binary) == BOOLEAN.n)


def verify_lift_validity_down(lat: ChainLattice, t: DataTable, imp_x: Implication) -> tuple[bool, bool]:
    """(``C => D`` valid in the lift, ``||⌊C⌋ => ⌊D⌋||_t = 1``); the two must agree."""
    lifted = lift_table(lat, t)
    U = lifted.source.universe
    down = Implication(floor_set(lat, imp_x.antecedent, U), floor_set(lat, imp_x.consequent, U))
    return (validity_in_table(BOOLEAN, imp_x, lifted.binary) == BOOLEAN.n,
            validity_in_table(lat, down, lifted.source) == lat.n)
