"""Pseudo-intents, non-redundant bases and the algorithms that compute them.

Three routes are offered:

* the graph route: maximal independent sets of ``V`` under ``E ∪ E⁻¹``
  filtered by ``P = V - Pred(P)``; works for every hedge and returns every
  system of pseudo-intents;
* a list sweep over ``V`` that is valid under globalization only;
* a NextClosure-style sweep through the fixpoints of ``[·]_T`` that works for
  every hedge and yields the intents together with a complete theory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .entailment import closure_semantic, closure_syntactic, entailment_degree
from .errors import PreconditionError
from .fsets import DEFAULT_BUDGET, LSet, enumerate_lsets, is_strict_subset, is_subset
from .implications import Implication, Theory, validity_in_lset
from .lattice import ChainLattice
from .tables import DataTable


def order_key(P: LSet) -> tuple:
    """Strict total order extending proper inclusion: degree sum, then lexicographic."""
    return P.sum_key()


@dataclass(frozen=True)
class PseudoIntentGraph:
    vertices: tuple[LSet, ...]
    edges: frozenset
    closures: dict = field(repr=False, compare=False)

    def index(self, P: LSet) -> int:
        return self.vertices.index(P)

    @property
    def symmetric_edges(self) -> frozenset:
        return self.edges | frozenset((q, p) for p, q in self.edges)

    def pred(self, Q: LSet) -> set[LSet]:
        return {P for P, R in self.edges if R == Q}

    def pred_of(self, system: Iterable[LSet]) -> set[LSet]:
        out: set[LSet] = set()
        for Q in system:
            out |= self.pred(Q)
        return out


def build_graph(lat: ChainLattice, t: DataTable, budget: int | None = DEFAULT_BUDGET) -> PseudoIntentGraph:
    table = t.with_lattice(lat)
    closures = {}
    for P in enumerate_lsets(table.universe, lat, budget):
        C = table.closure(P)
        if C != P:
            closures[P] = C
    V = tuple(sorted(closures, key=order_key))
    E = frozenset((P, Q) for P in V for Q in V
                  if P != Q and validity_in_lset(lat, Implication(Q, closures[Q]), P) != lat.n)
    return PseudoIntentGraph(V, E, closures)


def maximal_independent_sets(n: int, adjacent: Sequence[set[int]]) -> list[frozenset[int]]:
    """All maximal independent sets of a graph on ``0..n-1``.

    Bron–Kerbosch with pivoting, run on the complement graph, whose maximal
    cliques are exactly the maximal independent sets of the input.
    """
    everyone = set(range(n))
    comp = [everyone - adjacent[v] - {v} for v in range(n)]
    found: list[frozenset[int]] = []

    def expand(R: set[int], P: set[int], X: set[int]):
        if not P and not X:
            found.append(frozenset(R))
            return
        pivot = max(P | X, key=lambda u: len(comp[u] & P))
        for v in sorted(P - comp[pivot]):
            expand(R | {v}, P & comp[v], X & comp[v])
            P = P - {v}
            X = X | {v}

    if not n:
        return [frozenset()]
    expand(set(), everyone, set())
    return found


def independent_sets_of(graph: PseudoIntentGraph) -> list[tuple[LSet, ...]]:
    V = graph.vertices
    pos = {P: i for i, P in enumerate(V)}
    adjacent = [set() for _ in V]
    for P, Q in graph.edges:
        adjacent[pos[P]].add(pos[Q])
        adjacent[pos[Q]].add(pos[P])
    sets = [tuple(V[i] for i in sorted(s)) for s in maximal_independent_sets(len(V), adjacent)]
    return sorted(sets, key=lambda s: [order_key(P) for P in s])


def is_pred_closed(graph: PseudoIntentGraph, system: Iterable[LSet]) -> bool:
    """``P = V - Pred(P)``."""
    system = set(system)
    return system == set(graph.vertices) - graph.pred_of(system)


def systems_of_pseudo_intents(lat: ChainLattice, t: DataTable,
                              budget: int | None = DEFAULT_BUDGET) -> list[tuple[LSet, ...]]:
    """Every system of pseudo-intents, each sorted by the total order ``order_key``."""
    graph = build_graph(lat, t, budget)
    if not graph.vertices:
        return [()]
    return [s for s in independent_sets_of(graph) if is_pred_closed(graph, s)]


def is_system_of_pseudo_intents(lat: ChainLattice, t: DataTable, system: Iterable[LSet],
                                budget: int | None = DEFAULT_BUDGET) -> bool:
    """Direct check of the defining condition over all of ``L^Y``."""
    table = t.with_lattice(lat)
    system = set(system)
    closure = {Q: table.closure(Q) for Q in system}
    for P in enumerate_lsets(table.universe, lat, budget):
        member = P != table.closure(P) and all(
            validity_in_lset(lat, Implication(Q, closure[Q]), P) == lat.n for Q in system if Q != P)
        if member != (P in system):
            return False
    return True


def base_from_system(lat: ChainLattice, t: DataTable, system: Iterable[LSet]) -> Theory:
    table = t.with_lattice(lat)
    system = sorted(system, key=order_key)
    return Theory.crisp(table.universe, (Implication(P, table.closure(P)) for P in system), lat.n)


def _require_globalization(lat: ChainLattice) -> None:
    if lat.star_table != tuple(lat.n if a == lat.n else 0 for a in lat.degrees):
        raise PreconditionError("this method requires the globalization hedge")


def pseudo_intents_glob(lat: ChainLattice, t: DataTable,
                        budget: int | None = DEFAULT_BUDGET) -> tuple[LSet, ...]:
    """The unique system of pseudo-intents under globalization, by a list sweep.

    ``S`` holds the remaining candidates in increasing order. Its head is the
    next pseudo-intent ``B``; the candidates kept are those outside
    ``Pred(B)``, i.e. all ``P`` except the proper supersets of ``B`` that miss
    part of ``B↓↑``.
    """
    _require_globalization(lat)
    table = t.with_lattice(lat)
    S = [P for P in sorted(enumerate_lsets(table.universe, lat, budget), key=order_key)
         if table.closure(P) != P]
    found = []
    while S:
        B, rest = S[0], S[1:]
        found.append(B)
        closed = table.closure(B)
        S = [P for P in rest if not (is_strict_subset(B, P) and not is_subset(closed, P))]
    return tuple(found)


def pseudo_intents_spg(lat: ChainLattice, t: DataTable,
                       budget: int | None = DEFAULT_BUDGET) -> tuple[LSet, ...]:
    """Bottom-up oracle: ``P`` joins iff it is no intent and contains ``Q↓↑`` for every member ``Q ⊂ P``."""
    table = t.with_lattice(lat)
    found: list[tuple[LSet, LSet]] = []
    for P in sorted(enumerate_lsets(table.universe, lat, budget), key=order_key):
        C = table.closure(P)
        if C != P and all(is_subset(QC, P) for Q, QC in found if is_strict_subset(Q, P)):
            found.append((P, C))
    return tuple(P for P, _ in found)


@dataclass(frozen=True)
class NextClosureResult:
    intents: tuple[LSet, ...]
    pseudo_intents: tuple[LSet, ...]
    fixpoints: tuple[LSet, ...]

    def theory(self, lat: ChainLattice, t: DataTable) -> Theory:
        return base_from_system(lat, t, self.pseudo_intents)


def pseudo_intents_nextclosure(lat: ChainLattice, t: DataTable) -> NextClosureResult:
    """Walk the fixpoints of ``[·]_T`` in lexicographic order (last attribute most significant).

    ``T`` grows as pseudo-intents are met. From the current fixpoint ``C`` the
    successor raises position ``y`` to ``C(y)⁺``, keeps positions above ``y``,
    zeroes those below and closes; it is accepted once the closure leaves every
    position above ``y`` unchanged.
    """
    table = t.with_lattice(lat)
    universe = table.universe
    top = lat.n
    k = len(universe)
    full = LSet.full(universe, lat)
    intents: list[LSet] = []
    pseudo: list[LSet] = []
    closures: list[LSet] = []
    order: list[LSet] = []

    def classify(B: LSet):
        BC = table.closure(B)
        if BC == B:
            intents.append(B)
        else:
            pseudo.append(B)
            closures.append(BC)
        order.append(B)

    B = LSet.empty(universe)
    classify(B)
    while B != full:
        T = Theory.crisp(universe, (Implication(P, PC) for P, PC in zip(pseudo, closures)), top)
        C = B
        for y in range(k):
            if C.degrees[y] < top:
                start = (0,) * y + (C.degrees[y] + 1,) + C.degrees[y + 1:]
                B = closure_syntactic(lat, T, LSet(universe, start)).fixpoint
                if B.degrees[y + 1:] == C.degrees[y + 1:]:
                    break
        classify(B)
    return NextClosureResult(tuple(intents), tuple(pseudo), tuple(order))


def minimize_theory(lat: ChainLattice, T: Theory, log: list | None = None) -> Theory:
    """Drop implications entailed (to degree 1) by the rest, in file order, until stable.

    When ``log`` is a list, removed implications are appended to it in order.
    """
    if not T.is_crisp(lat):
        raise PreconditionError("minimization works on crisp theories")
    current = T
    removed = True
    while removed:
        removed = False
        for imp in current.implications():
            rest = current.without(imp)
            if is_subset(imp.consequent, closure_semantic(lat, rest, imp.antecedent).fixpoint):
                current = rest
                removed = True
                if log is not None:
                    log.append(imp)
    return current


def is_redundant(lat: ChainLattice, T: Theory) -> bool:
    return any(entailment_degree(lat, T.without(imp), imp) == lat.n for imp in T)
