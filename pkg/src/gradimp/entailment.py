"""Models, entailment degrees, closure operators and completeness checks.

Each fast path has an exhaustive counterpart (suffix ``_oracle`` or an
``enumerate_*`` helper) that is used by the test-suite as ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .fsets import (DEFAULT_BUDGET, LSet, enumerate_lsets, is_strict_subset,
                    scalar_tnorm, subsethood, union_all)
from .implications import (Implication, Theory, crispify_theory, validity_in_lset,
                           validity_in_table)
from .lattice import ChainLattice


@dataclass(frozen=True)
class ClosureTrace:
    """Iterates of a closure computation; the last two entries coincide."""

    iterates: tuple[LSet, ...]

    @property
    def fixpoint(self) -> LSet:
        return self.iterates[-1]

    @property
    def steps(self) -> int:
        return len(self.iterates) - 1


def _iterate(start: LSet, step) -> ClosureTrace:
    seq = [start]
    while True:
        nxt = step(seq[-1])
        seq.append(nxt)
        if nxt == seq[-2]:
            return ClosureTrace(tuple(seq))


def closure_syntactic(lat: ChainLattice, T: Theory, C: LSet) -> ClosureTrace:
    """``[C]_T``: repeatedly add consequents whose antecedent is a proper subset."""
    if not T.is_crisp(lat):
        raise PreconditionError("the syntactic closure is defined for crisp theories")
    imps = T.implications()

    def step(Ci):
        return union_all(Ci.universe, [Ci] + [imp.consequent for imp in imps
                                              if is_strict_subset(imp.antecedent, Ci)])
    return _iterate(C, step)


def closure_semantic(lat: ChainLattice, T: Theory, M: LSet) -> ClosureTrace:
    """Least model of ``T`` containing ``M``, by iterating ``M_i ∪ ⋃ B ⊗ S(A, M_i)*`` over ``cr(T)``."""
    imps = crispify_theory(lat, T).implications()
    star = lat.star_table

    def step(Mi):
        return union_all(Mi.universe, [Mi] + [
            scalar_tnorm(lat, star[subsethood(lat, imp.antecedent, Mi)], imp.consequent)
            for imp in imps])
    return _iterate(M, step)


def entailment_degree(lat: ChainLattice, T: Theory, imp: Implication) -> int:
    """Degree to which ``imp`` follows from ``T``: ``S(B, C_Mod(T)(A))``."""
    closed = closure_semantic(lat, T, imp.antecedent).fixpoint
    return subsethood(lat, imp.consequent, closed)


def is_model(lat: ChainLattice, M: LSet, T: Theory) -> bool:
    return all(a <= validity_in_lset(lat, imp, M) for imp, a in T.items())


def enumerate_models(lat: ChainLattice, T: Theory, budget: int | None = DEFAULT_BUDGET) -> list[LSet]:
    return [M for M in enumerate_lsets(T.universe, lat, budget) if is_model(lat, M, T)]


def entailment_degree_oracle(lat: ChainLattice, T: Theory, imp: Implication,
                             budget: int | None = DEFAULT_BUDGET) -> int:
    """Infimum of the validity of ``imp`` over every model of ``T`` (brute force)."""
    return min((validity_in_lset(lat, imp, M) for M in enumerate_models(lat, T, budget)),
               default=lat.n)


def entailment_witness(lat: ChainLattice, T: Theory, imp: Implication,
                       budget: int | None = DEFAULT_BUDGET) -> LSet | None:
    """A model attaining the oracle degree, or ``None`` when ``T`` has no models."""
    best = None
    for M in enumerate_models(lat, T, budget):
        if best is None or validity_in_lset(lat, imp, M) < validity_in_lset(lat, imp, best):
            best = M
    return best


def check_complete(lat: ChainLattice, T: Theory, t, budget: int | None = DEFAULT_BUDGET) -> bool:
    """``T`` is complete in ``t`` iff its models are exactly the intents of ``t``."""
    table = t.with_lattice(lat)
    return set(enumerate_models(lat, T, budget)) == set(table.intents(budget))


def check_1_complete(lat: ChainLattice, T: Theory, t, budget: int | None = DEFAULT_BUDGET) -> bool:
    """Degree-1 consequences of ``T`` coincide with the fully valid implications of ``t``.

    For every ``A`` it suffices to compare the two closures: ``||A => B|| = 1``
    holds in ``T`` iff ``B`` is below ``C_Mod(T)(A)``, and in ``t`` iff ``B``
    is below ``A↓↑``. Both directions are checked through the generators
    ``A => A↓↑`` and ``A => C_Mod(T)(A)``.
    """
    table = t.with_lattice(lat)
    for A in enumerate_lsets(T.universe, lat, budget):
        for B in (table.closure(A), closure_semantic(lat, T, A).fixpoint):
            imp = Implication(A, B)
            if (entailment_degree(lat, T, imp) == lat.n) != (validity_in_table(lat, imp, table) == lat.n):
                return False
    return True
