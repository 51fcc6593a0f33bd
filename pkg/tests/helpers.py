"""Shared builders and independent oracles for the test-suite.

The oracles below work on ``Fraction`` truth values and plain dicts, and
re-derive the operations from their textbook formulas. They never call into
the package except to convert results for comparison.
"""

from __future__ import annotations

import random
from fractions import Fraction as F

from gradimp.armstrong import CUT, Proof, ProofStep, check_proof
from gradimp.fsets import LSet, make_universe, parse_lset
from gradimp.implications import Implication, Theory, parse_implication, parse_theory
from gradimp.lattice import ChainLattice
from gradimp.tables import table_from_rows

CONFIGS = [(t, h) for t in ("lukasiewicz", "godel") for h in ("identity", "globalization")]

CUSTOM_HEDGES = {
    1: [0, 1],
    2: [0, 1, 2],
    5: [0, 0, 2, 2, 2, 5],
    10: [0, 0, 0, 3, 3, 3, 3, 3, 3, 3, 10],
}


def lat(n=2, tnorm="lukasiewicz", hedge="identity"):
    return ChainLattice(n, tnorm, hedge)


def S(text, U, L):
    return parse_lset(text, U, L)


def imp(text, U, L):
    return parse_implication(text, U, L)


def theory(text, U, L):
    return parse_theory(text, U, L)


def table(L, names, rows, objects=None):
    U = make_universe(names)
    return table_from_rows(L, U, rows, objects)


# Tables from the worked examples -------------------------------------------

def table6(L):
    """Three rows over y1..y4 on the 0.1 grid (needs n = 10)."""
    return table(L, "y1,y2,y3,y4", [[10, 9, 8, 10], [10, 7, 8, 10], [9, 5, 8, 10]], ["x1", "x2", "x3"])


def one_row_yz(L, y, z):
    return table(L, "y,z", [[y, z]], ["x"])


# Random generators -----------------------------------------------------------

def random_lset(rng: random.Random, U, L, density=0.6):
    return LSet(U, tuple(rng.randint(0, L.n) if rng.random() < density else 0 for _ in U))


def random_table(rng: random.Random, L, U, rows=None):
    rows = rows or rng.randint(1, 3)
    return table_from_rows(L, U, [[rng.randint(0, L.n) for _ in U] for _ in range(rows)])


def random_theory(rng: random.Random, L, U, size=None, crisp=False):
    size = rng.randint(0, 3) if size is None else size
    T = Theory(U)
    for _ in range(size):
        A = random_lset(rng, U, L, 0.5)
        B = random_lset(rng, U, L, 0.7)
        T.add(Implication(A, B), L.n if crisp else rng.randint(1, L.n))
    return T


def random_implication(rng, U, L):
    return Implication(random_lset(rng, U, L, 0.5), random_lset(rng, U, L, 0.7))


# Fraction-based oracle ---------------------------------------------------------

class FracOracle:
    """Residuated operations on ``Fraction`` values, straight from the formulas."""

    def __init__(self, tnorm, hedge):
        self.tnorm, self.hedge = tnorm, hedge

    def mul(self, a, b):
        return max(a + b - 1, F(0)) if self.tnorm == "lukasiewicz" else min(a, b)

    def res(self, a, b):
        if self.tnorm == "lukasiewicz":
            return min(1 - a + b, F(1))
        return F(1) if a <= b else b

    def star(self, a):
        if self.hedge == "identity":
            return a
        return F(1) if a == 1 else F(0)

    def S(self, C: dict, D: dict):
        return min((self.res(C.get(y, F(0)), D.get(y, F(0))) for y in set(C) | set(D)), default=F(1))

    def validity(self, A, B, M):
        return self.res(self.star(self.S(A, M)), self.S(B, M))

    def up(self, Aobj: dict, rows: dict, attrs):
        return {y: min(self.res(self.star(Aobj.get(x, F(0))), rows[x][y]) for x in rows) for y in attrs}

    def down(self, B: dict, rows: dict):
        return {x: min((self.res(B.get(y, F(0)), row[y]) for y in row), default=F(1))
                for x, row in rows.items()}


def to_frac(L, A: LSet) -> dict:
    return {y: F(a, L.n) for y, a in zip(A.universe, A.degrees)}


def from_frac(L, U, values: dict) -> LSet:
    return LSet(U, tuple(int(values.get(y, 0) * L.n) for y in U))


def rows_frac(L, t) -> dict:
    return {x: to_frac(L, t.row(x)) for x in t.objects}


# Threshold checks ----------------------------------------------------------------

def crisp_subsets(universe):
    """Every crisp subset of ``universe`` as an LSet over the two-element chain."""
    import itertools
    return [LSet(universe, bits) for bits in itertools.product((0, 1), repeat=len(universe))]


def lift_identity_failures(lat, t, lifted):
    """Names of the lift identities that fail somewhere on ``t``; empty when all hold.

    The floor of a crisp set of lifted objects only takes fixpoint values, so
    the two identities that end in such a floor compare against the hedged
    left-hand side ``(B↓)*`` and ``(⌊C⌋↑↓)*``. With the identity hedge this is
    the plain form.
    """
    from gradimp.fsets import enumerate_lsets
    from gradimp.threshold import ceil_objects, ceil_set, floor_objects, floor_set

    U, XU = t.universe, t.object_universe
    target = lifted.universe
    star = lat.star_table
    failures = set()

    def ceil(B):
        return ceil_set(lat, B, target)

    def floor(D):
        return floor_set(lat, D, U)

    def hedged(A):
        return LSet(A.universe, tuple(star[a] for a in A.degrees))

    for A in enumerate_lsets(XU, lat):
        if t.up(A) != floor(lifted.up(ceil_objects(lifted, hedged(A)))):
            failures.add("up = floor(ceil(A*)^)")
        if lifted.down(lifted.up(ceil_objects(lifted, A))) != ceil_objects(lifted, t.down(t.up(A))):
            failures.add("ceil(A)^v = ceil(A^v)")
    for B in enumerate_lsets(U, lat):
        if hedged(t.down(B)) != floor_objects(lifted, lifted.down(ceil(B))):
            failures.add("down = floor(ceil(B)v)")
        if lifted.closure(ceil(B)) != ceil(t.closure(B)):
            failures.add("ceil(B)v^ = ceil(Bv^)")
    for C in crisp_subsets(lifted.binary.object_universe):
        FC = floor_objects(lifted, C)
        up = lifted.up(C)
        if up != ceil(t.up(FC)):
            failures.add("C^ = ceil(floor(C)up)")
        if up != lifted.up(ceil_objects(lifted, FC)):
            failures.add("C^ = ceil(floor(C))^")
        if hedged(t.down(t.up(FC))) != floor_objects(lifted, lifted.down(up)):
            failures.add("floor(C)up-down = floor(C^v)")
    for D in crisp_subsets(target):
        FD = floor(D)
        down = lifted.down(D)
        if down != ceil_objects(lifted, t.down(FD)):
            failures.add("Dv = ceil(floor(D)down)")
        if down != lifted.down(ceil(FD)):
            failures.add("Dv = ceil(floor(D))v")
        if t.closure(FD) != floor(lifted.up(down)):
            failures.add("floor(D)down-up = floor(Dv^)")
    return failures


LIFT_IDENTITIES = 10


def lift_validity_failures(lat, t, lifted):
    """Count of implications where validity to degree 1 disagrees across the lift.

    Upward: every ``A => B`` over ``Y``. Downward: every ``C => D`` over the
    lifted attributes. Validity to degree 1 is read off the closures, which is
    cheaper than evaluating each implication and equivalent by construction of
    the two closure operators; ``verify_lift_validity`` is spot-checked separately.
    """
    from gradimp.fsets import enumerate_lsets, is_subset
    from gradimp.implications import Implication, validity_in_table
    from gradimp.threshold import ceil_set, floor_set

    U, target = t.universe, lifted.universe
    bad = 0
    sets = list(enumerate_lsets(U, lat))
    for A in sets:
        cA = ceil_set(lat, A, target)
        lifted_closure = lifted.closure(cA)
        for B in sets:
            graded = validity_in_table(lat, Implication(A, B), t) == lat.n
            classical = is_subset(ceil_set(lat, B, target), lifted_closure)
            bad += graded != classical
    crisp = crisp_subsets(target)
    for C in crisp:
        FC = floor_set(lat, C, U)
        graded_closure = t.closure(FC)
        lifted_closure = lifted.closure(C)
        for D in crisp:
            classical = is_subset(D, lifted_closure)
            graded = is_subset(floor_set(lat, D, U), graded_closure)
            bad += graded != classical
    return bad


# Databases -----------------------------------------------------------------------

def random_db(rng: random.Random, L, U, tuples=None, values=None):
    from gradimp.fdbridge import make_db
    domains = []
    for _ in U:
        k = values or rng.randint(1, 3)
        vals = [f"v{i}" for i in range(k)]
        rel = [[rng.randint(0, L.n) for _ in vals] for _ in vals]
        domains.append((vals, rel))
    count = tuples or rng.randint(1, 3)
    rows = [[rng.choice(domains[c][0]) for c in range(len(U))] for _ in range(count)]
    return make_db(L, list(U), domains, rows)


def fd_validity_frac(oracle: FracOracle, L, db, A: LSet, B: LSet):
    """FD validity straight from the definition, on ``Fraction`` values."""
    def agree(t1, t2, C):
        return min((oracle.res(F(c, L.n), F(d.degree(u, v), L.n))
                    for c, d, u, v in zip(C.degrees, db.domains, t1, t2)), default=F(1))
    return min((oracle.res(oracle.star(agree(t1, t2, A)), agree(t1, t2, B))
                for t1 in db.tuples for t2 in db.tuples), default=F(1))


# Proofs --------------------------------------------------------------------------

def mutate_proof(lat, proof, k):
    """Copy of ``proof`` whose step ``k`` (1-based) is no longer justified."""
    steps = list(proof.steps)
    step = steps[k - 1]
    A, B = step.implication.antecedent, step.implication.consequent
    for y, (a, b) in enumerate(zip(A.degrees, B.degrees)):
        if a < lat.n and b < lat.n:
            bumped = LSet(B.universe, B.degrees[:y] + (lat.n,) + B.degrees[y + 1:])
            candidate = ProofStep(Implication(A, bumped), step.rule, step.refs, step.degree)
            if candidate.implication not in proof.theory:
                steps[k - 1] = candidate
                return Proof(proof.theory, tuple(steps))
    steps[k - 1] = ProofStep(step.implication, CUT, (k, k))
    return Proof(proof.theory, tuple(steps))


def every_mutation_is_caught(lat, proof):
    """Mutate each step in turn; the checker must reject exactly that step."""
    for k in range(1, len(proof.steps) + 1):
        error = check_proof(lat, mutate_proof(lat, proof, k))
        assert error is not None and error.index == k, (k, error)
