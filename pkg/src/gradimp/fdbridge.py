"""Graded implications read as functional dependencies over domains with degree-valued relations.

Two tuples agree on ``A`` to the degree ``inf_y (A(y) -> R_y(t1(y), t2(y)))``;
a dependency ``A => B`` holds to the infimum over ordered tuple pairs of
``agree(A)* -> agree(B)``. Two constructions translate between databases and
data tables while preserving every validity degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .entailment import enumerate_models, entailment_degree
from .errors import DomainError, FormatError
from .fsets import DEFAULT_BUDGET, AttributeUniverse, LSet
from .implications import Implication, Theory
from .lattice import ChainLattice
from .tables import DataTable


@dataclass(frozen=True)
class SimilarityDomain:
    name: str
    values: tuple[str, ...]
    relation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(set(self.values)) != len(self.values):
            raise DomainError(f"duplicate values in the domain of {self.name!r}")
        k = len(self.values)
        if len(self.relation) != k or any(len(r) != k for r in self.relation):
            raise DomainError(f"relation of {self.name!r} must be {k}x{k}")

    def degree(self, u: str, v: str) -> int:
        try:
            return self.relation[self.values.index(u)][self.values.index(v)]
        except ValueError:
            raise DomainError(f"value outside the domain of {self.name!r}") from None

    def is_reflexive(self, lat: ChainLattice) -> bool:
        return all(self.relation[i][i] == lat.n for i in range(len(self.values)))

    def is_symmetric(self) -> bool:
        k = len(self.values)
        return all(self.relation[i][j] == self.relation[j][i] for i in range(k) for j in range(k))

    def is_transitive(self, lat: ChainLattice) -> bool:
        R, k = self.relation, range(len(self.values))
        return all(lat.tnorm(R[i][j], R[j][l]) <= R[i][l] for i in k for j in k for l in k)


@dataclass(frozen=True)
class SimilarityDatabase:
    lattice: ChainLattice
    universe: AttributeUniverse
    domains: tuple[SimilarityDomain, ...]
    tuples: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if tuple(d.name for d in self.domains) != self.universe.attributes:
            raise DomainError("one domain per attribute, in universe order")
        for t in self.tuples:
            if len(t) != len(self.universe):
                raise DomainError(f"tuple {t} has the wrong arity")
            for d, v in zip(self.domains, t):
                if v not in d.values:
                    raise DomainError(f"value {v!r} is not in the domain of {d.name!r}")
        for d in self.domains:
            for row in d.relation:
                for a in row:
                    self.lattice.check(a)

    def tuple_names(self) -> list[str]:
        return [f"t{i}" for i in range(1, len(self.tuples) + 1)]

    def agreements(self, i: int, j: int) -> tuple[int, ...]:
        """``R_y(t_i(y), t_j(y))`` for every attribute."""
        return tuple(d.degree(u, v) for d, u, v in zip(self.domains, self.tuples[i], self.tuples[j]))


def tuple_agreement(lat: ChainLattice, db: SimilarityDatabase, i: int, j: int, A: LSet) -> int:
    if not (0 <= i < len(db.tuples) and 0 <= j < len(db.tuples)):
        raise DomainError("unknown tuple")
    if A.universe != db.universe:
        raise DomainError("L-set over a different universe")
    res = lat.res_table
    return min((res[a][r] for a, r in zip(A.degrees, db.agreements(i, j))), default=lat.n)


def fd_validity(lat: ChainLattice, db: SimilarityDatabase, imp: Implication) -> int:
    """Infimum over all ordered tuple pairs (equal tuples included)."""
    star, res = lat.star_table, lat.res_table
    k = len(db.tuples)
    return min((res[star[tuple_agreement(lat, db, i, j, imp.antecedent)]]
                [tuple_agreement(lat, db, i, j, imp.consequent)]
                for i, j in itertools.product(range(k), repeat=2)), default=lat.n)


def table_to_db(lat: ChainLattice, t: DataTable) -> SimilarityDatabase:
    """Database over values ``X ∪ X'`` whose tuples ``t_x`` carry ``x`` in every column.

    ``R_y(x1, x2)`` is 1 on the diagonal and ``I(z1, y) ∧ I(z2, y)`` otherwise,
    where ``z`` strips the prime.
    """
    table = t.with_lattice(lat)
    values = tuple(table.objects) + tuple(f"{x}'" for x in table.objects)
    base = list(range(len(table.objects))) * 2
    domains = []
    for col, y in enumerate(table.universe):
        rel = tuple(tuple(lat.n if u == v else min(table.entries[base[u]][col], table.entries[base[v]][col])
                          for v in range(len(values))) for u in range(len(values)))
        domains.append(SimilarityDomain(y, values, rel))
    tuples = tuple((v,) * len(table.universe) for v in values)
    return SimilarityDatabase(lat, table.universe, tuple(domains), tuples)


def db_to_table(lat: ChainLattice, db: SimilarityDatabase) -> DataTable:
    """Table with one object per ordered tuple pair and ``I((t1, t2), y) = R_y(t1(y), t2(y))``."""
    names = db.tuple_names()
    k = len(db.tuples)
    pairs = list(itertools.product(range(k), repeat=2))
    return DataTable(lat, tuple(f"{names[i]}|{names[j]}" for i, j in pairs), db.universe,
                     tuple(db.agreements(i, j) for i, j in pairs))


def fd_entailment_degree(lat: ChainLattice, T: Theory, imp: Implication) -> int:
    """FD-entailment, which coincides with entailment of attribute implications."""
    return entailment_degree(lat, T, imp)


def one_row_table(lat: ChainLattice, M: LSet, name: str = "x") -> DataTable:
    return DataTable(lat, (name,), M.universe, (M.degrees,))


def fd_entailment_oracle(lat: ChainLattice, T: Theory, imp: Implication,
                         budget: int | None = DEFAULT_BUDGET) -> int:
    """Infimum of FD validity over the databases built from one-row tables of all models of ``T``."""
    return min((fd_validity(lat, table_to_db(lat, one_row_table(lat, M)), imp)
                for M in enumerate_models(lat, T, budget)), default=lat.n)


# -- text --------------------------------------------------------------------

def _split_values(text: str) -> list[str]:
    return [v.strip() for v in text.split(",")]


def parse_db(text: str, lat: ChainLattice) -> SimilarityDatabase:
    """``domain <attr>: v1,v2`` / ``rel <attr>: <row-major degrees>`` / ``tuple: v1,...,vk``.

    Relation rows may be separated by ``;``; commas are accepted throughout.
    """
    values: dict[str, tuple[str, ...]] = {}
    rels: dict[str, tuple[tuple[int, ...], ...]] = {}
    order: list[str] = []
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, body = line.partition(":")
        if not sep:
            raise FormatError("expected '<keyword>: ...'", line=lineno)
        words = head.split()
        if words[:1] == ["domain"] and len(words) == 2:
            name = words[1]
            if name in values:
                raise FormatError(f"domain {name!r} declared twice", line=lineno)
            vals = _split_values(body)
            if not all(vals) or len(set(vals)) != len(vals):
                raise FormatError("domain values must be distinct and nonempty", line=lineno)
            values[name] = tuple(vals)
            order.append(name)
        elif words[:1] == ["rel"] and len(words) == 2:
            name = words[1]
            if name not in values:
                raise FormatError(f"relation for undeclared domain {name!r}", line=lineno)
            k = len(values[name])
            cells = [c for c in body.replace(";", ",").split(",")]
            if len(cells) != k * k:
                raise FormatError(f"relation of {name!r} needs {k * k} degrees, got {len(cells)}", line=lineno)
            try:
                degrees = [lat.parse_degree(c) for c in cells]
            except FormatError as exc:
                raise exc.locate(line=lineno) from None
            rels[name] = tuple(tuple(degrees[i * k:(i + 1) * k]) for i in range(k))
        elif words == ["tuple"]:
            rows.append((lineno, _split_values(body)))
        else:
            raise FormatError(f"unknown keyword {head.strip()!r}", line=lineno)
    if not order:
        raise FormatError("no domains declared")
    for name in order:
        if name not in rels:
            raise FormatError(f"missing relation for domain {name!r}")
    try:
        universe = AttributeUniverse(tuple(order))
    except DomainError as exc:
        raise FormatError(str(exc)) from None
    tuples = []
    for lineno, vals in rows:
        if len(vals) != len(order):
            raise FormatError(f"tuple needs {len(order)} values", line=lineno)
        for name, v in zip(order, vals):
            if v not in values[name]:
                raise FormatError(f"value {v!r} is not in the domain of {name!r}", line=lineno)
        tuples.append(tuple(vals))
    domains = tuple(SimilarityDomain(n, values[n], rels[n]) for n in order)
    return SimilarityDatabase(lat, universe, domains, tuple(tuples))


def format_db(db: SimilarityDatabase, decimal: bool = False) -> str:
    lat = db.lattice
    lines = []
    for d in db.domains:
        lines.append(f"domain {d.name}: {','.join(d.values)}")
        lines.append(f"rel {d.name}: " + ";".join(
            ",".join(lat.format_degree(a, decimal) for a in row) for row in d.relation))
    lines.extend(f"tuple: {','.join(t)}" for t in db.tuples)
    return "\n".join(lines) + "\n"


def make_db(lat: ChainLattice, names: Sequence[str], domains: Sequence[tuple[Sequence[str], Sequence[Sequence[int]]]],
            tuples: Sequence[Sequence[str]]) -> SimilarityDatabase:
    universe = AttributeUniverse(tuple(names))
    doms = tuple(SimilarityDomain(n, tuple(v), tuple(tuple(r) for r in rel))
                 for n, (v, rel) in zip(names, domains))
    return SimilarityDatabase(lat, universe, doms, tuple(tuple(t) for t in tuples))
