"""Graded data tables and their hedged Galois operators."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, FormatError
from .fsets import DEFAULT_BUDGET, AttributeUniverse, LSet, enumerate_lsets
from .lattice import ChainLattice


@dataclass(frozen=True)
class DataTable:
    """Objects ``X``, attributes ``Y`` and the incidence ``I(x, y)`` as degree indices."""

    lattice: ChainLattice
    objects: tuple[str, ...]
    universe: AttributeUniverse
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        if not self.objects:
            raise DomainError("a data table needs at least one object")
        if len(set(self.objects)) != len(self.objects):
            raise DomainError("duplicate object names")
        if len(self.entries) != len(self.objects):
            raise DomainError("one row of degrees is needed per object")
        for row in self.entries:
            if len(row) != len(self.universe):
                raise DomainError("ragged incidence matrix")
            for a in row:
                self.lattice.check(a)

    @property
    def object_universe(self) -> AttributeUniverse:
        return AttributeUniverse(self.objects)

    def row(self, x: str) -> LSet:
        try:
            i = self.objects.index(x)
        except ValueError:
            raise DomainError(f"unknown object {x!r}") from None
        return LSet(self.universe, self.entries[i])

    def rows(self) -> list[LSet]:
        return [LSet(self.universe, r) for r in self.entries]

    def up(self, A: LSet) -> LSet:
        """``A↑(y) = inf_x (A(x)* -> I(x, y))`` for a fuzzy set of objects."""
        if A.universe.attributes != self.objects:
            raise DomainError("expected an L-set over the objects of the table")
        lat = self.lattice
        res, star = lat.res_table, lat.star_table
        out = [lat.n] * len(self.universe)
        for ax, row in zip(A.degrees, self.entries):
            r = res[star[ax]]
            out = [min(o, r[i]) for o, i in zip(out, row)]
        return LSet(self.universe, tuple(out))

    def down(self, B: LSet) -> LSet:
        """``B↓(x) = inf_y (B(y) -> I(x, y))``; no hedge on the attribute side."""
        if B.universe != self.universe:
            raise DomainError("expected an L-set over the attributes of the table")
        res = self.lattice.res_table
        return LSet(self.object_universe,
                    tuple(min((res[b][i] for b, i in zip(B.degrees, row)), default=self.lattice.n)
                          for row in self.entries))

    def closure(self, B: LSet) -> LSet:
        return self.up(self.down(B))

    def is_intent(self, B: LSet) -> bool:
        return self.closure(B) == B

    def intents(self, budget: int | None = DEFAULT_BUDGET) -> list[LSet]:
        """All fixpoints of the closure, in enumeration order."""
        return [B for B in enumerate_lsets(self.universe, self.lattice, budget) if self.is_intent(B)]

    def with_lattice(self, lat: ChainLattice) -> "DataTable":
        if lat.n != self.lattice.n:
            raise DomainError("cannot move a table to a chain of a different size")
        return DataTable(lat, self.objects, self.universe, self.entries)


def closure_ddu(t: DataTable, A: LSet) -> LSet:
    return t.closure(A)


def parse_table(text: str, lat: ChainLattice) -> DataTable:
    """Read ``object,<attr>,...`` followed by one ``name,d1,...,dk`` row per object."""
    rows = [(i, r) for i, r in enumerate(csv.reader(io.StringIO(text)), 1)
            if r and any(cell.strip() for cell in r)]
    if not rows:
        raise FormatError("empty table")
    header_line, header = rows[0]
    names = [h.strip() for h in header[1:]]
    if not names:
        raise FormatError("the header names no attributes", line=header_line)
    try:
        universe = AttributeUniverse(tuple(names))
    except DomainError as exc:
        raise FormatError(str(exc), line=header_line) from None
    objects, entries = [], []
    for lineno, row in rows[1:]:
        if len(row) != len(names) + 1:
            raise FormatError(f"expected {len(names) + 1} fields, got {len(row)}", line=lineno)
        name = row[0].strip()
        if not name:
            raise FormatError("missing object name", line=lineno)
        if name in objects:
            raise FormatError(f"duplicate object {name!r}", line=lineno)
        degrees = []
        for col, cell in enumerate(row[1:], 2):
            try:
                degrees.append(lat.parse_degree(cell))
            except FormatError as exc:
                raise exc.locate(line=lineno, column=col) from None
        objects.append(name)
        entries.append(tuple(degrees))
    if not objects:
        raise FormatError("the table has no objects", line=header_line)
    return DataTable(lat, tuple(objects), universe, tuple(entries))


def format_table(t: DataTable, decimal: bool = False) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["object", *t.universe.attributes])
    for name, row in zip(t.objects, t.entries):
        writer.writerow([name, *(t.lattice.format_degree(a, decimal) for a in row)])
    return out.getvalue()


def table_from_rows(lat: ChainLattice, universe: AttributeUniverse,
                    rows: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> DataTable:
    if names is None:
        names = [f"x{i}" for i in range(1, len(rows) + 1)]
    return DataTable(lat, tuple(names), universe, tuple(tuple(r) for r in rows))
