"""Graded attribute implications, their validity degrees and graded theories."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError, FormatError
from .fsets import (AttributeUniverse, LSet, format_lset, lset_attributes,
                    parse_lset_at, scalar_tnorm, subsethood)
from .lattice import ChainLattice


@dataclass(frozen=True)
class Implication:
    """``A => B`` with fuzzy antecedent and consequent over one universe."""

    antecedent: LSet
    consequent: LSet

    def __post_init__(self):
        if self.antecedent.universe != self.consequent.universe:
            raise DomainError("antecedent and consequent use different universes")

    @property
    def universe(self) -> AttributeUniverse:
        return self.antecedent.universe

    def format(self, lat: ChainLattice, decimal: bool = False) -> str:
        return f"{format_lset(lat, self.antecedent, decimal)} => {format_lset(lat, self.consequent, decimal)}"


GradedImplication = Implication


class Theory:
    """A finitely supported fuzzy set of implications, kept in insertion order.

    Entries of degree 0 are dropped. Adding an implication that is already
    present keeps the larger of the two degrees.
    """

    def __init__(self, universe: AttributeUniverse, entries: Iterable[tuple[Implication, int]] = ()):
        self.universe = universe
        self._entries: dict[Implication, int] = {}
        for imp, a in entries:
            self.add(imp, a)

    @classmethod
    def crisp(cls, universe: AttributeUniverse, imps: Iterable[Implication], top: int) -> "Theory":
        return cls(universe, ((imp, top) for imp in imps))

    def add(self, imp: Implication, degree: int) -> None:
        if imp.universe != self.universe:
            raise DomainError("implication universe differs from the theory universe")
        if degree <= 0:
            return
        self._entries[imp] = max(degree, self._entries.get(imp, 0))

    def degree(self, imp: Implication) -> int:
        return self._entries.get(imp, 0)

    def items(self) -> list[tuple[Implication, int]]:
        return list(self._entries.items())

    def implications(self) -> list[Implication]:
        return list(self._entries)

    def is_crisp(self, lat: ChainLattice) -> bool:
        return all(a == lat.n for a in self._entries.values())

    def without(self, imp: Implication) -> "Theory":
        return Theory(self.universe, ((i, a) for i, a in self._entries.items() if i != imp))

    def __len__(self):
        return len(self._entries)

    def __iter__(self) -> Iterator[Implication]:
        return iter(self._entries)

    def __contains__(self, imp):
        return imp in self._entries

    def __eq__(self, other):
        if not isinstance(other, Theory):
            return NotImplemented
        return self.universe == other.universe and self._entries == other._entries

    def __repr__(self):
        return f"Theory({len(self)} entries over {self.universe.attributes})"


def validity_in_lset(lat: ChainLattice, imp: Implication, M: LSet) -> int:
    """``S(A, M)* -> S(B, M)``."""
    s_a = lat.star_table[subsethood(lat, imp.antecedent, M)]
    return lat.res_table[s_a][subsethood(lat, imp.consequent, M)]


def validity_in_system(lat: ChainLattice, imp: Implication, Ms: Iterable[LSet]) -> int:
    return min((validity_in_lset(lat, imp, M) for M in Ms), default=lat.n)


def validity_per_row(lat: ChainLattice, imp: Implication, t) -> list[int]:
    return [validity_in_lset(lat, imp, M) for M in t.rows()]


def validity_in_table(lat: ChainLattice, imp: Implication, t) -> int:
    if t.universe != imp.universe:
        raise DomainError("implication and table use different attributes")
    return validity_in_system(lat, imp, t.rows())


def crispify_theory(lat: ChainLattice, T: Theory) -> Theory:
    """The crisp theory ``{A => T(A=>B) (x) B}`` with the same models as ``T``."""
    out = Theory(T.universe)
    for imp, a in T.items():
        B = scalar_tnorm(lat, a, imp.consequent)
        if not B.is_empty():
            out.add(Implication(imp.antecedent, B), lat.n)
    return out


# -- text --------------------------------------------------------------------

def _parse_implication_at(text: str, universe: AttributeUniverse, lat: ChainLattice,
                          line: int | None) -> tuple[Implication, int]:
    try:
        start = len(text) - len(text.lstrip())
        A, pos = parse_lset_at(text, start, universe, lat)
        rest = text[pos:]
        arrow = pos + len(rest) - len(rest.lstrip())
        if not text.startswith("=>", arrow):
            raise FormatError("expected '=>'", column=arrow + 1)
        pos = arrow + 2
        rest = text[pos:]
        B, pos = parse_lset_at(text, pos + len(rest) - len(rest.lstrip()), universe, lat)
    except FormatError as exc:
        raise exc.locate(line=line) from None
    return Implication(A, B), pos


def parse_implication(text: str, universe: AttributeUniverse, lat: ChainLattice) -> Implication:
    imp, pos = _parse_implication_at(text, universe, lat, None)
    if text[pos:].strip():
        raise FormatError("unexpected text after implication", column=pos + 1)
    return imp


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0]


def parse_theory(text: str, universe: AttributeUniverse, lat: ChainLattice) -> Theory:
    """One ``<lset> => <lset> [@ <degree>]`` per line; ``#`` starts a comment."""
    T = Theory(universe)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue
        imp, pos = _parse_implication_at(line, universe, lat, lineno)
        tail = line[pos:].strip()
        degree = lat.n
        if tail:
            if not tail.startswith("@"):
                raise FormatError("expected '@ <degree>' or end of line", line=lineno, column=pos + 1)
            try:
                degree = lat.parse_degree(tail[1:])
            except FormatError as exc:
                raise exc.locate(line=lineno) from None
        T.add(imp, degree)
    return T


def theory_attributes(text: str) -> list[str]:
    names: list[str] = []
    for raw in text.splitlines():
        for name in lset_attributes(_strip_comment(raw)):
            if name not in names:
                names.append(name)
    return names


def format_theory(lat: ChainLattice, T: Theory, decimal: bool = False) -> str:
    lines = []
    for imp, a in T.items():
        line = imp.format(lat, decimal)
        if a != lat.n:
            line += f" @ {lat.format_degree(a, decimal)}"
        lines.append(line)
    return "".join(line + "\n" for line in lines)
