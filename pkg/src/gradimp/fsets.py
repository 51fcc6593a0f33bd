"""Fuzzy sets of attributes over a fixed, ordered universe.

An :class:`LSet` stores one degree index per attribute, in universe order.
Set operations live here as plain functions taking the lattice first, so
that the same vector can be read under different residuated structures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import BudgetExceeded, DomainError, FormatError
from .lattice import ChainLattice

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class AttributeUniverse:
    attributes: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        attrs = tuple(self.attributes)
        object.__setattr__(self, "attributes", attrs)
        if not attrs:
            raise DomainError("an attribute universe must be nonempty")
        if len(set(attrs)) != len(attrs):
            raise DomainError(f"duplicate attribute names in {attrs}")
        for name in attrs:
            if not name or any(ch in name for ch in "{},;=>#\n\t") or name != name.strip():
                raise DomainError(f"invalid attribute name {name!r}")
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(attrs)})

    def __len__(self):
        return len(self.attributes)

    def __iter__(self):
        return iter(self.attributes)

    def __contains__(self, name):
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise DomainError(f"unknown attribute {name!r}") from None


@dataclass(frozen=True)
class LSet:
    """A fuzzy set ``A`` in the universe; ``degrees[i]`` is the index of ``A(y_i)``."""

    universe: AttributeUniverse
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if len(self.degrees) != len(self.universe):
            raise DomainError(
                f"expected {len(self.universe)} degrees, got {len(self.degrees)}")

    @classmethod
    def empty(cls, universe: AttributeUniverse) -> "LSet":
        return cls(universe, (0,) * len(universe))

    @classmethod
    def full(cls, universe: AttributeUniverse, lat: ChainLattice) -> "LSet":
        return cls(universe, (lat.n,) * len(universe))

    @classmethod
    def from_mapping(cls, universe: AttributeUniverse, values: Mapping[str, int]) -> "LSet":
        degrees = [0] * len(universe)
        for name, a in values.items():
            degrees[universe.index(name)] = a
        return cls(universe, tuple(degrees))

    def __getitem__(self, name: str) -> int:
        return self.degrees[self.universe.index(name)]

    def support(self) -> tuple[str, ...]:
        return tuple(y for y, a in zip(self.universe, self.degrees) if a)

    def is_empty(self) -> bool:
        return not any(self.degrees)

    def lex_key(self) -> tuple[int, ...]:
        """Sort key for the lexicographic order in which the last attribute is most significant."""
        return self.degrees[::-1]

    def sum_key(self) -> tuple:
        """Sort key for a strict total order extending proper inclusion."""
        return (sum(self.degrees), self.degrees[::-1])

    def __or__(self, other: "LSet") -> "LSet":
        return union(self, other)

    def __and__(self, other: "LSet") -> "LSet":
        return intersection(self, other)

    def __le__(self, other: "LSet") -> bool:
        return is_subset(self, other)

    def __lt__(self, other: "LSet") -> bool:
        return is_strict_subset(self, other)

    def __ge__(self, other: "LSet") -> bool:
        return is_subset(other, self)

    def __gt__(self, other: "LSet") -> bool:
        return is_strict_subset(other, self)


def _same(C: LSet, D: LSet) -> None:
    if C.universe != D.universe:
        raise DomainError("L-sets live on different attribute universes")


def subsethood(lat: ChainLattice, C: LSet, D: LSet) -> int:
    """Degree ``S(C, D)`` to which ``C`` is included in ``D``."""
    _same(C, D)
    res = lat.res_table
    return min((res[c][d] for c, d in zip(C.degrees, D.degrees)), default=lat.n)


def similarity(lat: ChainLattice, A: LSet, B: LSet) -> int:
    """Degree of equality: the infimum of componentwise biresidua."""
    _same(A, B)
    return min((lat.biresiduum(a, b) for a, b in zip(A.degrees, B.degrees)), default=lat.n)


def scalar_tnorm(lat: ChainLattice, a: int, A: LSet) -> LSet:
    mul = lat.mul_table[lat.check(a)]
    return LSet(A.universe, tuple(mul[x] for x in A.degrees))


def scalar_shift(lat: ChainLattice, a: int, A: LSet) -> LSet:
    res = lat.res_table[lat.check(a)]
    return LSet(A.universe, tuple(res[x] for x in A.degrees))


def union(C: LSet, D: LSet) -> LSet:
    _same(C, D)
    return LSet(C.universe, tuple(max(c, d) for c, d in zip(C.degrees, D.degrees)))


def intersection(C: LSet, D: LSet) -> LSet:
    _same(C, D)
    return LSet(C.universe, tuple(min(c, d) for c, d in zip(C.degrees, D.degrees)))


def union_all(universe: AttributeUniverse, sets: Iterable[LSet]) -> LSet:
    degrees = [0] * len(universe)
    for S in sets:
        if S.universe != universe:
            raise DomainError("L-sets live on different attribute universes")
        degrees = [max(x, y) for x, y in zip(degrees, S.degrees)]
    return LSet(universe, tuple(degrees))


def is_subset(C: LSet, D: LSet) -> bool:
    _same(C, D)
    return all(c <= d for c, d in zip(C.degrees, D.degrees))


def is_strict_subset(C: LSet, D: LSet) -> bool:
    return is_subset(C, D) and C.degrees != D.degrees


def count_lsets(universe: AttributeUniverse, lat: ChainLattice) -> int:
    return (lat.n + 1) ** len(universe)


def enumerate_lsets(universe: AttributeUniverse, lat: ChainLattice,
                    budget: int | None = DEFAULT_BUDGET) -> Iterator[LSet]:
    """Yield every L-set once, first attribute varying fastest.

    This is the lexicographic order in which the last attribute is most
    significant: it starts with the empty set and ends with the full one.
    """
    total = count_lsets(universe, lat)
    if budget is not None and total > budget:
        raise BudgetExceeded(f"{total} L-sets exceed the enumeration budget of {budget}")
    for rev in itertools.product(range(lat.n + 1), repeat=len(universe)):
        yield LSet(universe, rev[::-1])


# -- text --------------------------------------------------------------------

def _looks_like_degree(text: str) -> bool:
    try:
        Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        return False
    return True


def _split_entries(text: str, offset: int) -> tuple[list[tuple[str, int]], int]:
    """Split the body of ``{...}`` starting at ``text[offset] == '{'``.

    Returns (entries with their column, index just past the closing brace).
    """
    if offset >= len(text) or text[offset] != "{":
        raise FormatError("expected '{'", column=offset + 1)
    close = text.find("}", offset)
    if close < 0:
        raise FormatError("unterminated L-set, missing '}'", column=offset + 1)
    body = text[offset + 1:close]
    entries = []
    if body.strip():
        pos = offset + 1
        for part in body.split(","):
            stripped = part.strip()
            col = pos + (len(part) - len(part.lstrip())) + 1
            if not stripped:
                raise FormatError("empty entry in L-set", column=col)
            entries.append((stripped, col))
            pos += len(part) + 1
    return entries, close + 1


def entry_attribute(entry: str) -> str:
    """Attribute name of an entry without knowing the universe (used for inference).

    The longest prefix that reads as a degree wins, so ``1/2/z`` names ``z``.
    """
    name = entry.strip()
    for i, ch in enumerate(entry):
        if ch == "/" and _looks_like_degree(entry[:i]) and entry[i + 1:].strip():
            name = entry[i + 1:].strip()
    return name


def _parse_entry(entry: str, col: int, universe: AttributeUniverse, lat: ChainLattice) -> tuple[int, int]:
    if entry in universe:
        return universe.index(entry), lat.n
    for i, ch in enumerate(entry):
        if ch != "/":
            continue
        name = entry[i + 1:].strip()
        if name in universe and _looks_like_degree(entry[:i]):
            try:
                return universe.index(name), lat.parse_degree(entry[:i])
            except FormatError as exc:
                raise exc.locate(column=col) from None
    name = entry_attribute(entry)
    raise FormatError(f"unknown attribute {name!r}", column=col)


def parse_lset_at(text: str, offset: int, universe: AttributeUniverse,
                  lat: ChainLattice) -> tuple[LSet, int]:
    entries, end = _split_entries(text, offset)
    degrees = [0] * len(universe)
    seen = set()
    for entry, col in entries:
        idx, a = _parse_entry(entry, col, universe, lat)
        if idx in seen:
            raise FormatError(f"attribute {universe.attributes[idx]!r} listed twice", column=col)
        seen.add(idx)
        degrees[idx] = a
    return LSet(universe, tuple(degrees)), end


def parse_lset(text: str, universe: AttributeUniverse, lat: ChainLattice) -> LSet:
    """Parse a literal such as ``{0.5/y, z}``; a bare name means degree 1."""
    start = len(text) - len(text.lstrip())
    lset, end = parse_lset_at(text, start, universe, lat)
    if text[end:].strip():
        raise FormatError("unexpected text after L-set", column=end + 1)
    return lset


def lset_attributes(text: str) -> list[str]:
    """Attribute names mentioned in every ``{...}`` group of ``text``, in order of appearance."""
    names: list[str] = []
    pos = text.find("{")
    while pos >= 0:
        entries, end = _split_entries(text, pos)
        for entry, _ in entries:
            name = entry_attribute(entry)
            if name not in names:
                names.append(name)
        pos = text.find("{", end)
    return names


def format_lset(lat: ChainLattice, A: LSet, decimal: bool = False) -> str:
    """Render with zero entries omitted and bare names for full membership."""
    parts = []
    for name, a in zip(A.universe, A.degrees):
        if a == 0:
            continue
        parts.append(name if a == lat.n else f"{lat.format_degree(a, decimal)}/{name}")
    return "{" + ", ".join(parts) + "}"


def make_universe(names: Sequence[str] | str) -> AttributeUniverse:
    if isinstance(names, str):
        names = [part.strip() for part in names.split(",") if part.strip()]
    return AttributeUniverse(tuple(names))
