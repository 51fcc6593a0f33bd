"""Finite equidistant chains of truth degrees with residuated operations and hedges.

A degree is represented by its integer index ``k`` on the chain
``{0, 1/n, ..., n/n}``; every operation is exact integer arithmetic on
precomputed lookup tables.
"""

from __future__ import annotations

import copy
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, FormatError, HedgeError

LUKASIEWICZ = "lukasiewicz"
GODEL = "godel"
TNORMS = (LUKASIEWICZ, GODEL)

IDENTITY = "identity"
GLOBALIZATION = "globalization"
CUSTOM = "custom"
HEDGE_KINDS = (IDENTITY, GLOBALIZATION, CUSTOM)


@dataclass(frozen=True)
class HedgeTable:
    kind: str
    table: tuple[int, ...]


@dataclass(frozen=True)
class HedgeViolation:
    axiom: str
    witness: tuple[int, ...]

    def __str__(self):
        return f"hedge axiom {self.axiom} fails at degree indices {self.witness}"


@dataclass(frozen=True)
class LawViolation:
    law: str
    witness: tuple

    def __str__(self):
        return f"{self.law} fails for {self.witness}"


def _luk_mul(n, a, b):
    return max(a + b - n, 0)


def _luk_res(n, a, b):
    return min(n - a + b, n)


def _godel_mul(n, a, b):
    return min(a, b)


def _godel_res(n, a, b):
    return n if a <= b else b


class ChainLattice:
    """The chain ``L = {0, 1/n, ..., 1}`` with a t-norm, its residuum and a hedge.

    Instances are treated as immutable; ``with_hedge`` returns a new lattice.
    """

    def __init__(self, n: int, tnorm: str = LUKASIEWICZ, hedge: str = IDENTITY,
                 hedge_table: Sequence[int] | None = None):
        if not isinstance(n, int) or n < 1:
            raise DomainError(f"chain size must be a positive integer, got {n!r}")
        tnorm = tnorm.lower()
        if tnorm in ("goguen", "product"):
            raise DomainError("the product t-norm is not closed on a finite equidistant chain")
        if tnorm not in TNORMS:
            raise DomainError(f"unknown t-norm {tnorm!r}")
        self.n = n
        self.tnorm_kind = tnorm
        mul, res = (_luk_mul, _luk_res) if tnorm == LUKASIEWICZ else (_godel_mul, _godel_res)
        rng = range(n + 1)
        self.mul_table = tuple(tuple(mul(n, a, b) for b in rng) for a in rng)
        self.res_table = tuple(tuple(res(n, a, b) for b in rng) for a in rng)

        if hedge == IDENTITY:
            table = tuple(rng)
        elif hedge == GLOBALIZATION:
            table = tuple(n if a == n else 0 for a in rng)
        elif hedge == CUSTOM:
            if hedge_table is None:
                raise DomainError("a custom hedge needs a table")
            table = tuple(hedge_table)
            violation = validate_hedge(self, table)
            if violation is not None:
                raise HedgeError(violation)
        else:
            raise DomainError(f"unknown hedge kind {hedge!r}")
        self.hedge = HedgeTable(hedge, table)
        self.star_table = table

    # -- basic structure -------------------------------------------------
    @property
    def top(self) -> int:
        return self.n

    @property
    def degrees(self) -> range:
        return range(self.n + 1)

    def tnorm(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def residuum(self, a: int, b: int) -> int:
        return self.res_table[a][b]

    def biresiduum(self, a: int, b: int) -> int:
        return min(self.res_table[a][b], self.res_table[b][a])

    def hedge_apply(self, a: int) -> int:
        return self.star_table[a]

    def successor(self, a: int) -> int:
        """Least degree strictly above ``a``."""
        if a >= self.n:
            raise DomainError("the top degree has no successor")
        return a + 1

    def fixpoints(self) -> tuple[int, ...]:
        """Degrees ``a`` with ``a* = a``; these are exactly the values of the hedge."""
        return tuple(a for a in self.degrees if self.star_table[a] == a)

    def with_hedge(self, hedge: str, hedge_table: Sequence[int] | None = None) -> "ChainLattice":
        return ChainLattice(self.n, self.tnorm_kind, hedge, hedge_table)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a <= self.n:
            raise DomainError(f"{a!r} is not a degree index on a chain of size {self.n}")
        return a

    # -- text ------------------------------------------------------------
    def parse_degree(self, text: str) -> int:
        """Parse ``0.7``, ``7/10`` or ``1``; values off the grid are rejected."""
        try:
            value = Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"not a degree: {text!r}") from None
        k = value * self.n
        if k.denominator != 1 or not 0 <= k <= self.n:
            raise FormatError(f"degree {text.strip()} is not on the grid of a chain of size {self.n}")
        return int(k)

    def format_degree(self, a: int, decimal: bool = False) -> str:
        if a == 0:
            return "0"
        if a == self.n:
            return "1"
        if decimal:
            text = _exact_decimal(Fraction(a, self.n))
            if text is not None:
                return text
        return f"{a}/{self.n}"

    def value(self, a: int) -> Fraction:
        return Fraction(a, self.n)

    def __eq__(self, other):
        if not isinstance(other, ChainLattice):
            return NotImplemented
        return (self.n, self.tnorm_kind, self.hedge) == (other.n, other.tnorm_kind, other.hedge)

    def __hash__(self):
        return hash((self.n, self.tnorm_kind, self.hedge))

    def __repr__(self):
        return f"ChainLattice(n={self.n}, tnorm={self.tnorm_kind!r}, hedge={self.hedge.kind!r})"


def _exact_decimal(value: Fraction) -> str | None:
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None
    digits = max(twos, fives)
    text = f"{float(value):.{digits}f}"
    return text.rstrip("0").rstrip(".") if "." in text else text


def validate_hedge(lat: ChainLattice, table: Sequence[int]) -> HedgeViolation | None:
    """Return the first violated hedge axiom with a witness, or ``None``.

    Axioms are checked in the order ``1*=1``, ``a*<=a``, ``(a->b)* <= a*->b*``,
    ``a**=a*``.
    """
    n = lat.n
    if len(table) != n + 1:
        raise FormatError(f"hedge table needs {n + 1} entries, got {len(table)}")
    for a in table:
        if not isinstance(a, int) or not 0 <= a <= n:
            raise FormatError(f"hedge table entry {a!r} is not a degree index")
    res = lat.res_table
    if table[n] != n:
        return HedgeViolation("1* = 1", (n,))
    for a in range(n + 1):
        if table[a] > a:
            return HedgeViolation("a* <= a", (a,))
    for a in range(n + 1):
        for b in range(n + 1):
            if table[res[a][b]] > res[table[a]][table[b]]:
                return HedgeViolation("(a->b)* <= a*->b*", (a, b))
    for a in range(n + 1):
        if table[table[a]] != table[a]:
            return HedgeViolation("a** = a*", (a,))
    return None


def _subsets(values: Sequence[int]) -> Iterable[tuple[int, ...]]:
    for r in range(len(values) + 1):
        yield from itertools.combinations(values, r)


def check_lattice_laws(lat: ChainLattice) -> list[LawViolation]:
    """Exhaustively verify adjointness, the monoid and residuation laws and the hedge axioms.

    Index families range over all subsets of ``L`` (including the empty one);
    paired families range over all sequences of pairs up to a size that keeps
    the check fast. Returns the first witness of each violated law.
    """
    n = lat.n
    L = range(n + 1)
    mul, res, star = lat.mul_table, lat.res_table, lat.star_table
    found: dict[str, tuple] = {}

    def fail(law, *witness):
        found.setdefault(law, witness)

    def bires(a, b):
        return min(res[a][b], res[b][a])

    for a in L:
        if mul[a][n] != a or mul[n][a] != a:
            fail("unit: a*1 = a", a)
        if res[a][a] != n or res[a][n] != n or res[0][a] != n:
            fail("a->a = a->1 = 0->a = 1", a)
        if res[n][a] != a:
            fail("1->a = a", a)
        if mul[a][0] != 0:
            fail("a(x)0 = 0", a)
        for b in L:
            if mul[a][b] != mul[b][a]:
                fail("commutativity", a, b)
            if (a <= b) != (res[a][b] == n):
                fail("a <= b iff a->b = 1", a, b)
            if mul[a][b] > a or a > res[b][a]:
                fail("a(x)b <= a, a <= b->a", a, b)
            if mul[a][res[a][b]] > b or b > res[a][mul[a][b]] or a > res[res[a][b]][b]:
                fail("a(x)(a->b) <= b, b <= a->(a(x)b), a <= (a->b)->b", a, b)
            if bires(a, b) != bires(b, a) or (bires(a, b) == n) != (a == b):
                fail("biresiduum is symmetric and separating", a, b)
            for c in L:
                if (mul[a][b] <= c) != (a <= res[b][c]):
                    fail("adjointness", a, b, c)
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    fail("associativity", a, b, c)
                if not (res[mul[a][b]][c] == res[a][res[b][c]] == res[b][res[a][c]]):
                    fail("(a(x)b)->c = a->(b->c) = b->(a->c)", a, b, c)
                if mul[res[a][b]][res[b][c]] > res[a][c]:
                    fail("(a->b)(x)(b->c) <= a->c", a, b, c)

    for a1, a2, b1, b2 in itertools.product(L, repeat=4):
        if a1 <= a2 and b1 <= b2 and mul[a1][b1] > mul[a2][b2]:
            fail("isotony of (x)", a1, a2, b1, b2)
        if a1 >= a2 and b1 <= b2 and res[a1][b1] > res[a2][b2]:
            fail("antitony/isotony of ->", a1, a2, b1, b2)
        a, b, c, d = a1, a2, b1, b2
        if mul[res[a][b]][res[c][d]] > res[mul[a][c]][mul[b][d]]:
            fail("(a->b)(x)(c->d) <= (a(x)c)->(b(x)d)", a, b, c, d)

    def sup(xs):
        return max(xs, default=0)

    def inf(xs):
        return min(xs, default=n)

    families = list(_subsets(list(L)))
    for a in L:
        for fam in families:
            if mul[a][sup(fam)] != sup(mul[a][b] for b in fam):
                fail("a(x)sup b_i = sup a(x)b_i", a, fam)
            if res[a][inf(fam)] != inf(res[a][b] for b in fam):
                fail("a->inf b_i = inf a->b_i", a, fam)
            if res[sup(fam)][a] != inf(res[x][a] for x in fam):
                fail("sup a_i -> b = inf a_i->b", a, fam)
            if mul[a][inf(fam)] > inf(mul[a][b] for b in fam):
                fail("a(x)inf b_i <= inf a(x)b_i", a, fam)
            if sup(res[a][b] for b in fam) > res[a][sup(fam)]:
                fail("sup a->b_i <= a->sup b_i", a, fam)
            if sup(res[x][a] for x in fam) > res[inf(fam)][a]:
                fail("sup a_i->b <= inf a_i -> b", a, fam)

    pairs = list(itertools.product(L, repeat=2))
    max_len = 3 if len(pairs) <= 36 else 2
    for size in range(max_len + 1):
        for fam in itertools.product(pairs, repeat=size):
            lhs = inf(res[x][y] for x, y in fam)
            if lhs > res[inf(x for x, _ in fam)][inf(y for _, y in fam)]:
                fail("inf (a_i->b_i) <= inf a_i -> inf b_i", fam)

    violation = validate_hedge(lat, star)
    if violation is not None:
        fail(f"hedge: {violation.axiom}", *violation.witness)
    for a in L:
        for b in L:
            if a <= b and star[a] > star[b]:
                fail("hedge is monotone", a, b)
    fix = [a for a in L if star[a] == a]
    for fam in _subsets(fix):
        if sup(fam) not in fix:
            fail("fixpoints of the hedge are closed under suprema", fam)
    for fam in families:
        if star[inf(fam)] != inf(star[a] for a in fam):
            fail("(inf a_i)* = inf a_i*", fam)

    return [LawViolation(law, witness) for law, witness in found.items()]


def with_tables(lat: ChainLattice, *, mul_table=None, res_table=None, star_table=None) -> ChainLattice:
    """Copy of ``lat`` with some operation tables replaced, skipping all validation.

    Meant for fault injection: the result need not be a residuated lattice.
    """
    other = copy.copy(lat)
    if mul_table is not None:
        other.mul_table = tuple(tuple(row) for row in mul_table)
    if res_table is not None:
        other.res_table = tuple(tuple(row) for row in res_table)
    if star_table is not None:
        other.star_table = tuple(star_table)
        other.hedge = HedgeTable(CUSTOM, tuple(star_table))
    return other


def parse_config(text: str) -> ChainLattice:
    """Build a lattice from ``key=value`` lines (``chain_size``, ``tnorm``, ``hedge``, ``hedge_table``)."""
    values: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise FormatError("expected key=value", line=lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in ("chain_size", "tnorm", "hedge", "hedge_table"):
            raise FormatError(f"unknown key {key!r}", line=lineno)
        if key in values:
            raise FormatError(f"duplicate key {key!r}", line=lineno)
        values[key] = (value, lineno)
    if "chain_size" not in values:
        raise FormatError("missing chain_size")
    size_text, size_line = values["chain_size"]
    try:
        n = int(size_text)
    except ValueError:
        raise FormatError(f"chain_size must be an integer, got {size_text!r}", line=size_line) from None
    if n < 1:
        raise FormatError("chain_size must be positive", line=size_line)
    tnorm = values.get("tnorm", (LUKASIEWICZ, 0))[0].lower()
    hedge, hedge_line = values.get("hedge", (IDENTITY, 0))
    hedge = hedge.lower()
    if tnorm not in TNORMS:
        raise FormatError(f"unsupported tnorm {tnorm!r}", line=values["tnorm"][1])
    if hedge not in HEDGE_KINDS:
        raise FormatError(f"unknown hedge {hedge!r}", line=hedge_line)
    table = None
    if hedge == CUSTOM:
        if "hedge_table" not in values:
            raise FormatError("hedge=custom requires hedge_table", line=hedge_line)
        table_text, table_line = values["hedge_table"]
        probe = ChainLattice(n, tnorm)
        try:
            table = [probe.parse_degree(part) for part in table_text.split(",")]
        except FormatError as exc:
            raise exc.locate(line=table_line) from None
    elif "hedge_table" in values:
        raise FormatError("hedge_table is only allowed with hedge=custom", line=values["hedge_table"][1])
    return ChainLattice(n, tnorm, hedge, table)


def format_config(lat: ChainLattice) -> str:
    lines = [f"chain_size={lat.n}", f"tnorm={lat.tnorm_kind}", f"hedge={lat.hedge.kind}"]
    if lat.hedge.kind == CUSTOM:
        lines.append("hedge_table=" + ",".join(lat.format_degree(a) for a in lat.star_table))
    return "\n".join(lines) + "\n"
