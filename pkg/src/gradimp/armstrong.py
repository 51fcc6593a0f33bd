"""Deduction with (Ax), (Cut) and (Mul): proof checking, derived rules and provability.

Rules, for L-sets ``A, B, C, D`` and a degree ``c``:

* Ax:  infer ``A ∪ B => A``
* Cut: from ``A => B`` and ``B ∪ C => D`` infer ``A ∪ C => D``
* Mul: from ``A => B`` infer ``c* ⊗ A => c* ⊗ B``

Step references are 1-based, as in the proof file format.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, FormatError, PreconditionError
from .fsets import (LSet, format_lset, is_subset, scalar_tnorm, similarity,
                    subsethood, union)
from .implications import (Implication, Theory, _parse_implication_at,
                           crispify_theory)
from .lattice import ChainLattice

HYP, AX, CUT, MUL = "hyp", "ax", "cut", "mul"


@dataclass(frozen=True)
class ProofStep:
    implication: Implication
    rule: str
    refs: tuple[int, ...] = ()
    degree: int | None = None

    def justification(self, lat: ChainLattice, decimal: bool = False) -> str:
        if self.rule == CUT:
            return f"cut {self.refs[0]} {self.refs[1]}"
        if self.rule == MUL:
            return f"mul {self.refs[0]} {lat.format_degree(self.degree, decimal)}"
        return self.rule


@dataclass(frozen=True)
class Proof:
    theory: Theory
    steps: tuple[ProofStep, ...]

    @property
    def conclusion(self) -> Implication:
        return self.steps[-1].implication


@dataclass(frozen=True)
class StepError:
    index: int
    reason: str

    def __str__(self):
        return f"step {self.index}: {self.reason}"


def _cut_ok(P: Implication, R: Implication, cur: Implication) -> bool:
    """Is ``cur`` obtained by Cut from ``P = A=>B`` and ``R = B∪C=>D``?

    The witness ``C`` is forced wherever a union has to raise a degree; it is
    zero elsewhere. Both unions are then verified.
    """
    if cur.consequent != R.consequent:
        return False
    Q, Rr, Pp, U = P.consequent.degrees, R.antecedent.degrees, P.antecedent.degrees, cur.antecedent.degrees
    C = []
    for q, r, p, u in zip(Q, Rr, Pp, U):
        c = 0
        if r > q:
            c = r
        if u > p:
            c = max(c, u)
        C.append(c)
    return (all(max(q, c) == r for q, c, r in zip(Q, C, Rr))
            and all(max(p, c) == u for p, c, u in zip(Pp, C, U)))


def check_step(lat: ChainLattice, theory: Theory, steps: Sequence[ProofStep], k: int) -> str | None:
    """Reason why step ``k`` (0-based) is not justified, or ``None``."""
    step = steps[k]
    imp = step.implication
    if imp.universe != theory.universe:
        return "implication over a different universe"
    for r in step.refs:
        if not 1 <= r <= k:
            return f"reference {r} does not point to an earlier step"
    if step.rule == HYP:
        if theory.degree(imp) != lat.n:
            return "not a member of the theory"
    elif step.rule == AX:
        if not is_subset(imp.consequent, imp.antecedent):
            return "not an instance of Ax: consequent is not contained in antecedent"
    elif step.rule == CUT:
        if len(step.refs) != 2:
            return "Cut cites two steps"
        P, R = steps[step.refs[0] - 1].implication, steps[step.refs[1] - 1].implication
        if not _cut_ok(P, R, imp):
            return f"not an instance of Cut from steps {step.refs[0]} and {step.refs[1]}"
    elif step.rule == MUL:
        if len(step.refs) != 1 or step.degree is None:
            return "Mul cites one step and a degree"
        src = steps[step.refs[0] - 1].implication
        c = lat.star_table[lat.check(step.degree)]
        if (imp.antecedent != scalar_tnorm(lat, c, src.antecedent)
                or imp.consequent != scalar_tnorm(lat, c, src.consequent)):
            return f"not an instance of Mul from step {step.refs[0]}"
    else:
        return f"unknown rule {step.rule!r}"
    return None


def check_proof(lat: ChainLattice, proof: Proof, goal: Implication | None = None) -> StepError | None:
    """``None`` when every step is justified and the last one is ``goal``."""
    if not proof.theory.is_crisp(lat):
        raise PreconditionError("proofs are checked against crisp theories")
    if not proof.steps:
        return StepError(0, "empty proof")
    for k in range(len(proof.steps)):
        reason = check_step(lat, proof.theory, proof.steps, k)
        if reason is not None:
            return StepError(k + 1, reason)
    if goal is not None and proof.conclusion != goal:
        return StepError(len(proof.steps), "last step is not the goal")
    return None


class _Builder:
    """Append-only step list returning 1-based indices."""

    def __init__(self, lat: ChainLattice, theory: Theory):
        self.lat = lat
        self.theory = theory
        self.steps: list[ProofStep] = []

    def _push(self, step: ProofStep) -> int:
        self.steps.append(step)
        return len(self.steps)

    def imp(self, k: int) -> Implication:
        return self.steps[k - 1].implication

    def hyp(self, imp: Implication) -> int:
        return self._push(ProofStep(imp, HYP))

    def ax(self, A: LSet, B: LSet) -> int:
        return self._push(ProofStep(Implication(A, B), AX))

    def cut_with(self, i: int, j: int, C: LSet) -> int:
        P, R = self.imp(i), self.imp(j)
        return self._push(ProofStep(Implication(union(P.antecedent, C), R.consequent), CUT, (i, j)))

    def mul(self, i: int, c: int) -> int:
        P = self.imp(i)
        s = self.lat.star_table[c]
        return self._push(ProofStep(Implication(scalar_tnorm(self.lat, s, P.antecedent),
                                                scalar_tnorm(self.lat, s, P.consequent)), MUL, (i,), c))

    def tra(self, i: int, j: int) -> int:
        """From ``A => B`` (step i) and ``B => C`` (step j) derive ``A => C``."""
        return self.cut_with(i, j, LSet.empty(self.imp(i).antecedent.universe))

    def weaken(self, i: int, W: LSet) -> int:
        """From ``X => Z`` (step i) derive ``W => Z`` for ``W ⊇ X``."""
        a = self.ax(W, self.imp(i).antecedent)
        return self.tra(a, i)

    def project(self, i: int, B: LSet) -> int:
        """From ``A => D`` (step i) derive ``A => B`` for ``B ⊆ D``."""
        a = self.ax(self.imp(i).consequent, B)
        return self.tra(i, a)

    def proof(self) -> Proof:
        return Proof(self.theory, tuple(self.steps))


# -- derived rules -----------------------------------------------------------

def _premises(lat, imps, universe):
    return Theory.crisp(universe, imps, lat.n)


def derive_ref(lat: ChainLattice, A: LSet) -> Proof:
    b = _Builder(lat, Theory(A.universe))
    b.ax(A, A)
    return b.proof()


def derive_wea(lat: ChainLattice, imp: Implication, C: LSet) -> Proof:
    """From ``A => B`` infer ``A ∪ C => B``."""
    b = _Builder(lat, _premises(lat, [imp], imp.universe))
    h = b.hyp(imp)
    a = b.ax(union(imp.antecedent, C), imp.antecedent)
    b.tra(a, h)
    return b.proof()


def derive_add(lat: ChainLattice, first: Implication, second: Implication) -> Proof:
    """From ``A => B`` and ``A => C`` infer ``A => B ∪ C``."""
    if first.antecedent != second.antecedent:
        raise DomainError("Add needs two implications with the same antecedent")
    A, B, C = first.antecedent, first.consequent, second.consequent
    b = _Builder(lat, _premises(lat, [first, second], A.universe))
    h1, h2 = b.hyp(first), b.hyp(second)
    a = b.ax(union(B, C), union(B, C))
    s = b.cut_with(h1, a, C)
    b.cut_with(h2, s, A)
    return b.proof()


def derive_pro(lat: ChainLattice, imp: Implication, B: LSet) -> Proof:
    """From ``A => D`` infer ``A => B`` where ``B ⊆ D``."""
    if not is_subset(B, imp.consequent):
        raise DomainError("Pro needs a part of the consequent")
    b = _Builder(lat, _premises(lat, [imp], imp.universe))
    b.project(b.hyp(imp), B)
    return b.proof()


def derive_tra(lat: ChainLattice, first: Implication, second: Implication) -> Proof:
    """From ``A => B`` and ``B => C`` infer ``A => C``."""
    if first.consequent != second.antecedent:
        raise DomainError("Tra needs A => B and B => C")
    b = _Builder(lat, _premises(lat, [first, second], first.universe))
    h1, h2 = b.hyp(first), b.hyp(second)
    b.tra(h1, h2)
    return b.proof()


def derive_cut_prime(lat: ChainLattice, first: Implication, second: Implication,
                     e: int, B: LSet | None = None, C: LSet | None = None) -> Proof:
    """From ``A => e ⊗ B`` and ``B ∪ C => D`` infer ``A ∪ C => e* ⊗ D``.

    ``B`` and ``C`` split the antecedent of ``second``; by default ``B`` is
    the whole antecedent and ``C`` is empty.
    """
    universe = first.universe
    if B is None:
        B = second.antecedent
    if C is None:
        C = LSet.empty(universe)
    if union(B, C) != second.antecedent:
        raise DomainError("B ∪ C must equal the antecedent of the second premise")
    if first.consequent != scalar_tnorm(lat, e, B):
        raise DomainError("the first premise must have consequent e ⊗ B")
    b = _Builder(lat, _premises(lat, [first, second], universe))
    h1, h2 = b.hyp(first), b.hyp(second)
    m = b.mul(h2, e)
    w = b.weaken(m, union(scalar_tnorm(lat, e, B), C))
    b.cut_with(h1, w, C)
    return b.proof()


def _derive_s_steps(b: _Builder, imp: Implication, C: LSet) -> int:
    lat = b.lat
    s = subsethood(lat, imp.antecedent, C)
    h = b.hyp(imp)
    m = b.mul(h, s)
    a = b.ax(C, b.imp(m).antecedent)
    return b.tra(a, m)


def derive_s(lat: ChainLattice, imp: Implication, C: LSet) -> Proof:
    """From ``A => B`` infer ``C => S(A, C)* ⊗ B``."""
    b = _Builder(lat, _premises(lat, [imp], imp.universe))
    _derive_s_steps(b, imp, C)
    return b.proof()


def derive_sub(lat: ChainLattice, imp: Implication, C: LSet, D: LSet) -> Proof:
    """From ``A => B`` infer ``C => D ⊗ S(A, C)* ⊗ S(D, B)``."""
    k = lat.tnorm(lat.hedge_apply(subsethood(lat, imp.antecedent, C)), subsethood(lat, D, imp.consequent))
    b = _Builder(lat, _premises(lat, [imp], imp.universe))
    b.project(_derive_s_steps(b, imp, C), scalar_tnorm(lat, k, D))
    return b.proof()


def derive_sim(lat: ChainLattice, imp: Implication, C: LSet, D: LSet) -> Proof:
    """From ``A => B`` infer ``C => D ⊗ (A ≈ C)* ⊗ (D ≈ B)``."""
    k = lat.tnorm(lat.hedge_apply(similarity(lat, imp.antecedent, C)), similarity(lat, D, imp.consequent))
    b = _Builder(lat, _premises(lat, [imp], imp.universe))
    b.project(_derive_s_steps(b, imp, C), scalar_tnorm(lat, k, D))
    return b.proof()


DERIVED_RULES = {
    "Ref": derive_ref,
    "Wea": derive_wea,
    "Add": derive_add,
    "Pro": derive_pro,
    "Tra": derive_tra,
    "Cut'": derive_cut_prime,
    "S": derive_s,
    "Sub": derive_sub,
    "Sim": derive_sim,
}


def expand_derived(lat: ChainLattice, rule: str, *inputs, **params) -> Proof:
    """Macro-expand a derived rule into primitive steps; premises become the proof's theory."""
    try:
        fn = DERIVED_RULES[rule]
    except KeyError:
        raise DomainError(f"unknown derived rule {rule!r}") from None
    return fn(lat, *inputs, **params)


# -- closure proofs and provability -----------------------------------------

def derive_closure(lat: ChainLattice, T: Theory, A: LSet) -> Proof:
    """A checked-by-construction proof of ``A => A⁺`` from the crisp theory ``T``.

    ``A⁺`` is grown one implication at a time: if ``E => F`` is in ``T`` and
    ``s = S(E, M)*`` for the current ``M``, then Mul gives ``s⊗E => s⊗F``,
    Cut with an Ax instance gives ``M => M ∪ s⊗F`` and Tra extends the chain.
    """
    if not T.is_crisp(lat):
        raise PreconditionError("closure proofs are built from crisp theories")
    b = _Builder(lat, T)
    cur = b.ax(A, A)
    M = A
    hyps: dict[Implication, int] = {}
    changed = True
    while changed:
        changed = False
        for imp in T.implications():
            s = lat.star_table[subsethood(lat, imp.antecedent, M)]
            gain = scalar_tnorm(lat, s, imp.consequent)
            if is_subset(gain, M):
                continue
            if imp not in hyps:
                hyps[imp] = b.hyp(imp)
            src = hyps[imp] if s == lat.n else b.mul(hyps[imp], s)
            grown = union(M, gain)
            a = b.ax(grown, grown)
            step = b.cut_with(src, a, M)
            cur = b.tra(cur, step)
            M = grown
            changed = True
    return b.proof()


def provability_proof(lat: ChainLattice, T: Theory, imp: Implication) -> tuple[int, Proof]:
    """Largest ``c`` with ``cr(T) ⊢ A => c ⊗ B`` together with a proof of that implication."""
    crisp = crispify_theory(lat, T)
    base = derive_closure(lat, crisp, imp.antecedent)
    closed = base.conclusion.consequent
    c = max(a for a in lat.degrees if is_subset(scalar_tnorm(lat, a, imp.consequent), closed))
    b = _Builder(lat, crisp)
    b.steps = list(base.steps)
    b.project(len(b.steps), scalar_tnorm(lat, c, imp.consequent))
    proof = b.proof()
    error = check_proof(lat, proof, Implication(imp.antecedent, scalar_tnorm(lat, c, imp.consequent)))
    if error is not None:
        raise AssertionError(f"constructed proof rejected at {error}")
    return c, proof


def provability_degree(lat: ChainLattice, T: Theory, imp: Implication) -> int:
    return provability_proof(lat, T, imp)[0]


def eliminate_mul(lat: ChainLattice, proof: Proof) -> Proof:
    """Rewrite a proof so that it uses no Mul step; only valid under globalization.

    With ``c* = 1`` a Mul step repeats its premise, which we re-derive by Cut
    with an Ax instance; with ``c* = 0`` it yields ``∅ => ∅``, an Ax instance.
    """
    if lat.star_table != tuple(lat.n if a == lat.n else 0 for a in lat.degrees):
        raise PreconditionError("Mul can be dropped only under globalization")
    new: list[ProofStep] = []
    where: dict[int, int] = {}
    for k, step in enumerate(proof.steps, 1):
        refs = tuple(where[r] for r in step.refs)
        if step.rule == MUL:
            src = new[refs[0] - 1].implication
            if lat.star_table[step.degree] == lat.n:
                new.append(ProofStep(Implication(src.consequent, src.consequent), AX))
                new.append(ProofStep(step.implication, CUT, (refs[0], len(new))))
            else:
                new.append(ProofStep(step.implication, AX))
        else:
            new.append(ProofStep(step.implication, step.rule, refs, step.degree))
        where[k] = len(new)
    return Proof(proof.theory, tuple(new))


# -- text --------------------------------------------------------------------

def parse_proof(text: str, theory: Theory, lat: ChainLattice) -> Proof:
    """Lines ``i: <implication> ; hyp | ax | cut i j | mul i <degree>``."""
    steps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        head, sep, rest = line.partition(":")
        if not sep or not head.strip().isdigit():
            raise FormatError("expected '<number>:'", line=lineno)
        if int(head) != len(steps) + 1:
            raise FormatError(f"expected step number {len(steps) + 1}", line=lineno)
        imp, pos = _parse_implication_at(rest, theory.universe, lat, lineno)
        tail = rest[pos:].strip()
        if not tail.startswith(";"):
            raise FormatError("expected '; <justification>'", line=lineno)
        words = tail[1:].split()
        if not words:
            raise FormatError("missing justification", line=lineno)
        rule, args = words[0].lower(), words[1:]
        if rule in (HYP, AX) and not args:
            steps.append(ProofStep(imp, rule))
        elif rule == CUT and len(args) == 2 and all(x.isdigit() for x in args):
            steps.append(ProofStep(imp, CUT, (int(args[0]), int(args[1]))))
        elif rule == MUL and len(args) == 2 and args[0].isdigit():
            try:
                degree = lat.parse_degree(args[1])
            except FormatError as exc:
                raise exc.locate(line=lineno) from None
            steps.append(ProofStep(imp, MUL, (int(args[0]),), degree))
        else:
            raise FormatError(f"bad justification {' '.join(words)!r}", line=lineno)
    return Proof(theory, tuple(steps))


def format_proof(lat: ChainLattice, proof: Proof, decimal: bool = False) -> str:
    return "".join(
        f"{k}: {format_lset(lat, s.implication.antecedent, decimal)} => "
        f"{format_lset(lat, s.implication.consequent, decimal)} ; {s.justification(lat, decimal)}\n"
        for k, s in enumerate(proof.steps, 1))
