"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 internal cross-check mismatch,
4 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import armstrong, bases, entailment, fdbridge, threshold
from .errors import BudgetExceeded, GradimpError
from .fsets import DEFAULT_BUDGET, LSet, format_lset, make_universe
from .implications import (Theory, format_theory, parse_implication, parse_theory,
                           theory_attributes, validity_in_table, validity_per_row)
from .lattice import ChainLattice, parse_config
from .tables import format_table, parse_table

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH, EXIT_BUDGET = 0, 2, 3, 4


class CrossCheckMismatch(Exception):
    pass


class Reporter:
    """Writes either readable text or tab-delimited records."""

    def __init__(self, lat: ChainLattice, args, out=None):
        self.lat = lat
        self.structured = args.format == "structured"
        self.decimal = args.decimal
        self.out = out or sys.stdout

    def deg(self, a: int) -> str:
        return self.lat.format_degree(a, self.decimal)

    def lset(self, A: LSet) -> str:
        return format_lset(self.lat, A, self.decimal)

    def record(self, kind: str, *fields, text: str | None = None):
        if self.structured:
            print("\t".join([kind, *map(str, fields)]), file=self.out)
        else:
            print(text if text is not None else f"{kind}: {' '.join(map(str, fields))}", file=self.out)

    def theory(self, T: Theory, lat: ChainLattice | None = None):
        lat = lat or self.lat
        if self.structured:
            for imp, a in T.items():
                print("\t".join(["implication", format_lset(lat, imp.antecedent, self.decimal),
                                 format_lset(lat, imp.consequent, self.decimal),
                                 lat.format_degree(a, self.decimal)]), file=self.out)
        else:
            self.out.write(format_theory(lat, T, self.decimal))


# -- helpers -----------------------------------------------------------------

def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise GradimpError(f"cannot read {path}: {exc.strerror}") from None


def _lattice(args) -> ChainLattice:
    if args.config:
        return parse_config(_read(args.config))
    if args.chain_size is None:
        raise GradimpError("give --config or --chain-size")
    table = None
    if args.hedge == "custom":
        if not args.hedge_table:
            raise GradimpError("--hedge custom needs --hedge-table")
        probe = ChainLattice(args.chain_size, args.tnorm)
        table = [probe.parse_degree(d) for d in args.hedge_table.split(",")]
    return ChainLattice(args.chain_size, args.tnorm, args.hedge, table)


def _universe(args, *texts: str):
    if args.attributes:
        return make_universe(args.attributes)
    names: list[str] = []
    for text in texts:
        for name in theory_attributes(text):
            if name not in names:
                names.append(name)
    if not names:
        raise GradimpError("cannot infer attributes; pass --attributes")
    return make_universe(names)


def _budget(args):
    return None if args.budget == 0 else args.budget


# -- commands ----------------------------------------------------------------

def cmd_validity(args, lat, rep):
    table = parse_table(_read(args.table), lat)
    imp = parse_implication(args.implication, table.universe, lat)
    for x, a in zip(table.objects, validity_per_row(lat, imp, table)):
        rep.record("row", x, rep.deg(a), text=f"row {x}: {rep.deg(a)}")
    total = validity_in_table(lat, imp, table)
    rep.record("validity", rep.deg(total))
    if args.figure:
        from .plotting import plot_row_validity
        plot_row_validity(lat, imp, table, args.figure)
        rep.record("figure", args.figure)


def cmd_entail(args, lat, rep):
    text = _read(args.theory)
    U = _universe(args, text, args.implication)
    T = parse_theory(text, U, lat)
    imp = parse_implication(args.implication, U, lat)
    if args.check:
        fast = entailment.entailment_degree(lat, T, imp)
        slow = entailment.entailment_degree_oracle(lat, T, imp, _budget(args))
        proof = armstrong.provability_degree(lat, T, imp)
        rep.record("closure", rep.deg(fast))
        rep.record("oracle", rep.deg(slow))
        rep.record("provability", rep.deg(proof))
        if not fast == slow == proof:
            raise CrossCheckMismatch("closure, oracle and provability degrees disagree")
        rep.record("degree", rep.deg(fast))
    elif args.oracle:
        rep.record("degree", rep.deg(entailment.entailment_degree_oracle(lat, T, imp, _budget(args))))
    else:
        rep.record("degree", rep.deg(entailment.entailment_degree(lat, T, imp)))


def cmd_base(args, lat, rep):
    table = parse_table(_read(args.table), lat)
    budget = _budget(args)
    if args.method == "graph":
        graph = bases.build_graph(lat, table, budget)
        systems = bases.systems_of_pseudo_intents(lat, table, budget)
        rep.record("systems", len(systems), text=f"# {len(systems)} system(s) of pseudo-intents")
        for k, system in enumerate(systems, 1):
            rep.record("system", k, text=f"# system {k}")
            T = bases.base_from_system(lat, table, system)
            rep.theory(bases.minimize_theory(lat, T) if args.minimize else T)
        if args.figure:
            from .plotting import plot_pseudo_intent_graph
            plot_pseudo_intent_graph(lat, graph, args.figure, systems)
            rep.record("figure", args.figure, text=f"# figure: {args.figure}")
        return
    if args.method == "alg1":
        T = bases.base_from_system(lat, table, bases.pseudo_intents_glob(lat, table, budget))
    else:
        T = bases.pseudo_intents_nextclosure(lat, table).theory(lat, table)
    if args.minimize:
        T = bases.minimize_theory(lat, T)
    rep.theory(T)


def cmd_threshold(args, lat, rep):
    if args.direction == "down":
        if not args.theory:
            raise GradimpError("threshold down needs --theory")
        text = _read(args.theory)
        if args.attributes:
            U = make_universe(args.attributes)
        else:
            names = []
            for name in theory_attributes(text):
                base = name.rsplit("@", 1)[0]
                if base not in names:
                    names.append(base)
            U = make_universe(names)
        Tx = parse_theory(text, threshold.lifted_universe(lat, U), threshold.BOOLEAN)
        rep.theory(threshold.transfer_theory_down(lat, Tx, U))
        return
    if args.direction == "up" and args.theory:
        text = _read(args.theory)
        T = parse_theory(text, _universe(args, text), lat)
        rep.theory(threshold.transfer_theory_up(lat, T), threshold.BOOLEAN)
        return
    if not args.table:
        raise GradimpError(f"threshold {args.direction} needs --table")
    table = parse_table(_read(args.table), lat)
    if args.direction == "base":
        Tx = threshold.lift_base(lat, table)
        if args.down:
            rep.theory(threshold.transfer_theory_down(lat, Tx, table.universe))
        else:
            rep.theory(Tx, threshold.BOOLEAN)
        return
    lifted = threshold.lift_table(lat, table)
    if rep.structured:
        for name, row in zip(lifted.binary.objects, lifted.binary.entries):
            rep.record("row", name, *row)
    else:
        rep.out.write(format_table(lifted.binary))
    if args.figure:
        from .plotting import plot_lifted_table
        plot_lifted_table(lifted, args.figure)
        rep.record("figure", args.figure, text=f"# figure: {args.figure}")


def cmd_fd(args, lat, rep):
    db = fdbridge.parse_db(_read(args.db), lat)
    imp = parse_implication(args.implication, db.universe, lat)
    if args.theory:
        T = parse_theory(_read(args.theory), db.universe, lat)
        degree = fdbridge.fd_entailment_degree(lat, T, imp)
        if args.check:
            oracle = fdbridge.fd_entailment_oracle(lat, T, imp, _budget(args))
            rep.record("oracle", rep.deg(oracle))
            if oracle != degree:
                raise CrossCheckMismatch("FD entailment differs from the database oracle")
        rep.record("entailment", rep.deg(degree))
    else:
        rep.record("validity", rep.deg(fdbridge.fd_validity(lat, db, imp)))


def cmd_check_proof(args, lat, rep):
    theory_text, proof_text = _read(args.theory), _read(args.proof)
    U = _universe(args, theory_text, proof_text, args.goal or "")
    T = parse_theory(theory_text, U, lat)
    proof = armstrong.parse_proof(proof_text, T, lat)
    goal = parse_implication(args.goal, U, lat) if args.goal else None
    error = armstrong.check_proof(lat, proof, goal)
    if error is None:
        rep.record("proof", "ok", text="ok")
    else:
        rep.record("proof", "rejected", error.index, error.reason,
                   text=f"rejected at step {error.index}: {error.reason}")


def cmd_check_complete(args, lat, rep):
    table = parse_table(_read(args.table), lat)
    T = parse_theory(_read(args.theory), table.universe, lat)
    complete = entailment.check_complete(lat, T, table, _budget(args))
    one = entailment.check_1_complete(lat, T, table, _budget(args))
    rep.record("complete", str(complete).lower())
    rep.record("1-complete", str(one).lower())
    if complete != one:
        raise CrossCheckMismatch("completeness and 1-completeness disagree")


def cmd_laws(args, lat, rep):
    from .lattice import check_lattice_laws
    violations = check_lattice_laws(lat)
    for v in violations:
        rep.record("violation", v.law, v.witness, text=f"violation: {v}")
    rep.record("laws", "ok" if not violations else f"{len(violations)} violated")


COMMANDS = {
    "validity": cmd_validity,
    "entail": cmd_entail,
    "base": cmd_base,
    "threshold": cmd_threshold,
    "fd": cmd_fd,
    "check-proof": cmd_check_proof,
    "check-complete": cmd_check_complete,
    "laws": cmd_laws,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("truth degrees")
    g.add_argument("--config", help="lattice config file (key=value lines)")
    g.add_argument("--chain-size", type=int, help="n for the chain {0, 1/n, ..., 1}")
    g.add_argument("--tnorm", default="lukasiewicz", choices=["lukasiewicz", "godel"])
    g.add_argument("--hedge", default="identity", choices=["identity", "globalization", "custom"])
    g.add_argument("--hedge-table", help="comma separated hedge values for --hedge custom")
    common.add_argument("--attributes", help="comma separated attribute order (otherwise inferred)")
    common.add_argument("--format", default="text", choices=["text", "structured"])
    common.add_argument("--decimal", action="store_true", help="print degrees as decimals when exact")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="maximum number of L-sets enumerated by exhaustive methods (0: no limit)")

    parser = argparse.ArgumentParser(prog="gradimp", description="Graded attribute implications.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validity", parents=[common], help="validity of an implication in a table")
    p.add_argument("table")
    p.add_argument("implication")
    p.add_argument("--figure", help="write a per-row bar chart to this file")

    p = sub.add_parser("entail", parents=[common], help="degree to which a theory entails an implication")
    p.add_argument("theory")
    p.add_argument("implication")
    p.add_argument("--oracle", action="store_true", help="use model enumeration")
    p.add_argument("--check", action="store_true", help="compare closure, oracle and provability")

    p = sub.add_parser("base", parents=[common], help="bases from pseudo-intents")
    p.add_argument("table")
    p.add_argument("--method", default="graph", choices=["graph", "alg1", "alg2"])
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--figure", help="with --method graph: draw E and the graph to this file")

    p = sub.add_parser("threshold", parents=[common], help="two-valued lift and theory transfer")
    p.add_argument("direction", choices=["up", "down", "base"])
    p.add_argument("--table")
    p.add_argument("--theory")
    p.add_argument("--down", action="store_true", help="with 'base': map the lift base back down")
    p.add_argument("--figure", help="with 'up --table': draw the lifted incidence")

    p = sub.add_parser("fd", parents=[common], help="functional dependency semantics")
    p.add_argument("db")
    p.add_argument("implication")
    p.add_argument("--theory", help="compute FD entailment from this theory instead")
    p.add_argument("--check", action="store_true", help="compare against the database oracle")

    p = sub.add_parser("check-proof", parents=[common], help="verify an (Ax)/(Cut)/(Mul) proof")
    p.add_argument("theory")
    p.add_argument("proof")
    p.add_argument("--goal")

    p = sub.add_parser("check-complete", parents=[common], help="is a theory complete in a table")
    p.add_argument("table")
    p.add_argument("theory")

    sub.add_parser("laws", parents=[common], help="exhaustively check the lattice laws")
    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lat = _lattice(args)
        rep = Reporter(lat, args, out)
        COMMANDS[args.command](args, lat, rep)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CrossCheckMismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except GradimpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
