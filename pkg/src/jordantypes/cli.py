"""Command-line front end.

Subcommands: hilbert, jordan, strings, degree-type, generic, bounds,
lefschetz, dual, tensor-cg, qp, poset, partition.  Exit codes: 0 success,
2 input error (diagnostic on stderr), 3 internal consistency failure.
All output is deterministic given the inputs, flags, and seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .commutant import (
    brute_commuting_type,
    compatibility_check,
    generic_commuting_type,
)
from .duality import inverse_system_dim, intermediate_hilberts, jordan_type_via_dual
from .errors import (
    InternalInconsistencyError,
    JordanTypesError,
    StabilityViolationError,
)
from .jordan import (
    bound_report,
    distinct_forms_type,
    generic_jordan_type,
    jordan_degree_type,
    jordan_strings,
    jordan_type,
    poset_sample,
)
from .lefschetz import classify, find_sl_element
from .linalg import FieldSpec
from .partitions import (
    Partition,
    ar_cover_number,
    almost_rectangular,
    collapse_closure,
    conjugate,
    dominance_cmp,
    dominance_sum,
    is_stable,
    parse_degree_type,
    parse_partition,
    power_partition,
    render_partition,
)
from .sampling import MAXIMAL_IDEAL, SamplingPlan, Subspace
from .specdoc import load_spec
from .tensor import cg_block, deviation, modular_lambda

SCHEMA = "jordantypes/1"


def _plan(args, default_trials=12) -> SamplingPlan:
    trials = args.trials if args.trials is not None else default_trials
    return SamplingPlan(trials=trials, seed=args.seed)


def _subspace(text: str) -> Subspace:
    if text == "linear":
        return Subspace.linear()
    if text == "maximal":
        return MAXIMAL_IDEAL
    if text.startswith("piece:"):
        return Subspace.graded_piece(int(text.split(":", 1)[1]))
    raise argparse.ArgumentTypeError(
        f"subspace must be linear, maximal, or piece:<i>, got {text!r}")


class _Output:
    def __init__(self, args):
        self.json = args.json
        self.compact = args.compact
        self.lines = []
        self.payload = {}

    def part(self, p: Partition) -> str:
        return render_partition(p, compact=self.compact)

    def line(self, text: str):
        self.lines.append(text)

    def set(self, key, value):
        self.payload[key] = value

    def emit(self):
        if self.json:
            print(json.dumps({"schema": SCHEMA, **self.payload}, sort_keys=True))
        else:
            for line in self.lines:
                print(line)
        return 0


def _part_json(p: Partition):
    return list(p.parts)


def _jdt_json(d):
    return [[length, degree] for length, degree in d.entries]


def _load(args):
    doc = load_spec(args.spec)
    return doc, doc.build()


def _element_text(doc, args):
    if args.element is None:
        raise JordanTypesError("this command needs --element")
    return doc.resolve_element(args.element)


def cmd_hilbert(args):
    doc, algebra = _load(args)
    out = _Output(args)
    out.line(f"H = {algebra.hilbert}")
    out.line(f"dim = {algebra.dimension}")
    out.line(f"socle degree = {algebra.socle_degree}")
    out.line(f"sperner = {algebra.sperner()}")
    out.set("hilbert", list(algebra.hilbert.values))
    out.set("dimension", algebra.dimension)
    out.set("socle_degree", algebra.socle_degree)
    out.set("sperner", algebra.sperner())
    if algebra.mode == "graded":
        out.line(f"m-adic top = {algebra.madic_top()}")
        out.line(f"m-adic H = {algebra.madic_hilbert()}")
        out.set("madic_top", algebra.madic_top())
        out.set("madic_hilbert", list(algebra.madic_hilbert().values))
    return out.emit()


def cmd_jordan(args):
    doc, algebra = _load(args)
    element = _element_text(doc, args)
    part = jordan_type(algebra, element)
    out = _Output(args)
    out.line(f"P = {out.part(part)}")
    out.set("jordan_type", _part_json(part))
    out.set("element", element)
    return out.emit()


def cmd_strings(args):
    doc, algebra = _load(args)
    element = _element_text(doc, args)
    decomposition = jordan_strings(algebra, element)
    out = _Output(args)
    out.line(f"P = {out.part(decomposition.jordan_type())}")
    label = "degree" if decomposition.canonical_degrees else "order"
    records = []
    for i, (s, start) in enumerate(
            zip(decomposition.strings, decomposition.start_elements()), start=1):
        out.line(f"string {i}: length {s.length}, {label} {s.degree}, "
                 f"start {start.poly}")
        records.append({"length": s.length, label: s.degree,
                        "start": str(start.poly)})
    out.set("jordan_type", _part_json(decomposition.jordan_type()))
    out.set("strings", records)
    out.set("canonical_degrees", decomposition.canonical_degrees)
    return out.emit()


def cmd_degree_type(args):
    doc, algebra = _load(args)
    element = _element_text(doc, args)
    jdt = jordan_degree_type(algebra, element)
    out = _Output(args)
    out.line(f"P_deg = {jdt}")
    out.set("degree_type", _jdt_json(jdt))
    return out.emit()


def cmd_generic(args):
    doc, algebra = _load(args)
    plan = _plan(args).with_subspace(args.subspace)
    result = generic_jordan_type(algebra, plan)
    out = _Output(args)
    out.line(f"P = {out.part(result.partition)}")
    out.line(f"witness = {result.witness.poly}")
    out.line(f"trials = {result.trials}")
    out.set("jordan_type", _part_json(result.partition))
    out.set("witness", str(result.witness.poly))
    out.set("trials", result.trials)
    return out.emit()


def cmd_bounds(args):
    doc, algebra = _load(args)
    element = _element_text(doc, args)
    report = bound_report(algebra, element)
    out = _Output(args)
    out.line(f"P = {out.part(report.jordan)}")
    out.set("jordan_type", _part_json(report.jordan))
    if report.bar_bound is not None:
        out.line(f"linear bar bound = {out.part(report.bar_bound)}")
        out.set("bar_bound", _part_json(report.bar_bound))
    if report.conjugate_bound is not None:
        out.line(f"conjugate bound = {out.part(report.conjugate_bound)}")
        out.set("conjugate_bound", _part_json(report.conjugate_bound))
    if report.madic_bound is not None:
        out.line(f"m-adic bound = {out.part(report.madic_bound)}")
        out.set("madic_bound", _part_json(report.madic_bound))
    for name, cmp_result in report.comparisons.items():
        out.line(f"{name}: {cmp_result.value}")
    out.set("comparisons", {k: v.value for k, v in report.comparisons.items()})
    out.line(f"ok = {'true' if report.ok else 'false'}")
    out.set("ok", report.ok)
    return out.emit()


def cmd_lefschetz(args):
    doc, algebra = _load(args)
    out = _Output(args)
    if args.search:
        plan = _plan(args, default_trials=64)
        result = find_sl_element(algebra, plan)
        if result.witness is None:
            out.line(f"no SLJT element found in {result.trials} trials")
            out.set("witness", None)
        else:
            out.line(f"witness = {result.witness.poly}")
            out.line(f"P = {out.part(result.witness_type)}")
            out.line(f"linear = {'true' if result.linear else 'false'}")
            out.set("witness", str(result.witness.poly))
            out.set("jordan_type", _part_json(result.witness_type))
            out.set("linear", result.linear)
        out.set("trials", result.trials)
        return out.emit()
    element = _element_text(doc, args)
    verdict = classify(algebra, element)
    flags = [("element", str(verdict.element.poly)),
             ("jordan", out.part(verdict.jordan)),
             ("h_conjugate", out.part(verdict.h_conjugate)),
             ("sljt", verdict.sljt),
             ("narrow_sl", verdict.narrow_sl),
             ("general_sl", verdict.general_sl),
             ("weak_l", verdict.weak_l),
             ("failing_witness", verdict.failing_witness),
             ("modular_regime", verdict.modular_regime)]
    for key, value in flags:
        if isinstance(value, bool):
            text = "true" if value else "false"
        elif value is None:
            text = "n/a"
        else:
            text = str(value)
        out.line(f"{key} = {text}")
    out.set("element", str(verdict.element.poly))
    out.set("jordan_type", _part_json(verdict.jordan))
    out.set("h_conjugate", _part_json(verdict.h_conjugate))
    out.set("sljt", verdict.sljt)
    out.set("narrow_sl", verdict.narrow_sl)
    out.set("general_sl", verdict.general_sl)
    out.set("weak_l", verdict.weak_l)
    out.set("failing_witness", list(verdict.failing_witness)
            if verdict.failing_witness else None)
    out.set("modular_regime", verdict.modular_regime)
    return out.emit()


def cmd_dual(args):
    doc, algebra = _load(args)
    presentation = doc.dual_presentation()
    out = _Output(args)
    out.line(f"H = {algebra.hilbert}")
    out.line(f"dim = {algebra.dimension}")
    out.line(f"socle dim = {algebra.socle_dimension()}")
    out.set("hilbert", list(algebra.hilbert.values))
    out.set("dimension", algebra.dimension)
    out.set("socle_dimension", algebra.socle_dimension())
    out.set("inverse_system_dim", inverse_system_dim(presentation.f))
    if args.element is not None:
        element = doc.resolve_element(args.element)
        part = jordan_type_via_dual(presentation, element)
        out.line(f"P (dual route) = {out.part(part)}")
        out.set("jordan_type", _part_json(part))
        hs = intermediate_hilberts(presentation, element)
        for i, h in enumerate(hs):
            out.line(f"H(quotient {i}) = {h}")
        out.set("intermediate_hilberts", [list(h.values) for h in hs])
    return out.emit()


def cmd_tensor_cg(args):
    out = _Output(args)
    if args.table:
        mmax, nmax = args.table
        primes = [int(x) for x in args.primes.split(",")] if args.primes else [2, 3, 5, 7]
        rows = []
        for m in range(1, mmax + 1):
            for n in range(m, nmax + 1):
                for p in primes:
                    lam = modular_lambda(m, n, p)
                    eps = deviation(m, n, p)
                    rows.append((m, n, p, render_partition(lam, args.compact),
                                 str(eps)))
        if args.csv:
            buf = io.StringIO()
            writer = csv.writer(buf)
            writer.writerow(["m", "n", "p", "lambda", "epsilon"])
            writer.writerows(rows)
            sys.stdout.write(buf.getvalue())
            return 0
        for row in rows:
            out.line("m={} n={} p={}  lambda = {}  epsilon = {}".format(*row))
        out.set("rows", [{"m": m, "n": n, "p": p, "lambda": lam, "epsilon": eps}
                         for m, n, p, lam, eps in rows])
        return out.emit()
    m, n = args.m, args.n
    if args.char:
        lam = modular_lambda(m, n, args.char)
        eps = deviation(m, n, args.char)
        out.line(f"lambda = {out.part(lam)}  epsilon = {eps}")
        out.set("lambda", _part_json(lam))
        out.set("epsilon", list(eps.epsilon))
        out.set("p", args.char)
    else:
        lam = cg_block(m, n)
        out.line(f"lambda = {out.part(lam)}")
        out.set("lambda", _part_json(lam))
        out.set("p", 0)
    out.set("kernel_dim", min(m, n))
    return out.emit()


def cmd_qp(args):
    part = parse_partition(args.partition)
    out = _Output(args)
    if args.brute:
        result = brute_commuting_type(part, args.char or 3)
        out.line(f"Q = {out.part(result.partition)}")
        out.line("observed: " + " ".join(out.part(t) for t in result.types))
        out.line(f"nilpotent count = {result.nilpotent_count} of {result.searched}")
        out.set("q_partition", _part_json(result.partition))
        out.set("observed", [_part_json(t) for t in result.types])
        out.set("nilpotent_count", result.nilpotent_count)
        out.set("searched", result.searched)
        return out.emit()
    field = FieldSpec(args.char) if args.char else FieldSpec(10007)
    plan = _plan(args, default_trials=24)
    result = generic_commuting_type(part, plan, field)
    out.line(f"Q = {out.part(result.partition)}")
    if result.exploratory:
        out.line("exploratory: characteristic below the theorem range")
    out.line(f"cover number = {ar_cover_number(part)}")
    out.set("q_partition", _part_json(result.partition))
    out.set("exploratory", result.exploratory)
    out.set("cover_number", ar_cover_number(part))
    return out.emit()


def cmd_poset(args):
    doc, algebra = _load(args)
    plan = _plan(args)
    result = poset_sample(algebra, plan)
    out = _Output(args)
    out.line("types: " + " ".join(out.part(t) for t in result.types))
    for low, high in result.covers:
        out.line(f"cover: {out.part(low)} < {out.part(high)}")
    out.set("types", [_part_json(t) for t in result.types])
    out.set("covers", [[_part_json(low), _part_json(high)]
                       for low, high in result.covers])
    return out.emit()


def cmd_partition(args):
    op = args.op
    values = args.args
    out = _Output(args)

    def need(count):
        if len(values) != count:
            raise JordanTypesError(f"partition {op} takes {count} argument(s)")

    if op == "conjugate":
        need(1)
        result = conjugate(parse_partition(values[0]))
        out.line(out.part(result))
        out.set("result", _part_json(result))
    elif op == "dominance":
        need(2)
        cmp_result = dominance_cmp(parse_partition(values[0]),
                                   parse_partition(values[1]))
        out.line(cmp_result.value)
        out.set("result", cmp_result.value)
    elif op == "almost-rectangular":
        need(2)
        result = almost_rectangular(int(values[0]), int(values[1]))
        out.line(out.part(result))
        out.set("result", _part_json(result))
    elif op == "power":
        need(2)
        result = power_partition(parse_partition(values[0]), int(values[1]))
        out.line(out.part(result))
        out.set("result", _part_json(result))
    elif op == "cover-number":
        need(1)
        result = ar_cover_number(parse_partition(values[0]))
        out.line(str(result))
        out.set("result", result)
    elif op == "stable":
        need(1)
        result = is_stable(parse_partition(values[0]))
        out.line("true" if result else "false")
        out.set("result", result)
    elif op == "sum":
        need(2)
        result = dominance_sum(parse_partition(values[0]),
                               parse_partition(values[1]))
        out.line(out.part(result))
        out.set("result", _part_json(result))
    elif op == "collapse":
        need(1)
        result = collapse_closure(parse_degree_type(values[0]))
        out.line(str(result))
        out.set("result", _jdt_json(result))
    elif op == "compatible":
        need(2)
        result = compatibility_check(parse_partition(values[0]),
                                     parse_partition(values[1]))
        out.line(result)
        out.set("result", result)
    else:
        raise JordanTypesError(
            f"unknown partition operation {op!r}; choose from conjugate, "
            "dominance, almost-rectangular, power, cover-number, stable, "
            "sum, collapse, compatible")
    return out.emit()


def cmd_distinct_forms(args):
    doc, algebra = _load(args)
    plan = _plan(args)
    part = distinct_forms_type(algebra, plan)
    out = _Output(args)
    out.line(f"Q(M) = {out.part(part)}")
    out.set("distinct_forms_type", _part_json(part))
    return out.emit()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jordantypes",
        description="Jordan types, Lefschetz properties, and tensor "
                    "decompositions of Artinian algebras, in exact arithmetic.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="structured output on stdout")
    common.add_argument("--compact", action="store_true",
                        help="exponent-compressed partitions, e.g. (5,3^2,1)")
    sampled = argparse.ArgumentParser(add_help=False)
    sampled.add_argument("--trials", type=int, default=None)
    sampled.add_argument("--seed", type=int, default=0)
    spec = argparse.ArgumentParser(add_help=False)
    spec.add_argument("--spec", required=True, help="algebra spec TOML file")

    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hilbert", parents=[common, spec],
                       help="Hilbert function and basic invariants")
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("jordan", parents=[common, spec],
                       help="Jordan type of an element")
    s.add_argument("--element", required=True)
    s.set_defaults(func=cmd_jordan)

    s = sub.add_parser("strings", parents=[common, spec],
                       help="Jordan string decomposition")
    s.add_argument("--element", required=True)
    s.set_defaults(func=cmd_strings)

    s = sub.add_parser("degree-type", parents=[common, spec],
                       help="Jordan degree type (graded, homogeneous element)")
    s.add_argument("--element", required=True)
    s.set_defaults(func=cmd_degree_type)

    s = sub.add_parser("generic", parents=[common, spec, sampled],
                       help="generic Jordan type by seeded sampling")
    s.add_argument("--subspace", type=_subspace, default=MAXIMAL_IDEAL)
    s.set_defaults(func=cmd_generic)

    s = sub.add_parser("bounds", parents=[common, spec],
                       help="Jordan type against the Hilbert-function bounds")
    s.add_argument("--element", required=True)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("lefschetz", parents=[common, spec, sampled],
                       help="Lefschetz classification or SLJT search")
    s.add_argument("--element")
    s.add_argument("--search", action="store_true",
                   help="search for an element of strong Lefschetz Jordan type")
    s.set_defaults(func=cmd_lefschetz)

    s = sub.add_parser("dual", parents=[common, spec],
                       help="Macaulay dual data; with --element, the dual-route "
                            "Jordan type")
    s.add_argument("--element")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("tensor-cg", parents=[common],
                       help="Clebsch-Gordan / modular tensor types")
    s.add_argument("m", type=int, nargs="?")
    s.add_argument("n", type=int, nargs="?")
    s.add_argument("--char", type=int, default=0)
    s.add_argument("--table", type=int, nargs=2, metavar=("MMAX", "NMAX"))
    s.add_argument("--primes", help="comma-separated primes for --table")
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_tensor_cg)

    s = sub.add_parser("qp", parents=[common, sampled],
                       help="generic commuting Jordan type Q(P)")
    s.add_argument("--partition", required=True)
    s.add_argument("--char", type=int, default=0)
    s.add_argument("--brute", action="store_true",
                   help="exhaustive enumeration over a small field")
    s.set_defaults(func=cmd_qp)

    s = sub.add_parser("poset", parents=[common, spec, sampled],
                       help="sampled Jordan-type poset with cover relations")
    s.set_defaults(func=cmd_poset)

    s = sub.add_parser("distinct-forms", parents=[common, spec, sampled],
                       help="quotient chain by distinct linear forms")
    s.set_defaults(func=cmd_distinct_forms)

    s = sub.add_parser("partition", parents=[common],
                       help="partition combinatorics on literals")
    s.add_argument("op")
    s.add_argument("args", nargs="*")
    s.set_defaults(func=cmd_partition)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "tensor-cg" and not args.table:
        if args.m is None or args.n is None:
            print("error: tensor-cg needs m and n (or --table)", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except (InternalInconsistencyError, StabilityViolationError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        print("this indicates a bug in jordantypes, not a mathematical fact; "
              "please report it", file=sys.stderr)
        return 3
    except JordanTypesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
