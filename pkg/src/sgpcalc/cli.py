"""Command-line entry point: ``sgpcalc {invariants,classify,check,search,hilbert}``.

Exit codes: 0 ok, 1 usage, 2 parse/input, 3 precondition, 4 internal bound.
Violations reported by ``check`` and ``search`` are results, so they exit 0.
"""

from __future__ import annotations

import argparse
import sys
import traceback

from . import formats
from .classify import PROPOSITION_IDS, check_proposition, classify
from .corpus import SearchConfig
from .errors import InputError, InternalLimitError, PreconditionError, SgpError
from .ideals import is_nearly_gorenstein
from .invariants import hilbert_function, invariant_report, samuel_length
from .search import SEARCHABLE, dumps_report, run_search

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3, 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonnegative(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sgpcalc", description="Ideals and invariants of numerical semigroup rings k[[S]].")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_json(sp):
        sp.add_argument("--json", action="store_true", help="emit the JSON document instead of a table")
        return sp

    sp = with_json(sub.add_parser("invariants", help="ring invariants of <S>"))
    sp.add_argument("semigroup", help="semigroup literal, e.g. '<4,6,7>'")

    sp = with_json(sub.add_parser("classify", help="Elias / Burch / Ulrich verdicts for an ideal"))
    sp.add_argument("semigroup")
    sp.add_argument("ideal", help="ideal literal, e.g. '(7,8)'")
    sp.add_argument("--witness", type=_positive, action="append", metavar="A",
                    help="exponent a to test in the colon criterion (repeatable)")

    sp = with_json(sub.add_parser("check", help="evaluate one proposition on an explicit instance"))
    sp.add_argument("prop", metavar="PROP-ID", help=", ".join(PROPOSITION_IDS))
    sp.add_argument("semigroup")
    sp.add_argument("--I", dest="I")
    sp.add_argument("--J", dest="J")
    sp.add_argument("--K", dest="K")
    sp.add_argument("--x", dest="x", type=_positive)

    sp = with_json(sub.add_parser("search", help="run the propositions over the enumerated corpus"))
    sp.add_argument("--max-genus", type=_nonnegative, default=8)
    sp.add_argument("--gen-bound", type=_positive, default=None,
                    help="generator bound B (default: conductor + 2e per semigroup)")
    sp.add_argument("--max-gens", type=_positive, default=4)
    sp.add_argument("--props", default=None, help="comma-separated proposition ids")
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--out", default=None, help="write the JSON report here")

    sp = with_json(sub.add_parser("hilbert", help="Hilbert-Samuel data l(R/m^n)"))
    sp.add_argument("semigroup")
    sp.add_argument("--upto", type=_nonnegative, required=True)
    return p


def _emit(args, doc, lines):
    if args.json:
        sys.stdout.write(formats.dumps(doc))
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _semigroup_section(S):
    return formats.semigroup_json(S, is_nearly_gorenstein(S))


def cmd_invariants(args):
    S = formats.parse_semigroup(args.semigroup)
    rep = invariant_report(S)
    doc = formats.document(semigroup=_semigroup_section(S), invariants=formats.invariants_json(rep))
    inv = doc["invariants"]
    lines = [
        f"semigroup        {S}",
        f"frobenius        {S.frobenius}",
        f"gaps             {list(S.gaps)}",
        f"pseudo-frobenius {list(S.pseudo_frobenius)}",
        f"type             {S.ring_type}",
        f"symmetric        {S.symmetric}",
        f"nearly gorenstein {doc['semigroup']['nearly_gorenstein']}",
        f"e                {inv['e']}",
        f"embdim           {inv['embdim']}",
        f"eli              {inv['eli']}",
        f"ulr              {inv['ulr']}",
        f"gll_mono         {inv['gll_mono']} (witness t^{inv['gll_witness']}, "
        f"{'exact' if inv['gll_exact_flag'] else 'upper bound'})",
        f"gr_cm            {inv['gr_cm']}",
        f"index            {inv.get('index', 'n/a (not Gorenstein)')}",
    ]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_classify(args):
    S = formats.parse_semigroup(args.semigroup)
    E = formats.parse_ideal(args.ideal, S)
    rep = classify(S, E, args.witness)
    doc = formats.document(
        semigroup=_semigroup_section(S),
        invariants=formats.invariants_json(invariant_report(S)),
        ideal=formats.ideal_json(E),
        classification=formats.classification_json(rep),
    )
    lines = [
        f"ideal      {E} over {S}  (sporadic {list(E.sporadic)}, threshold {E.threshold})",
        f"elias      {rep.elias}   type(R/I)={rep.type_of_quotient} type(I)={rep.type_of_ideal}",
        f"burch      {rep.burch}   mI={rep.m_times_ideal} m(I:m)={rep.m_times_colon}",
        f"ulrich     {rep.ulrich}   mu={rep.mu} e={rep.e} witness_ok={rep.ulrich_witness_ok}",
        f"socle criterion {rep.socle_criterion}",
    ]
    lines += [f"colon criterion x=t^{a}: {v}  (monomial-witness search)" for a, v in rep.colon_criteria]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_check(args):
    inst = formats.parse_instance(args.semigroup, args.I, args.J, args.K, args.x)
    out = check_proposition(args.prop, inst)
    body = out.to_json()
    if out.violation:
        body["certificate"] = out.certificate()
    doc = formats.document(semigroup=_semigroup_section(inst.semigroup), outcomes=[body])
    lines = [
        f"{out.prop_id} on {out.instance.descriptor()}",
        f"hypotheses {out.hypotheses_hold}  {out.hypotheses}",
        f"conclusion {out.conclusion_holds}  {out.conclusion}",
        f"violation  {out.violation}",
    ]
    if out.note:
        lines.append(f"note       {out.note}")
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_search(args):
    props = None
    if args.props:
        props = tuple(p.strip() for p in args.props.split(",") if p.strip())
        unknown = [p for p in props if p not in SEARCHABLE]
        if unknown:
            raise _UsageError(f"sgpcalc search: unknown proposition ids {unknown}")
    config = SearchConfig(max_genus=args.max_genus, gen_bound=args.gen_bound, max_gens=args.max_gens,
                          props=props, jobs=args.jobs, out=args.out)
    report = run_search(config)
    text = dumps_report(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    if args.json:
        sys.stdout.write(text)
    else:
        lines = [f"corpus: {report['corpus']['semigroups']} semigroups, {report['corpus']['ideals']} ideals"]
        lines.append(f"{'prop':8} {'instances':>10} {'held':>10} {'violations':>10}")
        for p, o in report["outcomes"].items():
            lines.append(f"{p:8} {o['instances_checked']:>10} {o['hypotheses_held']:>10} {o['violation_count']:>10}")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_hilbert(args):
    S = formats.parse_semigroup(args.semigroup)
    need = S.conductor + (args.upto + 2) * S.multiplicity
    if need > S.window:
        S = S.with_window(need)
    lengths = [samuel_length(S, n) for n in range(args.upto + 1)]
    hf = [hilbert_function(S, n) for n in range(args.upto + 1)]
    doc = formats.document(
        semigroup=_semigroup_section(S),
        hilbert={"upto": args.upto, "colength_m_power": lengths, "hilbert_function": hf,
                 "multiplicity": S.multiplicity},
    )
    lines = [f"{'n':>3} {'l(R/m^n)':>9} {'l(m^n/m^n+1)':>13}"]
    lines += [f"{n:>3} {a:>9} {b:>13}" for n, (a, b) in enumerate(zip(lengths, hf))]
    _emit(args, doc, lines)
    return EXIT_OK


COMMANDS = {
    "invariants": cmd_invariants,
    "classify": cmd_classify,
    "check": cmd_check,
    "search": cmd_search,
    "hilbert": cmd_hilbert,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InternalLimitError as exc:
        print(f"internal limit: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except SgpError as exc:  # pragma: no cover - every subclass is mapped above
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, ValueError) else EXIT_INTERNAL
    except Exception:  # noqa: BLE001
        traceback.print_exc()
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
