"""Command line interface.

Every subcommand builds a :class:`Report` and renders it as text or JSON;
the exit status is 0 exactly when none of the report's checks failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import growth, lie, pbw, veronese
from .core import NcPoly
from .presentation import Presentation, data_text, format_poly, format_presentation, load_presentation
from .rewrite import complete

SCHEMA = 1


def _scalar(v):
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, float):
        return repr(v)
    return v


def _text(v) -> str:
    v = _scalar(v)
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v is None:
        return "-"
    return str(v)


@dataclass
class Report:
    command: List[str]
    values: Dict[str, Any] = field(default_factory=dict)
    tables: Dict[str, Dict[str, list]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def table(self, name: str, columns: Sequence[str], rows) -> None:
        self.tables[name] = {"columns": list(columns), "rows": [list(r) for r in rows]}

    def check(self, condition: bool, message: str) -> bool:
        if not condition:
            self.failures.append(message)
        return condition

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "ok": self.ok,
            "values": {k: _scalar(v) for k, v in self.values.items()},
            "tables": {k: {"columns": t["columns"],
                           "rows": [[_scalar(c) for c in r] for r in t["rows"]]}
                       for k, t in self.tables.items()},
            "notes": self.notes,
            "failures": self.failures,
        }

    def to_text(self) -> str:
        out = ["$ " + " ".join(self.command)]
        for k, v in self.values.items():
            out.append(f"{k}: {_text(v)}")
        for name, t in self.tables.items():
            out.append("")
            out.append(f"[{name}]")
            cells = [t["columns"]] + [[_text(c) for c in r] for r in t["rows"]]
            widths = [max(len(str(r[i])) for r in cells) for i in range(len(t["columns"]))]
            for r in cells:
                out.append("  ".join(str(c).rjust(w) for c, w in zip(r, widths)).rstrip())
        for n in self.notes:
            out.append(f"note: {n}")
        for f in self.failures:
            out.append(f"FAILED: {f}")
        out.append("status: " + ("ok" if self.ok else "FAILED"))
        return "\n".join(out)


# ---------------------------------------------------------------------------
# helpers


def _counts(pres: Presentation, N: int) -> growth.DimensionSeries:
    system = complete(pres.rewrite_system(), N)
    return growth.normal_word_counts(system, N)


def _lie_dims(spec: str, N: int) -> growth.DimensionSeries:
    if spec not in ("builtin:L", "L"):
        raise SystemExit(f"unknown Lie algebra {spec!r}; only builtin:L is available")
    return lie.graded_dims(lie.build_L(N), N)


def quad_presentation_as_file(qp: veronese.QuadPresentation) -> Presentation:
    return Presentation(qp.alphabet, "deglex", tuple(qp.linear_relations) + tuple(qp.quadratic_relations),
                        name=f"V{qp.d}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_complete(args, rep: Report):
    pres = load_presentation(args.file)
    system = complete(pres.rewrite_system(), args.max_degree)
    rep.values.update(completed_to=system.completed_to, rules=len(system.rules))
    if args.emit == "rules":
        a = system.alphabet
        rep.table("rules", ["degree", "lhs", "rhs"],
                  [(system.degree(r.lhs), format_poly(NcPoly.monomial(r.lhs), a), format_poly(r.rhs, a))
                   for r in system.rules])


def cmd_growth(args, rep: Report):
    series = _counts(load_presentation(args.file), args.max_degree)
    if args.flavor == "cumulative":
        series = growth.cumulative(series)
    rep.values["flavor"] = series.flavor
    rep.table("series", ["degree", "count"], zip(series.degrees, series.values))


def cmd_classify(args, rep: Report):
    if args.via_lie:
        h = pbw.enveloping_series(_lie_dims(args.via_lie, args.max_degree), args.max_degree).as_series()
        rep.values["source"] = f"product formula over {args.via_lie}"
    else:
        h = _counts(load_presentation(args.file), args.max_degree)
        rep.values["source"] = "normal words"
    gc = growth.classify_growth(growth.cumulative(h))
    rep.values.update(label=gc.label, alpha=gc.alpha, degree=gc.degree)
    rep.table("diagnostics (float)", ["name", "value"], sorted(gc.diagnostics.items()))


def cmd_veronese(args, rep: Report):
    pres = load_presentation(args.file)
    d, M = args.d, args.max_letter_degree
    qp = veronese.veronese_presentation(pres, d)
    rep.values.update(letters=len(qp.letters), linear_relations=len(qp.linear_relations),
                      raw_quadratic_relations=len(qp.quadratic_relations))
    if args.eliminate:
        qp = veronese.eliminate_linear(qp)
        rep.values["eliminated"] = len(qp.removed)
        rep.table("eliminated", ["letter", "image"],
                  [(k, format_poly(v, qp.alphabet)) for k, v in qp.eliminated.items()])
    top = d * max(M, 2)
    h = _counts(pres, top)
    rep.values["g"] = qp.g
    rep.table("veronese_dims", ["letter_degree", "dim"],
              enumerate(veronese.veronese_dims(h, d, max(M, 2)).values))
    if qp.linear_relations:
        rep.notes.append("linear relations present; use --eliminate for the rank identity")
        rep.values["rank"] = veronese.relation_space(qp).rank
    else:
        rr = veronese.relation_rank(qp, h[2 * d])
        rep.values.update(rank=rr.rank, expected_rank=rr.expected)
        rep.check(rr.ok, f"rank {rr.rank} != g^2 - h_{2 * d} = {rr.expected}")
    if M >= 3:
        q = veronese.verify_quadraticity(qp, h, d, M)
        rep.table("quadraticity", ["letter_degree", "expected", "observed"],
                  zip(range(M + 1), q.expected, q.observed))
        rep.check(q.ok, "letter presentation does not reproduce the Veronese dimensions")
    if args.emit == "presentation":
        rep.notes.append("presentation follows")
        rep.values["presentation"] = format_presentation(quad_presentation_as_file(qp))


def cmd_pbw_check(args, rep: Report):
    N = args.max_degree
    a = _lie_dims(args.lie, N)
    h = _counts(load_presentation(args.algebra), N)
    cc = pbw.pbw_cross_check(a, h, N)
    rep.table("pbw", ["degree", "lie_dim", "product_formula", "normal_words"],
              zip(range(N + 1), a.values, cc.expected, cc.observed))
    rep.check(cc.ok, f"mismatch at degrees {cc.mismatches}")


def cmd_lie_check(args, rep: Report):
    if args.builtin != "L":
        raise SystemExit("only --builtin L is available")
    g = lie.build_L(args.max_degree)
    for name, r in (("antisymmetry", lie.antisymmetry_check(g)),
                    ("grading", lie.grading_check(g)),
                    ("jacobi", lie.jacobi_check(g, args.max_degree))):
        rep.values[f"{name}_checked"] = r.checked
        rep.values[f"{name}_violations"] = len(r.violations)
        for v in r.violations:
            rep.check(False, v)
    if args.matrix_indices:
        r = lie.matrix_model_check(args.matrix_indices)
        rep.values["matrix_pairs_checked"] = r.checked
        rep.values["matrix_violations"] = len(r.violations)
        for v in r.violations:
            rep.check(False, v)
    dims = lie.graded_dims(g, args.max_degree)
    rep.table("dims", ["degree", "dim"], zip(dims.degrees, dims.values))


def u_fourth_veronese() -> veronese.QuadPresentation:
    return veronese.eliminate_linear(veronese.veronese_presentation(load_presentation("builtin:U"), 4))


def cmd_verify_appendix(args, rep: Report):
    qp = u_fourth_veronese()
    if args.data == "builtin":
        text = data_text("v4u_appendix.rel")
    else:
        with open(args.data, encoding="utf-8") as fh:
            text = fh.read()
    result = veronese.appendix_reconcile(qp, veronese.parse_appendix(text, qp))
    quad = result.quadratic
    linear = [v for v in result.verdicts if v.degree == 1]
    verified = sum(v.ok for v in quad)
    rep.values.update(listed=len(result.verdicts), quadratic_listed=len(quad),
                      quadratic_verified=verified, linear_verified=sum(v.ok for v in linear),
                      relation_space_rank=veronese.relation_space(qp).rank)
    rep.table("failures", ["label", "status", "detail"],
              [(v.label, v.status, v.detail) for v in result.failures])
    rep.check(verified >= args.min_verified,
              f"only {verified} quadratic relations verified (need {args.min_verified})")
    rep.check(all(v.ok for v in linear), "a listed linear relation disagrees with the elimination")
    for v in result.failures:
        rep.notes.append(f"relation {v.label}: {v.status}")


def cmd_partition(args, rep: Report):
    rep.values["p"] = growth.partition_p(args.n)


def kobayashi_table(N: int):
    system = complete(load_presentation("builtin:A").rewrite_system(), N)
    h = growth.normal_word_counts(system, N)
    return [(n, growth.kobayashi_closed_form(n), h[n], growth.kobayashi_closed_form(n) - h[n])
            for n in range(N + 1)]


def cmd_kobayashi(args, rep: Report):
    rep.values["closed_form"] = growth.kobayashi_closed_form(args.n)
    if args.table:
        rows = kobayashi_table(args.n)
        rep.table("closed_form_vs_automaton", ["n", "closed_form", "automaton", "delta"], rows)
        for n, _, _, delta in rows:
            if delta:
                rep.notes.append(f"degree {n}: closed form exceeds normal-word count by {delta}")
            rep.check(abs(delta) <= 1, f"degree {n}: |delta| = {abs(delta)} > 1")


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ncgrowth", description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=["text", "json"], default="text")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("complete", help="degree-truncated completion")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--emit", choices=["rules"])
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("growth", help="normal-word counts by degree")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--flavor", choices=["graded", "cumulative"], default="graded")
    p.add_argument("--format", dest="series_format", choices=["csv", "json", "text"], default="csv")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("classify", help="growth type of the cumulative series")
    p.add_argument("file", nargs="?")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--via-lie", metavar="LIE", help="use the product formula over a Lie algebra instead")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("veronese", help="quadratic presentation of a Veronese subalgebra")
    p.add_argument("file")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-letter-degree", type=int, default=2)
    p.add_argument("--eliminate", action="store_true")
    p.add_argument("--emit", choices=["presentation"])
    p.set_defaults(func=cmd_veronese)

    p = sub.add_parser("pbw-check", help="product formula vs normal-word counts")
    p.add_argument("--lie", default="builtin:L")
    p.add_argument("--algebra", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_pbw_check)

    p = sub.add_parser("lie-check", help="Jacobi, grading and matrix-model checks")
    p.add_argument("--builtin", default="L")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--matrix-indices", type=int, default=0)
    p.set_defaults(func=cmd_lie_check)

    p = sub.add_parser("verify-appendix", help="check a listed relation file against V4(U)")
    p.add_argument("--data", default="builtin")
    p.add_argument("--min-verified", type=int, default=90)
    p.set_defaults(func=cmd_verify_appendix)

    p = sub.add_parser("partition", help="number of partitions p(n)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("kobayashi-count", help="sum_j (2j+1) p(n-j)")
    p.add_argument("n", type=int)
    p.add_argument("--table", action="store_true", help="compare with normal-word counts of builtin:A")
    p.set_defaults(func=cmd_kobayashi)
    return ap


def _series_output(rep: Report, fmt: str) -> str:
    t = rep.tables["series"]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(t["columns"])
        w.writerows(t["rows"])
        return buf.getvalue().rstrip("\n")
    if fmt == "json":
        return json.dumps(rep.to_json(), indent=2)
    return rep.to_text()


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    rep = Report(["ncgrowth"] + argv)
    if args.cmd == "classify" and not args.file and not args.via_lie:
        raise SystemExit("classify needs a presentation file or --via-lie")
    try:
        args.func(args, rep)
    except (ValueError, KeyError, OSError) as exc:
        print(f"ncgrowth: error: {exc}", file=sys.stderr)
        return 2
    if args.cmd == "growth":
        print(_series_output(rep, args.series_format), file=out)
    elif args.format == "json":
        print(json.dumps(rep.to_json(), indent=2), file=out)
    else:
        print(rep.to_text(), file=out)
    return 0 if rep.ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
