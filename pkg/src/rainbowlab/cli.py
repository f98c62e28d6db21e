"""Command-line entry point.

Every command runs one task over a single graph (``--input``) or a generated
stream (``--gen``) and writes a line-oriented report.  The report header holds
the full experiment config, so ``rainbowlab rerun REPORT`` reproduces it
byte-for-byte.

Exit status: 0 completed, 1 input error, 2 budget exhausted / unknown,
3 a certified violation of a published statement.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import math
import sys
from dataclasses import dataclass, fields
from fractions import Fraction

from . import __version__
from .errors import GraphInputError, PreconditionError, RainbowLabError, SchemaError, SpecError
from .generators import parse_genspec
from .graph import parse_graph
from .report import Report, comparison_pairs, load
from .search import SearchBudget
from .sweep import TASKS, TaskParams, run_items, run_sweep, summary_pairs
from .theorems import THEOREM_IDS, compare_guarantees

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN, EXIT_FALSIFIED = 0, 1, 2, 3

COMMANDS = ("solve", "check-lemmas", "eval-theorem", "trace", "hunt", "compare", "sweep", "summary", "rerun")
_TASK_PARAMS = ("k", "s", "t")


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything that determines a report.  ``threads`` and ``out`` are
    deliberately absent: they change how a run executes, not what it computes."""

    command: str
    task: str
    input: str | None = None
    input_digest: str | None = None
    gen: str | None = None
    k: int | None = None
    s: int | None = None
    t: int | None = None
    n: int | None = None
    delta_c: int | None = None
    budget_nodes: int | None = None
    budget_secs: float | None = None
    seed: int = 0
    records: str = "notable"

    def header(self) -> dict[str, str]:
        return {f.name: _cfg_str(getattr(self, f.name)) for f in fields(self)}

    @classmethod
    def from_header(cls, header: dict[str, str]) -> ExperimentConfig:
        kinds = {"k": int, "s": int, "t": int, "n": int, "delta_c": int, "budget_nodes": int, "seed": int}
        kw = {}
        for f in fields(cls):
            if f.name not in header:
                raise SchemaError(f"report config lacks {f.name!r}")
            raw = header[f.name]
            if raw == "none":
                kw[f.name] = None
            elif f.name in kinds:
                kw[f.name] = kinds[f.name](raw)
            elif f.name == "budget_secs":
                kw[f.name] = float(raw)
            else:
                kw[f.name] = raw
        return cls(**kw)

    def budget(self) -> SearchBudget:
        return SearchBudget(self.budget_nodes, self.budget_secs)

    def params(self) -> TaskParams:
        return TaskParams(k=self.k, s=self.s, t=self.t, budget=self.budget(), records=self.records)


def _cfg_str(v) -> str:
    return "none" if v is None else str(v)


def _digest(data: bytes) -> str:
    return hashlib.blake2b(data, digest_size=16).hexdigest()


# --- running ----------------------------------------------------------------


def execute(cfg: ExperimentConfig, threads: int = 1) -> tuple[int, Report]:
    """Run an experiment; returns (exit status, report)."""
    report = Report(config=cfg.header())
    if cfg.command == "compare":
        return _execute_compare(cfg, report)
    prm = cfg.params()
    if cfg.input is not None:
        with open(cfg.input, "rb") as fh:
            data = fh.read()
        if cfg.input_digest is not None and _digest(data) != cfg.input_digest:
            raise GraphInputError(f"{cfg.input} changed since the report was written")
        g = parse_graph(data.decode("utf-8"))
        tally = run_items(cfg.task, [(0, g)], prm)
    else:
        tally = run_sweep(parse_genspec(cfg.gen), cfg.task, prm, threads)
    for idx, pairs in tally.records:
        report.add_record(idx, pairs)
    status = EXIT_FALSIFIED if tally.falsified else (EXIT_UNKNOWN if tally.unknown else EXIT_OK)
    for key, value in summary_pairs(tally):
        report.summary[key] = str(value)
    report.summary["status"] = str(status)
    return status, report


def _execute_compare(cfg: ExperimentConfig, report: Report) -> tuple[int, Report]:
    cmp = compare_guarantees(cfg.n, cfg.delta_c, cfg.k)
    report.add_record(0, comparison_pairs(cmp))
    report.summary["count.items"] = "1"
    report.summary["status"] = "0"
    return EXIT_OK, report


def _write(report: Report, out: str | None) -> None:
    text = report.dumps()
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


# --- summary ----------------------------------------------------------------

SUMMARY_COLUMNS = ("items", "hypotheses_hold", "verified", "unknown", "falsified")


def emit_summary(reports: list[tuple[str, Report]]) -> tuple[str, str]:
    """(aligned text table, CSV) aggregating report counters.

    Rows: one per report plus a total.  A second block lists the longest
    rainbow cycle found per minimum-color-degree bucket across all reports.
    """
    schemas = {r.schema for _, r in reports}
    if len(schemas) > 1:
        raise SchemaError(f"reports use different schemas: {', '.join(sorted(schemas))}")
    header = ("report", "task") + SUMMARY_COLUMNS
    rows = []
    totals = dict.fromkeys(SUMMARY_COLUMNS, 0)
    buckets: dict[int, int] = {}
    for name, rep in reports:
        counts = {c: int(rep.summary.get(f"count.{c}", 0)) for c in SUMMARY_COLUMNS}
        for c in SUMMARY_COLUMNS:
            totals[c] += counts[c]
        rows.append((name, rep.config.get("task", "?")) + tuple(str(counts[c]) for c in SUMMARY_COLUMNS))
        for key, value in rep.summary.items():
            if key.startswith("max_cycle.delta_c_"):
                d = int(key.rsplit("_", 1)[1])
                buckets[d] = max(buckets.get(d, -1), int(value))
    if reports:
        rows.append(("TOTAL", "") + tuple(str(totals[c]) for c in SUMMARY_COLUMNS))
    table = _align([header] + rows)
    if buckets:
        table += "\n" + _align([("delta_c", "max_rainbow_cycle")] + [(str(d), str(L)) for d, L in sorted(buckets.items())])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return table, buf.getvalue()


def _align(rows) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)


# --- argument parsing ---------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="graph file ('n m' header, then 'u v color' lines)")
    p.add_argument("--gen", help="generator spec, e.g. family=random-gnp,n=8,p=0.5,count=100")
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    _run_flags(p)


def _run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-nodes", type=int, help="node limit per search")
    p.add_argument("--budget-secs", type=float, help="wall-clock limit per search (not reproducible)")
    p.add_argument("--seed", type=int, default=0, help="master seed; default seed of --gen")
    p.add_argument("--records", choices=("all", "notable"), help="which items get a report record")
    p.add_argument("--out", help="report path (default stdout)")
    p.add_argument("--threads", type=int, default=1, help="worker processes for generated streams")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="rainbowlab", description="Rainbow path/cycle solvers and statement checks.")
    ap.add_argument("--version", action="version", version=f"rainbowlab {__version__}")
    sub = ap.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    for name, help_ in [
        ("solve", "longest rainbow path and cycle, rainbow C4 test"),
        ("check-lemmas", "check both longest-path lemmas on certified instances"),
        ("trace", "recompute and check the proof quantities of the C4-free bound"),
        ("hunt", "search for counterexamples to the color-degree conjecture"),
    ]:
        _common(sub.add_parser(name, help=help_))
    ev = sub.add_parser("eval-theorem", help="evaluate one statement's hypotheses and conclusion")
    ev.add_argument("theorem", choices=THEOREM_IDS)
    _common(ev)
    cmp = sub.add_parser("compare", help="compare the triangle-free and C4-free guarantees")
    cmp.add_argument("--n", type=int, required=True)
    cmp.add_argument("--k", type=int, required=True)
    cmp.add_argument("--delta-c", type=int, help="default: ceil((n + 3k - 2) / 2)")
    cmp.add_argument("--out")
    sw = sub.add_parser(
        "sweep",
        help="run a task over a generated stream: sweep key=value... TASK",
        description="Tokens key=value set generator keys (family defaults to exhaustive-enum); "
        "k, s, t set task parameters; the remaining token names the task.",
    )
    sw.add_argument("tokens", nargs="+")
    _run_flags(sw)
    sm = sub.add_parser("summary", help="aggregate reports into a table and CSV")
    sm.add_argument("reports", nargs="*")
    sm.add_argument("--csv", help="write the CSV here (default: after the table)")
    rr = sub.add_parser("rerun", help="re-run the experiment recorded in a report")
    rr.add_argument("report")
    rr.add_argument("--out")
    rr.add_argument("--threads", type=int, default=1)
    return ap


def _source(args, records_default: str) -> dict:
    if (args.input is None) == (args.gen is None):
        raise SpecError("give exactly one of --input or --gen")
    kw: dict = {"seed": args.seed}
    if args.input is not None:
        with open(args.input, "rb") as fh:
            kw["input_digest"] = _digest(fh.read())
        kw["input"] = args.input
        kw["records"] = args.records or "all"
    else:
        explicit_seed = any(item.strip().startswith("seed=") for item in args.gen.split(","))
        spec = parse_genspec(args.gen) if explicit_seed else parse_genspec(args.gen, seed=args.seed)
        kw["gen"] = spec.to_string()
        kw["records"] = args.records or records_default
    return kw


def config_from_args(args) -> ExperimentConfig:
    cmd = args.command
    if cmd == "compare":
        dc = args.delta_c if args.delta_c is not None else math.ceil(Fraction(args.n + 3 * args.k - 2, 2))
        return ExperimentConfig(command=cmd, task="compare", n=args.n, k=args.k, delta_c=dc, records="all")
    budget = {"budget_nodes": args.budget_nodes, "budget_secs": args.budget_secs}
    if cmd == "sweep":
        task, gen_items, prm = None, [], {}
        for tok in args.tokens:
            if "=" in tok:
                key, value = tok.split("=", 1)
                if key in _TASK_PARAMS:
                    prm[key] = int(value)
                else:
                    gen_items.append(tok)
            elif task is None:
                task = tok
            else:
                raise SpecError(f"more than one task given: {task!r}, {tok!r}")
        if task not in TASKS:
            raise SpecError(f"sweep needs a task, one of {', '.join(TASKS)}")
        if not any(t.startswith("family=") for t in gen_items):
            gen_items.insert(0, "family=exhaustive-enum")
        args.gen, args.input = ",".join(gen_items), None
        return ExperimentConfig(command=cmd, task=task, **prm, **budget, **_source(args, "notable"))
    task = args.theorem if cmd == "eval-theorem" else cmd
    return ExperimentConfig(
        command=cmd, task=task, k=args.k, s=args.s, t=args.t, **budget, **_source(args, "notable")
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors, --help, --version
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_INPUT
    try:
        if args.command == "summary":
            reports = [(path, load(path)) for path in args.reports]
            table, csv_text = emit_summary(reports)
            sys.stdout.write(table)
            if args.csv:
                with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
                    fh.write(csv_text)
            else:
                sys.stdout.write("\n" + csv_text)
            return EXIT_OK
        if args.command == "rerun":
            cfg = ExperimentConfig.from_header(load(args.report).config)
        else:
            cfg = config_from_args(args)
        status, report = execute(cfg, threads=args.threads if hasattr(args, "threads") else 1)
        _write(report, args.out)
        return status
    except GraphInputError as exc:
        where = getattr(args, "input", None) or "input"
        print(f"error: {where}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SpecError, SchemaError, PreconditionError, OSError, ValueError, RainbowLabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
