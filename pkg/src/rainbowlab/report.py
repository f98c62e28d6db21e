"""Line-oriented key=value report format.

A report is::

    schema=rainbowlab-report/1
    config.<key>=<value>        one line per recorded config field
    record=<item index>         starts a record; its key=value lines follow
    ...
    summary.<key>=<value>       aggregate counters, after all records

Values never contain newlines.  Rationals are written ``p/q`` (always with a
denominator), color sets ``{0,3,5}``, vertex sequences ``0-1-2``, booleans
``true``/``false``, missing values ``none``.  Embedded graphs use the graph
text format with ``;`` in place of newlines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import SchemaError
from .graph import ColorSet, VertexCycle, VertexPath

SCHEMA = "rainbowlab-report/1"


def fmt(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, ColorSet):
        return "{" + ",".join(map(str, value)) + "}"
    if isinstance(value, (VertexPath, VertexCycle)):
        return "-".join(map(str, value.vertices))
    if isinstance(value, dict):
        return "{" + ",".join(f"{k}:{v}" for k, v in sorted(value.items())) + "}"
    if isinstance(value, (tuple, list)):
        return ",".join(map(str, value))
    text = str(value)
    if "\n" in text:
        text = ";".join(line for line in text.splitlines())
    return text


def graph_field(text: str) -> str:
    return ";".join(line for line in text.splitlines() if line and not line.startswith("#"))


def graph_from_field(value: str) -> str:
    return "\n".join(value.split(";")) + "\n"


@dataclass
class Report:
    config: dict[str, str] = field(default_factory=dict)
    records: list[tuple[int, list[tuple[str, str]]]] = field(default_factory=list)
    summary: dict[str, str] = field(default_factory=dict)
    schema: str = SCHEMA

    def add_record(self, index: int, pairs: Iterable[tuple[str, object]]) -> None:
        self.records.append((index, [(k, fmt(v)) for k, v in pairs]))

    def record_dicts(self) -> list[dict[str, str]]:
        out = []
        for idx, pairs in self.records:
            d = {"record": str(idx)}
            d.update(pairs)
            out.append(d)
        return out

    def dumps(self) -> str:
        lines = [f"schema={self.schema}"]
        lines.extend(f"config.{k}={v}" for k, v in self.config.items())
        for idx, pairs in self.records:
            lines.append(f"record={idx}")
            lines.extend(f"{k}={v}" for k, v in pairs)
        lines.extend(f"summary.{k}={v}" for k, v in self.summary.items())
        return "\n".join(lines) + "\n"


def loads(text: str) -> Report:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("schema="):
        raise SchemaError("missing schema line")
    rep = Report(schema=lines[0].split("=", 1)[1])
    current: list | None = None
    for no, line in enumerate(lines[1:], 2):
        if not line:
            continue
        if "=" not in line:
            raise SchemaError(f"line {no}: expected key=value")
        key, value = line.split("=", 1)
        if key.startswith("config."):
            rep.config[key[7:]] = value
        elif key.startswith("summary."):
            rep.summary[key[8:]] = value
            current = None
        elif key == "record":
            current = []
            rep.records.append((int(value), current))
        elif current is not None:
            current.append((key, value))
        else:
            raise SchemaError(f"line {no}: {key!r} outside a record")
    return rep


def load(path) -> Report:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


# --- object -> key/value pairs ------------------------------------------


def search_pairs(prefix: str, res) -> list[tuple[str, object]]:
    return [
        (f"{prefix}_length", res.best_length),
        (f"{prefix}_witness", res.best_witness),
        (f"{prefix}_complete", res.complete),
        (f"{prefix}_nodes", res.nodes_expanded),
    ]


def theorem_pairs(rep) -> list[tuple[str, object]]:
    pairs: list[tuple[str, object]] = [
        ("kind", "theorem"),
        ("theorem", rep.theorem),
        ("n", rep.n),
        ("k", rep.k),
        ("delta_c", rep.delta_c),
    ]
    pairs.extend((f"hypothesis.{name}", val) for name, val in rep.hypotheses.items())
    pairs += [
        ("hypotheses_hold", rep.hypotheses_hold),
        ("conclusion_kind", rep.conclusion_kind),
        ("conclusion_bound", Fraction(rep.conclusion_bound)),
        ("required_length", rep.required_length),
        ("conclusion_verified", rep.conclusion_verified),
        ("witness", rep.witness),
        ("nodes", rep.nodes_expanded),
        ("falsified", rep.falsified),
    ]
    pairs.extend(("note", note) for note in rep.notes)
    if rep.graph_text:
        pairs.append(("graph", graph_field(rep.graph_text)))
    return pairs


def trace_pairs(trace, verdict=None) -> list[tuple[str, object]]:
    pairs: list[tuple[str, object]] = [
        ("kind", "trace"),
        ("k", trace.k),
        ("s", trace.s),
        ("t", trace.t),
        ("p", trace.p),
        ("path", trace.path),
        ("head", trace.head),
        ("tail", trace.tail),
        ("shared_outside", trace.shared_outside),
        ("head_outside", trace.head_outside),
        ("tail_outside", trace.tail_outside),
        ("head_edge_new", trace.head_edge_new),
        ("tail_edge_new", trace.tail_edge_new),
        ("closing_new_head", trace.closing_new_head),
        ("closing_new_tail", trace.closing_new_tail),
        ("closing_edge", trace.closing_edge),
        ("head_span", trace.head_span),
        ("head_slack", trace.head_slack),
        ("head_reps", trace.head_reps),
        ("tail_reps", trace.tail_reps),
        ("outside", trace.outside),
    ]
    pairs.extend(("note", note) for note in trace.notes())
    if verdict is not None:
        pairs.append(("min_color_degree", verdict.min_color_degree))
        for c in verdict.checks:
            pairs.append((f"check.{c.name}", f"{c.lhs} {c.relation} {c.rhs} {'holds' if c.holds else 'FAILS'}"))
        pairs.append(("holds", verdict.holds))
    return pairs


def comparison_pairs(cmp) -> list[tuple[str, object]]:
    return [
        ("kind", "compare"),
        ("n", cmp.n),
        ("delta_c", cmp.delta_c),
        ("k", cmp.k),
        ("liwang_applicable", cmp.liwang_applicable),
        ("liwang_guarantee", cmp.liwang_guarantee),
        ("main_guarantee", cmp.main_guarantee),
        ("main_applicable", cmp.main_applicable),
        ("difference", cmp.difference),
        ("liwang_ruled_out_by_k", cmp.liwang_ruled_out_by_k),
        ("discussion_liwang_value", cmp.discussion_liwang_value),
    ]
