"""The bundled verification corpus: five graphs with expected values.

Graph documents and expected-value tables live in data files so the
corpus can be edited without touching code.  `evaluate_entry` recomputes
every expected row with a chosen engine and characteristic and reports
exact matches.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .graphs import WeightedOrientedGraph
from .regularity import DEFAULT_LIMITS, EngineLimits, regularity
from .symbolic import edge_ideal, symbolic_power


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    document: dict
    description: str
    expected: dict          # {"reg_power": {k: {"value", "source"}}, "reg_symbolic": ...}
    note: str | None = None

    def graph(self) -> WeightedOrientedGraph:
        return WeightedOrientedGraph.from_document(self.document)


@dataclass(frozen=True)
class RowResult:
    entry: str
    quantity: str           # e.g. "reg_power[2]"
    expected: int
    computed: int
    source: str
    engine: str
    char: int

    @property
    def match(self) -> bool:
        return self.expected == self.computed


def _data_text(filename: str) -> str:
    return resources.files("woi.data").joinpath(filename).read_text()


def load_corpus() -> dict[str, CorpusEntry]:
    expected = json.loads(_data_text("expected_values.json"))["entries"]
    entries = {}
    for name, exp in expected.items():
        document = json.loads(_data_text(f"{name}.json"))
        entries[name] = CorpusEntry(
            name=name,
            document=document,
            description=exp.get("description", ""),
            expected={key: exp[key] for key in ("reg_power", "reg_symbolic")},
            note=exp.get("note"),
        )
    return entries


def evaluate_entry(entry: CorpusEntry, engine: str = "both", char: int = 0,
                   limits: EngineLimits = DEFAULT_LIMITS,
                   method: str = "primes") -> list[RowResult]:
    D = entry.graph()
    I = edge_ideal(D)
    rows = []
    for kind in ("reg_power", "reg_symbolic"):
        for k_str, row in sorted(entry.expected[kind].items(), key=lambda kv: int(kv[0])):
            k = int(k_str)
            J = I.power(k) if kind == "reg_power" else symbolic_power(D, k, method=method)
            computed = regularity(J, char=char, engine=engine, limits=limits)
            rows.append(RowResult(
                entry=entry.name,
                quantity=f"{kind}[{k}]",
                expected=int(row["value"]),
                computed=computed,
                source=row["source"],
                engine=engine,
                char=char,
            ))
    return rows


def run_corpus(only: str | None = None, engine: str = "both", char: int = 0,
               limits: EngineLimits = DEFAULT_LIMITS,
               method: str = "primes") -> list[RowResult]:
    entries = load_corpus()
    if only is not None:
        if only not in entries:
            raise KeyError(f"no corpus entry named {only!r}")
        entries = {only: entries[only]}
    rows = []
    for name in sorted(entries):
        rows.extend(evaluate_entry(entries[name], engine=engine, char=char,
                                   limits=limits, method=method))
    return rows
