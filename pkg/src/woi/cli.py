"""Command-line surface.

One binary, subcommands: edge-ideal | power | symbolic | reg | betti |
verify | corpus | cache.  Results go to stdout (text, or JSON with
--json), diagnostics to stderr.  Exit codes: 0 success, 1 input error,
2 asserted-verdict failure (including corpus mismatches and route
disagreements), 3 resource cap exceeded.

Environment: WOI_CHAR sets the default characteristic, WOI_CACHE_DIR
enables the result cache, WOI_THREADS is accepted for compatibility
(results are computed in-process and are deterministic regardless).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .cache import ResultCache, cache_from_env, request_key
from .corpus import load_corpus, run_corpus
from .errors import ConsistencyError, GraphError, ResourceCapError, WoiError
from .graphs import WeightedOrientedGraph
from .monomials import MonomialIdeal, monomial_str
from .regularity import (DEFAULT_PRIME, betti_table, regularity,
                         takayama_regularity)
from .symbolic import METHODS, edge_ideal, symbolic_power
from .theorems import CLAIM_IDS, HarnessConfig, run_claims


def _default_char() -> int:
    raw = os.environ.get("WOI_CHAR", "0")
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"WOI_CHAR must be an integer, got {raw!r}") from None


def _threads() -> int:
    raw = os.environ.get("WOI_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise GraphError(f"WOI_THREADS must be an integer, got {raw!r}") from None
    if value < 1:
        raise GraphError("WOI_THREADS must be >= 1")
    return value


def _load_json(path: str) -> dict:
    p = Path(path)
    if not p.exists():
        raise GraphError(f"no such file: {path}")
    try:
        return json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON in {path}: {exc}") from None


def _load_graph(spec: str) -> WeightedOrientedGraph:
    if spec.startswith("corpus:"):
        name = spec.split(":", 1)[1]
        entries = load_corpus()
        if name not in entries:
            raise GraphError(f"no corpus entry named {name!r}")
        return entries[name].graph()
    return WeightedOrientedGraph.from_document(_load_json(spec))


def _resolve_ideal(args) -> tuple[MonomialIdeal, dict]:
    """The ideal selected by --graph/--ideal/--power/--symbolic plus a
    canonical description of how it was obtained (for cache keys)."""
    k = getattr(args, "power", 1) or 1
    if getattr(args, "ideal", None):
        I = MonomialIdeal.from_json(_load_json(args.ideal))
        if k > 1:
            I = I.power(k)
        desc = {"ideal": I.to_json()}
        return I, desc
    if not getattr(args, "graph", None):
        raise GraphError("either --graph or --ideal is required")
    D = _load_graph(args.graph)
    method = getattr(args, "method", "auto") or "auto"
    if getattr(args, "symbolic", False):
        I = symbolic_power(D, k, method=method)
        desc = {"graph": D.to_document(), "power": k, "symbolic": True,
                "method": method}
    else:
        I = edge_ideal(D).power(k)
        desc = {"graph": D.to_document(), "power": k, "symbolic": False}
    return I, desc


def _emit(args, text_lines, json_doc):
    if args.json:
        print(json.dumps(json_doc, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _ideal_output(args, I: MonomialIdeal, meta: dict):
    doc = I.to_json()
    doc.update(meta)
    _emit(args, [str(I)], doc)


# -- subcommand handlers --------------------------------------------------


def _cmd_edge_ideal(args) -> int:
    D = _load_graph(args.graph)
    _ideal_output(args, edge_ideal(D), {"operation": "edge-ideal"})
    return 0


def _cmd_power(args) -> int:
    I, _ = _resolve_ideal(args)
    _ideal_output(args, I, {"operation": "power", "k": args.power})
    return 0


def _cmd_symbolic(args) -> int:
    D = _load_graph(args.graph)
    I = symbolic_power(D, args.power, method=args.method)
    _ideal_output(args, I, {"operation": "symbolic", "k": args.power,
                            "method": args.method})
    return 0


def _reg_request(desc: dict, args) -> dict:
    return {
        "op": "reg",
        "input": desc,
        "engine": args.engine,
        "char": args.char,
        "extremals": bool(args.extremals),
        "version": __version__,
    }


def _compute_reg(I: MonomialIdeal, engine: str, char: int, extremals: bool) -> dict:
    value = regularity(I, char=char, engine=engine)
    doc = {
        "schema": "woi/1",
        "regularity": value,
        "regularity_quotient": value - 1,
        "engine": engine,
        "char": char,
    }
    if extremals:
        _, pairs = takayama_regularity(I, char=char)
        doc["extremal_exponents"] = [{"exponent": list(a), "i": i}
                                     for a, i in pairs]
    return doc


def _cmd_reg(args) -> int:
    I, desc = _resolve_ideal(args)
    cache = cache_from_env()
    doc = None
    if cache is not None:
        key = request_key(_reg_request(desc, args))
        record = cache.get(key)
        if record is not None:
            doc = record["result"]
    if doc is None:
        doc = _compute_reg(I, args.engine, args.char, args.extremals)
        if cache is not None:
            cache.put(key, _reg_request(desc, args), doc)
    lines = [str(doc["regularity"])]
    for pair in doc.get("extremal_exponents", []):
        lines.append(f"extremal exponent {tuple(pair['exponent'])} i={pair['i']}")
    _emit(args, lines, doc)
    return 0


def _cmd_betti(args) -> int:
    I, desc = _resolve_ideal(args)
    request = {"op": "betti", "input": desc, "char": args.char,
               "version": __version__}
    cache = cache_from_env()
    doc = None
    if cache is not None:
        key = request_key(request)
        record = cache.get(key)
        if record is not None:
            doc = record["result"]
    if doc is None:
        table = betti_table(I, char=args.char)
        doc = {
            "schema": "woi/1",
            "char": args.char,
            "regularity": table.regularity(),
            "entries": table.rows(),
        }
        if cache is not None:
            cache.put(key, request, doc)
    lines = [f"{'i':>3} {'total':>6} {'dim':>4}  multidegree"]
    for row in doc["entries"]:
        lines.append(f"{row['i']:>3} {row['total']:>6} {row['dim']:>4}  "
                     f"{tuple(row['multidegree'])}")
    lines.append(f"regularity {doc['regularity']}")
    _emit(args, lines, doc)
    return 0


def _cmd_verify(args) -> int:
    D = _load_graph(args.graph)
    cfg = HarnessConfig(char=args.char, engine=args.engine,
                        symbolic_method=args.method)
    keep = tuple(args.keep.split(",")) if args.keep else None
    verdicts = run_claims(D, claim=args.claim, kmax=args.kmax, keep=keep, cfg=cfg)
    failed = [v for v in verdicts if v.holds is False]
    lines = []
    for v in verdicts:
        holds = {True: "holds", False: "FAILED", None: "unasserted"}[v.holds]
        quantities = json.dumps(v.quantities, sort_keys=True, default=str)
        lines.append(f"{v.claim:<13} hypotheses_met={str(v.hypotheses_met).lower():<5} "
                     f"{holds:<10} {quantities}")
    _emit(args, lines, [v.to_json() for v in verdicts])
    if failed:
        print(f"{len(failed)} asserted verdict(s) failed", file=sys.stderr)
        return 2
    return 0


def _cmd_corpus(args) -> int:
    entries = load_corpus()
    if args.action == "list":
        lines = []
        for name in sorted(entries):
            e = entries[name]
            D = e.graph()
            lines.append(f"{name:<11} |V|={D.n} |E|={len(D.edges)}  {e.description}")
        _emit(args, lines, [{"name": n, "description": entries[n].description}
                            for n in sorted(entries)])
        return 0
    if args.action == "export":
        names = [args.only] if args.only else sorted(entries)
        for name in names:
            if name not in entries:
                raise GraphError(f"no corpus entry named {name!r}")
        if args.dir:
            outdir = Path(args.dir)
            outdir.mkdir(parents=True, exist_ok=True)
            for name in names:
                (outdir / f"{name}.json").write_text(
                    json.dumps(entries[name].document, indent=2) + "\n")
                print(f"wrote {outdir / (name + '.json')}")
        else:
            payload = ({name: entries[name].document for name in names}
                       if len(names) > 1 else entries[names[0]].document)
            print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    # run
    rows = run_corpus(only=args.only, engine=args.engine, char=args.char)
    lines = []
    bad = []
    for row in rows:
        status = "ok" if row.match else "MISMATCH"
        lines.append(f"{row.entry:<11} {row.quantity:<16} expected={row.expected:<4} "
                     f"computed={row.computed:<4} [{row.source}] {status}")
        if not row.match:
            bad.append(row)
    _emit(args, lines, [{
        "entry": r.entry, "quantity": r.quantity, "expected": r.expected,
        "computed": r.computed, "source": r.source, "match": r.match,
        "engine": r.engine, "char": r.char} for r in rows])
    if bad:
        for row in bad:
            print(f"corpus mismatch: {row.entry} {row.quantity} "
                  f"expected {row.expected}, computed {row.computed}",
                  file=sys.stderr)
        return 2
    return 0


def _recompute(request: dict) -> dict:
    """Replay a cached request; used by `cache audit`."""
    desc = request["input"]
    if "ideal" in desc:
        I = MonomialIdeal.from_json(desc["ideal"])
    else:
        D = WeightedOrientedGraph.from_document(desc["graph"])
        if desc.get("symbolic"):
            I = symbolic_power(D, desc["power"], method=desc.get("method", "auto"))
        else:
            I = edge_ideal(D).power(desc["power"])
    if request["op"] == "reg":
        return _compute_reg(I, request["engine"], request["char"],
                            request.get("extremals", False))
    if request["op"] == "betti":
        table = betti_table(I, char=request["char"])
        return {
            "schema": "woi/1",
            "char": request["char"],
            "regularity": table.regularity(),
            "entries": table.rows(),
        }
    raise GraphError(f"cannot replay cached operation {request['op']!r}")


def _cmd_cache(args) -> int:
    cache = cache_from_env()
    if cache is None and args.dir:
        cache = ResultCache(args.dir)
    if cache is None:
        raise GraphError("no cache directory: set WOI_CACHE_DIR or pass --dir")
    if args.action == "get":
        record = cache.get(args.key)
        if record is None:
            print(f"no cache record for key {args.key}", file=sys.stderr)
            return 1
        print(json.dumps(record, indent=2, sort_keys=True))
        return 0
    if args.action == "put":
        record = _load_json(args.file)
        if "request" not in record or "result" not in record:
            raise GraphError("cache record file needs 'request' and 'result'")
        key = request_key(record["request"])
        cache.put(key, record["request"], record["result"])
        print(key)
        return 0
    # audit
    report = cache.audit(_recompute, sample=args.sample)
    print(f"audited {report.checked} record(s): "
          f"{len(report.divergent)} divergent, {len(report.corrupt)} corrupt")
    for key in report.divergent:
        print(f"divergent: {key}", file=sys.stderr)
    return 2 if report.divergent else 0


# -- parser ------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, *, graph=False, ideal=False,
                power=False, engine=False, char=False, method=False):
    if graph:
        p.add_argument("--graph", help="graph JSON file (or corpus:<name>)")
    if ideal:
        p.add_argument("--ideal", help="ideal JSON file")
    if power:
        p.add_argument("--power", type=int, default=1, metavar="K",
                       help="power k (default 1)")
    if engine:
        p.add_argument("--engine", choices=("lcm", "takayama", "both"),
                       default="lcm")
    if char:
        p.add_argument("--char", type=int, default=None,
                       help=f"field characteristic, 0 or a prime "
                            f"(default WOI_CHAR or 0; fast prime {DEFAULT_PRIME})")
    if method:
        p.add_argument("--method", choices=METHODS, default="auto",
                       help="symbolic power route (default auto)")
    p.add_argument("--json", action="store_true", help="JSON output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="woi",
        description="Edge ideals of weighted oriented graphs: symbolic powers, "
                    "Betti tables, regularity, and claim verification.")
    parser.add_argument("--version", action="version", version=f"woi {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("edge-ideal", help="edge ideal of a graph")
    _add_common(p, graph=True)
    p.set_defaults(func=_cmd_edge_ideal)

    p = sub.add_parser("power", help="ordinary power of the edge ideal")
    _add_common(p, graph=True, ideal=True, power=True)
    p.set_defaults(func=_cmd_power)

    p = sub.add_parser("symbolic", help="symbolic power of the edge ideal")
    _add_common(p, graph=True, power=True, method=True)
    p.set_defaults(func=_cmd_symbolic)

    p = sub.add_parser("reg", help="Castelnuovo-Mumford regularity")
    _add_common(p, graph=True, ideal=True, power=True, engine=True, char=True,
                method=True)
    p.add_argument("--symbolic", action="store_true",
                   help="use the symbolic power instead of the ordinary one")
    p.add_argument("--extremals", action="store_true",
                   help="also report extremal exponents")
    p.set_defaults(func=_cmd_reg)

    p = sub.add_parser("betti", help="multigraded Betti table")
    _add_common(p, graph=True, ideal=True, power=True, char=True, method=True)
    p.add_argument("--symbolic", action="store_true")
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("verify", help="run claim checks on a graph")
    p.add_argument("claim", choices=CLAIM_IDS)
    _add_common(p, graph=True, engine=True, char=True, method=True)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--keep", help="comma-separated vertex list for pro2")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("corpus", help="bundled corpus operations")
    p.add_argument("action", choices=("run", "list", "export"))
    p.add_argument("--only", help="restrict to one corpus entry")
    p.add_argument("--dir", help="directory for corpus export")
    p.add_argument("--engine", choices=("lcm", "takayama", "both"), default="both")
    p.add_argument("--char", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_corpus)

    p = sub.add_parser("cache", help="result cache operations")
    p.add_argument("action", choices=("get", "put", "audit"))
    p.add_argument("key", nargs="?", help="record key (get)")
    p.add_argument("file", nargs="?", help="record file (put)")
    p.add_argument("--dir", help="cache directory (overrides WOI_CACHE_DIR)")
    p.add_argument("--sample", type=int, default=None,
                   help="audit only the first N records")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cache)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _threads()  # validate the env var even though compute is in-process
        if getattr(args, "char", None) is None and hasattr(args, "char"):
            args.char = _default_char()
        if args.command == "cache" and args.action == "get" and not args.key:
            raise GraphError("cache get needs a key")
        if args.command == "cache" and args.action == "put" and not args.file:
            # allow `woi cache put FILE` (file lands in the key slot)
            if args.key:
                args.file, args.key = args.key, None
            else:
                raise GraphError("cache put needs a record file")
        return args.func(args)
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2
    except (WoiError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
