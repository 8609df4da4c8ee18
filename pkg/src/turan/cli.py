"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 oracle budget exhausted. A "contains kK_r: yes" verdict is data, not a
failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from .cache import OracleCache, default_cache_path
from .constructions import extremal_construction, four_partite_triangle_construction
from .errors import BudgetExhausted, ParameterError
from .formulas import Validity, formula_for
from .graph import HostSpec, MultipartiteGraph
from .oracle import Budget, compare, solve, theorem_grid
from .packing import find_packing
from .verify import Report, bipartite_grid, grid_report, identity_suite, inequality_suite, matching_grid

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

TABLE_COLUMNS = ["parts", "k", "r", "formula", "validity", "oracle", "construction_edges", "gap", "nodes", "elapsed_ms"]


@dataclass
class RunRecord:
    command: str
    spec: str
    result: dict
    provenance: str
    elapsed_ms: float


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _spec(args) -> HostSpec:
    return HostSpec(tuple(args.parts), args.k, args.r)


def _emit_json(record: RunRecord) -> None:
    print(json.dumps(asdict(record), sort_keys=True))


def _open_cache(args) -> OracleCache | None:
    if getattr(args, "no_cache", False):
        return None
    return OracleCache(args.cache or default_cache_path())


def _budget(args) -> Budget:
    return Budget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)


# -- commands ---------------------------------------------------------------


def cmd_formula(args) -> int:
    t0 = time.perf_counter()
    spec = _spec(args)
    res = formula_for(spec)
    if args.json:
        payload = {} if res is None else {"value": res.value, "validity": str(res.validity), "note": res.note}
        _emit_json(RunRecord("formula", str(spec.canonical()), payload, "formula", (time.perf_counter() - t0) * 1e3))
        return EXIT_OK
    if res is None:
        print(f"no formula for {spec.canonical()}")
        return EXIT_OK
    print(res)
    print(f"spec: {res.canonical_spec}")
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.four_partite_triangle:
        cert = four_partite_triangle_construction(args.parts, args.k, verify=True)
        label = "four-partite bound"
    else:
        cert = extremal_construction(HostSpec(tuple(args.parts), args.k), verify=True)
        label = "h_k"
    text = cert.graph.to_text()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    k, r = cert.forbidden
    print(f"edges: {cert.graph.edge_count} (construction)")
    print(f"{label}: {cert.claimed_edges} (formula)")
    print(f"forbidden: {k}K_{r}")
    print(f"free: {'true' if cert.free_verified else 'false'}")
    return EXIT_OK


def cmd_check(args) -> int:
    g = MultipartiteGraph.from_text(Path(args.graph).read_text())
    r = args.r or g.n_parts
    packing = find_packing(g, args.k, r)
    print(f"contains {args.k}K_{r}: {'yes' if packing else 'no'}")
    if packing is not None and args.witness:
        sys.stdout.write(packing.to_text())
    return EXIT_OK


def _oracle_label(formula, value) -> str:
    if formula is None:
        return "no formula"
    if formula.validity is Validity.LOWER_BOUND:
        return f"no formula; lower bound {formula.value}"
    kind = f"{formula.note} formula" if formula.note else "formula"
    if compare(formula, value):
        return f"matches {kind}"
    return f"MISMATCH: {kind} gives {formula.value}"


def cmd_oracle(args) -> int:
    spec = _spec(args).canonical()
    cache = _open_cache(args)
    hit = cache is not None and not args.recompute and cache.get(spec) is not None
    try:
        res = solve(spec, _budget(args), cache=cache, recompute=args.recompute, jobs=args.jobs)
    except BudgetExhausted as exc:
        print(f"budget exhausted after {exc.nodes} nodes: lower {exc.lower} upper {exc.upper} (oracle, partial)")
        return EXIT_BUDGET
    formula = formula_for(spec)
    label = _oracle_label(formula, res.max_edges)
    if args.json:
        payload = {"max_edges": res.max_edges, "comparison": label, "nodes": res.nodes_explored, "cache": "hit" if hit else "miss"}
        _emit_json(RunRecord("oracle", str(spec), payload, "oracle", res.elapsed * 1e3))
    else:
        print(f"{res.max_edges} ({label})")
        print(f"spec: {spec}")
        print(f"cache: {'hit' if hit else 'miss'}")
        print(f"nodes: {res.nodes_explored}")
        if args.witness:
            sys.stdout.write(res.witness.to_text())
    return EXIT_FAIL if compare(formula, res.max_edges) is False else EXIT_OK


def cmd_verify(args) -> int:
    report = Report()
    report.lines.append(f"seed={args.seed} samples={args.samples} max_part={args.max_part}")
    report.extend(identity_suite(args.seed, args.samples))
    report.extend(inequality_suite(args.seed, args.inequality_samples or max(1, args.samples * 2 // 5)))
    if not args.skip_oracle:
        cache = _open_cache(args)
        grid = theorem_grid(3, args.max_part) + bipartite_grid(4) + matching_grid(args.max_part)
        grid_rep, _ = grid_report(grid, _budget(args), cache=cache, recompute=args.recompute, jobs=args.jobs)
        report.extend(grid_rep)
    out = report.text()
    if args.output:
        Path(args.output).write_text(out)
        print(report.summary())
    else:
        sys.stdout.write(out)
    for failure in report.failures:
        sys.stderr.write("FAILED: " + failure.rstrip("\n") + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def _table_specs(args) -> list[HostSpec]:
    if args.explore_r3_in_4parts:
        sizes = args.sizes or list(range(1, (args.max_part or 2) + 1))
        ks = args.k or [1, 2]
        specs = []
        for parts in itertools.combinations_with_replacement(sorted(set(sizes)), 4):
            specs += [HostSpec(parts, k, 3) for k in ks if k <= parts[0] + parts[1] + 1]
        return specs
    sizes = args.sizes or list(range(1, (args.max_part or 3) + 1))
    ks = args.k or [1]
    specs = []
    for parts in itertools.product(sizes, repeat=args.r):
        specs += [HostSpec(parts, k) for k in ks if k <= min(parts)]
    return specs


def _table_row(spec: HostSpec, run_oracle: bool, args, cache) -> dict:
    canon = spec.canonical()
    formula = formula_for(spec)
    row = dict.fromkeys(TABLE_COLUMNS, "")
    row.update(parts=",".join(map(str, spec.parts)), k=spec.k, r=spec.r)
    if formula is not None:
        row.update(formula=formula.value, validity=str(formula.validity))
    construction = None
    if canon.transversal and canon.r >= 3 and canon.k <= canon.parts[0]:
        construction = extremal_construction(canon, verify=False).graph.edge_count
    elif canon.r == 3 and len(canon.parts) == 4:
        construction = four_partite_triangle_construction(canon.parts, canon.k, verify=False).graph.edge_count
    row["construction_edges"] = "" if construction is None else construction
    reference = formula.value if formula is not None and formula.exact else None
    if run_oracle:
        try:
            res = solve(canon, _budget(args), cache=cache, jobs=args.jobs)
            row.update(oracle=res.max_edges, nodes=res.nodes_explored, elapsed_ms=round(res.elapsed * 1e3, 3))
            reference = res.max_edges
        except BudgetExhausted as exc:
            row.update(oracle=f"budget[{exc.lower},{exc.upper}]", nodes=exc.nodes, elapsed_ms=round(exc.elapsed * 1e3, 3))
            reference = None
    if reference is not None and construction is not None:
        row["gap"] = reference - construction
    return row


def cmd_table(args) -> int:
    specs = _table_specs(args)
    run_oracle = args.oracle or args.explore_r3_in_4parts
    cache = _open_cache(args) if run_oracle else None
    rows = [_table_row(spec, run_oracle, args, cache) for spec in specs]
    buf = io.StringIO()
    if args.format == "csv":
        writer = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, delimiter=";", lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        for row in rows:
            buf.write(json.dumps(row) + "\n")
    if args.output:
        Path(args.output).write_text(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def _add_spec_args(p, *, k_required=True):
    p.add_argument("--parts", type=_int_list, required=True, help="part sizes, e.g. 2,2,2")
    p.add_argument("--k", type=int, required=k_required, default=1, help="number of disjoint cliques")
    p.add_argument("--r", type=int, default=None, help="clique size (default: number of parts)")


def _add_oracle_args(p):
    p.add_argument("--max-nodes", type=int, default=Budget.max_nodes)
    p.add_argument("--max-seconds", type=float, default=Budget.max_seconds)
    p.add_argument("--jobs", type=int, default=1, help="worker threads for the search")
    p.add_argument("--cache", default=None, help="cache file (default $TURAN_CACHE or ./turan-cache.jsonl)")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--recompute", action="store_true", help="ignore cached results")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="turan", description="Turán numbers of disjoint cliques in multipartite graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", help="evaluate the closed-form Turán number")
    _add_spec_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("construct", help="build and certify a kK_r-free construction")
    _add_spec_args(p)
    p.add_argument("-o", "--output")
    p.add_argument("--four-partite-triangle", action="store_true", help="the 4-partite kK_3 construction")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="test a graph file for k disjoint r-cliques")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--witness", action="store_true", help="print the packing found")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="exact extremal number by branch-and-bound")
    _add_spec_args(p)
    _add_oracle_args(p)
    p.add_argument("--witness", action="store_true", help="print the extremal graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="identity, inequality and formula-vs-oracle checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=500, help="random subgraphs for the identity suite")
    p.add_argument("--inequality-samples", type=int, default=None, help="default: 2/5 of --samples")
    p.add_argument("--max-part", type=int, default=3, help="largest part size in the r=3 oracle grid")
    p.add_argument("--skip-oracle", action="store_true")
    p.add_argument("-o", "--output")
    _add_oracle_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="sweep table over a parameter grid")
    p.add_argument("--r", type=int, default=3, help="number of parts")
    p.add_argument("--max-part", type=int, default=None, help="part sizes 1..max (default 3; explorer 2)")
    p.add_argument("--sizes", type=_int_list, default=None, help="explicit part sizes to sweep")
    p.add_argument("--k", type=_int_list, default=None, help="k values (default 1; explorer 1,2)")
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.add_argument("--oracle", action="store_true", help="also run the oracle per row")
    p.add_argument("--explore-r3-in-4parts", action="store_true", help="oracle vs the 4-partite kK_3 bound")
    p.add_argument("-o", "--output")
    _add_oracle_args(p)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
