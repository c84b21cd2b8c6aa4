"""Command-line interface.

Every pipeline stage is exposed as a subcommand with reproducible
output: state, gcm, gem, lc, orbit, equiv, classify, rp-table, and
verify-catalog. Graphs come from the built-in catalog (--graph N),
inline edges (--edges "1 2,1 3"), or an edge-list file (--file PATH).

Amplitude dumps order basis states with qubit 1 as the most
significant bit: |q1 q2 ... qn> sits at index q1*2^(n-1) + ... + qn.
Text output rounds to 5 decimals; JSON keeps full precision. All
randomness is seeded (default seed 0), so identical invocations
produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from graphent.catalog import (
    all_entries,
    catalog_get,
    parse_edge_list,
    serialize_edge_list,
)
from graphent.classify import (
    DEFAULT_GROUPING_TOL,
    build_report,
    build_rp_table,
    render_report_csv,
    render_report_text,
    render_rp_table_csv,
    render_rp_table_text,
    report_to_dict,
)
from graphent.graphs import (
    Graph,
    OrbitBudgetExceeded,
    canonical_form,
    is_connected,
    lc_orbit,
    local_complement,
)
from graphent.measures import GemConfig, gcm, gem
from graphent.states import (
    build_graph_state,
    inner_product,
    lc_unitary_apply,
    stabilizer_expectation,
)


def _parse_inline_edges(text: str) -> Graph:
    return parse_edge_list(text.replace(",", "\n"))


def _load_graph(args, suffix: str = "") -> Graph:
    sources = [
        ("graph" + suffix, getattr(args, "graph" + suffix, None)),
        ("edges" + suffix, getattr(args, "edges" + suffix, None)),
        ("file" + suffix, getattr(args, "file" + suffix, None)),
    ]
    given = [(name, value) for name, value in sources if value is not None]
    if len(given) != 1:
        opts = ", ".join("--" + name for name, _ in sources)
        raise ValueError(f"exactly one of {opts} is required")
    name, value = given[0]
    if name.startswith("graph"):
        return catalog_get(value).graph
    if name.startswith("edges"):
        return _parse_inline_edges(value)
    with open(value) as fh:
        return parse_edge_list(fh.read())


def _inline(g: Graph) -> str:
    return ",".join(f"{i} {j}" for i, j in g.edges)


def _graph_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[i, j] for i, j in g.edges]}


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _gem_config(args) -> GemConfig:
    kwargs = {}
    if getattr(args, "restarts", None) is not None:
        kwargs["restarts"] = args.restarts
    if getattr(args, "seed", None) is not None:
        kwargs["seed"] = args.seed
    if getattr(args, "gem_tol", None) is not None:
        kwargs["tolerance"] = args.gem_tol
    return GemConfig(**kwargs)


def cmd_state(args) -> int:
    g = _load_graph(args)
    psi = build_graph_state(g)
    if args.format == "json":
        payload = {
            "n": g.n,
            "bit_order": "qubit 1 is the most significant bit",
            "amplitudes": [[float(a.real), float(a.imag)] for a in psi],
        }
        _emit(_json_text(payload), args.out)
    else:
        lines = []
        for idx, a in enumerate(psi):
            bits = format(idx, f"0{g.n}b")
            lines.append(f"|{bits}>  {a.real:+.5f}  {a.imag:+.5f}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_measure(args, kind: str) -> int:
    g = _load_graph(args)
    psi = build_graph_state(g)
    if kind == "GCM":
        result = gcm(psi)
        payload = {"measure": "GCM", "value": result.value}
    else:
        result = gem(psi, _gem_config(args))
        d = result.diagnostics
        payload = {
            "measure": "GEM",
            "value": result.value,
            "diagnostics": {
                "restarts_used": d.restarts_used,
                "best_restart_index": d.best_restart_index,
                "iterations": d.iterations,
                "converged": d.converged,
                "best_fidelity": d.best_fidelity,
                "degenerate_redraws": d.degenerate_redraws,
                "restarts_at_best": d.restarts_at_best,
            },
        }
    if args.format == "json":
        _emit(_json_text(payload), args.out)
    else:
        _emit(f"{kind} = {result.value:.5f}\n", args.out)
    return 0


def cmd_lc(args) -> int:
    g = _load_graph(args)
    moved = local_complement(g, args.vertex)
    if args.format == "json":
        _emit(_json_text(_graph_dict(moved)), args.out)
    else:
        _emit(_inline(moved) + "\n", args.out)
    return 0


def cmd_orbit(args) -> int:
    g = _load_graph(args)
    orbit = lc_orbit(g, max_size=args.budget)
    reps = orbit.sorted_representatives()
    if args.format == "json":
        payload = {"size": orbit.size, "representatives": [_graph_dict(r) for r in reps]}
        _emit(_json_text(payload), args.out)
    else:
        lines = [f"orbit size: {orbit.size}"]
        lines.extend(_inline(r) for r in reps)
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_equiv(args) -> int:
    g1 = _load_graph(args)
    g2 = _load_graph(args, suffix="2")
    if g1.n != g2.n:
        verdict = False
    else:
        orbit = lc_orbit(g1, max_size=args.budget)
        verdict = canonical_form(g2) in orbit.representatives
    if args.format == "json":
        _emit(_json_text({"equivalent": verdict}), args.out)
    else:
        _emit(("equivalent" if verdict else "inequivalent") + "\n", args.out)
    return 0


def cmd_classify(args) -> int:
    report = build_report(args.measure, _gem_config(args), args.tol)
    if args.format == "json":
        _emit(_json_text(report_to_dict(report)), args.out)
    elif args.format == "csv":
        _emit(render_report_csv(report), args.out)
    else:
        _emit(render_report_text(report), args.out)
    return 0


def cmd_rp_table(args) -> int:
    table = build_rp_table(_gem_config(args), args.tol)
    if args.format == "json":
        _emit(_json_text(table), args.out)
    elif args.format == "csv":
        _emit(render_rp_table_csv(table), args.out)
    else:
        _emit(render_rp_table_text(table), args.out)
    return 0


def cmd_verify_catalog(args) -> int:
    entries = all_entries()
    checks = []

    connected = [e.id for e in entries if not is_connected(e.graph)]
    checks.append(("connected", not connected,
                   "45/45" if not connected else f"disconnected ids: {connected}"))

    forms = {}
    for e in entries:
        forms.setdefault(canonical_form(e.graph), []).append(e.id)
    dupes = [ids for ids in forms.values() if len(ids) > 1]
    checks.append(("pairwise-non-isomorphic", not dupes,
                   "990/990 pairs distinct" if not dupes else f"isomorphic: {dupes}"))

    worst_stab = 0.0
    for e in entries:
        psi = build_graph_state(e.graph)
        for a in range(1, e.n + 1):
            worst_stab = max(worst_stab, abs(stabilizer_expectation(psi, e.graph, a) - 1.0))
    checks.append(("stabilizers", worst_stab < 1e-12,
                   f"max deviation {worst_stab:.2e}"))

    worst_lc = 0.0
    for e in entries:
        psi = build_graph_state(e.graph)
        for a in range(1, e.n + 1):
            direct = build_graph_state(local_complement(e.graph, a))
            moved = lc_unitary_apply(psi, e.graph, a)
            worst_lc = max(worst_lc, abs(abs(inner_product(direct, moved)) - 1.0))
    checks.append(("lc-unitary", worst_lc < 1e-10, f"max deviation {worst_lc:.2e}"))

    budget_hit = []
    if args.lc_pairwise:
        owner: dict[Graph, int] = {}
        clash = []
        for e in entries:
            try:
                orbit = lc_orbit(e.graph, max_size=args.budget)
            except OrbitBudgetExceeded:
                budget_hit.append(e.id)
                continue
            for form in orbit.representatives:
                if form in owner and owner[form] != e.id:
                    clash.append((owner[form], e.id))
                else:
                    owner[form] = e.id
        ok = not clash and not budget_hit
        detail = "990/990 pairs disjoint"
        if clash:
            detail = f"shared orbits: {sorted(set(clash))}"
        if budget_hit:
            detail = f"budget exceeded for ids: {budget_hit}"
        checks.append(("lc-pairwise", ok, detail))

    passed = all(ok for _, ok, _ in checks)
    if args.format == "json":
        payload = {
            "checks": [
                {"name": name, "passed": ok, "detail": detail}
                for name, ok, detail in checks
            ],
            "passed": passed,
        }
        _emit(_json_text(payload), args.out)
    elif args.format == "csv":
        lines = ["check,passed,detail"]
        lines += [f"{name},{str(ok).lower()},{detail}" for name, ok, detail in checks]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [
            f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
            for name, ok, detail in checks
        ]
        lines.append("catalog OK" if passed else "catalog verification FAILED")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if passed else 1


def _add_source_flags(p: argparse.ArgumentParser, suffix: str = "") -> None:
    tag = " (second graph)" if suffix else ""
    p.add_argument(f"--graph{suffix}", type=int, metavar="N",
                   help=f"catalog graph id 1..45{tag}")
    p.add_argument(f"--edges{suffix}", type=str, metavar="STR",
                   help=f'inline edges like "1 2,1 3"{tag}')
    p.add_argument(f"--file{suffix}", type=str, metavar="PATH",
                   help=f"edge-list file{tag}")


def _add_output_flags(p: argparse.ArgumentParser, formats=("table", "json", "csv")) -> None:
    p.add_argument("--format", choices=formats, default="table",
                   help="output format (default: table)")
    p.add_argument("--out", type=str, metavar="PATH",
                   help="write output to a file instead of stdout")


def _add_gem_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--restarts", type=int, metavar="R",
                   help="random restarts (default 64)")
    p.add_argument("--seed", type=int, metavar="S",
                   help="restart stream seed (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphent",
        description="Graph states, entanglement measures, and LC orbits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("state", help="amplitudes of a graph state")
    _add_source_flags(p)
    _add_output_flags(p, formats=("table", "json"))
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("gcm", help="closed-form concurrence-type measure")
    _add_source_flags(p)
    _add_output_flags(p, formats=("table", "json"))
    p.set_defaults(func=lambda a: cmd_measure(a, "GCM"))

    p = sub.add_parser("gem", help="geometric measure via seeded see-saw")
    _add_source_flags(p)
    _add_gem_flags(p)
    p.add_argument("--tol", type=float, dest="gem_tol", metavar="T",
                   help="see-saw convergence tolerance (default 1e-12)")
    _add_output_flags(p, formats=("table", "json"))
    p.set_defaults(func=lambda a: cmd_measure(a, "GEM"))

    p = sub.add_parser("lc", help="local complementation at a vertex")
    _add_source_flags(p)
    p.add_argument("--vertex", type=int, required=True, metavar="K")
    _add_output_flags(p, formats=("table", "json"))
    p.set_defaults(func=cmd_lc)

    p = sub.add_parser("orbit", help="closure under local complementation")
    _add_source_flags(p)
    p.add_argument("--budget", type=int, default=10**6, metavar="B",
                   help="orbit size budget (default 1e6)")
    _add_output_flags(p, formats=("table", "json"))
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("equiv", help="are two graphs linked by LC moves?")
    _add_source_flags(p)
    _add_source_flags(p, suffix="2")
    p.add_argument("--budget", type=int, default=10**6, metavar="B")
    _add_output_flags(p, formats=("table", "json"))
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("classify", help="equal-measure classes over the catalog")
    p.add_argument("--measure", choices=("gcm", "gem"), required=True)
    _add_gem_flags(p)
    p.add_argument("--tol", type=float, default=DEFAULT_GROUPING_TOL, metavar="T",
                   help="grouping tolerance (default 1e-4)")
    _add_output_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("rp-table", help="resolution power of both measures")
    _add_gem_flags(p)
    p.add_argument("--tol", type=float, default=DEFAULT_GROUPING_TOL, metavar="T")
    _add_output_flags(p)
    p.set_defaults(func=cmd_rp_table)

    p = sub.add_parser("verify-catalog", help="catalog integrity checks")
    p.add_argument("--lc-pairwise", action="store_true",
                   help="also check all 990 orbit pairs are disjoint")
    p.add_argument("--budget", type=int, default=10**6, metavar="B")
    _add_output_flags(p)
    p.set_defaults(func=cmd_verify_catalog)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OrbitBudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
