"""Command-line front end.

Every command writes to stdout (or ``--out``) and is byte-deterministic for a
fixed ``--seed``. Exit codes: 0 ok, 1 usage, 2 invalid input, 3 guard
exceeded, 4 audit failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from pathlib import Path

from . import verify as suites
from .clique_boxes import HalfPlanesNotPairwiseIntersecting, max_clique_halfplanes_rectangles
from .clique_homothets import HomothetScene, check_eptas_preconditions, peel_and_solve
from .clique_translates import max_clique_translates_geometric, robust_max_clique_translates, translate_graph
from .geometry import Scene, SceneObject, scene_to_graph
from .graph import GuardExceeded, exact_max_clique
from .io import dump_mipa, dump_scene, load_graph, load_mipa, load_scene
from .mipa import brute_force_mipa, exact_mipa_maxsat, local_search_mipa
from .random_instances import (
    BODY_KINDS,
    random_body,
    random_cnf,
    random_halfplanes,
    random_homothet_placements,
    random_mipa,
    random_pnae33,
    random_rects,
    random_translate_scene,
)
from .reductions.cnf import brute_force_sat, from_dimacs, solver_sat, to_dimacs
from .reductions.embedding import embed_mipa_as_clique
from .reductions.gadgets import reduce_pnae33_to_mipa
from .reductions.pipeline import CLIQUE_GUARD, full_pipeline
from .reductions.sat_chain import MIN_B, reduce_3sat_to_nae4, reduce_nae3_to_positive3occ, reduce_nae4_to_nae3
from .render import render_svg

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_GUARD, EXIT_AUDIT = 0, 1, 2, 3, 4
MIPA_BRUTE_GUARD = 24


class UsageError(Exception):
    pass


class AuditFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _json(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from exc


def _fmt(args, allowed: tuple[str, ...]) -> str:
    fmt = args.format or allowed[0]
    if fmt not in allowed:
        raise UsageError(f"--format {fmt} not supported here (choose from {', '.join(allowed)})")
    return fmt


def _budget(args) -> float | None:
    return None if args.time_budget_ms is None else args.time_budget_ms / 1000


def _clique_doc(problem: str, vertices, labels, **extra) -> dict:
    doc = {"problem": problem, "size": len(vertices), "vertices": list(vertices), "labels": list(labels)}
    doc.update(extra)
    return doc


def _clique_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["vertex", "label"])
    for v, lab in zip(doc["vertices"], doc["labels"]):
        w.writerow([v, lab])
    return buf.getvalue()


# gen


def cmd_gen(args) -> str:
    rng = random.Random(args.seed)
    if args.what == "mipa":
        _fmt(args, ("json",))
        return dump_mipa(random_mipa(rng, args.n, args.h if args.h is not None else max(1, args.n // 3)))
    if args.what == "cnf":
        nv = args.vars
        nc = args.clauses if args.clauses is not None else nv
        phi = random_pnae33(rng, nv, nc) if args.pnae33 else random_cnf(rng, nv, nc, 3)
        return to_dimacs(phi)
    _fmt(args, ("json",))
    body = random_body(rng, args.body)
    if args.what == "translates":
        scene = random_translate_scene(rng, args.n, body, args.spread)
    elif args.what == "homothets":
        objs = [
            SceneObject("homothet", p, f"H{i}")
            for i, p in enumerate(random_homothet_placements(rng, args.n, args.spread))
        ]
        scene = Scene(body, tuple(objs))
    else:  # boxes
        k = args.halfplanes
        objs = [SceneObject("halfplane", h, f"h{i}") for i, h in enumerate(random_halfplanes(rng, k))]
        objs += [SceneObject("rect", r, f"R{i}") for i, r in enumerate(random_rects(rng, args.n))]
        scene = Scene(None, tuple(objs))
    return dump_scene(scene)


# solve


def _scene_arg(args) -> Scene:
    if not args.scene:
        raise UsageError("--scene is required")
    return load_scene(_read(args.scene))


def _placements(scene: Scene, kind: str):
    if scene.body is None:
        raise ValueError("scene needs a body")
    bad = [o.label or str(i) for i, o in enumerate(scene.objects) if o.kind != kind or o.weight != 1 or o.body is not None]
    if bad:
        raise ValueError(f"expected unweighted {kind} objects on the scene body; offending: {', '.join(bad[:5])}")
    return [o.shape for o in scene.objects]


def solve_translates(args) -> dict:
    scene = _scene_arg(args)
    placements = _placements(scene, "translate")
    labels = [o.label for o in scene.objects]
    if args.robust:
        g = translate_graph(scene.body, placements)
        res = robust_max_clique_translates(g)
        if res.clique is None:
            cert = res.certificate
            return {
                "problem": "translates",
                "in_class": False,
                "certificate": {"remaining_edges": [list(e) for e in cert.remaining]},
            }
        return _clique_doc("translates", res.clique, [labels[v] for v in res.clique], method="robust CNEEO")
    clique = max_clique_translates_geometric(scene.body, placements)
    return _clique_doc("translates", clique, [labels[v] for v in clique], method="geometric lens split")


def solve_boxes(args) -> dict:
    scene = _scene_arg(args)
    hps, rects = [], []
    for i, o in enumerate(scene.objects):
        if o.kind == "halfplane":
            hps += [(i, o.shape)] * o.weight
        elif o.kind == "rect":
            rects += [(i, o.shape)] * o.weight
        else:
            raise ValueError(f"boxes solver takes half-planes and rectangles, got {o.kind}")
    owners = [i for i, _ in hps] + [i for i, _ in rects]
    try:
        clique = max_clique_halfplanes_rectangles([h for _, h in hps], [r for _, r in rects])
    except HalfPlanesNotPairwiseIntersecting as exc:
        raise ValueError(f"{exc}; use 'solve exact' instead") from exc
    verts = sorted(owners[v] for v in clique)
    return _clique_doc("boxes", verts, [scene.objects[v].label for v in verts], method="maximal rectangle cliques + Konig")


def solve_homothets(args) -> dict:
    scene = _scene_arg(args)
    hs = HomothetScene(scene.body, tuple(_placements(scene, "homothet")))
    clique = sorted(peel_and_solve(hs))
    doc = _clique_doc("homothets", clique, [scene.objects[v].label for v in clique], method="peeling, exact inner solver")
    if args.check_preconditions:
        rep = check_eptas_preconditions(hs)
        doc["preconditions"] = {
            "odd_cycles_checked": rep.odd_cycle_checked,
            "odd_cycle_ok": rep.odd_cycle_ok,
            "odd_cycle_witness": None if rep.odd_cycles is None else [list(c) for c in rep.odd_cycles],
            "min_density": None if rep.min_density is None else str(rep.min_density),
            "density_ok": rep.density_ok,
            "vc_dimension": rep.vc_dimension,
            "notes": list(rep.notes),
        }
    return doc


def solve_exact(args) -> dict:
    if args.graph:
        labels = _read(args.labels) if args.labels else None
        g = load_graph(_read(args.graph), labels)
    else:
        g = scene_to_graph(_scene_arg(args))
    if g.n > CLIQUE_GUARD and not args.guard_override:
        raise GuardExceeded(f"{g.n} vertices exceeds the exact-solver guard {CLIQUE_GUARD}; pass --guard-override")
    res = exact_max_clique(g, _budget(args))
    labels = [g.labels[v] if g.labels else str(v) for v in res.clique]
    return _clique_doc("exact", res.clique, labels, optimal=res.optimal, nodes=res.nodes)


def solve_mipa(args) -> dict:
    if not args.instance:
        raise UsageError("--instance is required")
    inst = load_mipa(_read(args.instance))
    if args.local_search:
        placement, value = local_search_mipa(inst, seed=args.seed)
        method = "local search"
    elif inst.h <= MIPA_BRUTE_GUARD:
        placement, value = brute_force_mipa(inst)
        method = "brute force"
    elif args.guard_override:
        placement, value = exact_mipa_maxsat(inst)
        method = "MaxSAT"
    else:
        raise GuardExceeded(f"{inst.h} intervals exceeds the brute-force guard {MIPA_BRUTE_GUARD}; pass --guard-override")
    return {"problem": "mipa", "value": value, "placement": list(placement), "method": method}


SOLVERS = {
    "translates": solve_translates,
    "boxes": solve_boxes,
    "homothets": solve_homothets,
    "exact": solve_exact,
    "mipa": solve_mipa,
}


def cmd_solve(args) -> str:
    doc = SOLVERS[args.problem](args)
    fmt = _fmt(args, ("json", "csv"))
    if fmt == "csv":
        if "vertices" not in doc:
            raise UsageError("csv output is only available for clique results")
        return _clique_csv(doc)
    return _json(doc)


# reductions


def _cnf_arg(args):
    if not args.cnf:
        raise UsageError("--cnf is required")
    return from_dimacs(_read(args.cnf))


def cmd_reduce(args) -> str:
    if args.stage == "embed":
        return cmd_embed(args)
    phi = _cnf_arg(args)
    if args.stage == "pnae33-mipa":
        _fmt(args, ("json",))
        return dump_mipa(reduce_pnae33_to_mipa(phi).instance)
    if args.stage == "pipeline":
        return cmd_pipeline(args)
    if args.stage == "3sat-nae4":
        red = reduce_3sat_to_nae4(phi, MIN_B if args.B is None else args.B)
    elif args.stage == "nae4-nae3":
        red = reduce_nae4_to_nae3(phi)
    else:
        red = reduce_nae3_to_positive3occ(phi, args.B)
    header = "".join(f"c size {k} {v}\n" for k, v in sorted(red.sizes.items()))
    return header + to_dimacs(red.target)


def cmd_embed(args) -> str:
    if not args.instance:
        raise UsageError("--instance is required")
    _fmt(args, ("json",))
    inst = load_mipa(_read(args.instance))
    return dump_scene(embed_mipa_as_clique(inst, args.mode, seed=args.seed).scene)


def cmd_pipeline(args) -> str:
    phi = _cnf_arg(args)
    res = full_pipeline(phi, MIN_B if args.B is None else args.B, embed=bool(args.scene_out), seed=args.seed)
    audit = res.size_audit()
    doc = {
        "source": {"vars": phi.num_vars, "clauses": phi.num_clauses},
        "sizes": {
            "3sat-nae4": res.stage1.sizes,
            "nae4-nae3": res.stage2.sizes,
            "nae3-pnae33": res.stage3.sizes,
            "mipa": {"points": res.stage4.instance.n, "intervals": res.stage4.instance.h},
        },
        "audit": audit,
        "predicted_if_satisfiable": res.predicted,
    }
    if args.scene_out:
        Path(args.scene_out).write_text(dump_scene(res.embedding.scene))
    failed = [k for k, ok in audit.items() if not ok]
    if args.check:
        sat = brute_force_sat(phi) if phi.num_vars <= 16 else solver_sat(phi)
        value, method = res.computed_clique_value(allow_large=True)
        doc["satisfiable"] = sat is not None
        doc["computed"] = value
        doc["method"] = method
        agree = value == res.predicted if sat is not None else value < res.predicted
        doc["consistent"] = agree
        if not agree:
            failed.append("computed clique value")
    out = _json(doc)
    if failed:
        raise AuditFailure(out + f"audit failed: {', '.join(failed)}")
    return out


# verify, render, bench


def cmd_verify(args) -> str:
    if args.suite == "all":
        results = suites.run_all(quick=args.quick, seed=args.seed)
    else:
        fn = suites.SUITES[args.suite]
        kwargs = {"seed": args.seed} if "seed" in fn.__code__.co_varnames else {}
        if args.trials is not None:
            key = {"reductions": "count", "gadgets": "sat_count"}.get(args.suite, "trials")
            if args.suite != "expander":
                kwargs[key] = args.trials
        elif args.quick and args.suite != "expander":
            key = {"reductions": "count", "gadgets": "sat_count"}.get(args.suite, "trials")
            default = fn.__defaults__[fn.__code__.co_varnames.index(key)]
            kwargs[key] = max(1, default // 10)
        results = [fn(**kwargs)]
    text = "".join(r.line() + "\n" for r in results)
    if not all(r.passed for r in results):
        raise AuditFailure(text)
    return text


def cmd_render(args) -> str:
    _fmt(args, ("svg",))
    svg = render_svg(_scene_arg(args), width=args.width)
    if args.svg:
        Path(args.svg).write_text(svg)
        return ""
    return svg


def _bench_rows(args):
    rng = random.Random(args.seed)
    for n in args.sizes:
        for rep in range(args.reps):
            body = random_body(rng, BODY_KINDS[rep % len(BODY_KINDS)])
            scene = random_translate_scene(rng, n, body)
            placements = [o.shape for o in scene.objects]
            g = translate_graph(body, placements)
            stats: dict = {}
            t0 = time.perf_counter()
            geo = max_clique_translates_geometric(body, placements, stats)
            t1 = time.perf_counter()
            ex = exact_max_clique(g)
            t2 = time.perf_counter()
            row = {
                "n": n,
                "rep": rep,
                "edges": g.m,
                "omega": len(geo),
                "agree": len(geo) == len(ex.clique),
                "geometric_pairs": stats.get("pairs", 0),
                "geometric_examined": stats.get("examined", 0),
                "bnb_nodes": ex.nodes,
            }
            if args.timing:
                row["geometric_s"] = f"{t1 - t0:.6f}"
                row["bnb_s"] = f"{t2 - t1:.6f}"
            yield row


def cmd_bench(args) -> str:
    fmt = _fmt(args, ("csv", "json"))
    rows = list(_bench_rows(args))
    if fmt == "json":
        return _json(rows)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["n"], lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


# parser


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p.add_argument("--time-budget-ms", type=int, default=None, help="time budget for exact clique search")
    p.add_argument("--guard-override", action="store_true", help="allow exponential solvers past their size guards")
    p.add_argument("--format", choices=("json", "csv", "svg"), default=None)
    p.add_argument("-o", "--out", help="write output here instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="convexclique", description="Clique problems on geometric intersection graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="random instances")
    g.add_argument("what", choices=("translates", "homothets", "boxes", "mipa", "cnf"))
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--h", type=int, default=None, help="intervals (mipa)")
    g.add_argument("--body", choices=BODY_KINDS, default="square")
    g.add_argument("--spread", type=int, default=4)
    g.add_argument("--halfplanes", type=int, default=3)
    g.add_argument("--vars", type=int, default=4)
    g.add_argument("--clauses", type=int, default=None)
    g.add_argument("--pnae33", action="store_true", help="positive NAE, widths 2-3, at most 3 occurrences")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", parents=[common], help="maximum clique / MIPA solvers")
    s.add_argument("problem", choices=tuple(SOLVERS))
    s.add_argument("--scene")
    s.add_argument("--graph", help="DIMACS-like edge list (exact only)")
    s.add_argument("--labels", help="JSON label sidecar for --graph")
    s.add_argument("--instance", help="MIPA JSON (mipa only)")
    s.add_argument("--robust", action="store_true")
    s.add_argument("--check-preconditions", action="store_true")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact MIPA optimum (default)")
    mode.add_argument("--local-search", action="store_true")
    s.set_defaults(func=cmd_solve)

    r = sub.add_parser("reduce", parents=[common], help="one stage of the hardness chain")
    r.add_argument("stage", choices=("3sat-nae4", "nae4-nae3", "nae3-pnae33", "pnae33-mipa", "embed", "pipeline"))
    r.add_argument("--cnf")
    r.add_argument("--instance")
    r.add_argument("--B", type=int, default=None, help=f"occurrence bound (default {MIN_B}; max occurrence for nae3-pnae33)")
    r.add_argument("--mode", choices=("halfplane", "unitdisk"), default="halfplane")
    r.add_argument("--check", action="store_true")
    r.add_argument("--scene-out")
    r.set_defaults(func=cmd_reduce)

    e = sub.add_parser("embed", parents=[common], help="MIPA instance to a clique scene")
    e.add_argument("--instance")
    e.add_argument("--mode", choices=("halfplane", "unitdisk"), default="halfplane")
    e.set_defaults(func=cmd_embed)

    p = sub.add_parser("pipeline", parents=[common], help="3-SAT formula through every stage")
    p.add_argument("--cnf")
    p.add_argument("--B", type=int, default=None, help=f"expander occurrence bound (default {MIN_B})")
    p.add_argument("--check", action="store_true", help="compute the clique value and compare with the prediction")
    p.add_argument("--scene-out", help="also write the final scene JSON here")
    p.set_defaults(func=cmd_pipeline)

    v = sub.add_parser("verify", parents=[common], help="randomised invariant suites")
    v.add_argument("suite", nargs="?", default="all", choices=("all", *suites.SUITES))
    v.add_argument("--quick", action="store_true")
    v.add_argument("--trials", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("render", parents=[common], help="SVG drawing of a scene")
    d.add_argument("--scene")
    d.add_argument("--svg", help="output file")
    d.add_argument("--width", type=int, default=640)
    d.set_defaults(func=cmd_render)

    b = sub.add_parser("bench", parents=[common], help="work-count table for the translate solvers")
    b.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 12, 16])
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--timing", action="store_true", help="add wall-clock columns (not reproducible)")
    b.set_defaults(func=cmd_bench)
    return parser


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _emit(args, args.func(args))
        return EXIT_OK
    except BrokenPipeError:
        # downstream reader closed early (e.g. piped into head)
        sys.stderr.close()
        return EXIT_OK
    except UsageError as exc:
        print(f"convexclique: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardExceeded as exc:
        print(f"convexclique: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except AuditFailure as exc:
        _emit(args, str(exc) if str(exc).endswith("\n") else str(exc) + "\n")
        print("convexclique: audit failure", file=sys.stderr)
        return EXIT_AUDIT
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"convexclique: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
