"""Command-line entry points: generation, Pareto runs, reports, charts,
the verification suite, and the HTTP service."""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import __version__
from .attributes import AttributeId, attribute_specs, dominates
from .catalog import (ALL_PROTOCOL_IDS, generate_instances, instances_to_csv,
                      instances_to_json)
from .charts import (DEFAULT_CURVE_POINTS, emit_resistance_curves,
                     emit_spider, resistance_series, series_to_csv)
from .config import RunConfig, build_instances
from .oracles import (naive_nondominated, simulate_hk_distance,
                      simulate_hk_mafia, simulate_random_answer)
from .pareto import MafiaBound, nondominated, pareto_pipeline
from .reporting import emit_table
from .service import EngineState, canonical_pareto_payload


def _write(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_config(args) -> RunConfig:
    cfg = RunConfig.load(args.config) if args.config else RunConfig()
    if getattr(args, "delta", None):
        cfg.delta = args.delta
    if getattr(args, "sigma", None):
        cfg.sigma = args.sigma
    if getattr(args, "memory_tolerance", None):
        cfg.memory_tolerance_bits = args.memory_tolerance
    if getattr(args, "protocols", None):
        names = [p.strip() for p in args.protocols.split(",") if p.strip()]
        unknown = [p for p in names if p not in ALL_PROTOCOL_IDS]
        if unknown:
            raise SystemExit(f"error: unknown protocols: {', '.join(unknown)}")
        cfg.protocols = names
    cfg.validate()
    return cfg


def _parse_bound(text: str) -> MafiaBound:
    try:
        return MafiaBound.parse(text)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")


def cmd_generate(args) -> int:
    cfg = _load_config(args)
    instances = build_instances(cfg)
    if args.format == "csv":
        _write(instances_to_csv(instances), args.out)
    else:
        _write(instances_to_json(instances), args.out)
    print(f"generated {len(instances)} instances", file=sys.stderr)
    return 0


def cmd_pareto(args) -> int:
    cfg = _load_config(args)
    instances = build_instances(cfg)
    bound = _parse_bound(args.y)
    payload = canonical_pareto_payload(
        instances, bound,
        memory_tolerance_bits=cfg.memory_tolerance_bits)
    _write(json.dumps(payload, indent=2) + "\n", args.out)
    if args.marked_csv:
        from .catalog import instances_to_csv
        from .pareto import filter_mafia_bound
        filtered = filter_mafia_bound(instances, bound)
        members = set(payload["member_ids"])
        text = instances_to_csv(filtered)
        lines = text.split("\n")
        lines[0] += ",nondominated"
        for k, inst in enumerate(filtered, start=1):
            lines[k] += f",{str(inst.id in members).lower()}"
        Path(args.marked_csv).write_text("\n".join(lines))
    return 0


def cmd_report(args) -> int:
    cfg = _load_config(args)
    if args.style != "table3":
        raise SystemExit(f"error: unknown report style {args.style!r}")
    bounds = [_parse_bound(part) for part in args.y_list.split(",") if part]
    if not bounds:
        raise SystemExit("error: --y-list needs at least one bound")
    instances = build_instances(cfg)
    try:
        text = emit_table(instances, bounds, fmt=args.format,
                          memory_tolerance_bits=cfg.memory_tolerance_bits)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    _write(text, args.out)
    return 0


def _split_ids(text: str) -> list:
    """Split a comma-separated id list, honoring commas inside braces."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
            continue
        depth += ch == "{"
        depth -= ch == "}"
        cur.append(ch)
    out.append("".join(cur).strip())
    return [s for s in out if s]


def cmd_chart(args) -> int:
    cfg = _load_config(args)
    instances = build_instances(cfg)
    by_id = {inst.id: inst for inst in instances}
    ids = _split_ids(args.instances)
    missing = [i for i in ids if i not in by_id]
    if missing:
        raise SystemExit(f"error: unknown instance ids: {', '.join(missing)}")
    selected = [by_id[i] for i in ids]
    norm = None
    if args.normalization:
        norm = by_id.get(args.normalization)
        if norm is None:
            raise SystemExit(f"error: unknown normalization instance "
                             f"{args.normalization!r}")
    try:
        svg = emit_spider(selected, normalization=norm)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    _write(svg, args.out)
    return 0


def cmd_curves(args) -> int:
    cfg = _load_config(args)
    instances = build_instances(cfg)
    points = (tuple(int(p) for p in args.points.split(","))
              if args.points else DEFAULT_CURVE_POINTS)
    try:
        series = resistance_series(instances, args.fraud, points)
        svg = emit_resistance_curves(instances, args.fraud, points)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    if args.out_csv:
        Path(args.out_csv).write_text(series_to_csv(series))
    if args.out_svg:
        Path(args.out_svg).write_text(svg)
    if not args.out_csv and not args.out_svg:
        sys.stdout.write(series_to_csv(series))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    cfg = _load_config(args)
    if args.port:
        cfg.port = args.port
    state = EngineState(cfg)
    print(f"serving {len(state.instances)} instances on port {cfg.port}",
          file=sys.stderr)
    uvicorn.run(create_app(state), host=args.host, port=cfg.port,
                log_level="warning")
    return 0


def _verify_axioms(report) -> bool:
    """Def-1 axioms for every shipped relation, on random domain samples."""
    rng = random.Random(0xDB)
    specs = attribute_specs()
    domains = {
        AttributeId.PM: lambda: rng.choice([0.0, 1.0, 2.0 ** -rng.uniform(0, 260)]),
        AttributeId.NBE: lambda: rng.randrange(0, 4096),
        AttributeId.NM: lambda: rng.randrange(0, 1 << 22),
        AttributeId.NS: lambda: rng.random() < 0.5,
    }
    domains[AttributeId.PD] = domains[AttributeId.PT] = domains[AttributeId.PM]
    domains[AttributeId.NC] = domains[AttributeId.NBE]
    domains[AttributeId.NB] = domains[AttributeId.NS]
    ok = True
    for attr in AttributeId:
        draw = domains[attr]
        spec = specs[attr]
        for _ in range(10_000):
            x, y, z = draw(), draw(), draw()
            if not spec.approx(x, x):
                ok = False
            if spec.approx(x, y) != spec.approx(y, x):
                ok = False
            # betweenness: order the triple with the attribute's total order
            lo, mid, hi = sorted([x, y, z])
            if spec.approx(lo, hi) and spec.less(lo, mid) and spec.less(mid, hi):
                if not (spec.approx(lo, mid) and spec.approx(mid, hi)):
                    ok = False
            if not ok:
                report(f"axiom violation for {attr} at {(x, y, z)}")
                return False
    report("approximate-equality axioms hold (8 attributes x 10k triples)")
    return True


def _verify_oracle_vs_engine(report, subsets=6, size=500) -> bool:
    instances = generate_instances()
    rng = random.Random(0xFACE)
    for k in range(subsets):
        sample = rng.sample(instances, size)
        fast = nondominated(sample).ids()
        slow = naive_nondominated(sample).ids()
        if fast != slow:
            report(f"oracle mismatch on subset {k}: engine {len(fast)} "
                   f"members vs oracle {len(slow)}")
            return False
    report(f"engine matches the quadratic oracle on {subsets} random "
           f"{size}-instance subsets")
    return True


def _verify_simulations(report, trials) -> bool:
    ok = True
    for n in range(1, 9):
        est = simulate_random_answer(n, trials, seed=1000 + n)
        if not est.within(0.5 ** n):
            report(f"random-answer estimate off at n={n}: {est.mean}")
            ok = False
    for n in range(1, 9):
        est = simulate_hk_mafia(n, trials, seed=2000 + n)
        if not est.within(0.75 ** n):
            report(f"pre-ask estimate off at n={n}: {est.mean}")
            ok = False
    for n in range(1, 9):
        est = simulate_hk_distance(n, trials, seed=3000 + n)
        if not est.within(0.75 ** n):
            report(f"early-reply estimate off at n={n}: {est.mean}")
            ok = False
    if ok:
        report(f"Monte-Carlo estimates within 3 stderr of closed forms "
               f"(n=1..8, {trials} trials each)")
    return ok


def _verify_dominance_properties(report) -> bool:
    instances = generate_instances()
    rng = random.Random(0xBEEF)
    for _ in range(10_000):
        a, b = rng.sample(instances, 2)
        if dominates(a.vector, b.vector) and dominates(b.vector, a.vector):
            report(f"asymmetry violated for {a.id} / {b.id}")
            return False
    report("dominance asymmetry holds on 10k random instance pairs")
    return True


def cmd_verify(args) -> int:
    failures = 0

    def report(msg):
        print(f"  {msg}")

    checks = [
        ("approximate-equality axioms", lambda: _verify_axioms(report)),
        ("dominance asymmetry", lambda: _verify_dominance_properties(report)),
        ("oracle vs engine", lambda: _verify_oracle_vs_engine(
            report, subsets=args.subsets)),
        ("fast-phase simulations", lambda: _verify_simulations(
            report, trials=args.trials)),
    ]
    for name, run in checks:
        print(f"[verify] {name}")
        try:
            passed = run()
        except Exception as exc:  # pragma: no cover - defensive
            print(f"  error: {exc}")
            passed = False
        if not passed:
            failures += 1
    print(f"[verify] {'OK' if failures == 0 else f'{failures} FAILURES'}")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dbcompare",
        description="Multi-criteria comparison of distance-bounding "
                    "protocol instances")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", help="run-configuration file")
        sp.add_argument("--delta", type=int, help="nonce size in bits")
        sp.add_argument("--sigma", type=int,
                        help="signature/commitment/MAC size in bits")
        sp.add_argument("--memory-tolerance", type=int,
                        help="memory approximate-equality tolerance in bits")
        sp.add_argument("--protocols",
                        help="comma-separated protocol ids (default: all)")

    sp = sub.add_parser("generate", help="emit the instance set")
    common(sp)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("pareto", help="filter by a mafia bound and compute "
                                       "the nondominated set")
    common(sp)
    sp.add_argument("--y", required=True, help="bound, e.g. 2^-16 or 0.25")
    sp.add_argument("--out")
    sp.add_argument("--marked-csv",
                    help="also export the filtered set as CSV with a "
                         "nondominated marker column")
    sp.set_defaults(func=cmd_pareto)

    sp = sub.add_parser("report", help="emit the comparison table")
    common(sp)
    sp.add_argument("--y-list", required=True,
                    help="comma-separated bounds, e.g. 2^-1,2^-16")
    sp.add_argument("--style", default="table3")
    sp.add_argument("--format", choices=["text", "csv", "json"],
                    default="text")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("chart", help="emit charts")
    chart_sub = sp.add_subparsers(dest="chart_kind", required=True)
    spider = chart_sub.add_parser("spider", help="spider chart (SVG)")
    common(spider)
    spider.add_argument("--instances", required=True,
                        help="comma-separated instance ids")
    spider.add_argument("--normalization",
                        help="instance id supplying axis references")
    spider.add_argument("--out")
    spider.set_defaults(func=cmd_chart)

    sp = sub.add_parser("curves", help="per-protocol resistance curves")
    common(sp)
    sp.add_argument("--fraud", choices=["mafia", "distance", "terrorist"],
                    required=True)
    sp.add_argument("--points", help="comma-separated round counts")
    sp.add_argument("--out-csv")
    sp.add_argument("--out-svg")
    sp.set_defaults(func=cmd_curves)

    sp = sub.add_parser("verify", help="run the verification-oracle suite")
    sp.add_argument("--trials", type=int, default=10**6)
    sp.add_argument("--subsets", type=int, default=6)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("serve", help="start the JSON query service")
    common(sp)
    sp.add_argument("--port", type=int)
    sp.add_argument("--host", default="127.0.0.1")
    sp.set_defaults(func=cmd_serve)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:  # piping into head etc.
        return 0


if __name__ == "__main__":
    sys.exit(main())
