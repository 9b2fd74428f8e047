"""
oddprod command line
Generates instances, colours and verifies them, runs the exact oracle and the
benchmark grid

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 internal
invariant breach, 4 palette exhausted under --unsafe
"""

import argparse
import asyncio
import json
import logging
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import ValidationError

from oddprod import __version__
from oddprod.api import generate_instance
from oddprod.config.variants import FactorKind, Variant
from oddprod.core.bench import BenchConfig, BenchRunner
from oddprod.core.colouring import certified_bounds, colour, resolve_variant
from oddprod.core.product import check_vertex, risk_set, support_set
from oddprod.core.product.factors import FACTOR_GRAPHS
from oddprod.core.report import ValidationReport
from oddprod.core.verification import (
    exact_odd_chromatic,
    verify_odd,
    verify_proper,
    verify_support_distinct,
)
from oddprod.io.documents import (
    load_colouring,
    load_generic_graph,
    load_instance,
    save_colouring,
    save_instance,
)
from oddprod.io.dot import export_dot
from oddprod.io.stats import RunMetadata, append_stats_csv
from oddprod.utils.config import get_config
from oddprod.utils.errors import InvalidParameterError, OddProdError, PaletteExhaustedError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_INTERNAL = 3
EXIT_UNSAFE_EXHAUSTED = 4

CHECKS = ("proper", "odd", "support")


class CommandFailed(Exception):
    """Raised by a command to finish with a specific exit code"""

    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {target}")


def _parse_vertex(text: str) -> List[int]:
    try:
        coords = [int(part) for part in text.replace("(", "").replace(")", "").split(",")]
    except ValueError as e:
        raise InvalidParameterError(
            f"vertex must look like i,j or i,j,k, got {text!r}",
            rule_id="param.vertex",
            original_exception=e,
        )
    if len(coords) not in (2, 3):
        raise InvalidParameterError(
            f"vertex must have 2 or 3 coordinates, got {len(coords)}", rule_id="param.vertex"
        )
    return coords


def _int_list(text: str) -> List[int]:
    return [int(part) for part in text.split(",") if part.strip()]


# ============================================================================
# Commands
# ============================================================================


def cmd_gen(args: argparse.Namespace) -> int:
    """Generate a random instance document"""
    graph = generate_instance(
        t=args.t,
        r=args.r,
        h=args.h,
        kind=FactorKind(args.kind),
        ell=args.ell,
        factor=args.factor,
        max_degree=args.max_degree,
        q_vertex=args.q_vertex,
        p_edge=args.p_edge,
        seed=args.seed,
    )
    _write_text(args.out, save_instance(graph))
    logger.info(f"Generated instance with {graph.n} vertices and {graph.m} edges")
    return EXIT_OK


def cmd_colour(args: argparse.Namespace) -> int:
    """Colour an instance and write the colouring document (and optionally a stats row)"""
    graph = load_instance(_read_text(args.input))
    variant = resolve_variant(graph, Variant(args.variant) if args.variant else None)
    bounds = certified_bounds(graph, variant)

    palette = args.palette
    if palette is not None:
        if palette < 1:
            raise InvalidParameterError(f"palette must be >= 1, got {palette}", "param.palette")
        if palette < bounds.palette and not args.unsafe:
            raise InvalidParameterError(
                f"palette {palette} is below the certified bound {bounds.palette}; "
                f"pass --unsafe to allow exhaustion",
                rule_id="param.palette",
            )

    started = time.perf_counter()
    try:
        colouring, stats = colour(graph, variant=variant, palette=palette)
    except PaletteExhaustedError as e:
        if palette is not None and palette < bounds.palette:
            print(f"palette exhausted at {e.vertex} with {e.palette} colours", file=sys.stderr)
            raise CommandFailed(EXIT_UNSAFE_EXHAUSTED, str(e))
        raise
    millis = (time.perf_counter() - started) * 1000.0

    _write_text(args.out, save_colouring(graph, colouring))
    if args.stats:
        meta = RunMetadata(
            variant=variant.value,
            t=graph.host.t,
            h=graph.secondary.h,
            ell=graph.secondary.ell,
            delta=graph.secondary.delta if graph.kind is FactorKind.GENERAL else 0,
            n=graph.n,
            m=graph.m,
            seed=args.seed,
            palette=colouring.palette,
            millis=millis,
        )
        append_stats_csv(args.stats, stats, meta)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Verify a colouring; one JSON line per violation on stdout, summary on stderr"""
    graph = load_instance(_read_text(args.instance))
    colouring = load_colouring(_read_text(args.colouring), graph)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown or not checks:
        raise InvalidParameterError(
            f"checks must be a non-empty subset of {','.join(CHECKS)}, got {args.checks!r}",
            rule_id="param.checks",
        )

    runners: Dict[str, Callable[[], ValidationReport]] = {
        "proper": lambda: verify_proper(graph, colouring),
        "odd": lambda: verify_odd(graph, colouring)[0],
        "support": lambda: verify_support_distinct(graph, colouring),
    }
    report = ValidationReport()
    for check in checks:
        outcome = runners[check]()
        report.extend(outcome)
        summary = "ok" if outcome.ok else f"{len(outcome.violations)} violation(s)"
        print(f"{check}: {summary}", file=sys.stderr)

    sys.stdout.write(report.to_json_lines())
    if not report.ok:
        print(str(report), file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    """Print the exact odd chromatic number, or "none" if it exceeds --max-colours"""
    graph = load_generic_graph(_read_text(args.input))
    workers = args.workers or get_config().workers
    result = exact_odd_chromatic(
        graph, max_colours=args.max_colours, vertex_cap=args.cap, workers=workers
    )
    print("none" if result is None else result)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    """Run the benchmark grid and print the per-cell summary"""
    if args.config:
        data = json.loads(_read_text(args.config))
    else:
        data = {}
    overrides = {
        "variants": args.variants.split(",") if args.variants else None,
        "t_values": _int_list(args.t) if args.t else None,
        "h_values": _int_list(args.h) if args.h else None,
        "ell_values": _int_list(args.ell) if args.ell else None,
        "delta_values": _int_list(args.delta) if args.delta else None,
        "r": args.r,
        "q_vertex": args.q_vertex,
        "p_edge": args.p_edge,
        "repetitions": args.repetitions,
        "seed_base": args.seed_base,
        "output": args.output,
        "ladder": _int_list(args.ladder) if args.ladder else None,
        "ladder_t": args.ladder_t,
        "workers": args.workers,
        "verify": False if args.no_verify else None,
    }
    data.update({k: v for k, v in overrides.items() if v is not None})
    if data.get("output") is None:
        data["output"] = str(get_config().get_output_path("bench.csv"))

    config = BenchConfig.model_validate(data)
    report = asyncio.run(BenchRunner(config).run())
    for line in report.summary_lines():
        print(line)
    if report.exhausted:
        raise CommandFailed(EXIT_INTERNAL, f"{report.exhausted} run(s) exhausted the palette")
    return EXIT_VERIFY_FAILED if report.failures else EXIT_OK


def cmd_inspect(args: argparse.Namespace) -> int:
    """Print the support and risk sets of one product vertex as JSON"""
    graph = load_instance(_read_text(args.instance))
    v = check_vertex(graph.host, graph.secondary, _parse_vertex(args.vertex))
    payload = {
        "vertex": v.coords(),
        "in_graph": v in graph,
        "support": [w.coords() for w in sorted(support_set(graph, v))],
        "risk": [w.coords() for w in sorted(risk_set(graph, v))],
    }
    print(json.dumps(payload))
    return EXIT_OK


def cmd_dot(args: argparse.Namespace) -> int:
    graph = load_instance(_read_text(args.instance))
    colouring = load_colouring(_read_text(args.colouring), graph) if args.colouring else None
    _write_text(args.out, export_dot(graph, colouring))
    return EXIT_OK


# ============================================================================
# Argument parsing
# ============================================================================


def build_parser() -> argparse.ArgumentParser:
    config = get_config()
    parser = argparse.ArgumentParser(
        prog="oddprod",
        description="Odd colourings of subgraphs of strong products with bounded-treewidth hosts",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at INFO level")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Generate a random instance")
    gen.add_argument("--t", type=int, required=True, help="Host width")
    gen.add_argument("--r", type=int, required=True, help="Host vertex count")
    gen.add_argument("--h", type=int, required=True, help="Path length or factor size")
    gen.add_argument("--kind", choices=[k.value for k in FactorKind], default="path")
    gen.add_argument("--ell", type=int, default=1, help="Clique size (path_clique)")
    gen.add_argument("--factor", choices=sorted(FACTOR_GRAPHS), default="path")
    gen.add_argument("--max-degree", type=int, default=3)
    gen.add_argument("--q-vertex", "-q", type=float, default=1.0)
    gen.add_argument("--p-edge", "-p", type=float, default=1.0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", "-o", help="Output file (default stdout)")
    gen.set_defaults(func=cmd_gen)

    col = sub.add_parser("colour", aliases=["color"], help="Colour an instance")
    col.add_argument("input", help="Instance document ('-' for stdin)")
    col.add_argument("--variant", choices=[v.value for v in Variant])
    col.add_argument("--out", "-o", help="Colouring output (default stdout)")
    col.add_argument("--stats", help="Append a RunStats row to this CSV")
    col.add_argument("--seed", type=int, default=0, help="Seed recorded in the stats row")
    col.add_argument("--palette", type=int, help="Override the certified palette size")
    col.add_argument(
        "--unsafe", action="store_true", help="Allow --palette below the certified bound"
    )
    col.set_defaults(func=cmd_colour)

    ver = sub.add_parser("verify", help="Verify a colouring")
    ver.add_argument("instance")
    ver.add_argument("colouring")
    ver.add_argument("--checks", default=",".join(CHECKS))
    ver.set_defaults(func=cmd_verify)

    ora = sub.add_parser("oracle", help="Exact odd chromatic number of a small graph")
    ora.add_argument("input", help="Generic graph or instance document")
    ora.add_argument("--max-colours", type=int, default=8)
    ora.add_argument("--cap", type=int, default=config.oracle_cap)
    ora.add_argument("--workers", type=int, help=f"Worker processes (default {config.workers})")
    ora.set_defaults(func=cmd_oracle)

    bench = sub.add_parser("bench", help="Run the benchmark grid")
    bench.add_argument("--config", help="BenchConfig JSON file; flags override it")
    bench.add_argument("--variants", help="Comma-separated variants")
    bench.add_argument("--t", help="Comma-separated host widths")
    bench.add_argument("--h", help="Comma-separated factor sizes")
    bench.add_argument("--ell", help="Comma-separated clique sizes")
    bench.add_argument("--delta", help="Comma-separated maximum degrees")
    bench.add_argument("--r", type=int)
    bench.add_argument("--q-vertex", type=float)
    bench.add_argument("--p-edge", type=float)
    bench.add_argument("--repetitions", type=int)
    bench.add_argument("--seed-base", type=int)
    bench.add_argument("--output", help="CSV path (default $ODDPROD_OUTPUT_DIR/bench.csv)")
    bench.add_argument("--ladder", help="Comma-separated vertex counts for the scaling ladder")
    bench.add_argument("--ladder-t", type=int)
    bench.add_argument("--workers", type=int, help=f"Worker processes (default {config.workers})")
    bench.add_argument("--no-verify", action="store_true")
    bench.set_defaults(func=cmd_bench)

    ins = sub.add_parser("inspect", help="Show support and risk sets of a vertex")
    ins.add_argument("instance")
    ins.add_argument("--vertex", required=True, help="i,j or i,j,k")
    ins.set_defaults(func=cmd_inspect)

    dot = sub.add_parser("dot", help="Export an instance as GraphViz DOT")
    dot.add_argument("instance")
    dot.add_argument("--colouring")
    dot.add_argument("--out", "-o")
    dot.set_defaults(func=cmd_dot)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse, dispatch and map every failure to its exit code"""
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.INFO if args.verbose else get_config().log_level
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )

    try:
        return args.func(args)
    except CommandFailed as e:
        if str(e):
            logger.warning(str(e))
        return e.code
    except PaletteExhaustedError as e:
        logger.error(f"Internal invariant breach: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except OddProdError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except ValidationError as e:
        print(f"error: [bench.config] {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except (OSError, json.JSONDecodeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except Exception as e:
        logger.exception(f"Unexpected failure: {e}")
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
