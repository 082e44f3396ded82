"""
Main entry point for mapper-signatures.

Every verb reads its inputs, runs one library pipeline and writes JSON (or
DOT/SVG where asked) to stdout or to the given files. Logs go to stderr.
"""
import argparse
import json
import logging
import sys
from typing import Any, List, Optional


class ColoredFormatter(logging.Formatter):
    """Custom formatter that adds colors to log messages based on log level."""

    # ANSI color codes
    COLORS = {
        'DEBUG': '\033[36m',      # Cyan
        'INFO': '\033[32m',       # Green
        'WARNING': '\033[33m',    # Yellow
        'ERROR': '\033[31m',      # Red
        'CRITICAL': '\033[35m',   # Magenta
        'RESET': '\033[0m'        # Reset
    }

    def format(self, record):
        """Format log record with colors."""
        color = self.COLORS.get(record.levelname, self.COLORS['RESET'])
        reset = self.COLORS['RESET']

        original_levelname = record.levelname
        record.levelname = f"{color}{record.levelname}{reset}"
        formatted_message = super().format(record)
        record.levelname = original_levelname

        return formatted_message


from lib.checks import CHECKS, run_checks  # noqa: E402
from lib.complex import extended_persistence  # noqa: E402
from lib.config import get_project_config, get_settings  # noqa: E402
from lib.covers import build_staircases, uniform_cover  # noqa: E402
from lib.diagram import describe_features  # noqa: E402
from lib.errors import MapperSignatureError, ParseError  # noqa: E402
from lib.io import (multigraph_to_dot, read_complex, read_cover,  # noqa: E402
                    read_diagram, read_multigraph, read_point_cloud,
                    read_telescope, render_diagram_svg, to_json, write_text)
from lib.mapper import (inclusion_check, mapper_continuous,  # noqa: E402
                        mapper_discrete, rips_graph)
from lib.reeb import quotient_diagram, reeb_graph  # noqa: E402
from lib.signature import (approximate_signature, bottleneck_distance,  # noqa: E402
                           complex_signature, convergence_sweep,
                           cover_discrepancy, graph_signature,
                           mapper_distance_report, max_staircase_hausdorff)
from lib.telescope import (canonicalize, fork_classify, merge_op,  # noqa: E402
                           multinerve_of_telescope, shift_op, split_op,
                           telescope_to_graph)
from lib.utils.logging_config import (configure_module_loggers,  # noqa: E402
                                      log_system_info,
                                      setup_application_logging)

logger = logging.getLogger(__name__)


def configure_logging(debug_mode: bool = False) -> None:
    """Install the colored console handler and module levels."""
    settings = get_settings()
    level = "DEBUG" if debug_mode or settings.debug_mode else settings.log_level
    setup_application_logging(
        log_level=level,
        log_dir=settings.log_dir,
        enable_file_logging=settings.enable_file_logging,
        console_formatter=ColoredFormatter(
            fmt='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'))
    configure_module_loggers(debug_mode or settings.debug_mode)
    if debug_mode:
        log_system_info(logger)
        logger.info("🐛 DEBUG mode enabled - detailed logging active")


def _emit(payload: Any, path: Optional[str] = None):
    write_text(to_json(payload), path)


def _emit_graph(graph, args):
    """Multigraph as JSON on --out (stdout by default), and as DOT on --dot."""
    if args.dot:
        write_text(multigraph_to_dot(graph), args.dot)
    _emit(graph.to_dict(), args.out)


def _plot(diagram, cover, path: Optional[str]):
    if path:
        write_text(render_diagram_svg(diagram, cover), path)


# Verb handlers

def cmd_cover(args) -> int:
    defaults = get_project_config().defaults
    if args.uniform:
        lo, hi = args.uniform
        cover = uniform_cover(lo, hi, args.intervals or defaults.intervals,
                              args.overlap or defaults.overlap_fraction)
    else:
        cover = read_cover(args.cover)
    _emit({
        "intervals": cover.to_list(),
        "granularity": cover.granularity(),
        "regions": [{"kind": r.kind, "interval": r.interval.to_list(),
                     "closed": [r.interval.lo_closed, r.interval.hi_closed],
                     "owners": list(r.owners)} for r in cover.regions()],
        "staircases": {kind.value: stair.to_dict() for kind, stair in build_staircases(cover).items()},
    }, args.out)
    return 0


def cmd_persistence(args) -> int:
    complex_, function = read_complex(args.complex)
    if args.negate:
        function = function.negated()
    diagram = extended_persistence(complex_, function, perturb=get_settings().perturb_ties)
    if args.quotient:
        diagram = diagram.quotient_part()
    _plot(diagram, read_cover(args.cover) if args.cover else None, args.plot)
    _emit(diagram.to_list(), args.out)
    return 0


def cmd_reeb(args) -> int:
    if args.complex:
        complex_, function = read_complex(args.complex)
        graph = reeb_graph(complex_, function, perturb=get_settings().perturb_ties)
    else:
        graph = read_multigraph(args.graph)
    if args.diagram:
        _emit(quotient_diagram(graph).to_list(), args.diagram)
    _emit_graph(graph, args)
    return 0


def cmd_mapper(args) -> int:
    defaults = get_project_config().defaults
    cover = read_cover(args.cover)
    variant = args.variant or defaults.variant

    if args.cloud:
        cloud = read_point_cloud(args.cloud)
        delta = defaults.delta if args.delta is None else args.delta
        graph = rips_graph(cloud, delta)
        if args.inclusion:
            report = inclusion_check(graph, cloud.values, cover)
            _emit(report.to_dict(), args.out)
            return 0 if report.passed else 1
        result = mapper_discrete(graph, cloud.values, cover,
                                 args.connectivity or defaults.connectivity, variant)
    elif args.complex:
        complex_, function = read_complex(args.complex)
        result = mapper_continuous(complex_, function, cover, variant)
    else:
        result = multinerve_of_telescope(read_telescope(args.telescope), cover, variant)

    logger.info(f"✅ Mapper ({variant}): {result.summary()}")
    _emit_graph(result, args)
    return 0


def _input_graph(args):
    if args.graph:
        return read_multigraph(args.graph)
    if args.telescope:
        return telescope_to_graph(read_telescope(args.telescope))
    return None


def cmd_signature(args) -> int:
    defaults = get_project_config().defaults
    variant = args.variant or defaults.variant

    if args.sweep:
        graph = _input_graph(args)
        if graph is None:
            raise ParseError("--sweep needs a --graph or --telescope input")
        ns = [int(n) for n in args.sweep.split(",")]
        _emit(convergence_sweep(graph, ns, args.overlap or defaults.overlap_fraction,
                                args.padding), args.out)
        return 0

    if not args.cover:
        raise ParseError("signature needs --cover (or --sweep)")
    cover = read_cover(args.cover)
    if args.cloud:
        delta = defaults.delta if args.delta is None else args.delta
        signature = approximate_signature(read_point_cloud(args.cloud), delta, cover, variant)
    elif args.complex:
        complex_, function = read_complex(args.complex)
        signature = complex_signature(complex_, function, cover, variant)
    else:
        signature = graph_signature(_input_graph(args), cover, variant)

    _plot(signature, cover, args.plot)
    _emit(describe_features(signature) if args.features else signature.to_list(), args.out)
    return 0


def cmd_distance(args) -> int:
    defaults = get_project_config().defaults
    variant = args.variant or defaults.variant
    diagrams = [read_diagram(path) for path in args.sig]
    cover = read_cover(args.cover)

    if args.against_cover:
        other = read_cover(args.against_cover)
        _emit({
            "discrepancy": cover_discrepancy(diagrams[0], cover, other, variant),
            "hausdorff": max_staircase_hausdorff(cover, other, variant),
        }, args.out)
        return 0

    if len(diagrams) != 2:
        raise ParseError(f"distance needs exactly two --sig files, got {len(diagrams)}")
    report = mapper_distance_report(diagrams[0], diagrams[1], cover, variant)
    payload = report.to_dict()
    if args.classic:
        payload["bottleneck"] = bottleneck_distance(diagrams[0], diagrams[1])
    _emit(payload, args.out)
    return 0


def cmd_telescope(args) -> int:
    telescope = read_telescope(args.input)
    for a, b in args.merge or []:
        telescope = merge_op(telescope, a, b)
    for a_i, eps in args.split or []:
        telescope = split_op(telescope, a_i, eps)
    for a_i, eps in args.shift or []:
        telescope = shift_op(telescope, a_i, eps)

    cover = read_cover(args.cover) if args.cover else None
    if args.canonicalize or args.multinerve:
        if cover is None:
            raise ParseError("--canonicalize and --multinerve need --cover")
    if args.multinerve:
        graph = multinerve_of_telescope(telescope, cover)
        write_text(multigraph_to_dot(graph) if args.emit_graph else to_json(graph.to_dict()), args.out)
        return 0
    if args.canonicalize:
        telescope = canonicalize(telescope, cover)

    if args.forks:
        _emit([{"value": a, "forks": sorted(fork_classify(telescope, a))} for a in telescope.crit],
              args.out)
    elif args.emit_graph:
        write_text(multigraph_to_dot(telescope_to_graph(telescope)), args.out)
    else:
        _emit(telescope.to_dict(), args.out)
    return 0


def cmd_check(args) -> int:
    if args.cloud:
        if not args.cover:
            raise ParseError("check --cloud needs --cover")
        cloud = read_point_cloud(args.cloud)
        delta = get_project_config().defaults.delta if args.delta is None else args.delta
        report = inclusion_check(rips_graph(cloud, delta), cloud.values, read_cover(args.cover))
    else:
        report = run_checks(args.only, args.seed, args.trials)
    _emit(report.to_dict(), args.out)
    if report.passed:
        logger.info("✅ All checks passed")
        return 0
    logger.error("❌ Some checks failed")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mapper-signatures",
        description="Mapper, MultiNerve Mapper and their extended persistence signatures")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    verbs = parser.add_subparsers(dest="verb", required=True)

    def common(sub, plot: bool = False):
        sub.add_argument("--out", help="Output file (stdout by default)")
        if plot:
            sub.add_argument("--plot", help="Write an SVG plot of the diagram here")

    def variant_flags(sub):
        sub.add_argument("--variant", choices=["mapper", "multinerve"])
        sub.add_argument("--mapper", dest="variant", action="store_const", const="mapper")
        sub.add_argument("--multinerve", dest="variant", action="store_const", const="multinerve")

    sub = verbs.add_parser("cover", help="Validate a cover and show its regions and staircases")
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument("--cover", help="Cover JSON file")
    source.add_argument("--uniform", nargs=2, type=float, metavar=("LO", "HI"),
                        help="Build a uniform cover of (LO, HI)")
    sub.add_argument("--intervals", type=int)
    sub.add_argument("--overlap", type=float)
    common(sub)
    sub.set_defaults(handler=cmd_cover)

    sub = verbs.add_parser("persistence", help="Extended persistence diagram of a PL function")
    sub.add_argument("--complex", required=True)
    sub.add_argument("--negate", action="store_true", help="Use -f instead of f")
    sub.add_argument("--quotient", action="store_true", help="Keep only the quotient-map part")
    sub.add_argument("--cover", help="Cover whose staircases are drawn on the plot")
    common(sub, plot=True)
    sub.set_defaults(handler=cmd_persistence)

    sub = verbs.add_parser("reeb", help="Reeb graph of a PL function")
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument("--complex")
    source.add_argument("--graph", help="Leveled multigraph JSON (diagram only)")
    sub.add_argument("--dot", help="Also write DOT here")
    sub.add_argument("--diagram", help="Write the quotient diagram JSON here")
    common(sub)
    sub.set_defaults(handler=cmd_reeb)

    sub = verbs.add_parser("mapper", help="Mapper or MultiNerve Mapper")
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument("--cloud", help="Point cloud CSV or JSON")
    source.add_argument("--complex")
    source.add_argument("--telescope")
    sub.add_argument("--cover", required=True)
    sub.add_argument("--delta", type=float)
    sub.add_argument("--connectivity", choices=["vertex", "edge"])
    sub.add_argument("--inclusion", action="store_true",
                     help="Emit the inclusion report of all constructions instead")
    sub.add_argument("--dot", help="Also write DOT here")
    variant_flags(sub)
    common(sub)
    sub.set_defaults(handler=cmd_mapper)

    sub = verbs.add_parser("signature", help="Mapper signature (pruned quotient diagram)")
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument("--cloud")
    source.add_argument("--complex")
    source.add_argument("--graph")
    source.add_argument("--telescope")
    sub.add_argument("--cover")
    sub.add_argument("--delta", type=float)
    sub.add_argument("--features", action="store_true", help="Emit the feature list")
    sub.add_argument("--sweep", help="Comma-separated interval counts for a convergence sweep")
    sub.add_argument("--overlap", type=float)
    sub.add_argument("--padding", type=float, default=0.5)
    variant_flags(sub)
    common(sub, plot=True)
    sub.set_defaults(handler=cmd_signature)

    sub = verbs.add_parser("distance", help="Signature distance or cover discrepancy")
    sub.add_argument("--sig", action="append", required=True, help="Diagram JSON (give twice)")
    sub.add_argument("--cover", required=True)
    sub.add_argument("--against-cover", help="Second cover: emit the discrepancy instead")
    sub.add_argument("--classic", action="store_true", help="Add the classic bottleneck distance")
    variant_flags(sub)
    common(sub)
    sub.set_defaults(handler=cmd_distance)

    sub = verbs.add_parser("telescope", help="Telescope operations and canonical form")
    sub.add_argument("--in", dest="input", required=True)
    sub.add_argument("--cover")
    sub.add_argument("--merge", nargs=2, type=float, action="append", metavar=("A", "B"))
    sub.add_argument("--split", nargs=2, type=float, action="append", metavar=("A", "EPS"))
    sub.add_argument("--shift", nargs=2, type=float, action="append", metavar=("A", "EPS"))
    sub.add_argument("--canonicalize", action="store_true")
    sub.add_argument("--multinerve", action="store_true", help="Emit the MultiNerve Mapper")
    sub.add_argument("--forks", action="store_true", help="Emit the fork type of each value")
    sub.add_argument("--emit-graph", action="store_true", help="Emit DOT instead of JSON")
    common(sub)
    sub.set_defaults(handler=cmd_telescope)

    sub = verbs.add_parser("check", help="Run verification sweeps")
    sub.add_argument("--only", nargs="+", choices=sorted(CHECKS))
    sub.add_argument("--seed", type=int)
    sub.add_argument("--trials", type=int, help="Override every sweep size")
    sub.add_argument("--cloud", help="Check the inclusions on one point cloud instead")
    sub.add_argument("--cover")
    sub.add_argument("--delta", type=float)
    common(sub)
    sub.set_defaults(handler=cmd_check)

    return parser


def _report_error(error: MapperSignatureError):
    print(json.dumps({"error": error.to_dict()}, sort_keys=True), file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one verb and return the process exit code."""
    args = build_parser().parse_args(argv)
    configure_logging(args.debug)
    try:
        return args.handler(args)
    except ParseError as e:
        logger.error(f"❌ {e}")
        _report_error(e)
        return 2
    except MapperSignatureError as e:
        logger.error(f"❌ {e}")
        _report_error(e)
        return 1
    except KeyboardInterrupt:
        logger.info("👋 Interrupted")
        return 130


if __name__ == "__main__":
    sys.exit(main())
