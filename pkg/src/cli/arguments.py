import argparse

from src.complexes.degree import DegreeBound
from src.config import settings
from src.homology.compute import parse_dims
from src.utils.errors import InputError


def degree_bound(text):
    try:
        return DegreeBound.parse(text)
    except InputError as e:
        raise argparse.ArgumentTypeError(str(e))


def dim_window(text):
    try:
        return parse_dims(text)
    except InputError as e:
        raise argparse.ArgumentTypeError(str(e))


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _add_graph_source(parser, allow_complex=False):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--family",
        type=str,
        help="Graph family in the mini-language, e.g. cycle:8, doublestar:3,3, multipartite:2,2,3."
    )
    source.add_argument(
        "--graph",
        type=str,
        help="Path to a graph file (.json, or an edge list with an 'n <count>' header)."
    )
    if allow_complex:
        source.add_argument(
            "--complex",
            type=str,
            help="Path to a complex JSON file written by the 'complex' command."
        )


def _add_common(parser, formats=("json", "table"), default_format="json"):
    parser.add_argument(
        "--format",
        choices=list(formats),
        default=default_format,
        help=f"Output format on standard output. Default: {default_format}"
    )
    parser.add_argument(
        "--out",
        type=str,
        help="Write the result to this file instead of standard output."
    )
    parser.add_argument(
        "--budget-faces",
        type=positive_int,
        help="Cap on faces held per dimension for this run (overrides budget file and environment)."
    )
    parser.add_argument(
        "--jobs",
        type=positive_int,
        default=settings.DEFAULT_JOBS,
        help="Worker processes for face enumeration and suite runs. Default: FOREST_JOBS or 1"
    )
    parser.add_argument(
        "-v", "--verbose",
        action="store_true",
        help="Enable verbose logging for debugging."
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="forest-complex",
        description="Forest complexes F_d(G): generation, integral homology and verification of closed forms."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="Generate a graph from a family spec or random seed.")
    gen.add_argument("--family", type=str, required=True, help="Graph family spec, e.g. cactus:7,4,4.")
    gen.add_argument(
        "--seed",
        type=int,
        help="Seed substituted for the first parameter of seeded families (cactus, cycle-cactus, random)."
    )
    _add_common(gen, formats=("json", "edges"))

    complex_cmd = commands.add_parser("complex", help="Build F_d(G) and print its facets.")
    _add_graph_source(complex_cmd)
    complex_cmd.add_argument("--d", type=degree_bound, required=True, help="Degree bound: integer or 'inf'.")
    _add_common(complex_cmd)

    hom = commands.add_parser("hom", help="Reduced integral homology of F_d(G) or of a stored complex.")
    _add_graph_source(hom, allow_complex=True)
    hom.add_argument("--d", type=degree_bound, help="Degree bound: integer or 'inf' (required with a graph).")
    hom.add_argument("--dims", type=dim_window, help="Dimension window lo..hi. Default: all dimensions.")
    hom.add_argument("--cohomology", action="store_true", help="Report reduced cohomology instead.")
    hom.add_argument(
        "--export-matrices",
        type=str,
        metavar="DIR",
        help="Also write every boundary matrix as a triplet file into DIR."
    )
    _add_common(hom)

    verify = commands.add_parser("verify", help="Check catalog closed forms or structural properties.")
    target = verify.add_mutually_exclusive_group()
    target.add_argument(
        "--suite",
        type=str,
        help=f"Suite manifest name or YAML path. Default: {settings.DEFAULT_SUITE}"
    )
    target.add_argument("--property", type=str, help="Structural property id, e.g. skeleton-agree.")
    target.add_argument("--case", type=str, help="Single case 'family:params:dK' checked against --catalog.")
    verify.add_argument("--catalog", type=str, help="Catalog key for --case. Default: the family name.")
    verify.add_argument("--filter", type=str, help="Only run cases whose id contains this text.")
    verify.add_argument("--max-r", type=int, help="Skip cases with a family parameter above R.")
    verify.add_argument("--seed", type=int, default=0, help="Seed for random graphs in property runs. Default: 0")
    verify.add_argument("--family", type=str, help="Run --property on this graph instead of random graphs.")
    verify.add_argument(
        "--d",
        type=degree_bound,
        action="append",
        help="Degree bound(s) for --property runs; repeatable. Default: 0, 1, 2, inf"
    )
    verify.add_argument("--strict", action="store_true", help="Exit 3 when any case is skipped.")
    verify.add_argument("--timings", action="store_true", help="Include wall time in the JSON report.")
    _add_common(verify)

    bench = commands.add_parser("bench", help="Time homology computations.")
    bench.add_argument(
        "--case",
        type=str,
        action="append",
        required=True,
        help="Case 'family:params:dK', e.g. knxkm:3,3:d2; repeatable."
    )
    bench.add_argument("--reps", type=positive_int, default=3, help="Repetitions per case. Default: 3")
    _add_common(bench, default_format="table")

    return parser


def parse_arguments(argv=None):
    return build_parser().parse_args(argv)
