import logging
import os
from dataclasses import asdict
from pathlib import Path
from typing import Tuple

from src.complexes.complex import SimplicialComplex
from src.complexes.degree import UNBOUNDED, finite
from src.complexes.forest import forest_complex, forest_faces
from src.config import settings
from src.graphs.families import FAMILIES, FamilySpec, generate, parse_family
from src.graphs.graph import Graph, members
from src.homology.boundary import chain_boundaries, export_triplets
from src.homology.compute import reduced_homology, reduced_homology_of_complex
from src.homology.profile import HomologyProfile
from src.verify.bench import bench_case, format_bench_table
from src.verify.cases import summarize
from src.verify.manifest import filter_cases, load_suite
from src.verify.pipeline import VerificationPipeline, exit_code, parse_case, text_report
from src.verify.properties import PropertyId, named_graph_sample, random_graph_sample, run_property
from src.utils.errors import InputError
from src.utils.file_system import dump_json, ensure_dir_exists, read_json, read_text, write_text

logger = logging.getLogger(__name__)

SEEDED_FAMILIES = ("cactus", "cycle-cactus", "random")
PROPERTY_BOUNDS = (finite(0), finite(1), finite(2), UNBOUNDED)


def _emit(args, text: str):
    """Write a result to --out, or to standard output."""
    if args.out:
        write_text(args.out, text)
    else:
        print(text, end="")


def load_graph(args) -> Tuple[str, Graph]:
    if args.family:
        spec = parse_family(args.family)
        return str(spec), generate(spec)
    path = Path(args.graph)
    if path.suffix == ".json":
        graph = Graph.from_json_dict(read_json(str(path)))
    else:
        graph = Graph.from_edge_list_text(read_text(str(path)))
    logger.info(f"Loaded graph from {path}: n={graph.n}, m={graph.edge_count()}")
    return path.name, graph


def seeded_spec(text: str, seed) -> FamilySpec:
    """Apply --seed to a seeded family: it fills a missing first parameter or replaces the given one."""
    spec = parse_family(text)
    if seed is None:
        return spec
    if spec.name not in SEEDED_FAMILIES:
        logger.warning(f"--seed ignored: family '{spec.name}' is not randomized")
        return spec
    rest = spec.params if len(spec.params) < len(FAMILIES[spec.name].minimums) else spec.params[1:]
    return FamilySpec(name=spec.name, params=(seed,) + tuple(rest))


def handle_gen(args) -> int:
    spec = seeded_spec(args.family, args.seed)
    graph = generate(spec)
    logger.info(f"Generated {spec}: n={graph.n}, m={graph.edge_count()}")
    if args.format == "edges":
        _emit(args, f"# {spec}\n" + graph.to_edge_list_text())
        return 0
    data = graph.to_json_dict()
    data["family"] = str(spec)
    if spec.name in SEEDED_FAMILIES:
        data["prng"] = settings.PRNG_NAME
    _emit(args, dump_json(data))
    return 0


def _complex_table(k: SimplicialComplex) -> str:
    lines = [f"ground {k.ground}", f"dimension {k.dimension}", f"f-vector {k.f_vector()}",
             f"facets {len(k.facets)}"]
    lines.extend(" ".join(str(v) for v in members(facet)) for facet in k.facets)
    return "\n".join(lines) + "\n"


def handle_complex(args) -> int:
    label, graph = load_graph(args)
    k = forest_complex(graph, args.d)
    logger.info(f"F_{args.d}({label}): {len(k.facets)} facets, dimension {k.dimension}")
    _emit(args, _complex_table(k) if args.format == "table" else dump_json(k.to_json_dict()))
    return 0


def _profile_table(profile: HomologyProfile, cohomology: bool) -> str:
    symbol = "H^" if cohomology else "H_"
    lines = [f"{symbol}{q} = {profile.group(q)}" for q in profile.dims]
    lines.append(f"reduced euler characteristic {profile.euler()}")
    return "\n".join(lines) + "\n"


def _export_matrices(directory: str, faces):
    ensure_dir_exists(directory)
    for matrix in chain_boundaries(faces):
        write_text(os.path.join(directory, f"d{matrix.q}.txt"), export_triplets(matrix))


def handle_hom(args) -> int:
    if args.complex:
        k = SimplicialComplex.from_json_dict(read_json(args.complex))
        profile = reduced_homology_of_complex(k, args.dims, cohomology=args.cohomology)
        if args.export_matrices and not k.is_void:
            _export_matrices(args.export_matrices, k.faces_by_dim(-1, k.dimension))
    else:
        if args.d is None:
            raise InputError("--d is required when the input is a graph")
        label, graph = load_graph(args)
        if args.cohomology:
            profile = reduced_homology_of_complex(forest_complex(graph, args.d), args.dims, cohomology=True)
        else:
            profile = reduced_homology(graph, args.d, args.dims, jobs=args.jobs)
        logger.info(f"{'Cohomology' if args.cohomology else 'Homology'} of F_{args.d}({label}): {profile.describe()}")
        if args.export_matrices:
            by_size = forest_faces(graph, args.d, range(0, graph.n + 1), jobs=args.jobs)
            _export_matrices(args.export_matrices, {size - 1: fs for size, fs in by_size.items()})
    if args.format == "table":
        _emit(args, _profile_table(profile, args.cohomology))
    else:
        _emit(args, dump_json(profile.to_json_dict()))
    return 0


def _property_reports(args):
    prop = PropertyId.parse(args.property)
    if args.family:
        spec = parse_family(args.family)
        graphs = [(str(spec), generate(spec))]
    else:
        graphs = random_graph_sample(args.seed) + named_graph_sample()
    bounds = args.d or list(PROPERTY_BOUNDS)
    logger.info(f"Property {prop.value}: {len(graphs)} graphs x {len(bounds)} bounds")
    return [run_property(prop, g, d, seed=args.seed, label=label) for label, g in graphs for d in bounds]


def handle_verify(args) -> int:
    header = {}
    if args.property:
        title = f"property {args.property}"
        reports = _property_reports(args)
        header = {"prng": settings.PRNG_NAME, "seed": args.seed}
    else:
        if args.case:
            title = args.case
            cases = [parse_case(args.case, args.catalog)]
        else:
            title = args.suite or settings.DEFAULT_SUITE
            cases = load_suite(title)
        cases = filter_cases(cases, args.filter, args.max_r)
        if not cases:
            logger.warning(f"No cases selected from {title}")
        reports = VerificationPipeline(cases, jobs=args.jobs, title=title).run_analysis()["reports"]

    if args.format == "table":
        _emit(args, text_report(title, reports))
    else:
        data = dict(header, title=title, counts=summarize(reports),
                    reports=[r.to_json_dict(timings=args.timings) for r in reports])
        _emit(args, dump_json(data))
    return exit_code(reports, strict=args.strict)


def handle_bench(args) -> int:
    rows = [bench_case(case, args.reps) for case in args.case]
    if args.format == "table":
        _emit(args, format_bench_table(rows))
    else:
        _emit(args, dump_json([asdict(row) for row in rows]))
    return 0


HANDLERS = {
    "gen": handle_gen,
    "complex": handle_complex,
    "hom": handle_hom,
    "verify": handle_verify,
    "bench": handle_bench,
}


def execute(args) -> int:
    """Run one parsed command and return its exit code; input and budget errors propagate."""
    if getattr(args, "budget_faces", None):
        settings.override_budget(max_faces_per_dim=args.budget_faces)
    return HANDLERS[args.command](args)
