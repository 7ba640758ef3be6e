import json
import logging
import sys
from typing import Dict, List, Optional

import click
import yaml

from forge import master
from forge.affine.point_config import InvalidPointConfigError, RationalPointConfig, parse_color_spec, random_config
from forge.complexes.constructions import (
    ChessboardSpec,
    alexander_dual,
    bier_sphere,
    chessboard_complex,
    deleted_join,
    join_all,
    multi_chessboard_complex,
    multipartite_complex,
    simplex,
    simplex_boundary,
    skeleton,
)
from forge.complexes.simplicial_complex import InvalidComplexError, SimplicialComplex
from forge.config import Config, ResourceLimitError
from forge.config_space.coloring import Coloring, InvalidColoringError
from forge.config_space.config_simplex import InvalidLabelError
from forge.config_space.config_space import build_config_space
from forge.data_storage.artifact_store import ArtifactStore
from forge.data_storage.json_codec import (
    CodecError,
    complex_from_json,
    complex_to_json,
    complex_with_action_from_json,
    config_space_from_json,
    config_space_to_json,
    field_from_json,
    load_document,
    params_from_json,
)
from forge.equivariant.action import InvalidActionError, PermAction, cube_model, klein_actions, octahedron_model
from forge.equivariant.search import enumerate_equivariant_maps, reference_composite
from forge.equivariant.simplicial_map import DegreeError, InvalidMapError, degree
from forge.homology.boundary import HomologyInputError
from forge.homology.homology import homology
from forge.homology.pseudomanifold import NotPureError, pseudomanifold_check
from forge.manifest import REFUTED, VERIFIED, ManifestError, RunManifest, render_report
from forge.morse.certificate import CertificateError, connectivity_certificate
from forge.morse.step_matching import step_matching, verify_matching
from forge.morse.vector_field import acyclicity, apex_matching, check_dvf
from forge.params import InvalidParamsError, VerifyParams, balanced_params
from forge.util import canonical_json

logger = logging.getLogger("forge")

EXIT_VERIFIED = 0
EXIT_REFUTED = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_LIMIT = 3
EXIT_INTERNAL_ERROR = 4

# raised on unknown names, missing options and malformed or unreadable documents
INPUT_ERRORS = (
    AttributeError,
    OSError,
    json.JSONDecodeError,
    yaml.YAMLError,
    CodecError,
    ManifestError,
    InvalidParamsError,
    InvalidComplexError,
    InvalidColoringError,
    InvalidLabelError,
    InvalidPointConfigError,
    InvalidActionError,
    InvalidMapError,
    DegreeError,
    HomologyInputError,
    NotPureError,
    CertificateError,
)


def parse_int_list(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"Expected a comma separated list of integers, got '{text}'")


def _load_complex(path: str, manifest: RunManifest) -> SimplicialComplex:
    manifest.add_input(path, ArtifactStore.get_instance().input_hash(path))
    return complex_from_json(load_document(path))


def _with_action(action: PermAction) -> dict:
    return complex_to_json(action.complex, action)


def _model(name: str):
    board, tetrahedron = klein_actions()
    return {
        "board-sphere": board,
        "tetrahedron-boundary": tetrahedron,
        "octahedron": octahedron_model(),
        "cube-sphere": cube_model(),
    }[name]


MODELS = ("board-sphere", "tetrahedron-boundary", "octahedron", "cube-sphere")


def build_complex(kind: str, options: Dict, inputs: List[SimplicialComplex]) -> SimplicialComplex:
    """
    Complex of the given kind; `inputs` are the complexes read from --input files.
    """
    def single_input() -> SimplicialComplex:
        if len(inputs) != 1:
            raise AttributeError(f"Kind '{kind}' needs exactly one --input complex, got {len(inputs)}")
        return inputs[0]

    def required(name: str):
        if options.get(name) is None:
            raise AttributeError(f"Kind '{kind}' needs --{name.replace('_', '-')}")
        return options[name]

    if kind == "multipartite":
        return multipartite_complex(required("sizes"))
    if kind == "chessboard":
        return chessboard_complex(required("rows"), required("cols"))
    if kind == "multichess":
        spec = ChessboardSpec(required("rows"), required("cols"), options.get("row_caps"), options.get("col_caps"))
        return multi_chessboard_complex(spec)
    if kind == "simplex":
        return simplex(range(required("n")))
    if kind == "simplex-boundary":
        return simplex_boundary(range(required("n")))
    if kind == "bier":
        return bier_sphere(single_input())
    if kind == "dual":
        return alexander_dual(single_input())
    if kind == "skeleton":
        return skeleton(single_input(), required("dim"))
    if kind == "deleted-join":
        return deleted_join(single_input(), required("r"))
    if kind == "join":
        if len(inputs) < 2:
            raise AttributeError(f"Kind 'join' needs at least two --input complexes, got {len(inputs)}")
        return join_all(inputs)
    raise AttributeError("Unknown complex kind '%s'" % kind)


def _finish(manifest: RunManifest, as_json: bool = False) -> str:
    store = ArtifactStore.get_instance()
    document = manifest.to_json()
    store.store("manifest", document, store.path_of(f"manifest-{manifest.command}.json"))
    click.echo(render_report(document))
    if as_json:
        click.echo(canonical_json(document), nl=False)
    return manifest.verdict


@click.group()
@click.option("--config", "config_path", default=None, help="YAML configuration file.")
@click.option("--output", "output_folder", default=None, help="Folder for artifacts and manifests.")
def cli(config_path, output_folder):
    master.initialize(config_path)
    ArtifactStore.reset(output_folder if output_folder is not None else Config.output_folder)


@cli.command()
@click.argument("kind")
@click.option("--sizes")
@click.option("--rows", type=int)
@click.option("--cols", type=int)
@click.option("--row-caps")
@click.option("--col-caps")
@click.option("--n", type=int)
@click.option("--dim", type=int)
@click.option("--r", type=int)
@click.option("--input", "input_paths", multiple=True)
@click.option("--out", required=True)
def build(kind, sizes, rows, cols, row_caps, col_caps, n, dim, r, input_paths, out):
    """
    Builds a complex (multipartite, chessboard, multichess, simplex, simplex-boundary, bier,
    dual, skeleton, deleted-join, join) or one of the Klein-symmetric sphere models.
    """
    manifest = RunManifest("build", {"kind": kind, "sizes": sizes, "rows": rows, "cols": cols, "row_caps": row_caps,
                                     "col_caps": col_caps, "n": n, "dim": dim, "r": r})
    if kind in MODELS:
        document = _with_action(_model(kind))
    else:
        # click passes options with multiple=True as a tuple
        inputs = [_load_complex(path, manifest) for path in list(input_paths)]
        options = {"sizes": parse_int_list(sizes), "rows": rows, "cols": cols, "row_caps": parse_int_list(row_caps),
                   "col_caps": parse_int_list(col_caps), "n": n, "dim": dim, "r": r}
        complex_ = build_complex(kind, options, inputs)
        document = complex_to_json(complex_)
        logger.info(f"Built {kind}: {complex_}, f-vector {complex_.f_vector()}")
    manifest.add_artifact("complex", ArtifactStore.get_instance().store("complex", document, out))
    manifest.set_verdict("build", VERIFIED, {"facets": len(document["facets"])})
    return _finish(manifest)


@cli.command("config-space")
@click.option("--r", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--coloring", "coloring_path", default=None, help="JSON file with the color classes.")
@click.option("--out", required=True)
def config_space(r, d, coloring_path, out):
    manifest = RunManifest("config-space", {"r": r, "d": d})
    params = balanced_params(r, d)
    coloring = None
    if coloring_path is not None:
        manifest.add_input(coloring_path, ArtifactStore.get_instance().input_hash(coloring_path))
        coloring = Coloring.from_json(load_document(coloring_path))
    space = build_config_space(params, coloring)
    manifest.add_artifact("config-space", ArtifactStore.get_instance().store("config-space", config_space_to_json(space), out))
    manifest.set_verdict("config-space", VERIFIED, {"faces": len(space), "facets": len(space.complex.facets),
                                                    "dimension": space.complex.dimension})
    return _finish(manifest)


@cli.command()
@click.option("--space", "space_path", default=None, help="Configuration space document; runs the step matching.")
@click.option("--input", "input_path", default=None, help="Complex document; runs the apex matching.")
@click.option("--apex", type=int, default=None)
@click.option("--out", required=True)
def morse(space_path, input_path, apex, out):
    """
    Builds a discrete vector field and checks it: validity, acyclicity and, for the step
    matching, monotonicity along gradient paths.
    """
    manifest = RunManifest("morse", {"apex": apex})
    store = ArtifactStore.get_instance()
    if space_path is not None:
        manifest.add_input(space_path, store.input_hash(space_path))
        result = step_matching(config_space_from_json(load_document(space_path)))
        checks = verify_matching(result)
        document = result.to_json()
        manifest.set_verdict("monotonicity", VERIFIED if not checks["monotonicity"]["violations"] else REFUTED, checks["monotonicity"])
    elif input_path is not None:
        if apex is None:
            raise AttributeError("The apex matching needs --apex")
        complex_ = _load_complex(input_path, manifest)
        field = apex_matching(complex_, apex)
        checks = {"dvf": check_dvf(field).to_json(), "acyclicity": acyclicity(field).to_json()}
        document = field.to_json()
    else:
        raise AttributeError("Pass either --space or --input")
    manifest.set_verdict("dvf", VERIFIED if checks["dvf"]["valid"] else REFUTED, checks["dvf"])
    manifest.set_verdict("acyclicity", VERIFIED if checks["acyclicity"]["acyclic"] else REFUTED, checks["acyclicity"])
    manifest.add_artifact("field", store.store("field", document, out))
    return _finish(manifest)


@cli.command()
@click.option("--space", "space_path", default=None)
@click.option("--input", "input_path", default=None)
@click.option("--field", "field_path", required=True)
@click.option("--out", default=None)
def certify(space_path, input_path, field_path, out):
    """
    Connectivity certificate of an acyclic vector field with a single critical vertex.
    """
    manifest = RunManifest("certify", {})
    store = ArtifactStore.get_instance()
    params = None
    if space_path is not None:
        manifest.add_input(space_path, store.input_hash(space_path))
        data = load_document(space_path)
        params = params_from_json(data["params"])
        complex_ = config_space_from_json(data).complex
    elif input_path is not None:
        complex_ = _load_complex(input_path, manifest)
    else:
        raise AttributeError("Pass either --space or --input")
    manifest.add_input(field_path, store.input_hash(field_path))
    field = field_from_json(load_document(field_path), complex_)
    try:
        certificate = connectivity_certificate(field, params)
    except CertificateError as e:
        logger.warning(f"No certificate: {e}")
        manifest.set_verdict("certificate", REFUTED, {"error": str(e)})
        return _finish(manifest)
    if out is not None:
        manifest.add_artifact("certificate", store.store("certificate", certificate.to_json(), out))
    manifest.set_verdict("certificate", VERIFIED, certificate.to_json())
    return _finish(manifest)


@cli.command("homology")
@click.option("--complex", "--input", "input_path", required=True, help="Complex document.")
@click.option("--mod2", is_flag=True, default=False)
@click.option("--reduced/--unreduced", default=True)
@click.option("--expect-betti", default=None, help="Expected Betti numbers from degree 0, e.g. 0,0,1.")
@click.option("--pseudomanifold", is_flag=True, default=False, help="Also check for a closed orientable pseudomanifold.")
def homology_command(input_path, mod2, reduced, expect_betti, pseudomanifold):
    manifest = RunManifest("homology", {"mod2": mod2, "reduced": reduced, "expect_betti": expect_betti})
    complex_ = _load_complex(input_path, manifest)
    report = homology(complex_, reduced=reduced, mod2=mod2)
    expected = parse_int_list(expect_betti)
    matches = expected is None or report.betti_vector(0) == expected
    manifest.set_verdict("homology", VERIFIED if matches else REFUTED, report.to_json())
    if pseudomanifold:
        try:
            check = pseudomanifold_check(complex_)
            manifest.set_verdict("pseudomanifold", VERIFIED if check.closed_orientable else REFUTED, check.to_json())
        except NotPureError as e:
            manifest.set_verdict("pseudomanifold", REFUTED, {"error": str(e)})
    return _finish(manifest)


@cli.command("equivariant-scan")
@click.option("--k", "--source", "source_path", default=None, help="Source complex document with an embedded action.")
@click.option("--l", "--target", "target_path", default=None, help="Target complex document with an embedded action.")
@click.option("--group", default="klein4")
@click.option("--subdivide", "--level", "levels", type=int, multiple=True, default=(0, 1), help="Subdivision level of the source; repeatable.")
@click.option("--out", default=None)
def equivariant_scan(source_path, target_path, group, levels, out):
    """
    Enumerates the equivariant simplicial maps between two spheres and compares their degrees.
    Without --k and --l the board sphere and ∂Δ_[4] with the Klein action are used.
    """
    levels = sorted(set(levels))
    manifest = RunManifest("equivariant-scan", {"group": group, "levels": levels})
    store = ArtifactStore.get_instance()
    if (source_path is None) != (target_path is None):
        raise AttributeError("Pass both --k and --l, or neither")
    if source_path is None:
        source, target = klein_actions()
    else:
        actions = []
        for path in (source_path, target_path):
            manifest.add_input(path, store.input_hash(path))
            actions.append(complex_with_action_from_json(load_document(path), group)[1])
        source, target = actions

    scans = [enumerate_equivariant_maps(source, target, level) for level in levels]
    document = {"levels": [scan.to_json() for scan in scans]}
    congruent = all(scan.parity_congruent and scan.congruent_mod_gcd for scan in scans)
    all_degrees = {d % 2 for scan in scans for d in scan.degrees if d is not None}
    if len(all_degrees) > 1:
        congruent = False
    if all(scan.empty for scan in scans):
        logger.warning("No equivariant simplicial map at any scanned level; the congruence holds vacuously")
    for scan in scans:
        if scan.empty:
            logger.info(f"Level {scan.level}: no equivariant simplicial map exists")
    manifest.set_verdict("congruence", VERIFIED if congruent else REFUTED)

    if source_path is None:
        iso, composite = reference_composite()
        reference_degree = degree(composite)
        document["reference"] = {"iso": iso.to_json(), "composite": composite.to_json(), "degree": reference_degree}
        manifest.set_verdict("reference-degree", VERIFIED if abs(reference_degree) == 1 else REFUTED, {"degree": reference_degree})
    manifest.details["scan"] = document
    if out is not None:
        manifest.add_artifact("scan", store.store("scan", document, out))
    return _finish(manifest)


@cli.command()
@click.argument("framework_name", metavar="{tverberg|rainbow|seven-point}")
@click.option("--config", "--points", "points_path", required=True, help="Point configuration document.")
@click.option("--r", type=int, default=None)
@click.option("--caps", default=None, help="Per-part size caps, e.g. 3,3,2.")
@click.option("--k", type=int, default=None)
@click.option("--s", type=int, default=None)
@click.option("--reverse", is_flag=True, default=False)
@click.option("--out", default=None)
def verify(framework_name, points_path, r, caps, k, s, reverse, out):
    """
    Searches a partition of a rational point configuration whose convex hulls share a point.
    """
    params = VerifyParams(framework_name)
    if r is not None:
        params.set_r(r)
    if caps is not None:
        params.set_size_caps(parse_int_list(caps))
    if k is not None or s is not None:
        if k is None or s is None:
            raise AttributeError("Dimension caps need both --k and --s")
        params.set_dim_caps(k, s)
    if reverse:
        params.set_reverse()
    manifest = RunManifest("verify", params.to_json())
    store = ArtifactStore.get_instance()
    manifest.add_input(points_path, store.input_hash(points_path))
    config = RationalPointConfig.from_json(load_document(points_path))

    framework = master.get_specific_evaluation_framework(framework_name)
    outcome = framework.evaluate(config, params)
    document = outcome.to_json()
    manifest.set_verdict("search", outcome.verdict, document["search"])
    if outcome.reproducible is False:
        manifest.set_verdict("reproducible", REFUTED)
    if out is not None:
        manifest.add_artifact("outcome", store.store("outcome", document, out))
    return _finish(manifest)


@cli.command("random-config")
@click.option("--seed", type=int, default=None)
@click.option("--n", type=int, default=None)
@click.option("--d", type=int, required=True)
@click.option("--r", type=int, default=2, help="Used by the color presets.")
@click.option("--colors", default=None, help="Preset name or class sizes, e.g. 2,2,2,1.")
@click.option("--out", required=True)
def random_config_command(seed, n, d, r, colors, out):
    seed = seed if seed is not None else Config.seed
    sizes = parse_color_spec(colors, r, d)
    if n is None:
        if sizes is None:
            raise AttributeError("Pass --n or --colors")
        n = sum(sizes)
    manifest = RunManifest("random-config", {"n": n, "d": d, "r": r, "colors": colors}, seed=seed)
    config = random_config(seed, n, d, sizes)
    manifest.add_artifact("points", ArtifactStore.get_instance().store("points", config.to_json(), out))
    manifest.set_verdict("general-position", VERIFIED)
    return _finish(manifest)


@cli.command()
@click.option("--r", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--json", "as_json", is_flag=True, default=False)
def pipeline(r, d, as_json):
    """
    Configuration space, step matching, certificate and homology cross-check for (r, d).
    """
    store = ArtifactStore.get_instance()
    try:
        manifest = master.pipeline_balanced(r, d, store)
    except master.PipelineStageError as e:
        if e.manifest is None:
            raise
        manifest = e.manifest
    return _finish(manifest, as_json)


@cli.command()
@click.argument("manifest_path")
@click.option("--json", "as_json", is_flag=True, default=False)
def report(manifest_path, as_json):
    document = load_document(manifest_path)
    RunManifest.from_json(document)
    click.echo(render_report(document))
    if as_json:
        click.echo(canonical_json(document), nl=False)


def main(argv: List[str] = None) -> int:
    """
    Runs the command line and maps the outcome to an exit code: 0 verified, 1 refuted,
    2 input error, 3 resource limit, 4 internal error.
    """
    try:
        result = cli.main(args=argv, prog_name="forge", standalone_mode=False)
    except ResourceLimitError as e:
        logger.error(str(e))
        click.echo(f"Error: {e}", err=True)
        return EXIT_RESOURCE_LIMIT
    except click.exceptions.Abort:
        return EXIT_REFUTED
    except click.ClickException as e:
        e.show()
        return EXIT_INPUT_ERROR
    except INPUT_ERRORS as e:
        logger.error(f"Input error: {e}", exc_info=True)
        click.echo(f"Error: {e}", err=True)
        return EXIT_INPUT_ERROR
    except Exception as e:
        logger.critical(f"Internal error: {type(e).__name__}: {e}", exc_info=True)
        click.echo(f"Internal error: {type(e).__name__}: {e}", err=True)
        return EXIT_INTERNAL_ERROR
    if isinstance(result, int):
        return result
    if result == REFUTED:
        return EXIT_REFUTED
    return EXIT_VERIFIED


if __name__ == "__main__":
    sys.exit(main())
