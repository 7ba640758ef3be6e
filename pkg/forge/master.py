import logging

from forge.config import Config
from forge.config_space.config_space import build_config_space
from forge.data_storage.artifact_store import ArtifactStore
from forge.data_storage.json_codec import config_space_to_json
from forge.evaluations.rainbow.rainbow_evaluation import RainbowVerificationFramework
from forge.evaluations.seven_point.seven_point_evaluation import SevenPointVerificationFramework
from forge.evaluations.tverberg.tverberg_evaluation import TverbergVerificationFramework
from forge.evaluations.verification_framework import VerificationFramework
from forge.homology.homology import homology
from forge.manifest import REFUTED, VERIFIED, RunManifest
from forge.morse.certificate import CertificateError, connectivity_certificate
from forge.morse.step_matching import MatchingAssertionError, pi_monotonicity, step_matching
from forge.morse.vector_field import acyclicity, check_dvf
from forge.params import balanced_params

logger = logging.getLogger("forge")

available_evaluation_frameworks = {}


class PipelineStageError(Exception):

    def __init__(self, stage: str, detail: str, manifest: RunManifest = None) -> None:
        super().__init__(f"Stage '{stage}' failed: {detail}")
        self.stage = stage
        self.detail = detail
        self.manifest = manifest


def initialize(config_path: str = None):
    Config.load_config(config_path)
    Config.configure_loggers()
    initialize_available_evaluation_frameworks()
    logger.debug("Master initialized")


def initialize_available_evaluation_frameworks():
    available_evaluation_frameworks["tverberg"] = TverbergVerificationFramework()
    available_evaluation_frameworks["rainbow"] = RainbowVerificationFramework()
    available_evaluation_frameworks["seven-point"] = SevenPointVerificationFramework()


def get_specific_evaluation_framework(framework_name: str) -> VerificationFramework:
    if not available_evaluation_frameworks:
        initialize_available_evaluation_frameworks()
    if framework_name not in available_evaluation_frameworks:
        raise AttributeError("Could not find a framework for '%s'" % framework_name)
    return available_evaluation_frameworks[framework_name]


def _fail(manifest: RunManifest, stage: str, detail: str, details: dict = None):
    manifest.set_verdict(stage, REFUTED, details)
    logger.error(f"Pipeline stage '{stage}' failed: {detail}")
    raise PipelineStageError(stage, detail, manifest)


def pipeline_balanced(r: int, d: int, store: ArtifactStore = None) -> RunManifest:
    """
    Builds the configuration space for (r, d), runs the step matching and certifies the
    connectivity, cross-checking against integer homology. Every stage records a verdict;
    the first failing stage raises PipelineStageError carrying the partial manifest.
    """
    manifest = RunManifest("pipeline", {"r": r, "d": d})
    params = balanced_params(r, d)
    manifest.set_verdict("params", VERIFIED, params.to_json())
    logger.info(f"Pipeline for {params}")

    space = build_config_space(params)
    manifest.set_verdict("config-space", VERIFIED, {"faces": len(space), "facets": len(space.complex.facets)})
    if store is not None:
        manifest.add_artifact("config-space", store.store("config-space", config_space_to_json(space), f"{store.folder}/config_space_r{r}_d{d}.json"))

    try:
        result = step_matching(space)
    except MatchingAssertionError as e:
        _fail(manifest, "matching", str(e))
    manifest.set_verdict("matching", VERIFIED, {"pairs": len(result.label_pairs), "critical": len(result.critical_labels())})
    if store is not None:
        manifest.add_artifact("matching", store.store("matching", result.to_json(), f"{store.folder}/matching_r{r}_d{d}.json"))

    dvf = check_dvf(result.field)
    if not dvf.valid:
        _fail(manifest, "dvf", dvf.violations[0].message, dvf.to_json())
    manifest.set_verdict("dvf", VERIFIED)

    report = acyclicity(result.field)
    if not report.acyclic:
        _fail(manifest, "acyclicity", report.witness_cycle.render(), report.to_json())
    manifest.set_verdict("acyclicity", VERIFIED, report.to_json())

    monotonicity = pi_monotonicity(result)
    if not monotonicity.monotone:
        _fail(manifest, "monotonicity", f"{len(monotonicity.violations)} segments do not decrease", monotonicity.to_json())
    manifest.set_verdict("monotonicity", VERIFIED, monotonicity.to_json())

    try:
        certificate = connectivity_certificate(result.field, params)
    except CertificateError as e:
        _fail(manifest, "certificate", str(e))
    if certificate.n != params.top_dimension:
        _fail(manifest, "certificate", f"Critical cells below the top dimension {params.top_dimension}", certificate.to_json())
    manifest.set_verdict("certificate", VERIFIED, certificate.to_json())

    reduced = homology(space.complex)
    top = params.top_dimension
    top_critical = certificate.critical_by_dimension.get(top, 0)
    if not reduced.vanishes_below(top):
        _fail(manifest, "homology", f"Reduced homology does not vanish below degree {top}", reduced.to_json())
    if reduced.betti.get(top, 0) != top_critical:
        _fail(manifest, "homology", f"Top Betti number {reduced.betti.get(top, 0)} differs from {top_critical} critical top cells", reduced.to_json())
    if not reduced.torsion_free:
        _fail(manifest, "homology", "Homology has torsion", reduced.to_json())
    manifest.set_verdict("homology", VERIFIED, reduced.to_json())

    logger.info(f"Pipeline verified: {params} is {certificate.connectivity}-connected with {top_critical} critical top cells")
    return manifest
