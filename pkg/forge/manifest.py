from typing import Dict, List, Optional

SCHEMA_VERSION = 1

VERIFIED = "verified"
REFUTED = "refuted"


class ManifestError(ValueError):
    pass


class RunManifest:
    """
    Record of one command run: what was asked, what was read, what was written and the verdicts.
    It holds no timestamps, so equal runs give equal manifests.
    """

    def __init__(self, command: str, parameters: dict, seed: Optional[int] = None) -> None:
        self.command = command
        self.parameters = parameters
        self.seed = seed
        self.input_hashes: Dict[str, str] = {}
        self.artifacts: Dict[str, str] = {}
        self.verdicts: Dict[str, str] = {}
        self.details: Dict[str, dict] = {}

    def add_input(self, path: str, digest: str) -> None:
        self.input_hashes[path] = digest

    def add_artifact(self, name: str, path: str) -> None:
        self.artifacts[name] = path

    def set_verdict(self, stage: str, verdict: str, details: dict = None) -> None:
        self.verdicts[stage] = verdict
        if details is not None:
            self.details[stage] = details

    @property
    def verdict(self) -> str:
        if self.verdicts and all(v == VERIFIED for v in self.verdicts.values()):
            return VERIFIED
        return REFUTED

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "seed": self.seed,
            "input_hashes": self.input_hashes,
            "artifacts": self.artifacts,
            "verdicts": self.verdicts,
            "verdict": self.verdict,
            "details": self.details,
        }

    @classmethod
    def from_json(cls, data: dict) -> "RunManifest":
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ManifestError(f"Unsupported manifest schema version {data.get('schema_version')}")
        if "command" not in data:
            raise ManifestError("Manifest misses field 'command'")
        manifest = cls(data["command"], data.get("parameters", {}), data.get("seed"))
        manifest.input_hashes = dict(data.get("input_hashes", {}))
        manifest.artifacts = dict(data.get("artifacts", {}))
        manifest.verdicts = dict(data.get("verdicts", {}))
        manifest.details = dict(data.get("details", {}))
        return manifest


def _render_certificate(certificate: dict, top_betti: Optional[int]) -> List[str]:
    lines = []
    counts = certificate.get("critical_by_dimension", {})
    rendered = ", ".join(f"{count} in dimension {dim}" for dim, count in sorted(counts.items(), key=lambda item: int(item[0])))
    lines.append(f"Critical cells: {rendered}")
    if certificate.get("N") is None:
        lines.append("Only the base vertex is critical: the complex is collapsible")
    else:
        lines.append(f"Certified connectivity: {certificate['connectivity']} (N = {certificate['N']})")
    others = {int(dim): count for dim, count in counts.items() if int(dim) > 0}
    if certificate.get("wedge_of_spheres") and len(others) == 1 and top_betti is not None:
        (count,) = others.values()
        if count == top_betti:
            lines.append(f"perfect matching: {count} critical top cells, one per generator of top homology")
    return lines


def _render_witness(witness: dict) -> List[str]:
    lines = [f"Common point: ({', '.join(witness['point'])})"]
    width = max(len(str(part)) for part in witness["parts"])
    lines.append(f"  {'part'.ljust(4)}  {'points'.ljust(width)}  weights")
    for i, (part, weights) in enumerate(zip(witness["parts"], witness["weights"]), start=1):
        lines.append(f"  S{str(i).ljust(3)}  {str(part).ljust(width)}  {', '.join(weights)}")
    return lines


def _render_cycle(cycle: List[List[int]]) -> str:
    parts = [str(cycle[0])]
    for index, face in enumerate(cycle[1:]):
        parts.append(f"{'↗' if index % 2 == 0 else '↘'} {face}")
    return " ".join(parts)


def render_report(manifest: dict) -> str:
    """
    Human readable summary of a manifest.
    """
    lines = [f"{manifest['command']}: {manifest['verdict']}"]
    parameters = manifest.get("parameters") or {}
    if parameters:
        lines.append("Parameters: " + ", ".join(f"{key}={parameters[key]}" for key in sorted(parameters)))
    if manifest.get("seed") is not None:
        lines.append(f"Seed: {manifest['seed']}")
    for stage in sorted(manifest.get("verdicts", {})):
        lines.append(f"  [{manifest['verdicts'][stage]}] {stage}")
    details = manifest.get("details", {})

    acyclicity = details.get("acyclicity")
    if acyclicity and not acyclicity.get("acyclic") and acyclicity.get("witness_cycle"):
        lines.append("Closed gradient path: " + _render_cycle(acyclicity["witness_cycle"]))
    homology = details.get("homology")
    top_betti = None
    if homology:
        betti = homology.get("betti", {})
        if betti:
            top_betti = betti[max(betti, key=int)]
        lines.append("Reduced Betti numbers: " + ", ".join(f"b{p}={betti[p]}" for p in sorted(betti, key=int)))
    certificate = details.get("certificate")
    if certificate:
        lines.extend(_render_certificate(certificate, top_betti))
    search = details.get("search")
    if search:
        if search.get("witness"):
            lines.extend(_render_witness(search["witness"]))
        else:
            lines.append(f"No witness among {search.get('evaluated')} candidates")
    scan = details.get("scan")
    if scan:
        for level in scan.get("levels", []):
            degrees = sorted({m["degree"] for m in level["maps"] if m["degree"] is not None})
            lines.append(f"Level {level['level']}: {len(level['maps'])} equivariant maps, degrees {degrees}")
            if level["empty"]:
                lines.append(f"Level {level['level']}: no equivariant simplicial map exists")
    for artifact in sorted(manifest.get("artifacts", {})):
        lines.append(f"Artifact {artifact}: {manifest['artifacts'][artifact]}")
    return "\n".join(lines)
