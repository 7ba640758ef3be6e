import logging
from typing import Dict, List, Optional

from forge.complexes.simplicial_complex import Face
from forge.morse.vector_field import DiscreteVectorField, acyclicity, check_dvf
from forge.params import BalancedParams

logger = logging.getLogger("forge")


class CertificateError(ValueError):
    pass


class ConnectivityCertificate:
    """
    Connectivity read off an acyclic matching with a single critical vertex: the complex is
    (N-1)-connected where N is the least dimension of the remaining critical cells.
    N is None when there are no other critical cells (the complex is collapsible).
    """

    def __init__(self, base_point: Face, critical: List[Face], n: Optional[int], target: Optional[int] = None) -> None:
        self.base_point = base_point
        self.critical = critical
        self.n = n
        self.target = target

    @property
    def connectivity(self) -> Optional[int]:
        return None if self.n is None else self.n - 1

    @property
    def wedge_of_spheres(self) -> bool:
        others = [face for face in self.critical if face != self.base_point]
        return self.n is not None and all(len(face) - 1 == self.n for face in others)

    @property
    def critical_by_dimension(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for face in self.critical:
            counts[len(face) - 1] = counts.get(len(face) - 1, 0) + 1
        return dict(sorted(counts.items()))

    @property
    def meets_target(self) -> Optional[bool]:
        if self.target is None:
            return None
        return self.n is None or self.n - 1 >= self.target

    def to_json(self) -> dict:
        return {
            "N": self.n,
            "connectivity": self.connectivity,
            "contractible": self.n is None,
            "wedge_of_spheres": self.wedge_of_spheres,
            "base_point": sorted(self.base_point),
            "critical_by_dimension": {str(d): c for d, c in self.critical_by_dimension.items()},
            "critical": [sorted(face) for face in self.critical],
            "target_connectivity": self.target,
            "meets_target": self.meets_target,
        }


def connectivity_certificate(field: DiscreteVectorField, params: BalancedParams = None) -> ConnectivityCertificate:
    dvf = check_dvf(field)
    if not dvf.valid:
        raise CertificateError(f"Invalid vector field: {dvf.violations[0].message}")
    report = acyclicity(field)
    if not report.acyclic:
        raise CertificateError(f"The vector field has a closed path: {report.witness_cycle.render()}")

    critical = field.critical_cells()
    vertices = [face for face in critical if len(face) == 1]
    if len(vertices) != 1:
        raise CertificateError(f"Expected exactly one critical vertex, found {len(vertices)}")
    others = [face for face in critical if len(face) > 1]
    n = min(len(face) - 1 for face in others) if others else None
    target = params.target_connectivity if params is not None else None
    certificate = ConnectivityCertificate(vertices[0], critical, n, target)
    if target is not None and not certificate.meets_target:
        raise CertificateError(f"Certified connectivity {certificate.connectivity} is below the target {target}")
    logger.info(f"Connectivity certificate: N = {n}, critical cells {certificate.critical_by_dimension}")
    return certificate
