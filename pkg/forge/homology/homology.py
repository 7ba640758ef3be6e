import logging
from typing import Dict, List

from forge.complexes.simplicial_complex import SimplicialComplex
from forge.config import Config
from forge.homology.boundary import boundary_matrix
from forge.homology.smith import rank_mod2, smith_normal_form

logger = logging.getLogger("forge")


class HomologyReport:

    def __init__(self, reduced: bool, mod2: bool, betti: Dict[int, int], torsion: Dict[int, List[int]], face_counts: Dict[int, int]) -> None:
        self.reduced = reduced
        self.mod2 = mod2
        self.betti = betti
        self.torsion = torsion
        self.face_counts = face_counts

    def betti_vector(self, start: int = 0) -> List[int]:
        return [self.betti[p] for p in sorted(self.betti) if p >= start]

    @property
    def torsion_free(self) -> bool:
        return not any(self.torsion.values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** p * self.betti[p] for p in self.betti if p >= 0) - self.betti.get(-1, 0)

    def vanishes_below(self, degree: int) -> bool:
        return all(self.betti[p] == 0 and not self.torsion.get(p) for p in self.betti if p < degree)

    def to_json(self) -> dict:
        return {
            "reduced": self.reduced,
            "coefficients": "Z/2" if self.mod2 else "Z",
            "betti": {str(p): self.betti[p] for p in sorted(self.betti)},
            "torsion": {str(p): self.torsion[p] for p in sorted(self.torsion) if self.torsion[p]},
            "face_counts": {str(p): self.face_counts[p] for p in sorted(self.face_counts)},
        }

    def __repr__(self) -> str:
        return f"HomologyReport(betti={self.betti}, torsion={self.torsion}, reduced={self.reduced})"


def homology(complex_: SimplicialComplex, reduced: bool = True, mod2: bool = False) -> HomologyReport:
    """
    Simplicial homology with integer coefficients, or over Z/2 when mod2 is set.
    Reduced homology adds the empty face in degree -1.
    """
    if complex_.is_void:
        return HomologyReport(reduced, mod2, {}, {}, {})

    lowest = -1 if reduced else 0
    top = complex_.dimension
    face_counts = {p: len(complex_.faces_of_dim(p)) for p in range(lowest, top + 1)}
    if not mod2:
        for p, count in face_counts.items():
            Config.check_limit("max_faces_exact", count)

    ranks = {p: 0 for p in range(lowest, top + 2)}
    divisors = {p: [] for p in range(lowest, top + 2)}
    for p in range(lowest + 1, top + 1):
        matrix = boundary_matrix(complex_, p, augmented=reduced)
        if mod2:
            ranks[p] = rank_mod2(matrix)
        else:
            divisors[p] = smith_normal_form(matrix)
            ranks[p] = len(divisors[p])
        logger.debug(f"Boundary in degree {p} has shape {matrix.shape} and rank {ranks[p]}")

    betti = {}
    torsion = {}
    for p in range(lowest, top + 1):
        betti[p] = face_counts[p] - ranks[p] - ranks[p + 1]
        torsion[p] = [d for d in divisors[p + 1] if d > 1]
    return HomologyReport(reduced, mod2, betti, torsion, face_counts)
