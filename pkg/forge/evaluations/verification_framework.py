import logging
from abc import ABC, abstractmethod
from typing import Optional

from forge.affine.hulls import verify_witness
from forge.affine.point_config import RationalPointConfig
from forge.affine.searches import SearchResult
from forge.params import VerifyParams

VERIFIED = "verified"
REFUTED = "refuted"


class VerificationOutcome:

    def __init__(self, framework: str, result: SearchResult, reverse_result: Optional[SearchResult] = None) -> None:
        self.framework = framework
        self.result = result
        self.reverse_result = reverse_result

    @property
    def verdict(self) -> str:
        return VERIFIED if self.result.found else REFUTED

    @property
    def reproducible(self) -> Optional[bool]:
        """
        Whether the reversed enumeration agrees; None when it was not run.
        """
        if self.reverse_result is None:
            return None
        return self.reverse_result.found == self.result.found

    def to_json(self) -> dict:
        return {
            "framework": self.framework,
            "verdict": self.verdict,
            "search": self.result.to_json(),
            "reversed_search": self.reverse_result.to_json() if self.reverse_result else None,
            "reproducible": self.reproducible,
        }


class VerificationFramework(ABC):
    """
    One kind of affine partition search. Witnesses are re-verified by exact substitution and an
    exhaustion is confirmed by a second enumeration in reversed order.
    """

    name = None

    def __init__(self) -> None:
        self.logger = logging.getLogger("forge")

    def evaluate(self, config: RationalPointConfig, params: VerifyParams) -> VerificationOutcome:
        self.logger.info(f"Starting {self.name} verification on {config} with {params.to_json()}")
        self.check_params(config, params)
        result = self.perform_specific_evaluation(config, params, reverse=params.reverse)
        reverse_result = None
        if result.found:
            verify_witness(config, result.witness)
            self.logger.info(f"Witness re-verified: {result.witness}")
        else:
            self.logger.info(f"No witness among {result.evaluated} candidates, repeating in reversed order")
            reverse_result = self.perform_specific_evaluation(config, params, reverse=not params.reverse)
            if reverse_result.found:
                verify_witness(config, reverse_result.witness)
                self.logger.error("Reversed enumeration found a witness the forward enumeration missed")
        outcome = VerificationOutcome(self.name, result, reverse_result)
        self.logger.info(f"{self.name} verification finished: {outcome.verdict}")
        return outcome

    def check_params(self, config: RationalPointConfig, params: VerifyParams) -> None:
        if params.r is None:
            raise AttributeError(f"The {self.name} framework needs the number of parts r")

    @abstractmethod
    def perform_specific_evaluation(self, config: RationalPointConfig, params: VerifyParams, reverse: bool) -> SearchResult:
        pass
