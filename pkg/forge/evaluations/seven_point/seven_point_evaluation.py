from forge.affine.point_config import RationalPointConfig
from forge.affine.searches import SearchResult, seven_point_search
from forge.evaluations.verification_framework import VerificationFramework
from forge.params import VerifyParams


class SevenPointVerificationFramework(VerificationFramework):
    """
    Four rainbow sets on A, B, C pairs and a singleton D; r is fixed to 4.
    """

    name = "seven-point"

    def check_params(self, config: RationalPointConfig, params: VerifyParams) -> None:
        if params.r not in (None, 4):
            raise AttributeError(f"The seven-point framework uses four parts, got r = {params.r}")
        if len(config) != 7:
            raise AttributeError(f"The seven-point framework needs 7 points, got {len(config)}")

    def perform_specific_evaluation(self, config: RationalPointConfig, params: VerifyParams, reverse: bool) -> SearchResult:
        return seven_point_search(config, reverse=reverse)
