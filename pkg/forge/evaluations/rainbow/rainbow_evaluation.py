from forge.affine.point_config import RationalPointConfig
from forge.affine.searches import SearchResult, rainbow_search
from forge.evaluations.verification_framework import VerificationFramework
from forge.params import VerifyParams


class RainbowVerificationFramework(VerificationFramework):

    name = "rainbow"

    def check_params(self, config: RationalPointConfig, params: VerifyParams) -> None:
        super().check_params(config, params)
        if config.colors is None:
            raise AttributeError("The rainbow framework needs a colored configuration")
        if (params.k is None) != (params.s is None):
            raise AttributeError("Dimension caps need both k and s")

    def perform_specific_evaluation(self, config: RationalPointConfig, params: VerifyParams, reverse: bool) -> SearchResult:
        return rainbow_search(config, params.r, k=params.k, s=params.s, size_caps=params.size_caps, reverse=reverse)
