from forge.affine.point_config import RationalPointConfig
from forge.affine.searches import SearchResult, tverberg_search
from forge.evaluations.verification_framework import VerificationFramework
from forge.params import VerifyParams


class TverbergVerificationFramework(VerificationFramework):

    name = "tverberg"

    def perform_specific_evaluation(self, config: RationalPointConfig, params: VerifyParams, reverse: bool) -> SearchResult:
        return tverberg_search(config, params.r, size_caps=params.size_caps, reverse=reverse)
