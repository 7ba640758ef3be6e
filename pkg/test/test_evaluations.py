import pytest

from forge import master
from forge.affine.point_config import RationalPointConfig, regular_hexagon_with_center
from forge.evaluations.verification_framework import REFUTED, VERIFIED
from forge.params import InvalidParamsError, VerifyParams


def params_for(framework: str, r: int = None, reverse: bool = False) -> VerifyParams:
    params = VerifyParams(framework)
    if r is not None:
        params.set_r(r)
    if reverse:
        params.set_reverse()
    return params


@pytest.fixture
def square() -> RationalPointConfig:
    return RationalPointConfig(2, [[0, 0], [2, 0], [2, 2], [0, 2]], colors=[[0, 1], [2, 3]])


class TestFrameworkRegistry:

    @pytest.mark.parametrize("name", ["tverberg", "rainbow", "seven-point"])
    def test_registered(self, name):
        assert master.get_specific_evaluation_framework(name).name == name

    def test_unknown(self):
        with pytest.raises(AttributeError):
            master.get_specific_evaluation_framework("helly")


class TestTverbergFramework:

    def test_witness_is_verified(self, square):
        outcome = master.get_specific_evaluation_framework("tverberg").evaluate(square, params_for("tverberg", 2))
        assert outcome.verdict == VERIFIED
        assert outcome.reverse_result is None
        assert outcome.reproducible is None

    def test_exhaustion_is_repeated_in_reverse(self):
        triangle = RationalPointConfig(2, [[0, 0], [1, 0], [0, 1]])
        outcome = master.get_specific_evaluation_framework("tverberg").evaluate(triangle, params_for("tverberg", 2))
        assert outcome.verdict == REFUTED
        assert outcome.reproducible
        assert outcome.to_json()["reversed_search"]["evaluated"] == 3

    def test_r_is_required(self, square):
        with pytest.raises(AttributeError):
            master.get_specific_evaluation_framework("tverberg").evaluate(square, params_for("tverberg"))

    def test_r_below_two(self):
        with pytest.raises(InvalidParamsError):
            params_for("tverberg", 1)


class TestRainbowFramework:

    def test_dimension_caps(self, square):
        params = params_for("rainbow", 2)
        params.set_dim_caps(1, 2)
        outcome = master.get_specific_evaluation_framework("rainbow").evaluate(square, params)
        assert outcome.verdict == VERIFIED

    def test_uncolored_input(self):
        plain = RationalPointConfig(2, [[0, 0], [2, 0], [2, 2], [0, 2]])
        with pytest.raises(AttributeError):
            master.get_specific_evaluation_framework("rainbow").evaluate(plain, params_for("rainbow", 2))


class TestSevenPointFramework:

    def test_hexagon(self):
        outcome = master.get_specific_evaluation_framework("seven-point").evaluate(regular_hexagon_with_center(), params_for("seven-point", reverse=True))
        assert outcome.verdict == VERIFIED
        assert outcome.result.reverse

    def test_part_count_is_fixed(self):
        with pytest.raises(AttributeError):
            master.get_specific_evaluation_framework("seven-point").evaluate(regular_hexagon_with_center(), params_for("seven-point", 3))
