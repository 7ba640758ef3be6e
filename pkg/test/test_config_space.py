import itertools

import pytest

from forge.config import Config, ResourceLimitError
from forge.config_space.coloring import Coloring, InvalidColoringError
from forge.config_space.config_simplex import ConfigSimplex, InvalidLabelError, slot_action
from forge.config_space.config_space import build_config_space, classify, is_valid_label, validate_label
from forge.params import InvalidParamsError, balanced_params, is_prime_power


class TestBalancedParams:

    @pytest.mark.parametrize("r, d, k, s, m", [(2, 3, 2, 1, 9), (2, 2, 1, 2, 6), (4, 2, 2, 2, 21), (3, 2, 2, 1, 15)])
    def test_formulas(self, r, d, k, s, m):
        params = balanced_params(r, d)
        assert (params.k, params.s, params.m) == (k, s, m)
        assert params.r * (params.k - 1) + params.s == (params.r - 1) * params.d

    def test_connectivity_target(self):
        params = balanced_params(2, 3)
        assert params.top_dimension == 4
        assert params.target_connectivity == 3

    @pytest.mark.parametrize("r", [6, 1, 10])
    def test_non_prime_powers_are_rejected(self, r):
        with pytest.raises(InvalidParamsError):
            balanced_params(r, 2)

    def test_prime_powers(self):
        assert [n for n in range(2, 17) if is_prime_power(n)] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


class TestColoring:

    def test_standard_layout(self):
        coloring = Coloring.standard(3, 3)
        assert coloring.classes == ((0, 1, 2), (3, 4, 5), (6, 7, 8))
        assert coloring.position_of(4) == 2
        assert coloring.color_of(8) == 2

    def test_classes_should_partition(self):
        with pytest.raises(InvalidColoringError):
            Coloring(4, [[0, 1], [1, 2, 3]])
        with pytest.raises(InvalidColoringError):
            Coloring(4, [[0, 1], [2]])

    def test_shape_must_match_params(self):
        with pytest.raises(InvalidColoringError):
            build_config_space(balanced_params(2, 2), Coloring.from_sizes([2, 4]))


class TestLabels:

    def test_flat_face_round_trip(self):
        label = ConfigSimplex([[0, 3], [1]])
        assert label.to_face() == frozenset({0, 6, 3})
        assert ConfigSimplex.from_face(label.to_face(), 2) == label

    def test_parts_must_be_disjoint(self):
        with pytest.raises(InvalidLabelError):
            ConfigSimplex([[0, 1], [1]])

    def test_toggle(self):
        label = ConfigSimplex([[0], []])
        assert label.toggled(1, 3) == ConfigSimplex([[0], [3]])
        assert label.toggled(0, 0) == ConfigSimplex([[], []])
        with pytest.raises(InvalidLabelError):
            label.toggled(1, 0)

    def test_validation(self):
        params = balanced_params(2, 3)
        coloring = Coloring.standard(3, 3)
        assert is_valid_label(ConfigSimplex([[0, 3, 6], [1, 4]]), params, coloring)
        with pytest.raises(InvalidLabelError):
            validate_label(ConfigSimplex([[], []]), params, coloring)
        with pytest.raises(InvalidLabelError):
            validate_label(ConfigSimplex([[0, 1], []]), params, coloring)
        with pytest.raises(InvalidLabelError):
            validate_label(ConfigSimplex([[0, 3, 6], [1, 4, 7]]), params, coloring)

    def test_two_full_parts_allowed_when_s_is_r(self):
        params = balanced_params(2, 2)
        coloring = Coloring.standard(2, 3)
        assert is_valid_label(ConfigSimplex([[0, 3], [1, 4]]), params, coloring)

    def test_slot_action(self):
        label = ConfigSimplex([[0, 3, 6], [1, 4]])
        assert slot_action([0, 1], label) == label
        swapped = slot_action([1, 0], label)
        assert swapped == ConfigSimplex([[1, 4], [0, 3, 6]])
        assert is_valid_label(swapped, balanced_params(2, 3), Coloring.standard(3, 3))
        with pytest.raises(InvalidLabelError):
            slot_action([0, 0], label)

    def test_classification(self):
        params = balanced_params(2, 3)
        coloring = Coloring.standard(3, 3)
        saturated = classify(ConfigSimplex([[0, 3, 6], [1, 4]]), params, coloring)
        assert saturated.saturated and saturated.k1_full
        assert saturated.full_colors == (True, True, False)
        balanced = classify(ConfigSimplex([[0, 3], [1, 4]]), params, coloring)
        assert not balanced.k1_full and not balanced.saturated
        lonely = classify(ConfigSimplex([[0], []]), params, coloring)
        assert lonely.full_colors == (False, False, False)


class TestConfigurationSpace:

    def test_face_count_small(self, space_2_2):
        assert len(space_2_2) == 168
        assert space_2_2.complex.dimension == 3

    def test_face_count(self, space_2_3):
        assert len(space_2_3) == 1980
        assert len(space_2_3.complex.faces) == len(space_2_3) + 1

    def test_face_count_matches_direct_enumeration(self, space_2_3):
        params, coloring = space_2_3.params, space_2_3.coloring
        rainbow = [
            frozenset(choice)
            for size in range(params.k + 2)
            for colors in itertools.combinations(coloring.classes, size)
            for choice in itertools.product(*colors)
        ]
        count = 0
        for first in rainbow:
            for second in rainbow:
                if first & second or not (first or second):
                    continue
                if sum(1 for part in (first, second) if len(part) == params.k + 1) > params.s:
                    continue
                count += 1
        assert count == len(space_2_3)

    def test_maximal_faces_are_saturated_and_top_dimensional(self, space_2_3):
        maximal = space_2_3.maximal_labels()
        assert len(maximal) == 648
        assert all(label.dimension == space_2_3.params.top_dimension for label in maximal)
        assert all(space_2_3.classify(label).saturated for label in maximal)
        saturated = [label for label in space_2_3.labels if space_2_3.classify(label).saturated]
        assert set(saturated) == set(maximal)

    def test_labels_are_closed_under_removal(self, space_2_3):
        for label in space_2_3.labels:
            for slot, part in enumerate(label.parts):
                for v in part:
                    smaller = label.toggled(slot, v)
                    assert smaller.is_empty or smaller in space_2_3

    def test_remainder_keeps_r_minus_one_per_color(self, space_2_3):
        r, m = space_2_3.params.r, space_2_3.params.m
        for label in space_2_3.labels:
            remainder = label.remainder(m)
            for members in space_2_3.coloring.classes:
                assert len(remainder & set(members)) >= r - 1

    def test_sidecar_lists_every_label(self, space_2_2):
        sidecar = space_2_2.sidecar()
        assert len(sidecar) == len(space_2_2)
        assert sidecar[0]["face"] == sorted(space_2_2.labels[0].to_face())

    def test_label_guard(self, monkeypatch):
        monkeypatch.setattr(Config, "max_config_space_labels", 100)
        with pytest.raises(ResourceLimitError):
            build_config_space(balanced_params(2, 3))
