import pytest

from forge import master
from forge.data_storage.artifact_store import ArtifactStore
from forge.homology.homology import homology
from forge.manifest import REFUTED, VERIFIED
from forge.params import InvalidParamsError


class StubMonotonicity:
    monotone = False
    violations = [None, None]

    def to_json(self):
        return {"segments_checked": 2, "violations": []}


class TestPipeline:

    def test_small_instance(self, tmp_path):
        store = ArtifactStore(str(tmp_path))
        manifest = master.pipeline_balanced(2, 2, store)
        assert manifest.verdict == VERIFIED
        assert manifest.details["certificate"]["critical_by_dimension"] == {"0": 1, "3": 1}
        assert manifest.details["homology"]["betti"]["3"] == 1
        assert set(manifest.artifacts) == {"config-space", "matching"}

    def test_failing_stage_keeps_the_partial_manifest(self, monkeypatch):
        monkeypatch.setattr(master, "pi_monotonicity", lambda result: StubMonotonicity())
        with pytest.raises(master.PipelineStageError) as info:
            master.pipeline_balanced(2, 2)
        assert info.value.stage == "monotonicity"
        manifest = info.value.manifest
        assert manifest.verdicts["monotonicity"] == REFUTED
        assert manifest.verdicts["acyclicity"] == VERIFIED
        assert "certificate" not in manifest.verdicts
        assert manifest.verdict == REFUTED

    def test_invalid_parameters(self):
        with pytest.raises(InvalidParamsError):
            master.pipeline_balanced(6, 2)

    @pytest.mark.slow
    def test_three_dimensional_instance(self, tmp_path, space_2_3):
        store = ArtifactStore(str(tmp_path))
        manifest = master.pipeline_balanced(2, 3, store)
        assert manifest.verdict == VERIFIED
        assert manifest.verdicts["monotonicity"] == VERIFIED
        assert manifest.details["certificate"]["critical_by_dimension"] == {"0": 1, "4": 215}

        reduced = homology(space_2_3.complex)
        assert reduced.vanishes_below(4)
        assert reduced.betti[4] == 215
        assert reduced.torsion_free
