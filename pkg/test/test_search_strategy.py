import pytest

from forge.config import Config, ResourceLimitError
from forge.search_strategy.partition_sequence import PartitionSequence, fits_caps, partition_count
from forge.search_strategy.sequence_elem import ElemState, SequenceElem
from forge.search_strategy.sequence_strategy import SequenceStrategy, ThreadWithReturnValue


class TestPartitionSequence:

    def test_stirling_count(self):
        assert partition_count(PartitionSequence(range(4), 2)) == 7
        assert partition_count(PartitionSequence(range(5), 3)) == 25

    def test_first_partition(self):
        assert next(iter(PartitionSequence(range(4), 2))) == ((0, 1, 2), (3,))

    def test_each_partition_once(self):
        seen = [frozenset(frozenset(block) for block in blocks) for blocks in PartitionSequence(range(5), 2)]
        assert len(seen) == len(set(seen)) == 15

    def test_caps(self):
        blocks = list(PartitionSequence(range(4), 2, caps=[2, 2]))
        assert len(blocks) == 3
        assert all(len(block) == 2 for partition in blocks for block in partition)

    def test_unassigned_items(self):
        assert partition_count(PartitionSequence(range(3), 2, allow_unassigned=True)) == 6
        assert partition_count(PartitionSequence(range(3), 2, allow_unassigned=True, maximal=True)) == 3

    def test_admissibility(self):
        def split_parity(block, item):
            return all(other % 2 == item % 2 for other in block)
        assert list(PartitionSequence(range(4), 2, admissible=split_parity)) == [((0, 2), (1, 3))]

    def test_too_few_items(self):
        assert partition_count(PartitionSequence(range(2), 3)) == 0

    def test_fits_caps(self):
        assert fits_caps([1, 2], [2, 1])
        assert not fits_caps([3], [2, 2])
        assert not fits_caps([1, 1, 1], [2, 2])

    def test_cap_count_must_match(self):
        with pytest.raises(AttributeError):
            PartitionSequence(range(4), 2, caps=[2])

    def test_limit(self, monkeypatch):
        sequence = PartitionSequence(range(4), 2)
        assert sequence.estimated_size() == 8
        monkeypatch.setattr(Config, "max_partition_candidates", 7)
        with pytest.raises(ResourceLimitError):
            sequence.check_limit()


def witness_at_three_mod_four(value):
    return value if value % 4 == 3 else None


def reciprocal_without_witness(value):
    1 / value
    return None


def rejects_three(value):
    if value == 3:
        raise ValueError(f"Cannot evaluate {value}")
    return None


class TestSequenceStrategy:

    def test_first_witness_in_order(self):
        strategy = SequenceStrategy(range(10), witness_at_three_mod_four, batch_size=3)
        elem = strategy.run()
        assert elem.value == 3 and elem.index == 3
        assert strategy.evaluated == 6

    def test_reverse(self):
        strategy = SequenceStrategy(range(10), witness_at_three_mod_four, reverse=True, batch_size=3)
        elem = strategy.run()
        assert elem.value == 7 and elem.index == 2
        assert strategy.evaluated == 3

    def test_earliest_witness_of_a_batch_wins(self):
        strategy = SequenceStrategy([1, 3, 7], witness_at_three_mod_four, batch_size=3)
        assert strategy.run().value == 3

    def test_exhaustion_counts_errors(self):
        strategy = SequenceStrategy(range(5), reciprocal_without_witness, batch_size=2)
        assert strategy.run() is None
        assert strategy.evaluated == 5
        assert strategy.errors == 1

    def test_any_worker_failure_is_counted(self):
        strategy = SequenceStrategy(range(6), rejects_three, batch_size=4)
        assert strategy.run() is None
        assert strategy.evaluated == 6
        assert strategy.errors == 1

    def test_failure_on_a_single_candidate_batch(self):
        strategy = SequenceStrategy([3], rejects_three, batch_size=1)
        assert strategy.run() is None
        assert strategy.errors == 1

    def test_default_batch_size_follows_threads(self, monkeypatch):
        monkeypatch.setattr(Config, "threads", 2)
        assert SequenceStrategy([], witness_at_three_mod_four).batch_size == 2


class TestSequenceElem:

    def test_outcome_is_set_once(self):
        elem = SequenceElem(0, "candidate")
        elem.update_outcome("witness")
        assert elem.has_witness and elem.state == ElemState.DONE
        with pytest.raises(AttributeError):
            elem.update_outcome(None)

    def test_error_has_no_witness(self):
        elem = SequenceElem(0, "candidate")
        elem.mark_error()
        assert not elem.has_witness

    def test_thread_return_value(self):
        thread = ThreadWithReturnValue(target=sum, args=([1, 2, 3],))
        thread.start()
        assert thread.join() == 6
