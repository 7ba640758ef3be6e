from forge.search_strategy.sequence_elem import ElemState, SequenceElem
from forge.search_strategy.sequence_strategy import SequenceFinished, SequenceStrategy, ThreadWithReturnValue
from forge.search_strategy.partition_sequence import PartitionSequence, fits_caps
