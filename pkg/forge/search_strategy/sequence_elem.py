from enum import Enum
from typing import Any, Generic, Optional, TypeVar

Type = TypeVar("Type")


class ElemState(Enum):
    INITIALIZED = 0
    IN_PROGRESS = 1
    ERROR = 2
    DONE = 3


class SequenceElem(Generic[Type]):
    """
    One candidate of a search sequence; the outcome is the witness it produced, None if it has none.
    """

    def __init__(self, index: int, value: Type, state: ElemState = ElemState.INITIALIZED, outcome: Optional[Any] = None) -> None:
        self.index = index
        self.value = value
        self.state = state
        self.outcome = outcome

    def update_outcome(self, outcome: Optional[Any]) -> None:
        if self.state in (ElemState.DONE, ElemState.ERROR):
            raise AttributeError(f"Outcome was already set for {repr(self)}")
        self.state = ElemState.DONE
        self.outcome = outcome

    def mark_error(self) -> None:
        self.state = ElemState.ERROR
        self.outcome = None

    @property
    def has_witness(self) -> bool:
        return self.state == ElemState.DONE and self.outcome is not None

    def __repr__(self) -> str:
        return f"{self.index}: {self.value} ({self.state.name})"
