from typing import FrozenSet, Iterable, Sequence, Tuple

from forge.complexes.simplicial_complex import Face, canonical_key


class InvalidLabelError(ValueError):
    pass


class ConfigSimplex:
    """
    Label (A_1, ..., A_r; B) of the configuration space; B is the complement of the parts.
    Slots are 0-based here.
    """

    __slots__ = ("parts", "_support", "_hash")

    def __init__(self, parts: Iterable[Iterable[int]]) -> None:
        self.parts: Tuple[FrozenSet[int], ...] = tuple(frozenset(part) for part in parts)
        self._support = frozenset().union(*self.parts)
        if len(self._support) != sum(len(part) for part in self.parts):
            raise InvalidLabelError(f"Parts of {self} are not pairwise disjoint")
        self._hash = hash(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def support(self) -> FrozenSet[int]:
        return self._support

    @property
    def dimension(self) -> int:
        return len(self._support) - 1

    @property
    def is_empty(self) -> bool:
        return not self._support

    def in_remainder(self, v: int) -> bool:
        return v not in self._support

    def remainder(self, m: int) -> FrozenSet[int]:
        return frozenset(range(m)) - self._support

    def to_face(self) -> Face:
        """
        Flat face on [m] x [r]: element v in slot i is the vertex v * r + i.
        """
        r = len(self.parts)
        return frozenset(v * r + i for i, part in enumerate(self.parts) for v in part)

    @classmethod
    def from_face(cls, face: Iterable[int], r: int) -> "ConfigSimplex":
        parts = [set() for _ in range(r)]
        for vertex in face:
            v, i = divmod(vertex, r)
            parts[i].add(v)
        return cls(parts)

    def toggled(self, slot: int, v: int) -> "ConfigSimplex":
        """
        Moves v between part `slot` and the remainder.
        """
        parts = list(self.parts)
        if v in parts[slot]:
            parts[slot] = parts[slot] - {v}
        elif v in self._support:
            raise InvalidLabelError(f"Vertex {v} lies in another part of {self}")
        else:
            parts[slot] = parts[slot] | {v}
        return ConfigSimplex(parts)

    def sort_key(self):
        return canonical_key(self.to_face())

    def to_json(self) -> list:
        return [sorted(part) for part in self.parts]

    def __eq__(self, other) -> bool:
        return isinstance(other, ConfigSimplex) and self.parts == other.parts

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(str(v) for v in sorted(part)) + "}" for part in self.parts)
        return f"({inner})"


def slot_action(perm: Sequence[int], simplex: ConfigSimplex) -> ConfigSimplex:
    """
    Moves part i to slot perm[i].
    """
    if sorted(perm) != list(range(simplex.r)):
        raise InvalidLabelError(f"{list(perm)} is not a permutation of the {simplex.r} slots")
    parts = [None] * simplex.r
    for i, part in enumerate(simplex.parts):
        parts[perm[i]] = part
    return ConfigSimplex(parts)
