from typing import Dict, List, Sequence, Tuple


class InvalidColoringError(ValueError):
    pass


class Coloring:
    """
    Partition of [m] into color classes; each class lists its vertices in position order,
    positions counted from 1.
    """

    def __init__(self, ground_size: int, classes: Sequence[Sequence[int]]) -> None:
        self.ground_size = ground_size
        self.classes: Tuple[Tuple[int, ...], ...] = tuple(tuple(c) for c in classes)
        self._color: Dict[int, int] = {}
        self._position: Dict[int, int] = {}
        for color, members in enumerate(self.classes):
            if not members:
                raise InvalidColoringError(f"Color class {color} is empty")
            for position, v in enumerate(members, start=1):
                if v in self._color:
                    raise InvalidColoringError(f"Vertex {v} appears in more than one color class")
                self._color[v] = color
                self._position[v] = position
        if set(self._color) != set(range(ground_size)):
            raise InvalidColoringError(f"Color classes should cover exactly [0, {ground_size})")

    @classmethod
    def standard(cls, colors: int, class_size: int) -> "Coloring":
        """
        Color-major layout: color c holds c * class_size, ..., (c + 1) * class_size - 1.
        """
        classes = [list(range(c * class_size, (c + 1) * class_size)) for c in range(colors)]
        return cls(colors * class_size, classes)

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "Coloring":
        classes: List[List[int]] = []
        offset = 0
        for size in sizes:
            classes.append(list(range(offset, offset + size)))
            offset += size
        return cls(offset, classes)

    @property
    def colors(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> List[int]:
        return [len(c) for c in self.classes]

    def color_of(self, v: int) -> int:
        return self._color[v]

    def position_of(self, v: int) -> int:
        return self._position[v]

    def is_rainbow(self, vertices) -> bool:
        seen = set()
        for v in vertices:
            color = self._color[v]
            if color in seen:
                return False
            seen.add(color)
        return True

    def to_json(self) -> dict:
        return {"m": self.ground_size, "classes": [list(c) for c in self.classes]}

    @classmethod
    def from_json(cls, data: dict) -> "Coloring":
        try:
            m = int(data["m"])
            classes = data["classes"]
        except KeyError as e:
            raise InvalidColoringError(f"Coloring document misses field {e}")
        except (TypeError, ValueError) as e:
            raise InvalidColoringError(f"Malformed coloring document: {e}")
        return cls(m, classes)

    def __eq__(self, other) -> bool:
        return isinstance(other, Coloring) and self.classes == other.classes

    def __repr__(self) -> str:
        return f"Coloring(m={self.ground_size}, sizes={self.sizes})"
