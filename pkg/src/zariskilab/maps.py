"""Total maps and partial injections on dense integer ranges."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import DimensionMismatch, InvalidParameter


@dataclass(frozen=True)
class FiniteMap:
    """A total map ``[0, source_size) -> [0, target_size)`` stored as its image tuple."""

    source_size: int
    target_size: int
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(x) for x in self.image))
        if len(self.image) != self.source_size:
            raise InvalidParameter(
                f"image has length {len(self.image)}, expected {self.source_size}")
        for x in self.image:
            if not 0 <= x < self.target_size:
                raise InvalidParameter(f"image value {x} outside [0, {self.target_size})")

    @classmethod
    def of(cls, image: Iterable[int], target_size: int | None = None) -> "FiniteMap":
        """Square map by default: target size equals source size."""
        image = tuple(image)
        return cls(len(image), len(image) if target_size is None else target_size, image)

    @classmethod
    def identity(cls, n: int) -> "FiniteMap":
        return cls(n, n, tuple(range(n)))

    @classmethod
    def constant(cls, n: int, value: int) -> "FiniteMap":
        return cls(n, n, (value,) * n)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __len__(self) -> int:
        return self.source_size

    def __iter__(self) -> Iterator[int]:
        return iter(self.image)

    @property
    def is_square(self) -> bool:
        return self.source_size == self.target_size

    def is_injective(self) -> bool:
        return len(set(self.image)) == len(self.image)

    def is_identity(self) -> bool:
        return self.is_square and all(i == x for i, x in enumerate(self.image))

    def image_set(self) -> frozenset[int]:
        return frozenset(self.image)

    def __repr__(self):
        return f"FiniteMap{self.image}" if self.is_square else \
            f"FiniteMap({self.source_size}->{self.target_size}, {self.image})"


class PartialInjection:
    """An injective partial map on ``[0, size)``.  Immutable; ``extend`` copies."""

    __slots__ = ("size", "_fwd", "_inv")

    def __init__(self, size: int, assignments: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = assignments.items() if isinstance(assignments, Mapping) else assignments
        fwd: dict[int, int] = {}
        inv: dict[int, int] = {}
        for x, y in items:
            x, y = int(x), int(y)
            if not (0 <= x < size and 0 <= y < size):
                raise InvalidParameter(f"assignment {x}->{y} outside [0, {size})")
            if fwd.get(x, y) != y:
                raise InvalidParameter(f"{x} assigned both {fwd[x]} and {y}")
            if inv.get(y, x) != x:
                raise InvalidParameter(f"{inv[y]} and {x} both map to {y}")
            fwd[x] = y
            inv[y] = x
        self.size = size
        self._fwd = fwd
        self._inv = inv

    def get(self, x: int) -> int | None:
        return self._fwd.get(x)

    def __contains__(self, x: int) -> bool:
        return x in self._fwd

    def __len__(self) -> int:
        return len(self._fwd)

    def items(self):
        return sorted(self._fwd.items())

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self._fwd)

    @property
    def range(self) -> frozenset[int]:
        return frozenset(self._inv)

    def as_dict(self) -> dict[int, int]:
        return dict(self._fwd)

    def extend(self, more: Mapping[int, int] | Iterable[tuple[int, int]]) -> "PartialInjection":
        items = more.items() if isinstance(more, Mapping) else more
        return PartialInjection(self.size, list(self._fwd.items()) + list(items))

    def resized(self, size: int) -> "PartialInjection":
        return PartialInjection(size, self._fwd)

    def is_extended_by(self, f: FiniteMap) -> bool:
        return all(f(x) == y for x, y in self._fwd.items())

    def complete(self) -> FiniteMap:
        """Extend to a permutation of ``[0, size)``: free points ascending get smallest unused values."""
        used = set(self._inv)
        free = (v for v in range(self.size) if v not in used)
        image = [self._fwd[x] if x in self._fwd else next(free) for x in range(self.size)]
        return FiniteMap(self.size, self.size, tuple(image))

    def extensions(self) -> Iterator[FiniteMap]:
        """Every permutation of ``[0, size)`` extending this map, in lexicographic order."""
        from itertools import permutations

        free_dom = [x for x in range(self.size) if x not in self._fwd]
        free_rng = [y for y in range(self.size) if y not in self._inv]
        for perm in permutations(free_rng):
            image = dict(self._fwd)
            image.update(zip(free_dom, perm))
            yield FiniteMap(self.size, self.size, tuple(image[x] for x in range(self.size)))

    def __eq__(self, other):
        if not isinstance(other, PartialInjection):
            return NotImplemented
        return self.size == other.size and self._fwd == other._fwd

    def __hash__(self):
        return hash((self.size, tuple(self.items())))

    def __repr__(self):
        body = ", ".join(f"{x}->{y}" for x, y in self.items())
        return f"PartialInjection({self.size}, {{{body}}})"


def check_same_size(*maps: FiniteMap) -> int:
    sizes = {(f.source_size, f.target_size) for f in maps}
    if len(sizes) != 1:
        raise DimensionMismatch(f"maps of differing shapes {sorted(sizes)}")
    (n, t), = sizes
    if n != t:
        raise DimensionMismatch(f"expected square maps, got {n}->{t}")
    return n
