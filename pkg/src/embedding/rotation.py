# src/embedding/rotation.py

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple


from src.errors import RotationError
from src.graph.multigraph import EdgeEnd, Multigraph


def _anchored(cycle: Sequence[EdgeEnd]) -> Tuple[EdgeEnd, ...]:
    """Rotate a cyclic order so that its least end comes first."""
    cycle = tuple(cycle)
    if not cycle:
        return cycle
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic order of edge-ends at every vertex, each stored from its least end."""
    rotations: Tuple[Tuple[int, Tuple[EdgeEnd, ...]], ...]

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, Sequence[EdgeEnd]]) -> "RotationSystem":
        return cls(tuple((v, _anchored(mapping[v])) for v in sorted(mapping)))

    def as_dict(self) -> Dict[int, Tuple[EdgeEnd, ...]]:
        return dict(self.rotations)

    def at(self, v: int) -> Tuple[EdgeEnd, ...]:
        try:
            return self.as_dict()[v]
        except KeyError:
            raise RotationError(f"rotation system has no entry for vertex {v}") from None

    @cached_property
    def _successors(self) -> Dict[EdgeEnd, EdgeEnd]:
        succ = {}
        for _, cycle in self.rotations:
            for k, end in enumerate(cycle):
                succ[end] = cycle[(k + 1) % len(cycle)]
        return succ

    @cached_property
    def _slots(self) -> Dict[EdgeEnd, Tuple[int, int]]:
        return {end: (v, k) for v, cycle in self.rotations for k, end in enumerate(cycle)}

    def successor(self, end: EdgeEnd) -> EdgeEnd:
        try:
            return self._successors[end]
        except KeyError:
            raise RotationError(f"edge-end {end} is not in the rotation system") from None

    def slot(self, end: EdgeEnd) -> Tuple[int, int]:
        """(vertex, position) of an edge-end."""
        return self._slots[end]

    def validate(self, g: Multigraph):
        table = self.as_dict()
        if set(table) != set(g.vertices):
            raise RotationError("rotation system vertices do not match the graph")
        for v in g.vertices:
            if sorted(table[v]) != list(g.ends_at(v)):
                raise RotationError(f"rotation at vertex {v} does not list exactly its edge-ends")


def rotation_count(g: Multigraph) -> int:
    """Number of rotation systems: product of (deg - 1)! over vertices."""
    return math.prod(math.factorial(max(d - 1, 0)) for d in g.degrees().values())


class RotationPlan:
    """
    Mixed-radix numbering of all rotation systems of a graph.

    Vertices are taken in id order with the last one varying fastest; at
    each vertex the least edge-end is the fixed anchor and the remaining
    ends run through their permutations in lexicographic order. Index 0
    is therefore the lexicographically least system. Per-vertex choices
    are unranked on demand, so a high-degree vertex costs nothing until
    one of its rotations is asked for.
    """

    def __init__(self, g: Multigraph):
        self.graph = g
        self.vertices: List[int] = g.sorted_vertices()
        self.anchors: List[Optional[EdgeEnd]] = []
        self.rests: List[Tuple[EdgeEnd, ...]] = []
        for v in self.vertices:
            ends = g.ends_at(v)
            self.anchors.append(ends[0] if ends else None)
            self.rests.append(tuple(ends[1:]))
        self.radices: List[int] = [math.factorial(len(rest)) for rest in self.rests]
        self.total = math.prod(self.radices)

    def choice(self, pos: int, digit: int) -> Tuple[EdgeEnd, ...]:
        """The digit-th rotation at the pos-th vertex."""
        if self.anchors[pos] is None:
            return ()
        if not 0 <= digit < self.radices[pos]:
            raise IndexError(f"choice {digit} out of range [0, {self.radices[pos]}) at vertex {self.vertices[pos]}")
        items = list(self.rests[pos])
        cycle = [self.anchors[pos]]
        for left in range(len(items), 0, -1):
            q, digit = divmod(digit, math.factorial(left - 1))
            cycle.append(items.pop(q))
        return tuple(cycle)

    def digit_of(self, pos: int, cycle: Sequence[EdgeEnd]) -> int:
        """Inverse of choice for an anchored cycle."""
        v = self.vertices[pos]
        anchor = self.anchors[pos]
        cycle = tuple(cycle)
        if anchor is None:
            if cycle:
                raise RotationError(f"rotation at vertex {v} does not belong to this graph")
            return 0
        if not cycle or cycle[0] != anchor or sorted(cycle[1:]) != list(self.rests[pos]):
            raise RotationError(f"rotation at vertex {v} does not belong to this graph")
        items = list(self.rests[pos])
        digit = 0
        for end in cycle[1:]:
            q = items.index(end)
            digit += q * math.factorial(len(items) - 1)
            items.pop(q)
        return digit

    def digits_at(self, index: int) -> List[int]:
        if not 0 <= index < self.total:
            raise IndexError(f"rotation index {index} out of range [0, {self.total})")
        digits = [0] * len(self.vertices)
        for pos in range(len(self.vertices) - 1, -1, -1):
            index, digits[pos] = divmod(index, self.radices[pos])
        return digits

    def system_from_digits(self, digits: Sequence[int]) -> RotationSystem:
        return RotationSystem(tuple(
            (v, self.choice(pos, digits[pos])) for pos, v in enumerate(self.vertices)
        ))

    def system_at(self, index: int) -> RotationSystem:
        return self.system_from_digits(self.digits_at(index))

    def index_of(self, system: RotationSystem) -> int:
        table = system.as_dict()
        index = 0
        for pos, v in enumerate(self.vertices):
            if v not in table:
                raise RotationError(f"rotation system has no entry for vertex {v}")
            index = index * self.radices[pos] + self.digit_of(pos, table[v])
        return index


def enumerate_rotations(g: Multigraph) -> Iterator[RotationSystem]:
    """Every rotation system of g, in plan index order."""
    plan = RotationPlan(g)
    for digits in itertools.product(*(range(r) for r in plan.radices)):
        yield plan.system_from_digits(digits)


def format_rotation(system: RotationSystem) -> List[str]:
    return [f"{v}: " + " ".join(str(end) for end in cycle) for v, cycle in system.rotations]


def parse_rotation(lines: Sequence[str]) -> RotationSystem:
    """Inverse of format_rotation: `v: e.s e.s ...` per line."""
    mapping: Dict[int, List[EdgeEnd]] = {}
    for line in lines:
        line = line.strip()
        if not line:
            continue
        head, _, body = line.partition(":")
        try:
            v = int(head)
            ends = [EdgeEnd(int(e), int(s)) for e, s in (tok.split(".") for tok in body.split())]
        except ValueError:
            raise RotationError(f"malformed rotation line {line!r}") from None
        mapping[v] = ends
    return RotationSystem.from_mapping(mapping)
