"""Vertex labels and finite simple graphs."""
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from haemers.constants.graphs import APEX_TEXT, LEVEL_SEPARATOR, LabelKind
from haemers.core.exceptions import BadParameter, ParseError, UnknownVertex

_LEVEL_TEXT = re.compile(r"^(?P<name>\S+)" + LEVEL_SEPARATOR + r"(?P<level>\d+)$")


@dataclass(frozen=True, order=True)
class VertexLabel:
    """
    Vertex label with Mycielski provenance.

    ``Base(name)`` for ordinary vertices, ``Level(name, k)`` for the copy of
    vertex ``name`` on level ``k`` and ``Apex`` for the apex. Text forms are
    ``name``, ``name@k`` and ``z``.
    """

    kind: str
    name: str = ""
    level: int = -1

    def __post_init__(self):
        if self.kind == LabelKind.BASE:
            if not self.name or any(ch.isspace() for ch in self.name):
                raise BadParameter(f"invalid vertex name {self.name!r}")
            if self.name == APEX_TEXT or _LEVEL_TEXT.match(self.name):
                raise BadParameter(f"vertex name {self.name!r} is reserved for Mycielski labels")
        elif self.kind == LabelKind.LEVEL:
            if self.level < 0 or not self.name or any(ch.isspace() for ch in self.name):
                raise BadParameter(f"invalid level label ({self.name!r}, {self.level})")
        elif self.kind != LabelKind.APEX:
            raise BadParameter(f"unknown label kind {self.kind!r}")

    @classmethod
    def base(cls, name) -> "VertexLabel":
        return cls(LabelKind.BASE, str(name))

    @classmethod
    def at_level(cls, vertex: "VertexLabel", level: int) -> "VertexLabel":
        return cls(LabelKind.LEVEL, str(vertex), level)

    @classmethod
    def apex(cls) -> "VertexLabel":
        return cls(LabelKind.APEX)

    @classmethod
    def parse(cls, text: str) -> "VertexLabel":
        text = text.strip()
        if text == APEX_TEXT:
            return cls.apex()
        match = _LEVEL_TEXT.match(text)
        if match:
            return cls(LabelKind.LEVEL, match.group("name"), int(match.group("level")))
        try:
            return cls.base(text)
        except BadParameter as exc:
            raise ParseError(exc.detail)

    @property
    def is_apex(self) -> bool:
        return self.kind == LabelKind.APEX

    @property
    def is_level(self) -> bool:
        return self.kind == LabelKind.LEVEL

    def __str__(self) -> str:
        if self.kind == LabelKind.APEX:
            return APEX_TEXT
        if self.kind == LabelKind.LEVEL:
            return f"{self.name}{LEVEL_SEPARATOR}{self.level}"
        return self.name


@dataclass(frozen=True)
class Graph:
    """
    Finite simple graph.

    ``adjacency[i]`` is a bitset (``int``) of the neighbours of
    ``vertices[i]``. Use ``Graph.from_edges`` to build one.
    """

    vertices: Tuple[VertexLabel, ...]
    adjacency: Tuple[int, ...]

    def __post_init__(self):
        if len(self.adjacency) != len(self.vertices):
            raise BadParameter("adjacency does not match the vertex list")
        if len(set(self.vertices)) != len(self.vertices):
            raise BadParameter("vertex labels must be unique")
        for i, bits in enumerate(self.adjacency):
            if bits >> i & 1:
                raise BadParameter(f"self-loop at {self.vertices[i]}")
            if bits >> len(self.vertices):
                raise BadParameter(f"adjacency of {self.vertices[i]} points outside the graph")
            for j in iter_bits(bits):
                if not self.adjacency[j] >> i & 1:
                    raise BadParameter(f"asymmetric edge {self.vertices[i]} -> {self.vertices[j]}")

    @classmethod
    def from_edges(
        cls,
        vertices: Sequence[VertexLabel],
        edges: Iterable[Tuple[VertexLabel, VertexLabel]],
    ) -> "Graph":
        vertices = tuple(vertices)
        position = {v: i for i, v in enumerate(vertices)}
        if len(position) != len(vertices):
            raise BadParameter("vertex labels must be unique")
        bits = [0] * len(vertices)
        for u, v in edges:
            if u not in position:
                raise UnknownVertex(f"edge endpoint {u} is not a vertex")
            if v not in position:
                raise UnknownVertex(f"edge endpoint {v} is not a vertex")
            i, j = position[u], position[v]
            if i == j:
                raise BadParameter(f"self-loop at {u}")
            bits[i] |= 1 << j
            bits[j] |= 1 << i
        return cls(vertices, tuple(bits))

    @property
    def order(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> Dict[VertexLabel, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def position(self, label: VertexLabel) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise UnknownVertex(f"{label} is not a vertex of the graph")

    def neighbors(self, label: VertexLabel) -> List[VertexLabel]:
        return [self.vertices[j] for j in iter_bits(self.adjacency[self.position(label)])]

    def degree(self, label: VertexLabel) -> int:
        return bin(self.adjacency[self.position(label)]).count("1")

    def degrees(self) -> List[int]:
        return [bin(bits).count("1") for bits in self.adjacency]

    def has_edge(self, u: VertexLabel, v: VertexLabel) -> bool:
        return bool(self.adjacency[self.position(u)] >> self.position(v) & 1)

    def edges(self) -> List[Tuple[VertexLabel, VertexLabel]]:
        """Each edge once, as ``(vertices[i], vertices[j])`` with ``i < j``."""
        return [
            (self.vertices[i], self.vertices[j])
            for i, bits in enumerate(self.adjacency)
            for j in iter_bits(bits)
            if i < j
        ]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def relabel(self, mapping: Dict[VertexLabel, VertexLabel]) -> "Graph":
        return Graph(tuple(mapping.get(v, v) for v in self.vertices), self.adjacency)


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low
