"""Marked graphs: vertices with full edges plus boundary-anchored half-edges.

Vertices are labeled 1..points and carry a total order (the planar order of
the marked points they came from).  Full edges join distinct vertices; a
half-edge hangs off one vertex and records which boundary interval of the
ambient diagram it points at, so later gluing can complete it into a full
edge.  Only full edges count for degrees and for the Artin presentation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

_SIDES = ("in", "out")


@dataclass(frozen=True, order=True)
class HalfEdge:
    """Dangling edge end at ``point``, anchored to boundary interval
    ``interval`` (1-based) on the given side of the diagram."""

    point: int
    side: str
    interval: int

    def __post_init__(self) -> None:
        if self.side not in _SIDES:
            raise ValueError(f"half-edge side must be 'in' or 'out', got {self.side!r}")
        if self.interval < 1:
            raise ValueError(f"boundary interval must be >= 1, got {self.interval}")

    def __str__(self) -> str:
        return f"{self.side}{self.interval}->{self.point}"


@dataclass(frozen=True)
class MarkedGraph:
    points: int
    edges: tuple[tuple[int, int], ...]
    half_edges: tuple[HalfEdge, ...] = ()

    def __post_init__(self) -> None:
        if self.points < 0:
            raise ValueError("point count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        for a, b in self.edges:
            if not (1 <= a < b <= self.points):
                raise ValueError(f"edge ({a},{b}) is not an ordered pair of points 1..{self.points}")
            if (a, b) in seen:
                raise ValueError(f"duplicate edge ({a},{b})")
            seen.add((a, b))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        for h in self.half_edges:
            if not (1 <= h.point <= self.points):
                raise ValueError(f"half-edge at point {h.point} out of range 1..{self.points}")
        object.__setattr__(self, "half_edges", tuple(sorted(self.half_edges)))

    @staticmethod
    def path(k: int) -> "MarkedGraph":
        """Path graph on k vertices: edges (1,2), (2,3), ..."""
        return MarkedGraph(k, tuple((i, i + 1) for i in range(1, k)))

    def degree(self, v: int) -> int:
        """Number of full edges at v; half-edges do not count."""
        if not (1 <= v <= self.points):
            raise ValueError(f"point {v} out of range 1..{self.points}")
        return sum(1 for a, b in self.edges if v in (a, b))

    def max_degree(self) -> int:
        deg = [0] * (self.points + 1)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return max(deg) if deg else 0

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(b if a == v else a for a, b in self.edges if v in (a, b)))

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components under full edges, each a sorted vertex tuple,
        ordered by smallest vertex."""
        parent = list(range(self.points + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups: dict[int, list[int]] = {}
        for v in range(1, self.points + 1):
            groups.setdefault(find(v), []).append(v)
        return tuple(tuple(g) for _, g in sorted(groups.items()))

    def is_forest(self) -> bool:
        comps = self.components()
        return len(self.edges) == self.points - len(comps)

    def relabel(self, mapping: Mapping[int, int], points: int) -> "MarkedGraph":
        """Image of this graph under an injective vertex relabeling into
        1..points.  Half-edges are dropped: anchors are not meaningful in
        the new ambient diagram."""
        values = [mapping[v] for v in range(1, self.points + 1)]
        if len(set(values)) != len(values):
            raise ValueError("relabeling is not injective")
        edges = tuple((min(mapping[a], mapping[b]), max(mapping[a], mapping[b])) for a, b in self.edges)
        return MarkedGraph(points, edges)

    def without_half_edges(self) -> "MarkedGraph":
        return MarkedGraph(self.points, self.edges)

    def to_json_obj(self) -> dict:
        return {
            "points": self.points,
            "edges": [list(e) for e in self.edges],
            "half_edges": [
                {"point": h.point, "side": h.side, "interval": h.interval} for h in self.half_edges
            ],
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "MarkedGraph":
        return MarkedGraph(
            int(obj["points"]),
            tuple((int(a), int(b)) for a, b in obj.get("edges", ())),
            tuple(
                HalfEdge(int(h["point"]), str(h["side"]), int(h["interval"]))
                for h in obj.get("half_edges", ())
            ),
        )

    def __str__(self) -> str:
        parts = [f"{self.points} points"]
        parts.append("edges " + (" ".join(f"({a},{b})" for a, b in self.edges) if self.edges else "none"))
        if self.half_edges:
            parts.append("half-edges " + " ".join(str(h) for h in self.half_edges))
        return "; ".join(parts)
