"""Planar graphs with an explicit straight-line embedding.

A graph is specified by rational vertex coordinates and an edge list.  The
combinatorial embedding (counterclockwise rotation of edges around each
vertex) is derived from the geometry, and faces are the orbits of the usual
next-edge rule on directed edges.  Construction rejects any degenerate
drawing: coincident vertices, crossing or overlapping edges, vertices in the
interior of an edge.  Instances are immutable; every operation returns new
values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    Disconnected,
    DuplicateCoordinate,
    EdgeCrossing,
    NonSimple,
    ParseError,
    UnknownVertex,
)
from .geometry import (
    Point,
    SegmentRelation,
    ccw_direction_key,
    classify_segments,
    polygon_signed_area2,
    strictly_inside_segment,
    winding_number,
)
from .scalar import Scalar, format_rational, parse_rational


@dataclass(frozen=True)
class DirectedEdge:
    """Edge ``edge`` traversed from ``tail`` to ``head``."""

    edge: int
    tail: int
    head: int

    def reversed(self) -> DirectedEdge:
        return DirectedEdge(self.edge, self.head, self.tail)


@dataclass(frozen=True)
class Face:
    """One orbit of the face-tracing rule; ``walk`` lists directed edges."""

    id: int
    walk: tuple[DirectedEdge, ...]
    is_outer: bool

    def boundary_vertices(self) -> tuple[int, ...]:
        return tuple(d.tail for d in self.walk)

    def touches_vertex(self, v: int) -> bool:
        return any(d.tail == v for d in self.walk)

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(d.edge for d in self.walk)


class PlanarGraph:
    """Immutable straight-line-embedded planar graph."""

    def __init__(
        self,
        coords: Mapping[int, Point],
        edges: Mapping[int, tuple[int, int]],
        rotation: Optional[Mapping[int, tuple[int, ...]]] = None,
        _validated: bool = False,
    ):
        self._coords = dict(coords)
        self._edges = dict(edges)
        self.vertex_ids: tuple[int, ...] = tuple(sorted(self._coords))
        self.edge_ids: tuple[int, ...] = tuple(sorted(self._edges))
        if not _validated:
            self._validate()
        if rotation is None:
            rotation = self._rotation_from_geometry()
        self.rotation: dict[int, tuple[int, ...]] = {
            v: tuple(rotation.get(v, ())) for v in self.vertex_ids
        }

    # -- construction checks -------------------------------------------------

    def _validate(self) -> None:
        seen_points: dict[Point, int] = {}
        for v, p in self._coords.items():
            if p in seen_points:
                raise DuplicateCoordinate(
                    f"vertices {seen_points[p]} and {v} share coordinates {p}"
                )
            seen_points[p] = v

        seen_pairs: dict[frozenset[int], int] = {}
        for e, (u, w) in self._edges.items():
            if u not in self._coords or w not in self._coords:
                raise UnknownVertex(f"edge {e} references missing vertex")
            if u == w:
                raise NonSimple(f"edge {e} is a loop at vertex {u}")
            key = frozenset((u, w))
            if key in seen_pairs:
                raise NonSimple(f"edges {seen_pairs[key]} and {e} are parallel")
            seen_pairs[key] = e

        # No vertex may sit in the interior of an edge segment.
        edge_items = sorted(self._edges.items())
        for e, (u, w) in edge_items:
            a, b = self._coords[u], self._coords[w]
            for v, p in self._coords.items():
                if v not in (u, w) and strictly_inside_segment(a, b, p):
                    raise EdgeCrossing(f"vertex {v} lies inside edge {e}")

        # Pairwise segment checks.  Edges sharing an endpoint may only meet
        # there; disjoint edges may not meet at all.
        for i in range(len(edge_items)):
            e1, (u1, w1) = edge_items[i]
            a1, b1 = self._coords[u1], self._coords[w1]
            for j in range(i + 1, len(edge_items)):
                e2, (u2, w2) = edge_items[j]
                shared = {u1, w1} & {u2, w2}
                a2, b2 = self._coords[u2], self._coords[w2]
                rel = classify_segments(a1, b1, a2, b2)
                if not shared:
                    if rel is not SegmentRelation.DISJOINT:
                        raise EdgeCrossing(f"edges {e1} and {e2} intersect")
                else:
                    # Touching at the shared vertex is expected; anything
                    # more (collinear overlap) is a degenerate drawing.
                    (s,) = shared
                    others = [p for p in (u1, w1, u2, w2) if p != s]
                    pa, pb = self._coords[others[0]], self._coords[others[1]]
                    ps = self._coords[s]
                    from .geometry import orient

                    if orient(ps, pa, pb) == 0:
                        # collinear: overlap iff both point the same way
                        dot = (pa[0] - ps[0]) * (pb[0] - ps[0]) + (
                            pa[1] - ps[1]
                        ) * (pb[1] - ps[1])
                        if dot > 0:
                            raise EdgeCrossing(
                                f"edges {e1} and {e2} overlap at vertex {s}"
                            )

    def _rotation_from_geometry(self) -> dict[int, tuple[int, ...]]:
        incident: dict[int, list[int]] = {v: [] for v in self.vertex_ids}
        for e, (u, w) in self._edges.items():
            incident[u].append(e)
            incident[w].append(e)
        key = ccw_direction_key()
        rot = {}
        for v, edge_list in incident.items():
            pv = self._coords[v]

            def direction(e: int) -> Point:
                u, w = self._edges[e]
                other = w if u == v else u
                po = self._coords[other]
                return (po[0] - pv[0], po[1] - pv[1])

            edge_list.sort(key=lambda e: (key(direction(e)), e))
            rot[v] = tuple(edge_list)
        return rot

    # -- basic accessors ------------------------------------------------------

    def coord(self, v: int) -> Point:
        try:
            return self._coords[v]
        except KeyError:
            raise UnknownVertex(f"no vertex {v}") from None

    def edge_ends(self, e: int) -> tuple[int, int]:
        try:
            return self._edges[e]
        except KeyError:
            from .errors import UnknownEdge

            raise UnknownEdge(f"no edge {e}") from None

    def edge_segment(self, e: int) -> tuple[Point, Point]:
        u, w = self.edge_ends(e)
        return self._coords[u], self._coords[w]

    def has_vertex(self, v: int) -> bool:
        return v in self._coords

    def has_edge(self, e: int) -> bool:
        return e in self._edges

    @property
    def num_vertices(self) -> int:
        return len(self._coords)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @cached_property
    def adjacency(self) -> dict[int, tuple[tuple[int, int], ...]]:
        """Per vertex: (edge id, neighbour) pairs sorted by edge id."""
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in self.vertex_ids}
        for e in self.edge_ids:
            u, w = self._edges[e]
            adj[u].append((e, w))
            adj[w].append((e, u))
        return {v: tuple(sorted(pairs)) for v, pairs in adj.items()}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        if not self.vertex_ids:
            return True
        seen = {self.vertex_ids[0]}
        stack = [self.vertex_ids[0]]
        while stack:
            v = stack.pop()
            for _, w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.num_vertices

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PlanarGraph)
            and self._coords == other._coords
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self.vertex_ids, self.edge_ids))

    def __repr__(self) -> str:
        return f"PlanarGraph({self.num_vertices} vertices, {self.num_edges} edges)"

    # -- faces -----------------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        """Orbits of the face-tracing rule.

        Arriving at ``head`` along edge ``e``, the walk continues with the
        clockwise predecessor of ``e`` in the rotation at ``head``.  With a
        counterclockwise rotation system this traces bounded faces
        counterclockwise and the unbounded face clockwise.  The outer face is
        the orbit through the bottom-most vertex with the smallest walk area.
        """
        if not self._edges:
            return (Face(0, (), True),)

        rot_index = {
            v: {e: i for i, e in enumerate(edges)} for v, edges in self.rotation.items()
        }

        def next_directed(d: DirectedEdge) -> DirectedEdge:
            edges_at_head = self.rotation[d.head]
            i = rot_index[d.head][d.edge]
            e2 = edges_at_head[(i - 1) % len(edges_at_head)]
            u, w = self._edges[e2]
            other = w if u == d.head else u
            return DirectedEdge(e2, d.head, other)

        all_directed = []
        for e in self.edge_ids:
            u, w = self._edges[e]
            all_directed.append(DirectedEdge(e, u, w))
            all_directed.append(DirectedEdge(e, w, u))

        seen: set[tuple[int, int]] = set()
        walks: list[tuple[DirectedEdge, ...]] = []
        for start in all_directed:
            if (start.edge, start.tail) in seen:
                continue
            walk = []
            d = start
            while (d.edge, d.tail) not in seen:
                seen.add((d.edge, d.tail))
                walk.append(d)
                d = next_directed(d)
            walks.append(tuple(walk))

        # outer face: among orbits through the global bottom-most (y, x)
        # vertex of positive degree, the one with minimal signed area.
        active = [v for v in self.vertex_ids if self.adjacency[v]]
        v0 = min(active, key=lambda v: (self._coords[v][1], self._coords[v][0]))
        outer_idx = None
        best_area = None
        for i, walk in enumerate(walks):
            if any(d.tail == v0 for d in walk):
                area = polygon_signed_area2([self._coords[d.tail] for d in walk])
                if best_area is None or area < best_area:
                    best_area = area
                    outer_idx = i

        return tuple(
            Face(i, walk, i == outer_idx) for i, walk in enumerate(walks)
        )

    def outer_face(self) -> Face:
        for f in self.faces:
            if f.is_outer:
                return f
        raise AssertionError("no outer face")

    def bounded_faces(self) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if not f.is_outer)

    def locate_face(self, p: Point) -> Face:
        """Face of the embedding containing point p (p must avoid the drawing)."""
        from .errors import DegenerateCrossing

        for v in self.vertex_ids:
            if self._coords[v] == p:
                raise DegenerateCrossing(f"point {p} coincides with vertex {v}")
        for e in self.edge_ids:
            a, b = self.edge_segment(e)
            from .geometry import on_segment

            if on_segment(a, b, p):
                raise DegenerateCrossing(f"point {p} lies on edge {e}")
        for f in self.faces:
            if f.is_outer or not f.walk:
                continue
            poly = [self._coords[d.tail] for d in f.walk]
            if winding_number(poly, p) != 0:
                return f
        return self.outer_face()


# -- module operations ---------------------------------------------------------


def build_graph(
    vertices: Iterable[tuple[int, object, object]],
    edges: Iterable[tuple[int, int, int]],
) -> PlanarGraph:
    """Build a graph from (id, x, y) vertices and (id, u, v) edges.

    Coordinates may be ints, Fractions, or "p/q" strings; the counterclockwise
    rotation system is derived from the resulting geometry.
    """
    coords: dict[int, Point] = {}
    for vid, x, y in vertices:
        if vid in coords:
            raise ParseError(f"duplicate vertex id {vid}")
        coords[vid] = (_as_fraction(x), _as_fraction(y))
    edge_map: dict[int, tuple[int, int]] = {}
    for eid, u, w in edges:
        if eid in edge_map:
            raise ParseError(f"duplicate edge id {eid}")
        edge_map[eid] = (u, w)
    return PlanarGraph(coords, edge_map)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ParseError(f"bad coordinate {value!r} (int, Fraction, or 'p/q')")


def faces(graph: PlanarGraph) -> tuple[Face, ...]:
    return graph.faces


def outer_boundary_order(graph: PlanarGraph) -> tuple[int, ...]:
    """Vertices along the outer face in counterclockwise order.

    Cut vertices appearing several times on the walk are reported at their
    first occurrence; the cycle is rotated to start at the smallest id.
    """
    if not graph.is_connected():
        raise Disconnected("outer boundary requires a connected graph")
    if graph.num_vertices == 0:
        return ()
    if graph.num_edges == 0:
        return (graph.vertex_ids[0],)
    walk = graph.outer_face().walk
    # The outer orbit runs clockwise; reverse it to report ccw order.
    seq = [d.head for d in walk][::-1]
    start = seq.index(min(seq))
    seq = seq[start:] + seq[:start]
    out: list[int] = []
    seen: set[int] = set()
    for v in seq:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return tuple(out)


def deplete(graph: PlanarGraph, monomers: Iterable[int]) -> PlanarGraph:
    """Induced subgraph on the complement of ``monomers``; embedding inherited."""
    m = set(monomers)
    for v in m:
        if not graph.has_vertex(v):
            raise UnknownVertex(f"no vertex {v}")
    coords = {v: graph.coord(v) for v in graph.vertex_ids if v not in m}
    edges = {
        e: uv
        for e, uv in ((e, graph.edge_ends(e)) for e in graph.edge_ids)
        if uv[0] not in m and uv[1] not in m
    }
    surviving = set(edges)
    rotation = {
        v: tuple(e for e in graph.rotation[v] if e in surviving)
        for v in coords
    }
    return PlanarGraph(coords, edges, rotation=rotation, _validated=True)


# -- file format -----------------------------------------------------------------


@dataclass(frozen=True)
class LineSpec:
    """Raw polyline from a graph file; ``site`` optionally binds it to a vertex."""

    points: tuple[Point, ...]
    site: Optional[int] = None


@dataclass(frozen=True)
class GraphDocument:
    graph: PlanarGraph
    weights: dict[int, Scalar]
    lines: tuple[LineSpec, ...] = ()


def parse_graph(text: str) -> GraphDocument:
    """Parse the JSON graph format; inverse of :func:`serialize_graph`."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ParseError("top-level value must be an object")

    vertices = []
    for i, v in enumerate(data.get("vertices", [])):
        try:
            vertices.append((int(v["id"]), v["x"], v["y"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"vertices[{i}]: {exc}") from None

    edges = []
    weights: dict[int, Scalar] = {}
    for i, e in enumerate(data.get("edges", [])):
        try:
            eid = int(e["id"])
            edges.append((eid, int(e["u"]), int(e["v"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"edges[{i}]: {exc}") from None
        re_part = parse_rational(e["w_re"]) if "w_re" in e else Fraction(1)
        im_part = parse_rational(e["w_im"]) if "w_im" in e else Fraction(0)
        weights[eid] = Scalar(re_part, im_part)

    graph = build_graph(vertices, edges)

    lines: list[LineSpec] = []
    disorder = data.get("disorder")
    if disorder is not None:
        for i, line in enumerate(disorder.get("lines", [])):
            try:
                pts = tuple(
                    (parse_rational(px), parse_rational(py))
                    for px, py in line["points"]
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"disorder.lines[{i}]: {exc}") from None
            site = line.get("site")
            lines.append(LineSpec(pts, None if site is None else int(site)))

    return GraphDocument(graph, weights, tuple(lines))


def serialize_graph(
    graph: PlanarGraph,
    weights: Optional[Mapping[int, Scalar]] = None,
    lines: Sequence[LineSpec] = (),
) -> str:
    """Serialize graph (+ optional weights and disorder lines) to JSON text."""
    vs = [
        {
            "id": v,
            "x": format_rational(graph.coord(v)[0]),
            "y": format_rational(graph.coord(v)[1]),
        }
        for v in graph.vertex_ids
    ]
    es = []
    for e in graph.edge_ids:
        u, w = graph.edge_ends(e)
        entry = {"id": e, "u": u, "v": w}
        if weights is not None:
            value = weights[e]
            entry["w_re"] = format_rational(value.re)
            entry["w_im"] = format_rational(value.im)
        es.append(entry)
    doc: dict = {"vertices": vs, "edges": es}
    if lines:
        doc["disorder"] = {
            "lines": [
                {
                    "points": [
                        [format_rational(x), format_rational(y)] for x, y in spec.points
                    ],
                    **({"site": spec.site} if spec.site is not None else {}),
                }
                for spec in lines
            ]
        }
    return json.dumps(doc, indent=1)
