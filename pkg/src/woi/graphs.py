"""Weighted oriented graphs and the combinatorial queries the checks need.

A graph is a list of weighted vertices plus directed edges between them.
The underlying simple graph forgets orientation and weights.  Graphs are
immutable after construction; construction validates the document and
normalizes source and isolated vertices to weight 1.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations

from .errors import GraphError

SCHEMA = "woi/1"


@dataclass(frozen=True)
class Vertex:
    name: str
    weight: int


@dataclass(frozen=True)
class Classification:
    """Vertex kinds plus the weighted-vertex summary used by hypothesis checks."""

    kinds: Mapping[str, str]          # name -> source | sink | internal | isolated
    v_plus: tuple[str, ...]           # vertices of weight >= 2, declaration order
    v_plus_all_sinks: bool


@dataclass(frozen=True)
class SettingPath:
    """A directed length-2 path tail -> mid -> head with weighted middle vertex."""

    tail: str
    mid: str
    head: str
    induced: bool                     # no underlying edge between tail and head


class WeightedOrientedGraph:
    __slots__ = ("name", "vertices", "edges", "_index", "_out", "_in", "_under")

    def __init__(self, vertices: Sequence[Vertex], edges: Sequence[tuple[int, int]],
                 name: str | None = None):
        names = [v.name for v in vertices]
        if len(set(names)) != len(names):
            dup = next(x for x in names if names.count(x) > 1)
            raise GraphError(f"duplicate vertex name: {dup!r}")
        for v in vertices:
            if v.weight < 1:
                raise GraphError(f"nonpositive weight {v.weight} for vertex {v.name!r}")
        n = len(vertices)
        seen_pairs: set[frozenset[int]] = set()
        for t, h in edges:
            if not (0 <= t < n and 0 <= h < n):
                raise GraphError(f"edge ({t}, {h}) references an undeclared vertex")
            if t == h:
                raise GraphError(f"loop edge at {names[t]!r}")
            pair = frozenset((t, h))
            if pair in seen_pairs:
                raise GraphError(
                    f"duplicate edge between {names[t]!r} and {names[h]!r}")
            seen_pairs.add(pair)
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for t, h in edges:
            out[t].append(h)
            inn[h].append(t)
        # sources (and hence isolated vertices) always carry weight 1
        normalized = tuple(
            Vertex(v.name, 1 if not inn[j] else v.weight)
            for j, v in enumerate(vertices))
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "vertices", normalized)
        object.__setattr__(self, "edges", tuple((int(t), int(h)) for t, h in edges))
        object.__setattr__(self, "_index", {v.name: j for j, v in enumerate(normalized)})
        object.__setattr__(self, "_out", tuple(tuple(sorted(o)) for o in out))
        object.__setattr__(self, "_in", tuple(tuple(sorted(i)) for i in inn))
        object.__setattr__(self, "_under",
                           frozenset(frozenset(e) for e in self.edges))

    def __setattr__(self, key, value):
        raise AttributeError("WeightedOrientedGraph is immutable")

    def __eq__(self, other):
        return (isinstance(other, WeightedOrientedGraph)
                and self.name == other.name
                and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.name, self.vertices, self.edges))

    def __repr__(self):
        return (f"WeightedOrientedGraph(name={self.name!r}, "
                f"|V|={self.n}, |E|={len(self.edges)})")

    # -- construction ----------------------------------------------------

    @classmethod
    def build(cls, vertices: Iterable[tuple[str, int] | str],
              edges: Iterable[tuple[str, str]], name: str | None = None
              ) -> "WeightedOrientedGraph":
        """Convenience constructor from (name, weight) pairs and name edges."""
        vs = []
        for item in vertices:
            if isinstance(item, str):
                vs.append(Vertex(item, 1))
            else:
                vs.append(Vertex(str(item[0]), int(item[1])))
        index = {v.name: j for j, v in enumerate(vs)}
        idx_edges = []
        for t, h in edges:
            if t not in index:
                raise GraphError(f"edge endpoint {t!r} is not a declared vertex")
            if h not in index:
                raise GraphError(f"edge endpoint {h!r} is not a declared vertex")
            idx_edges.append((index[t], index[h]))
        return cls(vs, idx_edges, name=name)

    @classmethod
    def from_document(cls, doc: Mapping) -> "WeightedOrientedGraph":
        """Parse and validate the graph JSON document."""
        if not isinstance(doc, Mapping):
            raise GraphError("graph document must be a JSON object")
        if "schema" in doc and doc["schema"] != SCHEMA:
            raise GraphError(f"unsupported schema {doc['schema']!r}")
        if "vertices" not in doc or "edges" not in doc:
            raise GraphError("graph document needs 'vertices' and 'edges'")
        vs = []
        for item in doc["vertices"]:
            if not isinstance(item, Mapping) or "id" not in item:
                raise GraphError(f"vertex entry {item!r} lacks an 'id'")
            weight = item.get("weight", 1)
            if not isinstance(weight, int) or isinstance(weight, bool):
                raise GraphError(f"weight of vertex {item['id']!r} must be an integer")
            vs.append((str(item["id"]), weight))
        es = []
        for item in doc["edges"]:
            if not isinstance(item, Mapping) or "from" not in item or "to" not in item:
                raise GraphError(f"edge entry {item!r} lacks 'from'/'to'")
            es.append((str(item["from"]), str(item["to"])))
        return cls.build(vs, es, name=doc.get("name"))

    def to_document(self) -> dict:
        doc = {
            "schema": SCHEMA,
            "vertices": [{"id": v.name, "weight": v.weight} for v in self.vertices],
            "edges": [{"from": self.vertices[t].name, "to": self.vertices[h].name}
                      for t, h in self.edges],
        }
        if self.name is not None:
            doc["name"] = self.name
        return doc

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.vertices)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise GraphError(f"unknown vertex name {name!r}") from None

    def weight(self, name: str) -> int:
        return self.vertices[self.index(name)].weight

    @property
    def weight_map(self) -> dict[str, int]:
        return {v.name: v.weight for v in self.vertices}

    def out_neighbors(self, j: int) -> tuple[int, ...]:
        return self._out[j]

    def in_neighbors(self, j: int) -> tuple[int, ...]:
        return self._in[j]

    def underlying_edges(self) -> tuple[tuple[int, int], ...]:
        """Index pairs (i, j) with i < j, sorted."""
        return tuple(sorted(tuple(sorted(e)) for e in self._under))

    def adjacent(self, i: int, j: int) -> bool:
        return frozenset((i, j)) in self._under

    def degree(self, j: int) -> int:
        return len(set(self._out[j]) | set(self._in[j]))

    # -- classification ------------------------------------------------------

    def classify(self) -> Classification:
        kinds = {}
        for j, v in enumerate(self.vertices):
            has_in, has_out = bool(self._in[j]), bool(self._out[j])
            if not has_in and not has_out:
                kinds[v.name] = "isolated"
            elif not has_in:
                kinds[v.name] = "source"
            elif not has_out:
                kinds[v.name] = "sink"
            else:
                kinds[v.name] = "internal"
        v_plus = tuple(v.name for v in self.vertices if v.weight >= 2)
        all_sinks = all(not self._out[self._index[x]] for x in v_plus)
        return Classification(kinds=kinds, v_plus=v_plus, v_plus_all_sinks=all_sinks)

    # -- neighborhoods ------------------------------------------------------

    def neighborhood(self, names: Iterable[str], kind: str = "closed") -> tuple[str, ...]:
        idx = [self.index(x) for x in names]
        result: set[int] = set()
        for j in idx:
            if kind == "out":
                result.update(self._out[j])
            elif kind == "in":
                result.update(self._in[j])
            elif kind == "open":
                result.update(self._out[j])
                result.update(self._in[j])
            elif kind == "closed":
                result.update(self._out[j])
                result.update(self._in[j])
                result.add(j)
            else:
                raise GraphError(f"unknown neighborhood kind {kind!r}")
        return tuple(self.vertices[j].name for j in sorted(result))

    def induced_subgraph(self, keep: Iterable[str]) -> "WeightedOrientedGraph":
        """Induced subgraph on ``keep``; new sources are renormalized to weight 1."""
        keep_idx = {self.index(x) for x in keep}
        sub_vertices = [(v.name, v.weight) for j, v in enumerate(self.vertices)
                        if j in keep_idx]
        sub_edges = [(self.vertices[t].name, self.vertices[h].name)
                     for t, h in self.edges if t in keep_idx and h in keep_idx]
        return WeightedOrientedGraph.build(sub_vertices, sub_edges, name=None)

    def remove(self, drop: Iterable[str]) -> "WeightedOrientedGraph":
        gone = {self.index(x) for x in drop}
        return self.induced_subgraph(
            v.name for j, v in enumerate(self.vertices) if j not in gone)

    # -- bipartiteness -----------------------------------------------------

    def is_bipartite(self):
        """Two-color the underlying graph.

        Returns (True, (side0, side1)) or (False, odd_cycle) where the
        cycle is a vertex name sequence of odd length.
        """
        color = [-1] * self.n
        parent = [-1] * self.n
        for root in range(self.n):
            if color[root] != -1:
                continue
            color[root] = 0
            queue = [root]
            while queue:
                u = queue.pop(0)
                for w in sorted(set(self._out[u]) | set(self._in[u])):
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        parent[w] = u
                        queue.append(w)
                    elif color[w] == color[u]:
                        return False, self._odd_cycle(u, w, parent)
        side0 = tuple(v.name for j, v in enumerate(self.vertices) if color[j] == 0)
        side1 = tuple(v.name for j, v in enumerate(self.vertices) if color[j] == 1)
        return True, (side0, side1)

    def _odd_cycle(self, u: int, w: int, parent: list[int]) -> tuple[str, ...]:
        path_u, path_w = [u], [w]
        seen = {u: 0}
        x = u
        while parent[x] != -1:
            x = parent[x]
            seen[x] = len(path_u)
            path_u.append(x)
        x = w
        while x not in seen:
            x = parent[x]
            path_w.append(x)
        meet = x
        cycle = path_u[:seen[meet] + 1] + list(reversed(path_w[:path_w.index(meet)]))
        return tuple(self.vertices[j].name for j in cycle)


def parse_graph(doc: Mapping) -> WeightedOrientedGraph:
    return WeightedOrientedGraph.from_document(doc)


# -- motif enumeration -------------------------------------------------------
#
# All enumerations are exhaustive and deterministic in declaration order.


def _edge_pairs(D: WeightedOrientedGraph) -> list[tuple[int, int]]:
    return list(D.underlying_edges())


def triangles(D: WeightedOrientedGraph) -> list[tuple[str, ...]]:
    out = []
    for a, b, c in combinations(range(D.n), 3):
        if D.adjacent(a, b) and D.adjacent(b, c) and D.adjacent(a, c):
            out.append((D.vertices[a].name, D.vertices[b].name, D.vertices[c].name))
    return out


def cliques4(D: WeightedOrientedGraph) -> list[tuple[str, ...]]:
    out = []
    for quad in combinations(range(D.n), 4):
        if all(D.adjacent(a, b) for a, b in combinations(quad, 2)):
            out.append(tuple(D.vertices[j].name for j in quad))
    return out


def five_cycles(D: WeightedOrientedGraph) -> list[tuple[str, ...]]:
    """All 5-cycles of the underlying graph, induced or not.

    Each cycle appears once, as a vertex sequence canonical up to rotation
    and reflection (smallest vertex first, smaller neighbor second).
    """
    found = set()
    for quint in combinations(range(D.n), 5):
        rest = quint[1:]
        first = quint[0]
        from itertools import permutations
        for perm in permutations(rest):
            cyc = (first,) + perm
            if perm[0] > perm[-1]:
                continue  # reflection representative
            if all(D.adjacent(cyc[i], cyc[(i + 1) % 5]) for i in range(5)):
                found.add(cyc)
    return [tuple(D.vertices[j].name for j in cyc) for cyc in sorted(found)]


def induced_matchings(D: WeightedOrientedGraph, r: int) -> list[tuple[tuple[str, str], ...]]:
    """All induced matchings of exactly r edges of the underlying graph.

    Edges are pairwise vertex-disjoint and no underlying edge joins two
    distinct matching edges.
    """
    if r < 1:
        raise GraphError("induced matching size must be >= 1")
    edges = _edge_pairs(D)
    compatible = {}
    for i, (a, b) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            disjoint = len({a, b, c, d}) == 4
            joined = any(D.adjacent(u, v) for u in (a, b) for v in (c, d))
            compatible[(i, j)] = disjoint and not joined
    out = []

    def extend(chosen: list[int], start: int):
        if len(chosen) == r:
            out.append(tuple(
                (D.vertices[edges[i][0]].name, D.vertices[edges[i][1]].name)
                for i in chosen))
            return
        for i in range(start, len(edges)):
            if all(compatible[(j, i)] for j in chosen):
                chosen.append(i)
                extend(chosen, i + 1)
                chosen.pop()

    extend([], 0)
    return out


def gaps(D: WeightedOrientedGraph) -> list[tuple[tuple[str, str], ...]]:
    """Induced 2K2 pairs; the empty list means the graph is gap-free."""
    return induced_matchings(D, 2)


def enumerate_motifs(D: WeightedOrientedGraph, kind: str, r: int | None = None):
    if kind == "triangle":
        return triangles(D)
    if kind == "clique4":
        return cliques4(D)
    if kind == "cycle5":
        return five_cycles(D)
    if kind == "induced_matching":
        if r is None:
            raise GraphError("induced_matching needs the size r")
        return induced_matchings(D, r)
    if kind == "gap":
        return gaps(D)
    raise GraphError(f"unknown motif kind {kind!r}")


def detect_setting_paths(D: WeightedOrientedGraph) -> list[SettingPath]:
    """Directed length-2 paths through a weighted middle vertex.

    Both chain orders (tail, mid), (mid, head) and the reversed reading are
    covered because every in/out pair at the middle vertex is listed.  The
    ``induced`` flag records whether the endpoints are non-adjacent in the
    underlying graph.
    """
    out = []
    for j in range(D.n):
        if D.vertices[j].weight < 2:
            continue
        for a in D.in_neighbors(j):
            for b in D.out_neighbors(j):
                out.append(SettingPath(
                    tail=D.vertices[a].name,
                    mid=D.vertices[j].name,
                    head=D.vertices[b].name,
                    induced=not D.adjacent(a, b)))
    return out
