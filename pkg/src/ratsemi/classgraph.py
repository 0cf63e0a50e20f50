"""Elementary transformations and the multigraph of conjugacy classes in [P].

Vertices are affine conjugacy classes of polynomials reachable from P by
chains of elementary transformations V o U -> U o V.  Each decomposition
class of a vertex contributes one directed edge to the class of its
elementary transformation.
"""
from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field

from .affine import conjugacy_test, normal_form
from .decomposition import Decomposition, DecompositionClass, all_splittings
from .exchange import function_to_json, mobius_to_json
from .rational import Mobius, RationalFunction, compose
from .special import SpecialInputError, is_special_polynomial

__all__ = [
    "ClassGraph",
    "Edge",
    "betti_rank",
    "build_class_graph",
    "conjugacy_test",
    "elementary_transform",
]


def elementary_transform(D: Decomposition) -> RationalFunction:
    """U o V for D = (V, U)."""
    return compose(D.right, D.left, None)


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    decomposition: DecompositionClass
    # conjugate(U o V, witness) equals the target vertex representative
    witness: Mobius

    @property
    def degrees(self) -> tuple[int, int]:
        return self.decomposition.degrees


@dataclass
class ClassGraph:
    vertices: list[RationalFunction]
    edges: list[Edge] = field(default_factory=list)
    basepoint: int = 0
    complete: bool = True
    include_trivial: bool = False

    def signature(self) -> list[tuple[int, int, int]]:
        """Sorted (out-degree, in-degree, loops) per vertex: an isomorphism invariant."""
        outd, ind, loops = Counter(), Counter(), Counter()
        for e in self.edges:
            if e.source == e.target:
                loops[e.source] += 1
            else:
                outd[e.source] += 1
                ind[e.target] += 1
        return sorted((outd[i], ind[i], loops[i]) for i in range(len(self.vertices)))

    def to_json(self) -> dict:
        return {
            "vertices": [function_to_json(v) for v in self.vertices],
            "edges": [
                {
                    "source": e.source,
                    "target": e.target,
                    "left": function_to_json(e.decomposition.left),
                    "right": function_to_json(e.decomposition.right),
                    "degrees": list(e.degrees),
                    "trivial": e.decomposition.trivial,
                    "witness": mobius_to_json(e.witness),
                }
                for e in self.edges
            ],
            "basepoint": self.basepoint,
            "complete": self.complete,
            "include_trivial": self.include_trivial,
        }

    def to_dot(self) -> str:
        lines = ["digraph Gamma {"]
        for i, v in enumerate(self.vertices):
            label = json.dumps(str(v))
            shape = ", shape=doublecircle" if i == self.basepoint else ""
            lines.append(f"  v{i} [label={label}{shape}];")
        for e in self.edges:
            dv, du = e.degrees
            lines.append(f'  v{e.source} -> v{e.target} [label="{dv}x{du}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_class_graph(P, max_vertices: int = 64, include_trivial: bool = False) -> ClassGraph:
    """Breadth-first closure of [P] under elementary transformations.

    Raises SpecialInputError for special P.  When more than ``max_vertices``
    classes appear the exploration stops and the graph is flagged incomplete.
    """
    F = P if isinstance(P, RationalFunction) else RationalFunction(P)
    if not F.is_polynomial():
        raise ValueError("class graphs are built for polynomials only")
    report = is_special_polynomial(F)
    if report.is_special:
        raise SpecialInputError(f"input is {report.kind.value}; the class graph is infinite or undefined")
    start, _ = normal_form(F.num)
    graph = ClassGraph([RationalFunction(start)], include_trivial=include_trivial)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        Pi = graph.vertices[i]
        for cls in all_splittings(Pi):
            if cls.trivial and not include_trivial:
                continue
            hat = elementary_transform(cls.representative)
            j, nu = _locate(graph.vertices, hat)
            if j is None:
                if len(graph.vertices) >= max_vertices:
                    graph.complete = False
                    return graph
                form, nu = normal_form(hat.num)
                graph.vertices.append(RationalFunction(form))
                j = len(graph.vertices) - 1
                queue.append(j)
            graph.edges.append(Edge(i, j, cls, nu))
    return graph


def _locate(vertices: list[RationalFunction], F: RationalFunction) -> tuple[int | None, Mobius | None]:
    for j, v in enumerate(vertices):
        if v.degree != F.degree:
            continue
        mu = conjugacy_test(F.num, v.num)
        if mu is not None:
            return j, mu
    return None, None


class IncompleteGraphError(ValueError):
    pass


def betti_rank(G: ClassGraph) -> int:
    """First Betti number E - V + C of the underlying undirected multigraph."""
    if not G.complete:
        raise IncompleteGraphError("graph exploration stopped at the vertex bound")
    parent = list(range(len(G.vertices)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in G.edges:
        ra, rb = find(e.source), find(e.target)
        if ra != rb:
            parent[ra] = rb
    components = len({find(i) for i in range(len(G.vertices))})
    return len(G.edges) - len(G.vertices) + components
