"""Regular maps as flag systems, Euler characteristics, and underlying graphs.

A regular triple (x, y, z) for G turns G itself into the flag set of a map:
vertices, edges and faces are the right cosets of <x, y>, <x, z> and <y, z>,
and incidence is nonempty coset intersection.  The Euler characteristic comes
out two independent ways: counting cosets, and the closed form
|G| (1/|<x,y>| - 1/4 + 1/|<y,z>|), which must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .groups import PermGroup, intersection
from .integers import FactoredInteger, factor
from .triples import GeneratingTriple, check_triple


class MapStructureError(ValueError):
    pass


@dataclass(frozen=True)
class MultiGraph:
    """Vertex count plus an edge multiset of unordered pairs; loops excluded."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]  # sorted pairs, sorted lexicographically

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise MapStructureError("loops are not allowed in a multigraph")
            if not (0 <= u < v < self.n_vertices):
                raise MapStructureError("edge endpoint out of range")

    @staticmethod
    def from_pairs(n: int, pairs) -> "MultiGraph":
        normalized = sorted(tuple(sorted(p)) for p in pairs)
        return MultiGraph(n, tuple(normalized))

    def degree_sequence(self) -> list[int]:
        deg = [0] * self.n_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def simple_pairs(self) -> list[tuple[int, int]]:
        return sorted(set(self.edges))

    def multiplicities(self) -> dict[tuple[int, int], int]:
        mult: dict[tuple[int, int], int] = {}
        for e in self.edges:
            mult[e] = mult.get(e, 0) + 1
        return mult

    def to_dot(self, name: str = "graph0") -> str:
        lines = [f'graph "{name}" {{']
        for u, v in self.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RegularMapModel:
    """Flag-system model of the regular map of a triple."""

    group: PermGroup
    triple: GeneratingTriple
    vertex_stab: PermGroup  # <x, y>
    edge_stab: PermGroup    # <x, z>
    face_stab: PermGroup    # <y, z>
    n_vertices: int
    n_edges: int
    n_faces: int
    elem_vertex: tuple[int, ...]
    elem_edge: tuple[int, ...]
    elem_face: tuple[int, ...]

    @property
    def valency(self) -> int:
        meet = intersection(self.vertex_stab, self.edge_stab)
        return self.vertex_stab.order // meet.order

    @property
    def face_length(self) -> int:
        meet = intersection(self.face_stab, self.edge_stab)
        return self.face_stab.order // meet.order

    def edge_vertices(self) -> list[tuple[int, ...]]:
        """For each edge coset, the sorted tuple of incident vertex cosets."""
        inc: list[set[int]] = [set() for _ in range(self.n_edges)]
        for e, v in zip(self.elem_edge, self.elem_vertex):
            inc[e].add(v)
        return [tuple(sorted(s)) for s in inc]

    def edge_faces(self) -> list[tuple[int, ...]]:
        inc: list[set[int]] = [set() for _ in range(self.n_edges)]
        for e, f in zip(self.elem_edge, self.elem_face):
            inc[e].add(f)
        return [tuple(sorted(s)) for s in inc]

    def to_record(self) -> dict:
        chi = euler_characteristic_counted(self)
        fi = factor(chi)
        graph_tag = None
        try:
            g = underlying_graph(self)
        except MapStructureError:
            g = None
        if g is not None:
            mc = is_multicycle(g)
            if mc:
                graph_tag = f"C{mc[0]}^({mc[1]})"
            else:
                cn = is_cartesian_square_of_cycle(g)
                if cn:
                    graph_tag = f"C{cn}xC{cn}"
        return {
            "vertices": self.n_vertices,
            "edges": self.n_edges,
            "faces": self.n_faces,
            "valency": self.valency,
            "face_length": self.face_length,
            "chi": chi,
            "factorization": fi.dot_string(),
            "squarefree": fi.squarefree,
            "graph": graph_tag,
        }


def build_map(G: PermGroup, triple: GeneratingTriple) -> RegularMapModel:
    """Materialize the coset spaces and incidence of a regular triple's map."""
    if triple.kind != "regular" or not check_triple(G, triple.elements, "regular"):
        raise MapStructureError("build_map needs a valid regular triple")
    x, y, z = triple.elements
    gv = G.subgroup([x, y])
    ge = G.subgroup([x, z])
    gf = G.subgroup([y, z])
    lv, _ = G.coset_labels(gv)
    le, _ = G.coset_labels(ge)
    lf, _ = G.coset_labels(gf)
    return RegularMapModel(
        group=G,
        triple=triple,
        vertex_stab=gv,
        edge_stab=ge,
        face_stab=gf,
        n_vertices=max(lv) + 1,
        n_edges=max(le) + 1,
        n_faces=max(lf) + 1,
        elem_vertex=tuple(lv),
        elem_edge=tuple(le),
        elem_face=tuple(lf),
    )


def euler_characteristic_closed(G: PermGroup, triple: GeneratingTriple) -> FactoredInteger:
    """|G| (1/|<x,y>| - 1/4 + 1/|<y,z>|), exact, factored by trial division."""
    if triple.kind != "regular" or not check_triple(G, triple.elements, "regular"):
        raise MapStructureError("closed Euler formula needs a valid regular triple")
    x, y, z = triple.elements
    gv = G.subgroup([x, y])
    gf = G.subgroup([y, z])
    chi = G.order * (
        Fraction(1, gv.order) - Fraction(1, 4) + Fraction(1, gf.order)
    )
    if chi.denominator != 1:
        raise AssertionError("closed Euler formula did not yield an integer")
    return factor(int(chi))


def euler_characteristic_counted(m: RegularMapModel) -> int:
    return m.n_vertices - m.n_edges + m.n_faces


def underlying_graph(m: RegularMapModel) -> MultiGraph:
    """Vertices are <x,y>-cosets; each edge coset contributes one edge.

    An edge coset meeting only one vertex coset would be a loop; no map in
    scope produces one, so that case is a structural error.
    """
    pairs = []
    for ends in m.edge_vertices():
        if len(ends) == 1:
            raise MapStructureError("edge incident to a single vertex (loop)")
        if len(ends) != 2:
            raise AssertionError("edge incident to more than two vertices")
        pairs.append(ends)
    return MultiGraph.from_pairs(m.n_vertices, pairs)


def build_multicycle(n: int, lam: int) -> MultiGraph:
    """C_n^(lam): the n-cycle with every edge replaced by lam parallel edges."""
    if n < 2 or lam < 1:
        raise ValueError("need n >= 2 and multiplicity >= 1")
    pairs = []
    for i in range(n if n > 2 else 1):
        pairs.extend([(i, (i + 1) % n)] * lam)
    if n == 2:
        # a 2-cycle is the double edge; lam copies of it
        pairs = [(0, 1)] * (2 * lam)
    return MultiGraph.from_pairs(n, pairs)


def build_cartesian_square(n: int) -> MultiGraph:
    """C_n box C_n on n^2 vertices, 4-regular."""
    if n < 3:
        raise ValueError("need n >= 3")
    pairs = []
    for i in range(n):
        for j in range(n):
            v = i * n + j
            pairs.append((v, i * n + (j + 1) % n))
            pairs.append((v, ((i + 1) % n) * n + j))
    return MultiGraph.from_pairs(n * n, pairs)


def is_multicycle(g: MultiGraph) -> Optional[tuple[int, int]]:
    """Recognize C_n^(lam); returns (n, lam) or None.

    The simple quotient must be a single cycle with every multiplicity equal.
    A 2-vertex multigraph with 2*lam parallel edges is the n = 2 case (the
    2-cycle is itself a double edge).
    """
    n = g.n_vertices
    if n < 2 or not g.edges:
        return None
    mult = g.multiplicities()
    if n == 2:
        if set(mult) != {(0, 1)}:
            return None
        m = mult[(0, 1)]
        return (2, m // 2) if m % 2 == 0 and m >= 2 else None
    lams = set(mult.values())
    if len(lams) != 1:
        return None
    lam = lams.pop()
    simple = g.simple_pairs()
    if len(simple) != n:
        return None
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for u, v in simple:
        adj[u].append(v)
        adj[v].append(u)
    if any(len(nb) != 2 for nb in adj.values()):
        return None
    # single cycle: walk it
    seen = {0}
    prev, cur = 0, adj[0][0]
    while cur != 0:
        seen.add(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    return (n, lam) if len(seen) == n else None


def is_cartesian_square_of_cycle(g: MultiGraph) -> Optional[int]:
    """Recognize C_n box C_n (n >= 3) by backtracking isomorphism to a model.

    After cheap screens (n^2 vertices, simple, 4-regular, connected), a
    model torus is mapped onto the graph: the image of one vertex is pinned
    (the model is vertex-transitive), its four neighbors are assigned in all
    ways, and the rest propagates through common-neighbor constraints.
    """
    size = g.n_vertices
    n = round(size**0.5)
    if n < 3 or n * n != size:
        return None
    mult = g.multiplicities()
    if any(m != 1 for m in mult.values()):
        return None
    if len(g.edges) != 2 * size:
        return None
    adj: list[set[int]] = [set() for _ in range(size)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    if any(len(a) != 4 for a in adj):
        return None
    # connectivity
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != size:
        return None
    model = build_cartesian_square(n)
    madj: list[set[int]] = [set() for _ in range(size)]
    for u, v in model.edges:
        madj[u].add(v)
        madj[v].add(u)
    return n if _torus_iso(madj, adj, n) else None


def _torus_iso(madj: list[set[int]], adj: list[set[int]], n: int) -> bool:
    """Map the model torus onto the target graph, pinning model vertex 0 -> 0."""
    import itertools

    size = n * n
    m0_nbrs = sorted(madj[0])
    t0_nbrs = sorted(adj[0])
    order = _model_processing_order(madj, size)
    for assignment in itertools.permutations(t0_nbrs):
        mapping = {0: 0}
        used = {0}
        ok = True
        for mv, tv in zip(m0_nbrs, assignment):
            mapping[mv] = tv
            used.add(tv)
        for mv in order:
            if mv in mapping:
                continue
            mapped_nbrs = [mapping[w] for w in madj[mv] if w in mapping]
            cands = None
            for t in mapped_nbrs:
                s = {w for w in adj[t] if w not in used}
                cands = s if cands is None else (cands & s)
            if not cands or len(cands) != 1:
                ok = False
                break
            tv = cands.pop()
            mapping[mv] = tv
            used.add(tv)
        if not ok or len(mapping) != size:
            continue
        if all(
            {mapping[w] for w in madj[v]} == adj[mapping[v]] for v in range(size)
        ):
            return True
    return False


def _model_processing_order(madj: list[set[int]], size: int) -> list[int]:
    """Placement order preferring vertices with the most already-placed neighbors.

    Diagonal vertices (two placed neighbors) then come before axis vertices,
    whose images are forced by elimination among a placed vertex's leftover
    neighbors.  Lazy max-heap keyed by placed-neighbor count.
    """
    import heapq

    placed = {0} | set(madj[0])
    counts = [len(madj[v] & placed) for v in range(size)]
    heap = [(-counts[v], v) for v in range(size) if v not in placed]
    heapq.heapify(heap)
    order: list[int] = []
    while heap:
        negc, v = heapq.heappop(heap)
        if v in placed:
            continue
        if -negc != counts[v]:
            heapq.heappush(heap, (-counts[v], v))
            continue
        order.append(v)
        placed.add(v)
        for w in madj[v]:
            if w not in placed:
                counts[w] += 1
                heapq.heappush(heap, (-counts[w], w))
    return order
