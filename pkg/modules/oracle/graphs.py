"""Concrete distance-regular graphs on bitmask labels.

Subsets and binary words are stored as integer bitmasks, so the antipode of
a vertex in J(2D, D), the N-cube or the halved 2m-cube is its complement and
folding keeps min(x, x ^ full) as the class label.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from scipy.sparse import csr_array
from scipy.sparse.csgraph import shortest_path

from core.errors import DisconnectedGraph, GraphTooLarge

log = logging.getLogger(__name__)

MAX_VERTICES = 20000
_CHUNK = 512


@dataclass(eq=False)
class ConcreteGraph:
    name: str
    graph: nx.Graph
    labels: List[Any]
    complement: Optional[int] = None

    @property
    def n(self) -> int:
        return self.graph.number_of_nodes()

    @cached_property
    def adjacency(self) -> csr_array:
        return csr_array(nx.to_scipy_sparse_array(self.graph, nodelist=range(self.n), dtype=np.int32, format="csr"))

    @cached_property
    def distances(self) -> np.ndarray:
        """All-pairs distances as int8, BFS from every vertex in chunks."""
        out = np.empty((self.n, self.n), dtype=np.int8)
        for start in range(0, self.n, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, self.n))
            block = shortest_path(self.adjacency, directed=False, unweighted=True, indices=idx)
            if np.isinf(block).any():
                row, col = np.argwhere(np.isinf(block))[0]
                raise DisconnectedGraph(f"{self.name}: vertices {idx[row]} and {col} lie in different components")
            out[idx] = block.astype(np.int8)
        log.info("%s: distance matrix done (n = %d)", self.name, self.n)
        return out

    @property
    def diameter(self) -> int:
        return int(self.distances.max())

    def degree(self, x: int = 0) -> int:
        return self.graph.degree[x]


def distance_matrix(g: ConcreteGraph) -> np.ndarray:
    return g.distances


def _make(name: str, labels: Sequence[Any], edges: Iterable[Tuple[int, int]], complement: Optional[int] = None) -> ConcreteGraph:
    G = nx.Graph()
    G.add_nodes_from(range(len(labels)))
    G.add_edges_from(edges)
    log.info("%s: built, %d vertices, %d edges", name, G.number_of_nodes(), G.number_of_edges())
    return ConcreteGraph(name, G, list(labels), complement)


def _bits(x: int, N: int) -> List[int]:
    return [i for i in range(N) if x >> i & 1]


def _flip_edges(masks: Sequence[int], moves: Callable[[int], Iterable[int]]) -> List[Tuple[int, int]]:
    index = {m: i for i, m in enumerate(masks)}
    edges = []
    for i, m in enumerate(masks):
        for other in moves(m):
            j = index[other]
            if j > i:
                edges.append((i, j))
    return edges


def johnson(N: int, D: int) -> ConcreteGraph:
    masks = [sum(1 << i for i in c) for c in combinations(range(N), D)]

    def moves(m):
        inside = _bits(m, N)
        outside = [j for j in range(N) if not m >> j & 1]
        return (m ^ (1 << i) ^ (1 << j) for i in inside for j in outside)

    full = (1 << N) - 1 if N == 2 * D else None
    return _make(f"J({N},{D})", masks, _flip_edges(masks, moves), full)


def cube(N: int) -> ConcreteGraph:
    masks = list(range(1 << N))
    return _make(f"H({N},2)", masks, _flip_edges(masks, lambda m: (m ^ (1 << i) for i in range(N))), (1 << N) - 1)


def halved_cube(N: int) -> ConcreteGraph:
    masks = [m for m in range(1 << N) if bin(m).count("1") % 2 == 0]
    pairs = [(1 << i) | (1 << j) for i, j in combinations(range(N), 2)]
    full = (1 << N) - 1 if N % 2 == 0 else None
    return _make(f"1/2H({N},2)", masks, _flip_edges(masks, lambda m: (m ^ p for p in pairs)), full)


def folded(g: ConcreteGraph) -> ConcreteGraph:
    if g.complement is None:
        raise ValueError(f"{g.name} has no complement-antipode labelling to fold")
    full = g.complement
    canon = [min(lab, lab ^ full) for lab in g.labels]
    classes = sorted(set(canon))
    index = {c: i for i, c in enumerate(classes)}
    edges = set()
    for u, v in g.graph.edges():
        a, b = index[canon[u]], index[canon[v]]
        if a == b:
            raise ValueError(f"{g.name}: adjacent antipodes {g.labels[u]} and {g.labels[v]}")
        edges.add((min(a, b), max(a, b)))
    return _make(f"folded {g.name}", classes, sorted(edges))


def triangular(m: int) -> ConcreteGraph:
    g = johnson(m, 2)
    g.name = f"T({m})"
    return g


def grid(m: int) -> ConcreteGraph:
    labels = [(i, j) for i in range(m) for j in range(m)]
    edges = [(a, b) for a, b in combinations(range(m * m), 2)
             if labels[a][0] == labels[b][0] or labels[a][1] == labels[b][1]]
    return _make(f"{m}x{m} grid", labels, edges)


def petersen() -> ConcreteGraph:
    """Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint."""
    labels = [(1 << i) | (1 << j) for i, j in combinations(range(5), 2)]
    edges = [(a, b) for a, b in combinations(range(10), 2) if labels[a] & labels[b] == 0]
    return _make("Petersen", labels, edges)


def clebsch() -> ConcreteGraph:
    g = halved_cube(5)
    g.name = "Clebsch"
    return g


def schlafli() -> ConcreteGraph:
    """Local graph of the Gosset graph at +(3,3,-1,...,-1): vectors with inner product 8 against it."""
    def vec(pair, sign):
        v = -np.ones(8, dtype=np.int64)
        v[list(pair)] = 3
        return sign * v

    gosset = [(pair, s) for s in (1, -1) for pair in combinations(range(8), 2)]
    base = vec((0, 1), 1)
    labels = [(pair, s) for pair, s in gosset if int(vec(pair, s) @ base) == 8]
    V = np.array([vec(pair, s) for pair, s in labels])
    gram = V @ V.T
    edges = [(int(a), int(b)) for a, b in zip(*np.nonzero(np.triu(gram == 8, k=1)))]
    return _make("Schläfli", labels, edges)


# --- dispatcher ---

def _count(family: str, params: Sequence[int]) -> int:
    p = list(params)
    counts: Dict[str, Callable[[], int]] = {
        "johnson": lambda: comb(p[0], p[1]),
        "cube": lambda: 2 ** p[0],
        "halved-cube": lambda: 2 ** (p[0] - 1),
        "folded-cube": lambda: 2 ** (p[0] - 1),
        "folded-halved-cube": lambda: 2 ** (p[0] - 2),
        "folded-johnson": lambda: comb(p[0], p[0] // 2) // 2,
        "triangular": lambda: comb(p[0], 2),
        "grid": lambda: p[0] ** 2,
        "petersen": lambda: 10,
        "clebsch": lambda: 16,
        "schlafli": lambda: 27,
    }
    return counts[family]()


_ARITY = {
    "johnson": 2, "cube": 1, "halved-cube": 1, "folded-cube": 1, "folded-halved-cube": 1,
    "folded-johnson": 1, "triangular": 1, "grid": 1, "petersen": 0, "clebsch": 0, "schlafli": 0,
}

FAMILIES = tuple(_ARITY)


def build(family: str, params: Sequence[int] = (), max_vertices: int = MAX_VERTICES) -> ConcreteGraph:
    """Build a named family; folded-* families take the parameter of the cover (N for J(N, N/2) or the N-cube)."""
    if family not in _ARITY:
        raise ValueError(f"unknown family {family!r}, expected one of {', '.join(FAMILIES)}")
    params = [int(x) for x in params]
    if len(params) != _ARITY[family]:
        raise ValueError(f"{family} takes {_ARITY[family]} parameter(s), got {len(params)}")
    if family in ("folded-johnson", "folded-halved-cube") and params[0] % 2:
        raise ValueError(f"{family} needs an even N, got {params[0]}")
    n = _count(family, params)
    if n > max_vertices:
        raise GraphTooLarge(n, max_vertices)
    if family == "johnson":
        return johnson(*params)
    if family == "cube":
        return cube(*params)
    if family == "halved-cube":
        return halved_cube(*params)
    if family == "folded-cube":
        return folded(cube(*params))
    if family == "folded-halved-cube":
        return folded(halved_cube(*params))
    if family == "folded-johnson":
        return folded(johnson(params[0], params[0] // 2))
    if family == "triangular":
        return triangular(*params)
    if family == "grid":
        return grid(*params)
    return {"petersen": petersen, "clebsch": clebsch, "schlafli": schlafli}[family]()
