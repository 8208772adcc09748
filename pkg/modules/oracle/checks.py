"""Brute-force oracles on concrete graphs.

Verification returns report objects rather than raising, so one run can
cover every Q-polynomial ordering of a graph.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, List, Optional, TextIO, Tuple

import numpy as np

from core.algebra import Number, RationalPolynomial, fmt, is_exact, snap_rational
from core.drg import (
    TOLERANCE,
    IntersectionArray,
    QPolyOrdering,
    dual_eigenvalues,
    spectrum,
    validate,
)
from core.errors import NotDistanceRegular
from modules.terwilliger.polynomial import terwilliger_polynomial
from modules.triples.laws import TripleLaw, triple_laws
from .graphs import ConcreteGraph, _make

log = logging.getLogger(__name__)


def _neighbour_counts(g: ConcreteGraph, x: int, D: int) -> np.ndarray:
    """counts[y, j] = number of neighbours of y at distance j from x, j = 0..D+1."""
    d = g.distances[x]
    onehot = (d[:, None] == np.arange(D + 2)[None, :]).astype(np.int32)
    return g.adjacency @ onehot


def check_distance_regular(g: ConcreteGraph) -> IntersectionArray:
    dist = g.distances
    D = int(dist.max())
    rows = np.arange(g.n)
    counts = _neighbour_counts(g, 0, D)
    ref_c, ref_a, ref_b = (np.zeros(D + 2, dtype=np.int64) for _ in range(3))
    for i in range(D + 1):
        y = int(np.flatnonzero(dist[0] == i)[0])
        ref_c[i] = counts[y, i - 1] if i > 0 else 0
        ref_a[i] = counts[y, i]
        ref_b[i] = counts[y, i + 1]

    for x in range(g.n):
        d = dist[x].astype(np.int64)
        counts = counts if x == 0 else _neighbour_counts(g, x, D)
        found = {
            "c_i": np.where(d > 0, counts[rows, np.maximum(d - 1, 0)], 0),
            "a_i": counts[rows, d],
            "b_i": counts[rows, d + 1],
        }
        expected = {"c_i": ref_c[d], "a_i": ref_a[d], "b_i": ref_b[d]}
        for quantity in ("c_i", "a_i", "b_i"):
            bad = np.flatnonzero(found[quantity] != expected[quantity])
            if bad.size:
                y = int(bad[0])
                raise NotDistanceRegular(x, y, int(d[y]), quantity, int(expected[quantity][y]), int(found[quantity][y]))
    ia = validate([int(v) for v in ref_b[:D]] + [int(v) for v in ref_c[1:D + 1]], D)
    log.info("%s is distance-regular with array %s", g.name, ia)
    return ia


def local_graph(g: ConcreteGraph, x: int) -> ConcreteGraph:
    nbrs = sorted(g.graph[x])
    pos = {v: i for i, v in enumerate(nbrs)}
    edges = [(pos[u], pos[v]) for u, v in g.graph.subgraph(nbrs).edges()]
    return _make(f"local graph of {g.name} at {x}", [g.labels[v] for v in nbrs], edges)


def local_spectrum(g: ConcreteGraph, x: int) -> List[float]:
    """Eigenvalues of the local adjacency matrix, descending."""
    nbrs = np.array(sorted(g.graph[x]))
    sub = g.adjacency[nbrs][:, nbrs].toarray().astype(float)
    return sorted(np.linalg.eigvalsh(sub).tolist(), reverse=True)


def non_principal_eigenvalues(g: ConcreteGraph, x: int) -> List[float]:
    """Local spectrum with one copy of the local valency removed.

    The principal eigenvalue is only known when the local graph is regular;
    otherwise the whole local spectrum is returned.
    """
    eigs = local_spectrum(g, x)
    nbrs = np.array(sorted(g.graph[x]))
    if not eigs:
        return eigs
    degrees = np.asarray(g.adjacency[nbrs][:, nbrs].sum(axis=1)).ravel()
    if (degrees != degrees[0]).any():
        log.debug("%s: local graph at %d is not regular, keeping its full spectrum", g.name, x)
        return eigs
    eigs.pop(int(np.argmin([abs(e - degrees[0]) for e in eigs])))
    return eigs


def triple_count(g: ConcreteGraph, x: int, y: int, z: int, i: int, j: int, k: int) -> int:
    d = g.distances
    return int(np.count_nonzero((d[x] == i) & (d[y] == j) & (d[z] == k)))


# --- triple law oracle ---

@dataclass
class SpearReport:
    graph: str
    ordering: Optional[str]
    passed: bool = True
    checked: Dict[Tuple[int, int], int] = field(default_factory=dict)
    witness: Optional[dict] = None

    @property
    def total(self) -> int:
        return sum(self.checked.values())

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "ordering": self.ordering,
            "passed": self.passed,
            "checked": {f"i={i},delta={d}": n for (i, d), n in sorted(self.checked.items())},
            "total": self.total,
            "witness": self.witness,
        }


def _integer_law(law: TripleLaw) -> Optional[Tuple[int, int, int]]:
    """(L, σL, ρL) with L the common denominator, or None for float laws."""
    if not (is_exact(law.sigma) and is_exact(law.rho)):
        return None
    s, r = Fraction(law.sigma), Fraction(law.rho)
    L = lcm(s.denominator, r.denominator)
    return L, int(s * L), int(r * L)


def _shell_counts(rows: np.ndarray, shell: np.ndarray, target: int) -> np.ndarray:
    """C[y, z] = #{u in shell : d(u, y) = d(u, z) = target} for y, z indexing ``rows``."""
    M = (rows[:, shell] == target).astype(np.float64)
    return np.rint(M @ M.T).astype(np.int64)


def verify_spear(g: ConcreteGraph, ordering: Optional[QPolyOrdering] = None, ia: Optional[IntersectionArray] = None,
                 laws: Optional[Dict[Tuple[int, int], TripleLaw]] = None, tolerance: float = TOLERANCE) -> SpearReport:
    """Check [i,i+1,i+1] = σ_i[1,2,2] + ρ_{i,δ} for every base vertex, local pair and 1 <= i <= D-1."""
    if laws is None:
        if ordering is None:
            raise ValueError("verify_spear needs an ordering or explicit laws")
        ia = ia or check_distance_regular(g)
        spec = spectrum(ia)
        laws = triple_laws(ia, dual_eigenvalues(ia, spec, ordering, tolerance=tolerance))
    D = g.diameter
    report = SpearReport(g.name, str(ordering) if ordering else None)
    exact = {key: _integer_law(law) for key, law in laws.items()}
    dist = g.distances

    for x in range(g.n):
        nbrs = np.array(sorted(g.graph[x]))
        rows = dist[nbrs]
        delta = rows[:, nbrs].astype(np.int64)
        off = ~np.eye(len(nbrs), dtype=bool)
        base = _shell_counts(rows, dist[x] == 1, 2)
        for i in range(1, D):
            count = base if i == 1 else _shell_counts(rows, dist[x] == i, i + 1)
            for d in (1, 2):
                law = laws[(i, d)]
                mask = off & (delta == d)
                if not mask.any():
                    continue
                integer = exact[(i, d)]
                if integer is not None:
                    L, sL, rL = integer
                    bad = mask & (count * L != sL * base + rL)
                else:
                    bad = mask & (np.abs(count - (float(law.sigma) * base + float(law.rho))) > tolerance)
                report.checked[(i, d)] = report.checked.get((i, d), 0) + int(mask.sum())
                if bad.any() and report.passed:
                    a, b = np.argwhere(bad)[0]
                    report.passed = False
                    report.witness = {
                        "x": x, "y": int(nbrs[a]), "z": int(nbrs[b]), "i": i, "delta": d,
                        "count": int(count[a, b]), "count122": int(base[a, b]),
                        "predicted": fmt(law.predict(int(base[a, b]))),
                    }
                    log.warning("%s: triple law fails at %s", g.name, report.witness)
    log.info("%s ordering %s: triple law %s over %d pairs", g.name, report.ordering,
             "holds" if report.passed else "FAILS", report.total)
    return report


# --- Terwilliger oracle ---

@dataclass
class TerwilligerReport:
    graph: str
    ordering: Optional[str]
    passed: bool = True
    vertices: int = 0
    eigenvalues: int = 0
    zeros: List[Number] = field(default_factory=list)
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "ordering": self.ordering,
            "passed": self.passed,
            "vertices": self.vertices,
            "eigenvalues": self.eigenvalues,
            "zeros": self.zeros,
            "witness": self.witness,
        }


def verify_terwilliger(g: ConcreteGraph, ordering: Optional[QPolyOrdering] = None,
                       ia: Optional[IntersectionArray] = None, T: Optional[RationalPolynomial] = None,
                       tolerance: float = TOLERANCE) -> TerwilligerReport:
    """T(η) >= 0 for every non-principal local eigenvalue η at every vertex.

    Exact values (η snapped to a rational) are compared with 0 directly; float
    values are allowed down to -tolerance.
    """
    if T is None:
        ia = ia or check_distance_regular(g)
        T = terwilliger_polynomial(ia, dual_eigenvalues(ia, spectrum(ia), ordering, tolerance=tolerance)).T
    report = TerwilligerReport(g.name, str(ordering) if ordering else None)
    cache: Dict[Number, Number] = {}
    zeros = set()
    for x in range(g.n):
        report.vertices += 1
        for raw in non_principal_eigenvalues(g, x):
            eta = snap_rational(raw, tolerance)
            if eta not in cache:
                cache[eta] = T(eta)
            value = cache[eta]
            report.eigenvalues += 1
            exact = is_exact(value)
            if (value == 0) if exact else abs(value) <= tolerance:
                zeros.add(eta)
            elif (value < 0 if exact else value < -tolerance) and report.passed:
                report.passed = False
                report.witness = {"x": x, "eta": eta, "T(eta)": value}
                log.warning("%s: T(%s) = %s < 0 at vertex %d", g.name, fmt(eta), fmt(value), x)
    report.zeros = sorted(zeros, key=float)
    log.info("%s ordering %s: Terwilliger check %s, zeros at %s", g.name, report.ordering,
             "holds" if report.passed else "FAILS", ", ".join(fmt(z) for z in report.zeros))
    return report


def export_edge_list(g: ConcreteGraph, stream: TextIO) -> int:
    """Write ``u v`` lines, 0-indexed with u < v; returns the number of edges."""
    edges = sorted((min(u, v), max(u, v)) for u, v in g.graph.edges())
    for u, v in edges:
        stream.write(f"{u} {v}\n")
    return len(edges)
