"""GKM graphs of the flag variety and of Hessenberg / Lusztig varieties.

The vertices are always all of W.  An edge joins u and u s_beta and is
recorded once, from the endpoint u with u(beta) negative, so that the
tangent weight ``weight_at_u = -u(beta)`` is a positive root.  A Hessenberg
variety with root set M keeps exactly the edges with beta in M.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .hess import RootIdeal, gkm_admissible
from .rootsys import Root, RootSystem, is_negative, neg, root_system
from .weyl import (
    LaurentPolyQ,
    WeylElement,
    all_elements,
    bruhat_leq,
    from_word,
    reflection,
)


class NonGenericCoweight(ValueError):
    pass


class NotSmooth(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    u: WeylElement
    v: WeylElement
    beta: Root
    weight_at_u: Root

    @property
    def weight_at_v(self) -> Root:
        return neg(self.weight_at_u)


class GKMGraph:
    def __init__(self, rs: RootSystem, edges):
        self.rs = rs
        self.vertices: tuple[WeylElement, ...] = all_elements(rs)
        self.index = {w: k for k, w in enumerate(self.vertices)}
        self.edges: tuple[Edge, ...] = tuple(
            sorted(edges, key=lambda e: (self.index[e.u], self.rs.root_index[e.beta]))
        )

    def edge_set(self) -> frozenset:
        return frozenset((e.u, e.v, e.beta, e.weight_at_u) for e in self.edges)

    def degrees(self) -> dict[WeylElement, int]:
        deg = {w: 0 for w in self.vertices}
        for e in self.edges:
            deg[e.u] += 1
            deg[e.v] += 1
        return deg

    def incident(self):
        """For each vertex, the tangent weights of its edges at that vertex."""
        at = {w: [] for w in self.vertices}
        for e in self.edges:
            at[e.u].append(e.weight_at_u)
            at[e.v].append(e.weight_at_v)
        return at

    def __repr__(self):
        return f"GKMGraph({self.rs.name}, {len(self.vertices)} vertices, {len(self.edges)} edges)"


@lru_cache(maxsize=None)
def _curve_data(rs: RootSystem):
    # every (u, beta) with u(beta) < 0, i.e. every curve from its representative
    refl = [reflection(rs, b) for b in rs.positive_roots]
    out = []
    for u in all_elements(rs):
        for k, beta in enumerate(rs.positive_roots):
            img = u(beta)
            if is_negative(img):
                out.append((k, Edge(u, u * refl[k], beta, neg(img))))
    return tuple(out)


def gkm_flag(rs: RootSystem) -> GKMGraph:
    return GKMGraph(rs, [e for _, e in _curve_data(rs)])


def gkm_hessenberg(rs: RootSystem, M: RootIdeal) -> GKMGraph:
    """Keep the curve {u, u s_beta} iff beta lies in M."""
    return GKMGraph(rs, [e for k, e in _curve_data(rs) if M.bits >> k & 1])


def gkm_lusztig(rs: RootSystem, w: WeylElement) -> GKMGraph:
    """Edges of Y_w(s) from the Bruhat criterion s_beta <= w, edge by edge."""
    if not gkm_admissible(rs, w):
        raise NotSmooth(f"{w} is not (rationally) smooth")
    edges = []
    for u in all_elements(rs):
        for beta in rs.positive_roots:
            img = u(beta)
            if not is_negative(img):
                continue
            s = reflection(rs, beta)
            if bruhat_leq(s, w):
                edges.append(Edge(u, u * s, beta, neg(img)))
    return GKMGraph(rs, edges)


def graphs_equal(a: GKMGraph, b: GKMGraph) -> bool:
    if a.rs is not b.rs:
        raise ValueError("graphs over different root systems")
    return a.edge_set() == b.edge_set()


# --- Bialynicki-Birula cells ------------------------------------------------

def coweight_pairing(r: Root, xi) -> int:
    return sum(c * x for c, x in zip(r, xi))


def is_generic(g: GKMGraph, xi) -> bool:
    return all(coweight_pairing(e.weight_at_u, xi) != 0 for e in g.edges)


def default_coweight(g: GKMGraph):
    """(1, n+1, (n+1)^2, ...), bumped by +1 in every slot until generic."""
    n = g.rs.rank
    xi = tuple((n + 1) ** k for k in range(n))
    while not is_generic(g, xi):
        xi = tuple(x + 1 for x in xi)
    return xi


def cell_dimensions(g: GKMGraph, xi=None) -> dict[WeylElement, int]:
    """Number of edges at u whose tangent weight at u pairs positively with xi.

    With xi dominant this is #{beta in M : u(beta) < 0}, and it is l(u) on
    the full flag variety.
    """
    if xi is None:
        xi = default_coweight(g)
    dims = {w: 0 for w in g.vertices}
    for u, weights in g.incident().items():
        for wt in weights:
            p = coweight_pairing(wt, xi)
            if p == 0:
                raise NonGenericCoweight(f"coweight {tuple(xi)} vanishes on weight {wt}")
            if p > 0:
                dims[u] += 1
    return dims


def poincare_polynomial(g: GKMGraph, xi=None) -> LaurentPolyQ:
    out: dict[int, int] = {}
    for d in cell_dimensions(g, xi).values():
        out[d] = out.get(d, 0) + 1
    return LaurentPolyQ(out)


def hessenberg_poincare_by_permutations(h) -> LaurentPolyQ:
    """sum over sigma in S_n of q^#{(i, j) : i < j <= h(i), sigma(i) > sigma(j)}."""
    n = len(h)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, h[i])]
    out: dict[int, int] = {}
    for sigma in permutations(range(n)):
        k = sum(1 for i, j in pairs if sigma[i] > sigma[j])
        out[k] = out.get(k, 0) + 1
    return LaurentPolyQ(out)


# --- export -----------------------------------------------------------------

def _word_label(w: WeylElement) -> str:
    return "[" + "".join(str(i) for i in w.reduced_word) + "]"


def to_json(g: GKMGraph) -> dict:
    return {
        "family": g.rs.family,
        "rank": g.rs.rank,
        "vertices": [list(w.reduced_word) for w in g.vertices],
        "edges": [
            {
                "u": g.index[e.u],
                "v": g.index[e.v],
                "beta": list(e.beta),
                "weight_at_u": list(e.weight_at_u),
            }
            for e in g.edges
        ],
    }


def from_json(data) -> GKMGraph:
    if isinstance(data, str):
        data = json.loads(data)
    rs = root_system(data["family"], data["rank"])
    verts = [from_word(rs, word) for word in data["vertices"]]
    edges = [
        Edge(verts[e["u"]], verts[e["v"]], tuple(e["beta"]), tuple(e["weight_at_u"]))
        for e in data["edges"]
    ]
    return GKMGraph(rs, edges)


def export_graph(g: GKMGraph, format: str = "json") -> str:
    if format == "json":
        return json.dumps(to_json(g), indent=1)
    if format != "dot":
        raise ValueError(f"unknown format {format!r}")
    lines = [f"graph {g.rs.name} {{"]
    for k, w in enumerate(g.vertices):
        lines.append(f'  w{k} [label="{_word_label(w)}"];')
    for e in g.edges:
        beta = ",".join(str(c) for c in e.beta)
        lines.append(f'  w{g.index[e.u]} -- w{g.index[e.v]} [label="{beta}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
