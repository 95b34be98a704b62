"""T-curves between fixed points gamma and f_i(gamma), the moment graph, and
the topologicality test for fold morphisms."""

from __future__ import annotations

from dataclasses import dataclass, field

from .fold import FoldMorphism, pair_signs
from .galleries import Gallery, SimpleSeq, betas, enumerate_galleries, fold
from .rootsys import format_root, identity, is_simply_laced, neg, positive_part

MAX_GRAPH_LENGTH = 20


def t_curve_exists(g: Gallery, i: int) -> bool:
    """gamma and f_i(gamma) are joined by a T-curve iff no later wall is -beta_i."""
    if not 1 <= i <= len(g):
        raise IndexError(f"position {i} out of range 1..{len(g)}")
    bs = betas(g)
    target = neg(bs[i - 1])
    return all(bs[j] != target for j in range(i, len(bs)))


def missing_curves(s: SimpleSeq) -> list[tuple[Gallery, Gallery]]:
    """Pairs {gamma, f_i gamma} not joined by a T-curve, smaller gallery first."""
    out = []
    for g in enumerate_galleries(s):
        for i in range(1, len(s) + 1):
            if g.bits[i - 1] == 0 and not t_curve_exists(g, i):
                out.append((g, fold(g, i)))
    return out


@dataclass
class MomentGraph:
    seq: SimpleSeq
    vertices: list[Gallery]
    edges: list[tuple[Gallery, Gallery, int, tuple]] = field(default_factory=list)

    def to_dot(self) -> str:
        lines = ["graph bs {"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for a, b, _, label in self.edges:
            lines.append(f'  "{a}" -- "{b}" [label="{format_root(label)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "seq": list(self.seq.indices),
            "vertices": [str(v) for v in self.vertices],
            "edges": [{"from": str(a), "to": str(b), "position": i, "label": list(lab)} for a, b, i, lab in self.edges],
        }


def moment_graph(s: SimpleSeq) -> MomentGraph:
    if len(s) > MAX_GRAPH_LENGTH:
        raise ValueError(f"moment graph limited to words of length {MAX_GRAPH_LENGTH}")
    verts = enumerate_galleries(s)
    edges = []
    for g in verts:
        for i in range(1, len(s) + 1):
            if g.bits[i - 1] == 0 and t_curve_exists(g, i):
                edges.append((g, fold(g, i), i, positive_part(betas(g)[i - 1])))
    return MomentGraph(s, verts, edges)


@dataclass
class CurveVerdict:
    preserving: bool
    witnesses: list[tuple[Gallery, Gallery]]


def is_weakly_curve_preserving(m: FoldMorphism) -> CurveVerdict:
    """Every T-curve between gamma and f_i gamma must map to a T-curve between
    phi(gamma) and f_{p(i)} phi(gamma). Witnesses list failing pairs with the
    gallery carrying e at position i first."""
    bad = []
    for g in enumerate_galleries(m.s):
        for i in range(1, len(m.s) + 1):
            if g.bits[i - 1] == 0 and t_curve_exists(g, i):
                if not t_curve_exists(m.phi(g), m.p(i)):
                    bad.append((g, fold(g, i)))
    return CurveVerdict(not bad, bad)


@dataclass
class TopologicalVerdict:
    answer: str  # "yes", "no" or "unknown"
    reason: str = ""
    witnesses: list = field(default_factory=list)


def is_topological(m: FoldMorphism) -> TopologicalVerdict:
    eps = pair_signs(m.gamma0, m.delta0, m.p, identity(m.s.rs))
    if eps is None:
        return TopologicalVerdict("no", "(p, e, phi) is not a morphism")
    if any(e != 1 for e in eps):
        return TopologicalVerdict("no", f"sign {eps} of (p, e, phi) is not positive")
    wcp = is_weakly_curve_preserving(m)
    if not wcp.preserving:
        return TopologicalVerdict("no", "not weakly curve preserving", wcp.witnesses)
    if not is_simply_laced(m.s.rs):
        return TopologicalVerdict("unknown", "root system is not simply laced")
    return TopologicalVerdict("yes")
