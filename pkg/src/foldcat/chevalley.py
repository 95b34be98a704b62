"""Type A Chevalley group SL_{n+1}(Q): root elements, Weyl representatives,
charts of Bott-Samelson varieties, transition sequences and the chart maps
of topological fold morphisms.

Roots of A_n are written e_a - e_b (1-based a != b); x_{e_a - e_b}(c) is the
identity plus c in row a, column b. B is the upper triangular subgroup.
"""

from __future__ import annotations

import functools
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .curves import is_topological
from .fold import FoldMorphism
from .galleries import Gallery, SimpleSeq, betas
from .rootsys import Root, RootSystem, neg, reflect

DEFAULT_SEED = 20240601


def seed_from_env(default: int = DEFAULT_SEED) -> int:
    """FOLDCAT_SEED overrides the default seed of randomized checks."""
    raw = os.environ.get("FOLDCAT_SEED")
    return int(raw) if raw not in (None, "") else default


# ------------------------------------------------------------------ matrices


class Mat:
    """A square matrix of Fractions; immutable."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(Fraction(x) for x in r) for r in rows)

    @property
    def size(self):
        return len(self.rows)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other: "Mat") -> "Mat":
        cols = list(zip(*other.rows))
        return Mat([[sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols] for r in self.rows])

    def __eq__(self, other):
        return isinstance(other, Mat) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Mat(" + repr([[str(x) for x in r] for r in self.rows]) + ")"

    def inverse(self) -> "Mat":
        n = self.size
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            lead = aug[col][col]
            aug[col] = [x / lead for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return Mat([r[n:] for r in aug])

    def det(self) -> Fraction:
        n = self.size
        a = [list(r) for r in self.rows]
        out = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                out = -out
            out *= a[col][col]
            for r in range(col + 1, n):
                if a[r][col]:
                    f = a[r][col] / a[col][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return out

    def is_upper(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.size) for j in range(i))

    def is_identity(self) -> bool:
        return self == Mat.identity(self.size)


def _prod(mats: Sequence[Mat], n: int) -> Mat:
    out = Mat.identity(n)
    for m in mats:
        out = out * m
    return out


# ------------------------------------------------------------------ roots


def _check_type_a(rs: RootSystem) -> int:
    if len(rs.components) != 1 or rs.components[0][0] != "A":
        raise ValueError("the matrix backend supports irreducible type A only")
    return rs.rank


def root_pair(beta: Root) -> tuple[int, int]:
    """(a, b) with beta = e_a - e_b."""
    coords = [i for i, x in enumerate(beta) if x]
    if not coords:
        raise ValueError("zero vector is not a root")
    lo, hi = coords[0], coords[-1]
    sign = beta[lo]
    if any(beta[i] != sign for i in range(lo, hi + 1)) or sign not in (1, -1):
        raise ValueError(f"{beta} is not a root of type A")
    a, b = lo + 1, hi + 2
    return (a, b) if sign > 0 else (b, a)


def root_from_pair(n: int, a: int, b: int) -> Root:
    lo, hi = min(a, b), max(a, b)
    sign = 1 if a < b else -1
    return tuple(sign if lo - 1 <= i < hi - 1 else 0 for i in range(n))


def euclid_pairing(beta: Root, alpha: Root) -> int:
    """<beta, alpha> in the standard realization (all roots have length 2)."""
    a1, b1 = root_pair(beta)
    a2, b2 = root_pair(alpha)
    return (a1 == a2) - (a1 == b2) - (b1 == a2) + (b1 == b2)


def _is_root(n, beta) -> bool:
    try:
        root_pair(beta)
        return any(beta)
    except ValueError:
        return False


# ------------------------------------------------------------------ elements


def root_element(n: int, beta: Root, c) -> Mat:
    a, b = root_pair(beta)
    rows = [[int(i == j) for j in range(n + 1)] for i in range(n + 1)]
    rows[a - 1][b - 1] = Fraction(c)
    return Mat(rows)


def s_elt(n: int, beta: Root, c=1) -> Mat:
    c = Fraction(c)
    if not c:
        raise ZeroDivisionError("s_alpha(c) needs c != 0")
    return root_element(n, beta, c) * root_element(n, neg(beta), -1 / c) * root_element(n, beta, c)


def h_elt(n: int, beta: Root, c) -> Mat:
    return s_elt(n, beta, c) * s_elt(n, beta, 1).inverse()


@functools.lru_cache(maxsize=None)
def sigma(n: int, alpha: Root, beta: Root) -> int:
    """The sign with s_alpha x_beta(t) s_alpha^{-1} = x_{s_alpha beta}(sigma t)."""
    s = s_elt(n, alpha, 1)
    m = s * root_element(n, beta, 1) * s.inverse()
    target = _reflect_root(alpha, beta)
    a, b = root_pair(target)
    val = m[a - 1, b - 1]
    if m != root_element(n, target, val) or val not in (1, -1):
        raise AssertionError("conjugate of a root element is not a root element")
    return int(val)


def _reflect_root(alpha: Root, beta: Root) -> Root:
    k = euclid_pairing(beta, alpha)
    return tuple(b - k * a for a, b in zip(alpha, beta))


def gallery_letter(g: Gallery, k: int) -> Mat:
    """gamma_k as a group element: e or s_{alpha_k}(1)."""
    n = g.seq.rs.rank
    if g.bits[k - 1]:
        return s_elt(n, g.seq.simple_root(k), 1)
    return Mat.identity(n + 1)


def _letter_root_image(g: Gallery, k: int, beta: Root) -> Root:
    return _reflect_root(g.seq.simple_root(k), beta) if g.bits[k - 1] else tuple(beta)


def sigma_gallery(g: Gallery, i: int, beta: Root) -> int:
    """sigma^{gamma,i}_beta = prod_{k<i} sigma^{gamma_k}_{gamma_{k+1}...gamma_i(beta)}."""
    n = g.seq.rs.rank
    out = 1
    cur = tuple(beta)
    for k in range(i, 0, -1):
        # cur = gamma_{k+1} ... gamma_i (beta)
        if k < i and g.bits[k - 1]:
            out *= sigma(n, g.seq.simple_root(k), cur)
        cur = _letter_root_image(g, k, cur)
    return out


# ------------------------------------------------------------------ charts


@dataclass(frozen=True)
class BSPoint:
    seq: SimpleSeq
    chart: Gallery
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        if len(self.coords) != len(self.seq) or self.chart.seq != self.seq:
            raise ValueError("chart data do not match the sequence")

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coords) + "]^" + str(self.chart)


def bs_point(s: SimpleSeq, g: Gallery, coords) -> BSPoint:
    _check_type_a(s.rs)
    return BSPoint(s, g, tuple(coords))


def _factor(g: Gallery, k: int, c) -> Mat:
    """x_{gamma_k(-alpha_k)}(c) gamma_k."""
    n = g.seq.rs.rank
    alpha = g.seq.simple_root(k)
    root = alpha if g.bits[k - 1] else neg(alpha)
    return root_element(n, root, c) * gallery_letter(g, k)


def prefix_product(pt: BSPoint, i: int) -> Mat:
    n = pt.seq.rs.rank
    return _prod([_factor(pt.chart, k, pt.coords[k - 1]) for k in range(1, i + 1)], n + 1)


def normal_form(pt: BSPoint, i: int) -> Mat:
    """x_{beta_1}(sigma c_1) ... x_{beta_i}(sigma c_i) gamma^i."""
    n = pt.seq.rs.rank
    g = pt.chart
    bs = betas(g)
    mats = [root_element(n, bs[k - 1], sigma_gallery(g, k, g.seq.simple_root(k)) * pt.coords[k - 1]) for k in range(1, i + 1)]
    mats += [gallery_letter(g, k) for k in range(1, i + 1)]
    return _prod(mats, n + 1)


@dataclass
class Transition:
    coords: tuple[Fraction, ...]
    steps: list[tuple[int, Fraction, Mat]] = field(default_factory=list)

    @property
    def sequence(self) -> list[Mat]:
        return [b for _, _, b in self.steps]

    def to_json(self) -> dict:
        return {
            "coords": [str(c) for c in self.coords],
            "steps": [{"i": i, "d": str(d), "b": [[str(x) for x in r] for r in b.rows]} for i, d, b in self.steps],
        }


def chart_coords(pt: BSPoint, target: Gallery) -> Transition | None:
    """Coordinates of pt in the chart of ``target`` with the transition
    sequence, or None when pt lies outside that chart."""
    s = pt.seq
    if target.seq != s:
        raise ValueError("target chart over a different sequence")
    n = s.rs.rank
    b = Mat.identity(n + 1)
    ds: list[Fraction] = []
    steps = []
    for k in range(1, len(s) + 1):
        M = b * _factor(pt.chart, k, pt.coords[k - 1])
        a = s.indices[k - 1] - 1  # rows a, a+1 carry alpha_k
        top, low = M[a, a], M[a + 1, a]
        if target.bits[k - 1]:
            if not low:
                return None
            d = top / low
        else:
            if not top:
                return None
            d = low / top
        b = _factor(target, k, d).inverse() * M
        if not b.is_upper():
            raise AssertionError("transition element left the Borel subgroup")
        ds.append(d)
        steps.append((k, d, b))
    out = Transition(tuple(ds), steps)
    # b_i = [[d]]^{-1} [[c]] for every i
    tgt = BSPoint(s, target, out.coords)
    for i, _, bi in steps:
        if prefix_product(tgt, i).inverse() * prefix_product(pt, i) != bi:
            raise AssertionError("transition sequence inconsistent with prefix products")
    return out


def same_point(p1: BSPoint, p2: BSPoint) -> bool:
    if p1.seq != p2.seq:
        return False
    t = chart_coords(p1, p2.chart)
    return t is not None and t.coords == p2.coords


def fold_chart_roots(g: Gallery, i: int, k: int) -> set[Root]:
    """Positive roots tau_k ... tau_{i+1} alpha_i with tau_j in {e, s_j}."""
    cur = {g.seq.simple_root(i)}
    for j in range(i + 1, k + 1):
        aj = g.seq.indices[j - 1]
        cur = cur | {reflect(g.seq.rs, aj, r) for r in cur}
    return {r for r in cur if all(x >= 0 for x in r)}


def _closure(n: int, roots: set) -> set:
    out = set(roots)
    changed = True
    while changed:
        changed = False
        for a in list(out):
            for b in list(out):
                c = tuple(x + y for x, y in zip(a, b))
                if _is_root(n, c) and c not in out:
                    out.add(c)
                    changed = True
    return out


def fold_chart_shape_holds(g: Gallery, i: int, tr: Transition) -> bool:
    """For the fold at i: b_k = e for k < i and, for k >= i, b_k is a torus
    element times a unipotent supported on the additive closure of the
    allowed roots."""
    n = g.seq.rs.rank
    for k, _, b in tr.steps:
        if k < i:
            if not b.is_identity():
                return False
            continue
        allowed = _closure(n, fold_chart_roots(g, i, k))
        diag = [b[j, j] for j in range(n + 1)]
        if any(not x for x in diag):
            return False
        u = Mat([[b[r, c] / diag[r] for c in range(n + 1)] for r in range(n + 1)])
        for r in range(n + 1):
            for c in range(r + 1, n + 1):
                if u[r, c] and root_from_pair(n, r + 1, c + 1) not in allowed:
                    return False
    return True


# ------------------------------------------------------------------ psi


def psi_map(m: FoldMorphism, pt: BSPoint, check: bool = True) -> BSPoint:
    """The chart map of a topological morphism: coordinate c_k moves to
    position p(k) with a sign, all other target coordinates are 0."""
    if pt.seq != m.s:
        raise ValueError("point is not on the source of the morphism")
    _check_type_a(m.s.rs)
    if check:
        verdict = is_topological(m)
        if verdict.answer != "yes":
            raise ValueError(f"psi needs a topological morphism: {verdict.reason}")
    g = pt.chart
    target = m.phi(g)
    d = [Fraction(0)] * len(m.s2)
    for k in range(1, len(m.s) + 1):
        j = m.p(k)
        sg = sigma_gallery(target, j, m.s2.simple_root(j)) * sigma_gallery(g, k, m.s.simple_root(k))
        d[j - 1] = sg * pt.coords[k - 1]
    return BSPoint(m.s2, target, tuple(d))


# ------------------------------------------------------------------ relations


def random_rational(rng: random.Random, nonzero: bool = False, bound: int = 100) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if x or not nonzero:
            return x


def all_roots(n: int) -> list[Root]:
    return [root_from_pair(n, a, b) for a in range(1, n + 2) for b in range(1, n + 2) if a != b]


@dataclass
class RelationReport:
    n: int
    trials: int
    seed: int
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    excluded: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"n": self.n, "trials": self.trials, "seed": self.seed, "counts": self.counts,
                "excluded_comm1": self.excluded, "failures": self.failures[:20], "ok": self.ok}


def verify_relations(n: int, trials: int = 100, seed: int | None = None) -> RelationReport:
    """Check the defining relations of the Chevalley group at random rational
    parameters. Each relation is tried ``trials`` times."""
    if not 1 <= n <= 5:
        raise ValueError("verify_relations supports 1 <= n <= 5")
    seed = seed_from_env() if seed is None else seed
    rng = random.Random(seed)
    rep = RelationReport(n, trials, seed)
    roots = all_roots(n)
    I = Mat.identity(n + 1)
    xi: dict = {}
    sig: dict = {}
    eps: dict = {}

    def record(name, ok, detail):
        rep.counts[name] = rep.counts.get(name, 0) + 1
        if not ok:
            rep.failures.append({"relation": name, **detail})

    def x(b, c):
        return root_element(n, b, c)

    for _ in range(trials):
        al = rng.choice(roots)
        be = rng.choice(roots)
        c = random_rational(rng, nonzero=True)
        d = random_rational(rng, nonzero=True)
        info = {"alpha": list(al), "beta": list(be), "c": str(c), "d": str(d)}

        # R1
        record("R1", x(al, c) * x(al, d) == x(al, c + d), info)

        # R2: in type A only i = j = 1 can contribute
        be2 = be if be != neg(al) else al
        comm = x(al, c) * x(be2, d) * x(al, c).inverse() * x(be2, d).inverse()
        sm = tuple(a + b for a, b in zip(al, be2))
        if _is_root(n, sm):
            k = comm[root_pair(sm)[0] - 1, root_pair(sm)[1] - 1] / (c * d)
            stable = xi.setdefault((al, be2), k) == k
            record("R2", stable and k in (1, -1) and comm == x(sm, k * c * d), {**info, "beta": list(be2)})
        else:
            record("R2", comm == I, {**info, "beta": list(be2)})

        # R3
        s = s_elt(n, al, 1)
        record("R3", s * h_elt(n, be, c) * s.inverse() == h_elt(n, _reflect_root(al, be), c), info)

        # R4 with sigma(alpha, beta) = sigma(alpha, -beta)
        sb = _reflect_root(al, be)
        lhs = s * x(be, d) * s.inverse()
        val = lhs[root_pair(sb)[0] - 1, root_pair(sb)[1] - 1] / d
        stable = sig.setdefault((al, be), val) == val
        record("R4", stable and val in (1, -1) and lhs == x(sb, val * d) and val == sigma(n, al, neg(be)), info)

        # R5
        record("R5", h_elt(n, al, c) * x(be, d) * h_elt(n, al, c).inverse() == x(be, c ** euclid_pairing(be, al) * d), info)

        # comm:1 needs cd != -1; comm:2 is the cd = -1 case
        if c * d == -1:
            # the formula divides by cd + 1; draw a fresh d for this relation
            rep.excluded += 1
            while c * d == -1:
                d = random_rational(rng, nonzero=True)
        t = c * d + 1
        record("comm:1", x(al, c) * x(neg(al), d) == x(neg(al), d / t) * x(al, c * t) * h_elt(n, al, t), info)
        record("comm:2", x(al, c) * x(neg(al), -1 / c) == s * x(al, -1 / c) * h_elt(n, al, 1 / c), info)

        # comm: x_a(c) x_b(d) = x_b(d) x_a(c) x_{s_b a}(eps c d), needs a + b != 0
        rest = (x(be2, d) * x(al, c)).inverse() * x(al, c) * x(be2, d)
        if rest == I:
            e = 0
            good = True
        else:
            sa = _reflect_root(be2, al)
            a, b = root_pair(sa)
            e = rest[a - 1, b - 1] / (c * d)
            good = e in (1, -1) and rest == x(sa, e * c * d) and sa == sm
        stable = eps.setdefault((al, be2), e) == e
        record("comm", good and stable, {**info, "beta": list(be2)})
    return rep


def random_point(s: SimpleSeq, g: Gallery, rng: random.Random, nonzero=()) -> BSPoint:
    coords = [random_rational(rng, nonzero=(k + 1) in nonzero) for k in range(len(s))]
    return BSPoint(s, g, tuple(coords))
