"""Root systems of finite type, roots in the simple-root basis, Weyl group
elements as integer matrices acting on the root lattice.

Cartan entries are derived once from the standard Euclidean realization of
each family and afterwards all pairings come from the Cartan matrix.

>>> rs = build_root_system("A", 2)
>>> [r for r in rs.positive_roots]
[(1, 0), (0, 1), (1, 1)]
>>> reflect(rs, 1, (0, 1))
(1, 1)
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction

Root = tuple  # tuple[int, ...] of simple-root coordinates

_MAX_COMPONENT_RANK = 8


class RootSystemError(ValueError):
    pass


def _realization(family: str, rank: int) -> list[list[Fraction]]:
    """Simple roots of the standard (Bourbaki) realization."""
    h = Fraction(1, 2)
    if family == "A":
        dim = rank + 1
        vecs = [_unit(dim, i) - _unit(dim, i + 1) for i in range(rank)]
    elif family in "BCD":
        dim = rank
        vecs = [_unit(dim, i) - _unit(dim, i + 1) for i in range(rank - 1)]
        if family == "B":
            vecs.append(_unit(dim, rank - 1))
        elif family == "C":
            vecs.append(2 * _unit(dim, rank - 1))
        else:
            vecs.append(_unit(dim, rank - 2) + _unit(dim, rank - 1))
    elif family == "E":
        dim = 8
        e = [_unit(dim, i) for i in range(8)]
        e8 = [
            h * (e[0] + e[7] - e[1] - e[2] - e[3] - e[4] - e[5] - e[6]),
            e[0] + e[1],
            e[1] - e[0],
            e[2] - e[1],
            e[3] - e[2],
            e[4] - e[3],
            e[5] - e[4],
            e[6] - e[5],
        ]
        vecs = e8[:rank]
    elif family == "F":
        e = [_unit(4, i) for i in range(4)]
        vecs = [e[1] - e[2], e[2] - e[3], e[3], h * (e[0] - e[1] - e[2] - e[3])]
    elif family == "G":
        e = [_unit(3, i) for i in range(3)]
        vecs = [e[0] - e[1], -2 * e[0] + e[1] + e[2]]
    else:
        raise RootSystemError(f"unknown family {family!r}")
    return [v.coords for v in vecs]


class _Vec:
    # minimal exact vector for building realizations
    def __init__(self, coords):
        self.coords = [Fraction(c) for c in coords]

    def __add__(self, other):
        return _Vec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        return _Vec(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return _Vec(-a for a in self.coords)

    def __rmul__(self, c):
        return _Vec(c * a for a in self.coords)


def _unit(dim, i):
    return _Vec(1 if j == i else 0 for j in range(dim))


def _valid_pair(family: str, rank: int) -> bool:
    if not isinstance(rank, int) or rank < 1:
        return False
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False) and rank <= _MAX_COMPONENT_RANK


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Entry ``[i][j]`` is the pairing <alpha_j, alpha_i> = 2(a_j,a_i)/(a_i,a_i)."""
    if not _valid_pair(family, rank):
        raise RootSystemError(f"invalid root system {family}{rank}")
    vecs = _realization(family, rank)
    dot = lambda u, v: sum(a * b for a, b in zip(u, v))
    rows = []
    for ai in vecs:
        norm = dot(ai, ai)
        rows.append(tuple(int(2 * dot(aj, ai) / norm) for aj in vecs))
    return tuple(rows)


@dataclass(frozen=True, eq=False)
class RootSystem:
    components: tuple[tuple[str, int], ...]
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    # root -> (word, j) with root = s_word(alpha_j); used for reflections
    _witness: dict = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def family(self) -> str:
        return "x".join(f"{f}{n}" for f, n in self.components)

    @functools.cached_property
    def roots(self) -> frozenset:
        return frozenset(self.positive_roots) | frozenset(neg(r) for r in self.positive_roots)

    @functools.cached_property
    def _key(self):
        return (self.components, self.cartan)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"RootSystem({self.family})"

    def simple_root(self, i: int) -> Root:
        _check_index(self, i)
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def pairing(self, beta: Root, i: int) -> int:
        """<beta, alpha_i>, linear in beta."""
        row = self.cartan[i - 1]
        return sum(b * c for b, c in zip(beta, row))

    def is_root(self, beta) -> bool:
        return tuple(beta) in self.roots

    def to_json(self) -> dict:
        return {"components": [{"family": f, "rank": n} for f, n in self.components]}


def _check_index(rs: RootSystem, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise IndexError(f"simple index {i} out of range 1..{rs.rank}")


def neg(beta: Root) -> Root:
    return tuple(-b for b in beta)


def is_positive(beta: Root) -> bool:
    return any(b > 0 for b in beta) and all(b >= 0 for b in beta)


def positive_part(beta: Root) -> Root:
    """The positive root among beta and -beta."""
    return beta if is_positive(beta) else neg(beta)


def height(beta: Root) -> int:
    return sum(beta)


def _reflect_raw(cartan, i, beta):
    k = sum(b * c for b, c in zip(beta, cartan[i - 1]))
    if k == 0:
        return tuple(beta)
    out = list(beta)
    out[i - 1] -= k
    return tuple(out)


def _block_diagonal(blocks):
    n = sum(len(b) for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        m = len(b)
        for row in b:
            rows.append(tuple([0] * off + list(row) + [0] * (n - off - m)))
        off += m
    return tuple(rows)


@functools.lru_cache(maxsize=None)
def _build(components: tuple[tuple[str, int], ...]) -> RootSystem:
    if not components:
        raise RootSystemError("a root system needs at least one component")
    cartan = _block_diagonal([cartan_matrix(f, n) for f, n in components])
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    # orbit closure of the simple roots under simple reflections
    witness = {a: ((), i + 1) for i, a in enumerate(simple)}
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            word, j = witness[beta]
            for i in range(1, rank + 1):
                gamma = _reflect_raw(cartan, i, beta)
                if gamma not in witness:
                    witness[gamma] = ((i,) + word, j)
                    nxt.append(gamma)
        frontier = nxt
    positive = sorted((r for r in witness if is_positive(r)), key=lambda r: (height(r), tuple(-x for x in r)))
    return RootSystem(tuple(components), cartan, tuple(positive), witness)


def build_root_system(family: str, rank: int) -> RootSystem:
    """Irreducible root system of the given Cartan type."""
    if not _valid_pair(family, rank):
        raise RootSystemError(f"invalid root system {family}{rank}")
    return _build(((family, rank),))


def build_product(components) -> RootSystem:
    """Root system with block-diagonal Cartan matrix; ``components`` is a list
    of ``(family, rank)`` pairs."""
    comps = tuple((str(f).upper(), int(n)) for f, n in components)
    for f, n in comps:
        if not _valid_pair(f, n):
            raise RootSystemError(f"invalid root system {f}{n}")
    return _build(comps)


def parse_root_system(text: str) -> RootSystem:
    """Parse ``"A3"``, ``"B2xA1"`` or a JSON descriptor string."""
    text = text.strip()
    if text.startswith("{"):
        import json
        return from_json(json.loads(text))
    comps = []
    for part in text.replace("*", "x").split("x"):
        part = part.strip()
        if len(part) < 2 or not part[1:].isdigit():
            raise RootSystemError(f"cannot parse root system {text!r}")
        comps.append((part[0].upper(), int(part[1:])))
    return build_product(comps)


def from_json(doc: dict) -> RootSystem:
    try:
        comps = [(c["family"], c["rank"]) for c in doc["components"]]
    except (KeyError, TypeError) as exc:
        raise RootSystemError(f"malformed root-system descriptor: {exc}") from None
    return build_product(comps)


def reflect(rs: RootSystem, i: int, beta: Root) -> Root:
    """s_i(beta) = beta - <beta, alpha_i> alpha_i."""
    _check_index(rs, i)
    if len(beta) != rs.rank:
        raise ValueError("rank mismatch")
    return _reflect_raw(rs.cartan, i, tuple(beta))


def is_simply_laced(rs: RootSystem) -> bool:
    return all(f in "ADE" for f, _ in rs.components)


# ---------------------------------------------------------------- Weyl group


@dataclass(frozen=True)
class WeylElt:
    """Weyl group element; ``action[i][j]`` is the i-th coordinate of w(alpha_{j+1})."""

    action: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.action)

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return weyl_mul(self, other)

    def __call__(self, beta: Root) -> Root:
        return weyl_apply(self, beta)

    def is_identity(self) -> bool:
        return self.action == _identity_matrix(self.rank)


@functools.lru_cache(maxsize=None)
def _identity_matrix(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def identity(rs_or_rank) -> WeylElt:
    n = rs_or_rank if isinstance(rs_or_rank, int) else rs_or_rank.rank
    return WeylElt(_identity_matrix(n))


@functools.lru_cache(maxsize=None)
def _simple_reflection(rs: RootSystem, i: int) -> WeylElt:
    cols = [_reflect_raw(rs.cartan, i, rs.simple_root(j)) for j in range(1, rs.rank + 1)]
    return WeylElt(tuple(tuple(cols[j][k] for j in range(rs.rank)) for k in range(rs.rank)))


def simple_reflection(rs: RootSystem, i: int) -> WeylElt:
    _check_index(rs, i)
    return _simple_reflection(rs, i)


def weyl_apply(w: WeylElt, beta: Root) -> Root:
    if len(beta) != w.rank:
        raise ValueError("rank mismatch")
    return tuple(sum(r[j] * beta[j] for j in range(len(beta))) for r in w.action)


def weyl_mul(w: WeylElt, v: WeylElt) -> WeylElt:
    if w.rank != v.rank:
        raise ValueError("rank mismatch")
    n = w.rank
    a, b = w.action, v.action
    bt = tuple(zip(*b))
    return WeylElt(tuple(tuple(sum(x * y for x, y in zip(a[i], bt[j])) for j in range(n)) for i in range(n)))


def weyl_inv(w: WeylElt) -> WeylElt:
    """Inverse by repeated multiplication; Weyl groups are finite."""
    acc = w
    prev = identity(w.rank)
    while not acc.is_identity():
        prev = acc
        acc = weyl_mul(acc, w)
    return prev


def weyl_from_word(rs: RootSystem, word) -> WeylElt:
    w = identity(rs)
    for i in word:
        w = weyl_mul(w, simple_reflection(rs, i))
    return w


def reduced_word(rs: RootSystem, w: WeylElt) -> tuple[int, ...]:
    """A reduced word for w, found by stripping right descents."""
    word = []
    while not w.is_identity():
        for i in range(1, rs.rank + 1):
            if not is_positive(weyl_apply(w, rs.simple_root(i))):
                w = weyl_mul(w, simple_reflection(rs, i))
                word.append(i)
                break
    return tuple(reversed(word))


@functools.lru_cache(maxsize=None)
def _root_reflection(rs: RootSystem, beta: Root) -> WeylElt:
    word, j = rs._witness[beta]
    u = weyl_from_word(rs, word)
    return weyl_mul(weyl_mul(u, simple_reflection(rs, j)), weyl_inv(u))


def root_reflection(rs: RootSystem, beta: Root) -> WeylElt:
    """The reflection s_beta = u s_j u^{-1} where beta = u(alpha_j)."""
    beta = tuple(beta)
    if beta not in rs.roots:
        raise ValueError(f"{beta} is not a root")
    return _root_reflection(rs, beta)


# Type A: W = S_{n+1}, s_i <-> transposition (i, i+1).


def _require_type_a(rs: RootSystem) -> int:
    if len(rs.components) != 1 or rs.components[0][0] != "A":
        raise ValueError("permutation realization needs an irreducible type A system")
    return rs.rank


def _ea_minus_eb(n: int, a: int, b: int) -> Root:
    # e_a - e_b (1-based) in simple-root coordinates
    sign = 1 if a < b else -1
    lo, hi = min(a, b), max(a, b)
    return tuple(sign if lo <= k < hi else 0 for k in range(1, n + 1))


def weyl_from_permutation(rs: RootSystem, perm) -> WeylElt:
    """``perm`` maps 1..n+1 to itself (a dict or sequence of images, 1-based);
    w(e_a - e_b) = e_perm(a) - e_perm(b)."""
    n = _require_type_a(rs)
    if not isinstance(perm, dict):
        perm = {i + 1: int(x) for i, x in enumerate(perm)}
    if sorted(perm) != list(range(1, n + 2)) or sorted(perm.values()) != list(range(1, n + 2)):
        raise ValueError("not a permutation of 1..n+1")
    cols = [_ea_minus_eb(n, perm[j], perm[j + 1]) for j in range(1, n + 1)]
    return WeylElt(tuple(tuple(cols[j][k] for j in range(n)) for k in range(n)))


def weyl_from_cycles(rs: RootSystem, cycles) -> WeylElt:
    """Cycle notation, e.g. ``[[1, 5], [2, 3, 4]]`` for (1,5)(2,3,4)."""
    n = _require_type_a(rs)
    perm = {i: i for i in range(1, n + 2)}
    seen = set()
    for cyc in cycles:
        cyc = [int(x) for x in cyc]
        if any(x in seen or not 1 <= x <= n + 1 for x in cyc):
            raise ValueError(f"bad cycle {cyc}")
        seen.update(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a] = b
    return weyl_from_permutation(rs, perm)


def permutation_of(rs: RootSystem, w: WeylElt) -> dict[int, int]:
    """Inverse of :func:`weyl_from_permutation`."""
    n = _require_type_a(rs)
    word = reduced_word(rs, w)
    out = {}
    for x in range(1, n + 2):
        y = x
        for i in reversed(word):
            y = _swap(y, i)
        out[x] = y
    return out


def _swap(k, i):
    if k == i:
        return i + 1
    if k == i + 1:
        return i
    return k


def cycles_of(rs: RootSystem, w: WeylElt) -> list[list[int]]:
    perm = permutation_of(rs, w)
    seen, out = set(), []
    for start in sorted(perm):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        out.append(cyc)
    return out


def format_root(beta: Root) -> str:
    parts = []
    for k, c in enumerate(beta, start=1):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        sign = "-" if c < 0 else "+"
        parts.append((sign, f"{mag}a{k}"))
    if not parts:
        return "0"
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(s + t for s, t in parts[1:])
