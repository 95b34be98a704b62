"""Fixed-point tuples on galleries: the divisibility criterion for membership
in the image of equivariant cohomology, an exact degreewise basis solver,
restriction along fold morphisms, the dual pushforward and the rank-one
localization sums.

A tuple lives on a *space*: either a word ``SimpleSeq`` (galleries of the
Bott-Samelson variety) or a ``RankOneSystem`` (the word (s_a, ..., s_a) for
the rank-one subgroup of a root a). Values are stored in gallery enumeration
order.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .fold import FoldMorphism
from .galleries import Gallery, betas, parse_gallery
from .linalg import Eliminator
from .polyring import Poly, RatFunc, monomials, residue, root_poly, weyl_act
from .rootsys import Root, RootSystem, neg, weyl_inv


@dataclass(frozen=True)
class RankOneSystem:
    """Galleries of the word (s_a, ..., s_a) of length ``length`` in the
    rank-one subgroup of ``alpha``; the only wall roots are +-alpha."""

    rs: RootSystem
    alpha: Root
    length: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        if not self.rs.is_root(self.alpha):
            raise ValueError(f"{self.alpha} is not a root")

    def __len__(self):
        return self.length

    def __str__(self):
        return f"rank-one({list(self.alpha)}, {self.length})"


Space = "SimpleSeq | RankOneSystem"


def _rs(space) -> RootSystem:
    return space.rs


def _keys(space) -> list[tuple[int, ...]]:
    return list(itertools.product((0, 1), repeat=len(space)))


@functools.lru_cache(maxsize=1 << 14)
def _rank_one_walls(alpha, bits):
    out = []
    parity = 0
    for b in bits:
        parity ^= b
        out.append(alpha if parity else neg(alpha))
    return tuple(out)


def walls(space, bits) -> tuple[Root, ...]:
    if isinstance(space, RankOneSystem):
        return _rank_one_walls(space.alpha, tuple(bits))
    return betas(Gallery(space, tuple(bits)))


def _check_roots(space) -> tuple[Root, ...]:
    if isinstance(space, RankOneSystem):
        return (space.alpha if any(x > 0 for x in space.alpha) else neg(space.alpha),)
    return space.rs.positive_roots


def label(space, bits) -> str:
    if isinstance(space, RankOneSystem):
        return "(" + ",".join("s" if b else "e" for b in bits) + ")"
    return str(Gallery(space, tuple(bits)))


def _parse_key(space, key) -> tuple[int, ...]:
    if isinstance(key, Gallery):
        if key.seq != space:
            raise ValueError(f"gallery {key} is not over {space}")
        return key.bits
    if isinstance(key, tuple) and all(b in (0, 1) for b in key):
        if len(key) != len(space):
            raise ValueError("wrong gallery length")
        return key
    if isinstance(space, RankOneSystem):
        body = str(key).strip()[1:-1]
        toks = [t.strip() for t in body.split(",")] if body.strip() else []
        if len(toks) != len(space) or any(t not in ("e", "s") for t in toks):
            raise ValueError(f"bad rank-one gallery {key!r}")
        return tuple(1 if t == "s" else 0 for t in toks)
    return parse_gallery(space, key).bits


class _Tuple:
    def __init__(self, space, values: Sequence):
        self.space = space
        self.values = tuple(values)
        if len(self.values) != 1 << len(space):
            raise ValueError("a tuple needs one value per gallery")

    @property
    def seq(self):
        return self.space

    def _index(self, key) -> int:
        bits = _parse_key(self.space, key)
        out = 0
        for b in bits:
            out = 2 * out + b
        return out

    def __getitem__(self, key):
        return self.values[self._index(key)]

    def items(self):
        return [(label(self.space, k), v) for k, v in zip(_keys(self.space), self.values)]

    def __eq__(self, other):
        return type(self) is type(other) and self.space == other.space and self.values == other.values

    def __hash__(self):
        return hash((self.space, self.values))

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.items())
        return f"{type(self).__name__}({body})"


class GkmClass(_Tuple):
    """A total map from galleries to polynomials."""

    @classmethod
    def from_map(cls, space, mapping: Mapping) -> "GkmClass":
        n = _rs(space).rank
        vals = [Poly.zero(n)] * (1 << len(space))
        seen = set()
        for key, v in mapping.items():
            bits = _parse_key(space, key)
            idx = int("".join(map(str, bits)) or "0", 2)
            vals[idx] = v if isinstance(v, Poly) else Poly.const(n, v)
            seen.add(idx)
        if len(seen) != len(vals):
            raise ValueError("tuple is not defined on every gallery")
        return cls(space, vals)

    @classmethod
    def constant(cls, space, c=1) -> "GkmClass":
        return cls(space, [Poly.const(_rs(space).rank, c)] * (1 << len(space)))

    def __add__(self, other):
        self._same(other)
        return GkmClass(self.space, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._same(other)
        return GkmClass(self.space, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, GkmClass):
            self._same(other)
            return GkmClass(self.space, [a * b for a, b in zip(self.values, other.values)])
        return GkmClass(self.space, [a * other for a in self.values])

    __rmul__ = __mul__

    def _same(self, other):
        if self.space != other.space:
            raise ValueError("tuples over different spaces")

    def is_zero(self):
        return all(v.is_zero() for v in self.values)

    def degree(self) -> int:
        return max((v.degree() for v in self.values), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {v.degree() for v in self.values if not v.is_zero()}
        return len(degs) <= 1 and all(v.is_homogeneous() for v in self.values)


class DualClass(_Tuple):
    """A total map from galleries to rational functions."""

    @classmethod
    def from_map(cls, space, mapping: Mapping) -> "DualClass":
        n = _rs(space).rank
        vals = [RatFunc(Poly.zero(n))] * (1 << len(space))
        for key, v in mapping.items():
            if isinstance(v, Poly):
                v = RatFunc(v)
            elif not isinstance(v, RatFunc):
                v = RatFunc(Poly.const(n, v))
            vals[int("".join(map(str, _parse_key(space, key))) or "0", 2)] = v
        return cls(space, vals)


# ------------------------------------------------------------ membership


@dataclass(frozen=True)
class Violation:
    alpha: Root
    gallery: str
    power: int
    remainder: Poly

    def __str__(self):
        return f"violation at alpha={list(self.alpha)}, gamma={self.gallery}: remainder {self.remainder} mod alpha^{self.power}"


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    violation: Violation | None = None

    def __bool__(self):
        return self.member


def _classes(space, alpha):
    """For every gallery gamma with J_alpha(gamma) nonempty: (index, |J|,
    [(index of delta, sign)]) over delta ~_alpha gamma with J(delta) in J(gamma)."""
    alpha = tuple(alpha)
    na = neg(alpha)
    out = []
    for idx, bits in enumerate(_keys(space)):
        ws = walls(space, bits)
        J = {k for k, b in enumerate(ws) if b == alpha}
        if not J:
            continue
        M = [k for k, b in enumerate(ws) if b == alpha or b == na]
        terms = []
        for mask in range(1 << len(M)):
            dbits = list(bits)
            for t, k in enumerate(M):
                if mask >> t & 1:
                    dbits[k] ^= 1
            dws = walls(space, dbits)
            Jd = {k for k, b in enumerate(dws) if b == alpha}
            if Jd <= J:
                didx = int("".join(map(str, dbits)), 2)
                terms.append((didx, -1 if len(Jd) % 2 else 1))
        out.append((idx, len(J), terms))
    return out


@functools.lru_cache(maxsize=4096)
def _cached_classes(space, alpha):
    return tuple((i, m, tuple(t)) for i, m, t in _classes(space, alpha))


def harterich_member(f: GkmClass, strict: bool = False) -> MembershipVerdict:
    """For every positive root alpha and gallery gamma, the signed sum of f over
    delta ~_alpha gamma with J_alpha(delta) in J_alpha(gamma) must be divisible
    by alpha^|J_alpha(gamma)|. Reports the first failure in (root, gallery) order.

    ``strict`` also requires coefficients in Z[1/2] (integers unless a type C
    component is present)."""
    space = f.space
    if strict:
        _check_strict(f)
    keys = _keys(space)
    for alpha in _check_roots(space):
        for idx, m, terms in _cached_classes(space, alpha):
            total = Poly.zero(_rs(space).rank)
            for didx, sgn in terms:
                v = f.values[didx]
                total = total + v if sgn > 0 else total - v
            res = residue(total, alpha, m)
            if res is not None:
                return MembershipVerdict(False, Violation(alpha, label(space, keys[idx]), m, res[1]))
    return MembershipVerdict(True)


def _check_strict(f: GkmClass):
    allow_two = any(fam == "C" for fam, _ in _rs(f.space).components)
    for v in f.values:
        for c in v.coefficients():
            d = c.denominator
            if allow_two:
                while d % 2 == 0:
                    d //= 2
            if d != 1:
                raise ValueError(f"coefficient {c} is outside the strict coefficient ring")


# ------------------------------------------------------------ basis solver


def _hyperplane_images(nvars: int, alpha: Root, degree: int):
    """Each degree-d monomial rewritten in coordinates (y_k = alpha, y_j = a_j
    for j != k) where k is the pivot of alpha. Returns (k, {monomial: Poly in y})."""
    coeffs = [Fraction(c) for c in alpha]
    k = next(i for i, c in enumerate(coeffs) if c)
    forms = []
    for i in range(nvars):
        if i == k:
            lin = [Fraction(0)] * nvars
            lin[k] = 1 / coeffs[k]
            for j in range(nvars):
                if j != k:
                    lin[j] = -coeffs[j] / coeffs[k]
            forms.append(Poly.linear(tuple(lin)))
        else:
            forms.append(Poly.var(nvars, i + 1))
    return k, {e: Poly(nvars, {e: 1}).substitute(forms) for e in monomials(nvars, degree)}


_image_cache: dict = {}


def _images_for(nvars, alpha, degree):
    key = (nvars, tuple(alpha), degree)
    if key not in _image_cache:
        _image_cache[key] = _hyperplane_images(nvars, alpha, degree)
    return _image_cache[key]


def congruence_rows(space, degree: int):
    """Linear equations in the unknown coefficients (gallery index * #monomials
    + monomial index) expressing all divisibility conditions in degree d."""
    n = _rs(space).rank
    monos = monomials(n, degree)
    mindex = {e: t for t, e in enumerate(monos)}
    nm = len(monos)
    for alpha in _check_roots(space):
        k, images = _images_for(n, alpha, degree)
        for _, m, terms in _cached_classes(space, alpha):
            # coefficient of each y-monomial with y_k exponent < m must vanish
            rows: dict = {}
            for didx, sgn in terms:
                for e, img in images.items():
                    col = didx * nm + mindex[e]
                    for ye, c in img.terms.items():
                        if ye[k] < m:
                            row = rows.setdefault(ye, {})
                            row[col] = row.get(col, 0) + sgn * c
            for row in rows.values():
                yield {c: v for c, v in row.items() if v}


def gkm_basis(space, degree: int, support=None) -> list[GkmClass]:
    """A basis over Q of the degree-d members; ``support`` optionally restricts
    to tuples vanishing outside the given galleries."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    n = _rs(space).rank
    monos = monomials(n, degree)
    nm = len(monos)
    keys = _keys(space)
    elim = Eliminator(len(keys) * nm)
    if support is not None:
        allowed = {_parse_key(space, g) for g in support}
        for idx, bits in enumerate(keys):
            if bits not in allowed:
                for t in range(nm):
                    elim.add({idx * nm + t: 1})
    for row in congruence_rows(space, degree):
        elim.add(row)
    out = []
    for vec in elim.nullspace():
        vals = []
        for idx in range(len(keys)):
            vals.append(Poly(n, {monos[t]: vec[idx * nm + t] for t in range(nm)}))
        out.append(GkmClass(space, vals))
    return out


def expected_dimension(space, degree: int) -> int:
    """sum_j C(r, j) * dim S_{d-j}: the rank of a free module with one generator
    in each degree j, C(r, j) times."""
    n = _rs(space).rank
    r = len(space)
    return sum(comb(r, j) * comb(degree - j + n - 1, n - 1) for j in range(0, min(r, degree) + 1))


# ------------------------------------------------------------ functoriality


def restrict(m: FoldMorphism, g: GkmClass) -> GkmClass:
    """gamma -> w^{-1} g(phi(gamma))."""
    if g.space != m.s2:
        raise ValueError(f"class lives on {g.space}, morphism target is {m.s2}")
    winv = weyl_inv(m.w)
    vals = []
    for bits in _keys(m.s):
        vals.append(weyl_act(winv, g[m.phi(Gallery(m.s, bits))]))
    return GkmClass(m.s, vals)


def dual_push(m: FoldMorphism, f: DualClass) -> DualClass:
    """phi(gamma) -> w f(gamma); zero off the image of phi."""
    if f.space != m.s:
        raise ValueError(f"class lives on {f.space}, morphism source is {m.s}")
    n = m.s.rs.rank
    vals = [RatFunc(Poly.zero(n))] * (1 << len(m.s2))
    for bits, v in zip(_keys(m.s), f.values):
        d = m.phi(Gallery(m.s, bits))
        vals[d.as_int()] = v.weyl_act(m.w)
    return DualClass(m.s2, vals)


def pairing(f: DualClass, g: GkmClass) -> RatFunc:
    if f.space != g.space:
        raise ValueError("classes over different spaces")
    total = RatFunc(Poly.zero(_rs(f.space).rank))
    for a, b in zip(f.values, g.values):
        if not a.is_zero() and not b.is_zero():
            total = total + a * b
    return total


# ------------------------------------------------------------ localization


@dataclass(frozen=True)
class LocalizationResult:
    value: RatFunc
    in_ring: bool


def localization_sum(space: RankOneSystem, K, k_map, L, l_map, f: GkmClass) -> LocalizationResult:
    """Sum over mu with mu^i = k_i (i in K) and mu_i = l_i (i in L) of
    f(mu) / prod_{i not in K, L} mu^i(-alpha). Constraint values are 0/"e" for
    the neutral element and 1/"s" for the reflection; positions are 1-based."""
    if not isinstance(space, RankOneSystem):
        raise TypeError("localization sums are defined on rank-one systems")
    K, L = set(K), set(L)
    if K & L:
        raise ValueError("constraint sets K and L overlap")
    ell = len(space)
    if not (K | L) <= set(range(1, ell + 1)):
        raise ValueError("constraint positions out of range")
    kv = {i: _ez(k_map[i]) for i in K}
    lv = {i: _ez(l_map[i]) for i in L}
    n = space.rs.rank
    a = root_poly(space.alpha)
    free = [i for i in range(1, ell + 1) if i not in K and i not in L]
    total = RatFunc(Poly.zero(n))
    for idx, bits in enumerate(_keys(space)):
        prefix = list(itertools.accumulate(bits, lambda x, y: x ^ y))
        if any(prefix[i - 1] != kv[i] for i in K) or any(bits[i - 1] != lv[i] for i in L):
            continue
        val = f.values[idx]
        if val.is_zero():
            continue
        # mu^i(-alpha) is -alpha for mu^i = e and alpha for mu^i = s
        sign = 1
        for i in free:
            if not prefix[i - 1]:
                sign = -sign
        total = total + RatFunc(val.scale(sign), [a] * len(free))
    return LocalizationResult(total, total.in_ring())


def _ez(v) -> int:
    if v in (0, "e"):
        return 0
    if v in (1, "s"):
        return 1
    raise ValueError(f"constraint value {v!r} must be e or s")
