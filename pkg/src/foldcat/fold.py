"""Morphisms between galleries of two words: a monotone embedding p, a Weyl
element w (the rotation) and a gallery map phi determined by one seed pair.

phi is never tabulated; phi(gamma) toggles the seed image at p(i) for every
position i where gamma differs from the seed.
"""

from __future__ import annotations

import itertools
import random
from collections import defaultdict
from dataclasses import dataclass, field

from .galleries import (
    Gallery,
    SimpleSeq,
    betas,
    enumerate_galleries,
    gallery,
    seq,
)
from .rootsys import (
    RootSystem,
    WeylElt,
    identity,
    neg,
    positive_part,
    simple_reflection,
    weyl_apply,
    weyl_from_word,
    weyl_inv,
    weyl_mul,
)

EXHAUSTIVE_LIMIT = 12
SAMPLE_SIZE = 4096


class MorphismError(ValueError):
    pass


@dataclass(frozen=True)
class MonotoneEmbedding:
    source_len: int
    target_len: int
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if len(self.images) != self.source_len:
            raise MorphismError("embedding has the wrong number of images")
        prev = 0
        for x in self.images:
            if x <= prev or x > self.target_len:
                raise MorphismError(f"images {list(self.images)} are not strictly increasing in 1..{self.target_len}")
            prev = x

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, inner: "MonotoneEmbedding") -> "MonotoneEmbedding":
        """self after inner."""
        if inner.target_len != self.source_len:
            raise MorphismError("embeddings are not composable")
        return MonotoneEmbedding(inner.source_len, self.target_len, tuple(self(i) for i in inner.images))

    @classmethod
    def identity(cls, n: int) -> "MonotoneEmbedding":
        return cls(n, n, tuple(range(1, n + 1)))


def embedding(images, target_len: int) -> MonotoneEmbedding:
    images = tuple(images)
    return MonotoneEmbedding(len(images), target_len, images)


def _check_pair_shapes(gamma: Gallery, delta: Gallery, p: MonotoneEmbedding):
    if len(gamma) != p.source_len or len(delta) != p.target_len:
        raise MorphismError("gallery lengths do not match the embedding")
    if gamma.seq.rs != delta.seq.rs:
        raise MorphismError("galleries over different root systems")


def pair_signs(gamma: Gallery, delta: Gallery, p: MonotoneEmbedding, w: WeylElt):
    """The vector eps with beta_{p(i)}(delta) = eps_i * w beta_i(gamma), or None
    if some position matches neither sign."""
    _check_pair_shapes(gamma, delta, p)
    bg, bd = betas(gamma), betas(delta)
    out = []
    for i, j in enumerate(p.images):
        target = weyl_apply(w, bg[i])
        got = bd[j - 1]
        if got == target:
            out.append(1)
        elif got == neg(target):
            out.append(-1)
        else:
            return None
    return tuple(out)


def is_pw_pair(gamma: Gallery, delta: Gallery, p: MonotoneEmbedding, w: WeylElt) -> bool:
    return pair_signs(gamma, delta, p, w) is not None


@dataclass(frozen=True)
class FoldMorphism:
    s: SimpleSeq
    s2: SimpleSeq
    p: MonotoneEmbedding
    w: WeylElt
    gamma0: Gallery
    delta0: Gallery
    sign: tuple[int, ...]
    verification: str = field(default="exhaustive", compare=False)

    @property
    def rotation(self) -> WeylElt:
        return self.w

    def __call__(self, g: Gallery) -> Gallery:
        return self.phi(g)

    def phi(self, g: Gallery) -> Gallery:
        if g.seq != self.s:
            raise MorphismError(f"gallery over {g.seq}, morphism source is {self.s}")
        bits = list(self.delta0.bits)
        for i, (a, b) in enumerate(zip(g.bits, self.gamma0.bits)):
            if a != b:
                bits[self.p.images[i] - 1] ^= 1
        return Gallery(self.s2, tuple(bits))

    def table(self) -> list[tuple[Gallery, Gallery]]:
        return [(g, self.phi(g)) for g in enumerate_galleries(self.s)]

    def is_identity(self) -> bool:
        return (
            self.s == self.s2
            and self.p.images == tuple(range(1, len(self.s) + 1))
            and self.w.is_identity()
            and self.phi(self.gamma0) == self.gamma0
        )

    def same_as(self, other: "FoldMorphism") -> bool:
        """Equality as morphisms: same data and the same gallery map."""
        return (
            self.s == other.s
            and self.s2 == other.s2
            and self.p == other.p
            and self.w == other.w
            and other.phi(self.gamma0) == self.delta0
        )


def _galleries_to_check(s: SimpleSeq, rng=None):
    r = len(s)
    if r <= EXHAUSTIVE_LIMIT:
        return enumerate_galleries(s), "exhaustive"
    rng = rng or random.Random(0)
    return [gallery(s, [rng.randint(0, 1) for _ in range(r)]) for _ in range(SAMPLE_SIZE)], "sampled"


def extend_morphism(s: SimpleSeq, s2: SimpleSeq, p, w: WeylElt, gamma0: Gallery, delta0: Gallery,
                    verify: bool = True) -> FoldMorphism:
    """The unique morphism (p, w, phi) with phi(gamma0) = delta0."""
    if isinstance(p, (list, tuple)):
        p = embedding(p, len(s2))
    if s.rs != s2.rs:
        raise MorphismError("source and target live over different root systems")
    if p.source_len != len(s) or p.target_len != len(s2):
        raise MorphismError("embedding does not match the sequence lengths")
    if gamma0.seq != s or delta0.seq != s2:
        raise MorphismError("seed galleries are over the wrong sequences")
    sign = pair_signs(gamma0, delta0, p, w)
    if sign is None:
        raise MorphismError(f"seed {gamma0} -> {delta0} is not a (p,w)-pair")
    m = FoldMorphism(s, s2, p, w, gamma0, delta0, sign)
    if verify:
        mode = verify_morphism(m)
        m = FoldMorphism(s, s2, p, w, gamma0, delta0, sign, mode)
    return m


def verify_morphism(m: FoldMorphism, rng=None) -> str:
    """Check the pair condition with a constant sign at every gallery (all of
    them when r is small, a sample otherwise). Returns the verification mode."""
    gs, mode = _galleries_to_check(m.s, rng)
    for g in gs:
        eps = pair_signs(g, m.phi(g), m.p, m.w)
        if eps != m.sign:
            raise MorphismError(f"sign at {g} is {eps}, seed gives {m.sign}")
    return mode


def sign_rotation(m: FoldMorphism) -> tuple[tuple[int, ...], WeylElt]:
    return m.sign, m.w


def identity_morphism(s: SimpleSeq) -> FoldMorphism:
    g = Gallery(s, (0,) * len(s))
    return FoldMorphism(s, s, MonotoneEmbedding.identity(len(s)), identity(s.rs), g, g, (1,) * len(s))


def compose(m2: FoldMorphism, m1: FoldMorphism) -> FoldMorphism:
    """m2 after m1."""
    if m1.s2 != m2.s:
        raise MorphismError(f"cannot compose: {m1.s2} is not {m2.s}")
    p = m2.p.compose(m1.p)
    w = weyl_mul(m2.w, m1.w)
    delta = m2.phi(m1.phi(m1.gamma0))
    sign = tuple(m2.sign[m1.p(i) - 1] * m1.sign[i - 1] for i in range(1, len(m1.s) + 1))
    direct = pair_signs(m1.gamma0, delta, p, w)
    if direct != sign:
        raise AssertionError(f"sign law fails: expected {sign}, computed {direct}")
    return FoldMorphism(m1.s, m2.s2, p, w, m1.gamma0, delta, sign,
                        "composed" if "sampled" not in (m1.verification, m2.verification) else "sampled")


def image_membership(m: FoldMorphism, delta: Gallery):
    """The preimage of delta under phi, or None when delta is not an image."""
    if delta.seq != m.s2:
        raise MorphismError("gallery over the wrong sequence")
    inside = set(m.p.images)
    for j in range(len(delta)):
        if j + 1 not in inside and delta.bits[j] != m.delta0.bits[j]:
            return None
    bits = tuple(m.gamma0.bits[i] ^ delta.bits[j - 1] ^ m.delta0.bits[j - 1] for i, j in enumerate(m.p.images))
    return Gallery(m.s, bits)


def canonical_from_seq(s: SimpleSeq, s2: SimpleSeq, p) -> FoldMorphism:
    """The morphism (p, e, phi^p) of an order-preserving letter embedding."""
    if isinstance(p, (list, tuple)):
        p = embedding(p, len(s2))
    for i in range(1, len(s) + 1):
        if s2.indices[p(i) - 1] != s.indices[i - 1]:
            raise MorphismError(f"letter {i} of {s} does not match letter {p(i)} of {s2}")
    m = extend_morphism(s, s2, p, identity(s.rs), Gallery(s, (0,) * len(s)), Gallery(s2, (0,) * len(s2)))
    assert all(e == 1 for e in m.sign), "canonical embedding must have positive sign"
    return m


# ------------------------------------------------------------- stabilization


def wall_key(g: Gallery) -> tuple:
    """The reflections gamma^i s_i (gamma^i)^{-1}, recorded as positive roots."""
    return tuple(positive_part(b) for b in betas(g))


@dataclass
class StabilizationVerdict:
    hypothesis: bool
    same_sequence: bool | None = None
    iso: FoldMorphism | None = None


def stabilization_check(s: SimpleSeq, t: SimpleSeq, gamma: Gallery, rho: Gallery) -> StabilizationVerdict:
    """If the walls of gamma and rho agree up to sign, the words must coincide and
    (id, e, psi) with psi(gamma) = rho is an isomorphism."""
    if len(s) != len(t):
        raise ValueError("sequences of different lengths")
    if wall_key(gamma) != wall_key(rho):
        return StabilizationVerdict(False)
    if s != t:
        raise AssertionError(f"walls agree but {s} != {t}")
    iso = extend_morphism(s, s, MonotoneEmbedding.identity(len(s)), identity(s.rs), gamma, rho)
    return StabilizationVerdict(True, True, iso)


def stabilization_sweep(rs: RootSystem, max_len: int):
    """Group all (s, gamma) with |s| <= max_len by wall key; return the number of
    hypothesis-satisfying pairs and any counterexamples (pairs with s != t)."""
    pairs = 0
    bad = []
    for r in range(max_len + 1):
        groups: dict[tuple, list] = defaultdict(list)
        for word in itertools.product(range(1, rs.rank + 1), repeat=r):
            s = seq(rs, word)
            for g in enumerate_galleries(s):
                groups[wall_key(g)].append(g)
        for members in groups.values():
            pairs += len(members) ** 2
            words = {g.seq.indices for g in members}
            if len(words) > 1:
                bad.append(members)
    return pairs, bad


# ------------------------------------------------------------- random data


def _simple_index(rs: RootSystem, root) -> int | None:
    for i in range(1, rs.rank + 1):
        if rs.simple_root(i) == tuple(root):
            return i
    return None


def random_morphism_from(s: SimpleSeq, rng: random.Random, extra: int | None = None,
                         rotate: bool = True, tries: int = 200) -> FoldMorphism | None:
    """A random morphism out of s: random rotation, embedding and seed, with the
    target word built letter by letter so that the walls line up."""

    rs = s.rs
    r = len(s)
    for _ in range(tries):
        n_extra = rng.randint(0, 3) if extra is None else extra
        r2 = r + n_extra
        images = sorted(rng.sample(range(1, r2 + 1), r))
        if rotate:
            w = weyl_from_word(rs, [rng.randint(1, rs.rank) for _ in range(rng.randint(0, 2 * rs.rank))])
        else:
            w = identity(rs)
        g0 = gallery(s, [rng.randint(0, 1) for _ in range(r)])
        targets = {j: weyl_apply(w, b) for j, b in zip(images, betas(g0))}
        letters: list[int] = []
        bits: list[int] = []
        cur = identity(rs)
        ok = True
        for j in range(1, r2 + 1):
            if j in targets:
                # beta_j = cur * bit * (-alpha) must be +-target: alpha = +-cur^{-1} target
                root = weyl_apply(weyl_inv(cur), targets[j])
                letter = _simple_index(rs, root) or _simple_index(rs, neg(root))
                if letter is None:
                    ok = False
                    break
            else:
                letter = rng.randint(1, rs.rank)
            bit = rng.randint(0, 1)
            letters.append(letter)
            bits.append(bit)
            if bit:
                cur = weyl_mul(cur, simple_reflection(rs, letter))
        if not ok:
            continue
        s2 = seq(rs, letters)
        d0 = gallery(s2, bits)
        return extend_morphism(s, s2, images, w, g0, d0)
    return None


def random_morphism(rs: RootSystem, rng: random.Random, max_len: int = 3, **kw) -> FoldMorphism:
    while True:
        s = seq(rs, [rng.randint(1, rs.rank) for _ in range(rng.randint(0, max_len))])
        m = random_morphism_from(s, rng, **kw)
        if m is not None:
            return m
