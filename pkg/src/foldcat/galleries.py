"""Words in simple reflections, combinatorial galleries and their walls.

A gallery over ``s = (s_{i_1}, ..., s_{i_r})`` is a 0/1 vector; bit k says
whether the k-th entry is the reflection (1) or the neutral element (0).
Positions are 1-based throughout, as are simple-root indices.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass

from .rootsys import (
    Root,
    RootSystem,
    WeylElt,
    identity,
    neg,
    root_reflection,
    simple_reflection,
    weyl_apply,
    weyl_mul,
)

MAX_LENGTH = 62


@dataclass(frozen=True)
class SimpleSeq:
    rs: RootSystem
    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        if len(self.indices) > MAX_LENGTH:
            raise ValueError(f"sequence longer than {MAX_LENGTH}")
        for i in self.indices:
            if not 1 <= i <= self.rs.rank:
                raise ValueError(f"simple index {i} out of range for {self.rs.family}")

    def __len__(self):
        return len(self.indices)

    def __str__(self):
        return "(" + ",".join(f"s{i}" for i in self.indices) + ")"

    def simple_root(self, k: int) -> Root:
        """alpha_k, the simple root of the k-th letter."""
        return self.rs.simple_root(self.indices[k - 1])


def seq(rs: RootSystem, indices) -> SimpleSeq:
    return SimpleSeq(rs, tuple(indices))


@dataclass(frozen=True)
class Gallery:
    seq: SimpleSeq
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != len(self.seq):
            raise ValueError("gallery length does not match its sequence")

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return format_gallery(self)

    def __lt__(self, other):
        return self.bits < other.bits

    def entry(self, k: int) -> int:
        """0 for e, 1 for s_k (1-based k)."""
        return self.bits[k - 1]

    def as_int(self) -> int:
        out = 0
        for b in self.bits:
            out = 2 * out + b
        return out


def gallery(s: SimpleSeq, bits) -> Gallery:
    return Gallery(s, tuple(int(b) for b in bits))


def enumerate_galleries(s: SimpleSeq) -> list[Gallery]:
    """All 2^r galleries, lexicographic in the bit vector."""
    return [Gallery(s, bits) for bits in itertools.product((0, 1), repeat=len(s))]


def all_e(s: SimpleSeq) -> Gallery:
    return Gallery(s, (0,) * len(s))


@functools.lru_cache(maxsize=1 << 16)
def _prefixes(s: SimpleSeq, bits: tuple[int, ...]) -> tuple[WeylElt, ...]:
    out = [identity(s.rs)]
    w = out[0]
    for i, b in zip(s.indices, bits):
        if b:
            w = weyl_mul(w, simple_reflection(s.rs, i))
        out.append(w)
    return tuple(out)


def prefixes(g: Gallery) -> tuple[WeylElt, ...]:
    """(g^0, g^1, ..., g^r)."""
    return _prefixes(g.seq, g.bits)


def prefix(g: Gallery, i: int) -> WeylElt:
    if not 0 <= i <= len(g):
        raise IndexError(f"prefix index {i} out of range 0..{len(g)}")
    return prefixes(g)[i]


@functools.lru_cache(maxsize=1 << 16)
def _betas(s: SimpleSeq, bits: tuple[int, ...]) -> tuple[Root, ...]:
    pre = _prefixes(s, bits)
    return tuple(weyl_apply(pre[k], neg(s.simple_root(k))) for k in range(1, len(s) + 1))


def betas(g: Gallery) -> tuple[Root, ...]:
    """(beta_1(g), ..., beta_r(g)) with beta_k(g) = g^k(-alpha_k)."""
    return _betas(g.seq, g.bits)


def beta(g: Gallery, i: int) -> Root:
    if not 1 <= i <= len(g):
        raise IndexError(f"wall index {i} out of range 1..{len(g)}")
    return betas(g)[i - 1]


def fold(g: Gallery, i: int) -> Gallery:
    """f_i: toggle the i-th entry."""
    if not 1 <= i <= len(g):
        raise IndexError(f"fold index {i} out of range 1..{len(g)}")
    bits = list(g.bits)
    bits[i - 1] ^= 1
    return Gallery(g.seq, tuple(bits))


def fold_identities_hold(g: Gallery, i: int) -> bool:
    """Check (f_i g)^k = s_{beta_i(g)}^{[i<=k]} g^k and the matching identity
    for the walls, for every k."""
    rs = g.seq.rs
    f = fold(g, i)
    refl = root_reflection(rs, beta(g, i))
    pre_g, pre_f = prefixes(g), prefixes(f)
    for k in range(len(g) + 1):
        expect = weyl_mul(refl, pre_g[k]) if i <= k else pre_g[k]
        if pre_f[k] != expect:
            return False
    for k in range(1, len(g) + 1):
        b = beta(g, k)
        expect = weyl_apply(refl, b) if i <= k else b
        if beta(f, k) != expect:
            return False
    return True


def m_set(g: Gallery, alpha: Root) -> frozenset[int]:
    """M_alpha(g): positions whose wall is +-alpha."""
    alpha = tuple(alpha)
    na = neg(alpha)
    return frozenset(k for k, b in enumerate(betas(g), start=1) if b == alpha or b == na)


def j_set(g: Gallery, alpha: Root) -> frozenset[int]:
    """J_alpha(g): positions whose wall is exactly alpha."""
    alpha = tuple(alpha)
    return frozenset(k for k, b in enumerate(betas(g), start=1) if b == alpha)


def equivalent(g: Gallery, d: Gallery, alpha: Root, X=None) -> bool:
    """g ~_alpha^X d; X defaults to all positions."""
    if g.seq != d.seq:
        raise ValueError("galleries over different sequences")
    alpha = tuple(alpha)
    na = neg(alpha)
    bg = betas(g)
    for k, (a, b) in enumerate(zip(g.bits, d.bits), start=1):
        if a != b:
            if X is not None and k not in X:
                return False
            if bg[k - 1] != alpha and bg[k - 1] != na:
                return False
    return True


def fold_path_class(g: Gallery, alpha: Root, X=None) -> set[Gallery]:
    """Galleries reachable from g by folds f_i with i in X and i in M_alpha of
    the current gallery."""
    allowed = range(1, len(g) + 1) if X is None else X
    seen = {g}
    stack = [g]
    while stack:
        cur = stack.pop()
        ms = m_set(cur, alpha)
        for i in allowed:
            if i in ms:
                nxt = fold(cur, i)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return seen


# ------------------------------------------------------------------ text I/O

_ENTRY = re.compile(r"^(e|s(\d+))$")


def format_gallery(g: Gallery) -> str:
    return "(" + ",".join(f"s{i}" if b else "e" for i, b in zip(g.seq.indices, g.bits)) + ")"


def parse_gallery(s: SimpleSeq, text) -> Gallery:
    """Accept ``"(e,s2,e)"``, a bit list, or ``{"bits": [...]}``."""
    if isinstance(text, dict):
        text = text.get("bits")
    if isinstance(text, (list, tuple)):
        if any(b not in (0, 1) for b in text):
            raise ValueError(f"gallery bits must be 0/1: {text}")
        return gallery(s, text)
    body = str(text).strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"cannot parse gallery {text!r}")
    body = body[1:-1].strip()
    entries = [] if not body else [t.strip() for t in body.split(",")]
    if len(entries) != len(s):
        raise ValueError(f"gallery {text!r} has wrong length for {s}")
    bits = []
    for k, (tok, idx) in enumerate(zip(entries, s.indices), start=1):
        m = _ENTRY.match(tok)
        if not m:
            raise ValueError(f"bad gallery entry {tok!r}")
        if m.group(2) is not None and int(m.group(2)) != idx:
            raise ValueError(f"entry {k} of {text!r} is {tok}, expected e or s{idx}")
        bits.append(0 if tok == "e" else 1)
    return Gallery(s, tuple(bits))
