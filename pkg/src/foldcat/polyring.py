"""Polynomials in the simple-root variables a1..an over the rationals, and
fractions whose denominators are products of linear forms.

Terms are stored as ``{exponent tuple: Fraction}`` with no zero coefficients.
"""

from __future__ import annotations

import functools
import itertools
import re
from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping

from .rootsys import WeylElt


class PolyParseError(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


class Poly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    e = tuple(e)
                    if len(e) != nvars:
                        raise ValueError("exponent length does not match the number of variables")
                    clean[e] = Fraction(c)
        self.terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def const(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n, i):
        """a_i (1-based)."""
        return cls(n, {tuple(1 if j == i - 1 else 0 for j in range(n)): 1})

    @classmethod
    def linear(cls, coeffs):
        """The linear form sum_i coeffs[i] * a_{i+1}; roots become degree-1 elements."""
        n = len(coeffs)
        return cls(n, {tuple(1 if j == i else 0 for j in range(n)): c for i, c in enumerate(coeffs)})

    def _wrap(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable sets")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other)
        return NotImplemented

    # ring operations
    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Poly(self.nvars)
        return Poly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    # inspection
    def is_zero(self):
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def constant_value(self):
        """The value of a constant polynomial, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and (0,) * self.nvars in self.terms:
            return self.terms[(0,) * self.nvars]
        return None

    def coefficients(self):
        return self.terms.values()

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= Fraction(x) ** k
            total += t
        return total

    def substitute(self, forms) -> "Poly":
        """Replace a_i by ``forms[i-1]`` (Polys), extended multiplicatively."""
        out = Poly(self.nvars if not forms else forms[0].nvars)
        powers = [[Poly.const(out.nvars, 1)] for _ in forms]
        for e, c in self.terms.items():
            t = Poly.const(out.nvars, c)
            for i, k in enumerate(e):
                if k:
                    pw = powers[i]
                    while len(pw) <= k:
                        pw.append(pw[-1] * forms[i])
                    t = t * pw[k]
            out = out + t
        return out

    def linear_coeffs(self):
        """Coefficient vector of a homogeneous linear form."""
        if any(sum(e) != 1 for e in self.terms):
            raise ValueError(f"{self} is not a linear form")
        out = [Fraction(0)] * self.nvars
        for e, c in self.terms.items():
            out[e.index(1)] = c
        return tuple(out)


def root_poly(beta) -> Poly:
    """A root (simple-root coordinates) as a degree-1 element of S."""
    return Poly.linear(tuple(beta))


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree ``degree``, graded-lex descending."""
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for k in range(left, -1, -1):
            rec(prefix + (k,), left - k, slots - 1)

    if nvars == 0:
        return [()] if degree == 0 else []
    rec((), degree, nvars)
    return out


# ---------------------------------------------------------------- Weyl action


@functools.lru_cache(maxsize=4096)
def _images(w: WeylElt):
    n = w.rank
    return tuple(Poly.linear(tuple(w.action[k][i] for k in range(n))) for i in range(n))


def weyl_act(w: WeylElt, f: Poly) -> Poly:
    """Substitute a_i -> w(alpha_i)."""
    if w.rank != f.nvars:
        raise ValueError("rank mismatch")
    if w.is_identity() or not f.terms:
        return f
    return f.substitute(_images(w))


# ---------------------------------------------------------------- division


def _pivot(alpha: Poly) -> int:
    coeffs = alpha.linear_coeffs()
    for k, c in enumerate(coeffs):
        if c:
            return k
    raise ValueError("division by the zero linear form")


def _as_linear(alpha) -> Poly:
    if isinstance(alpha, Poly):
        return alpha
    return root_poly(alpha)


def remainder_mod(f: Poly, alpha) -> Poly:
    """f restricted to the hyperplane alpha = 0, written in the non-pivot
    variables (pivot eliminated). Zero iff alpha divides f."""
    alpha = _as_linear(alpha)
    k = _pivot(alpha)
    coeffs = alpha.linear_coeffs()
    n = f.nvars
    forms = []
    for i in range(n):
        if i == k:
            forms.append(Poly.linear(tuple(Fraction(0) if j == k else -coeffs[j] / coeffs[k] for j in range(n))))
        else:
            forms.append(Poly.var(n, i + 1))
    return f.substitute(forms)


def _divide_once(f: Poly, alpha: Poly) -> tuple[Poly, Poly]:
    """Long division by alpha with the pivot variable as main variable.
    Returns (quotient, remainder); the remainder has no pivot variable."""
    k = _pivot(alpha)
    ak = alpha.linear_coeffs()[k]
    rest = alpha - Poly.linear(tuple(ak if j == k else 0 for j in range(alpha.nvars)))
    n = f.nvars
    # split f by the power of the pivot variable
    slices: dict[int, dict] = {}
    for e, c in f.terms.items():
        d = e[k]
        base = e[:k] + (0,) + e[k + 1:]
        slices.setdefault(d, {})[base] = c
    if not slices:
        return Poly(n), Poly(n)
    top = max(slices)
    coeffs = {d: Poly(n, t) for d, t in slices.items()}
    q_terms: dict = {}
    for d in range(top, 0, -1):
        cur = coeffs.get(d)
        if cur is None or not cur.terms:
            continue
        qd = cur.scale(1 / ak)  # quotient coefficient of x_k^(d-1)
        for e, c in qd.terms.items():
            ee = e[:k] + (d - 1,) + e[k + 1:]
            q_terms[ee] = q_terms.get(ee, 0) + c
        coeffs[d - 1] = coeffs.get(d - 1, Poly(n)) - rest * qd
    return Poly(n, q_terms), coeffs.get(0, Poly(n))


def divisible(f: Poly, alpha, m: int = 1) -> bool:
    """True iff alpha^m divides f."""
    return _power_split(f, _as_linear(alpha), m)[1] is None


def _power_split(f, alpha, m):
    """Divide repeatedly; returns (quotient after j steps, remainder or None, j)."""
    g = f
    for j in range(m):
        if not g.terms:
            return g, None, m
        q, r = _divide_once(g, alpha)
        if r.terms:
            return g, r, j
        g = q
    return g, None, m


def quotient(f: Poly, alpha, m: int = 1) -> Poly:
    """The exact g with f = alpha^m * g."""
    g, r, _ = _power_split(f, _as_linear(alpha), m)
    if r is not None:
        raise NotDivisible(f"{f} is not divisible by ({_as_linear(alpha)})^{m}")
    return g


def residue(f: Poly, alpha, m: int) -> tuple[int, Poly] | None:
    """None if alpha^m | f; otherwise (j, r) where alpha^j | f exactly and r is
    the remainder of f / alpha^j modulo alpha."""
    g, r, j = _power_split(f, _as_linear(alpha), m)
    if r is None:
        return None
    return j, r


# ---------------------------------------------------------------- fractions


def _normalize_linear(form: Poly) -> tuple[Fraction, tuple]:
    """form = c * L with L primitive-ish: first nonzero coefficient 1."""
    coeffs = form.linear_coeffs()
    lead = next(c for c in coeffs if c)
    return lead, tuple(c / lead for c in coeffs)


class RatFunc:
    """numerator / prod(linear factors ** multiplicity), kept reduced."""

    __slots__ = ("num", "_factors")

    def __init__(self, num: Poly, den: Poly | Iterable[Poly] | None = None):
        factors: Counter = Counter()
        scale = Fraction(1)
        dens = [] if den is None else ([den] if isinstance(den, Poly) else list(den))
        for d in dens:
            c = d.constant_value()
            if c is not None:
                if c == 0:
                    raise ZeroDivisionError("zero denominator")
                scale /= c
                continue
            for lin in _split_linear(d):
                c, key = _normalize_linear(lin)
                scale /= c
                factors[key] += 1
        self.num = num.scale(scale)
        self._factors = factors
        self._reduce()

    @classmethod
    def _raw(cls, num, factors):
        obj = cls.__new__(cls)
        obj.num = num
        obj._factors = Counter({k: v for k, v in factors.items() if v > 0})
        obj._reduce()
        return obj

    def _reduce(self):
        if not self.num.terms:
            self._factors = Counter()
            return
        for key in sorted(self._factors):
            lin = Poly.linear(key)
            while self._factors[key] > 0:
                q, r = _divide_once(self.num, lin)
                if r.terms:
                    break
                self.num = q
                self._factors[key] -= 1
        self._factors = Counter({k: v for k, v in self._factors.items() if v > 0})

    @property
    def nvars(self):
        return self.num.nvars

    @property
    def denominator(self) -> Poly:
        out = Poly.const(self.nvars, 1)
        for key in sorted(self._factors):
            out = out * Poly.linear(key) ** self._factors[key]
        return out

    @property
    def numerator(self) -> Poly:
        return self.num

    def in_ring(self) -> bool:
        """True iff the reduced fraction has a unit denominator."""
        return not self._factors

    def as_poly(self) -> Poly:
        if self._factors:
            raise NotDivisible(f"{self} is not a polynomial")
        return self.num

    @staticmethod
    def _lift(x, n):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return RatFunc._raw(x, Counter())
        if isinstance(x, (int, Fraction)):
            return RatFunc._raw(Poly.const(n, x), Counter())
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other, self.nvars)
        if other is NotImplemented:
            return other
        common = self._factors | other._factors  # max multiplicities
        a = self.num * _prod(common - self._factors)
        b = other.num * _prod(common - other._factors)
        return RatFunc._raw(a + b, common)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self._factors)

    def __sub__(self, other):
        other = self._lift(other, self.nvars)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._lift(other, self.nvars)
        if other is NotImplemented:
            return other
        return RatFunc._raw(self.num * other.num, self._factors + other._factors)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc._raw(self.num.scale(Fraction(1) / other), self._factors)
        other = self._lift(other, self.nvars)
        if other is NotImplemented:
            return other
        if other._factors:
            num = self.num * _prod(other._factors)
        else:
            num = self.num
        return RatFunc(num, [other.num] + [Poly.linear(k) for k in self._factors.elements()])

    def __eq__(self, other):
        other = self._lift(other, self.nvars)
        if other is NotImplemented:
            return other
        # both sides are reduced with normalized factors, so the representation is canonical
        return self.num == other.num and self._factors == other._factors

    def __hash__(self):
        return hash((self.num, frozenset(self._factors.items())))

    def __repr__(self):
        return f"RatFunc({format_ratfunc(self)!r})"

    def __str__(self):
        return format_ratfunc(self)

    def is_zero(self):
        return not self.num.terms

    def weyl_act(self, w: WeylElt) -> "RatFunc":
        dens = [weyl_act(w, Poly.linear(k)) for k in self._factors.elements()]
        return RatFunc(weyl_act(w, self.num), dens)


def _prod(factors: Counter):
    it = iter(sorted(factors.elements()))
    first = next(it, None)
    if first is None:
        return 1
    out = Poly.linear(first)
    for k in it:
        out = out * Poly.linear(k)
    return out


def _split_linear(d: Poly) -> list[Poly]:
    """Factor a product of linear forms (no constant factor) into its linear
    factors, by trial division against its own hyperplane restrictions."""
    if d.degree() == 1 and d.is_homogeneous():
        return [d]
    if not d.is_homogeneous():
        raise ValueError(f"denominator {d} is not a product of linear forms")
    out = []
    cur = d
    while cur.degree() > 1:
        lin = _find_linear_factor(cur)
        if lin is None:
            raise ValueError(f"denominator {d} is not a product of linear forms")
        out.append(lin)
        cur = quotient(cur, lin)
    if cur.degree() == 1:
        out.append(cur)
    else:
        c = cur.constant_value()
        if out:
            out[0] = out[0].scale(c)
    return out


def _find_linear_factor(d: Poly):
    # a homogeneous product of linear forms: try candidates with small
    # integer coefficients
    n = d.nvars
    rng = range(-3, 4)
    for coeffs in itertools.product(rng, repeat=n):
        if not any(coeffs):
            continue
        lead = next(c for c in coeffs if c)
        if lead < 0:
            continue
        lin = Poly.linear(coeffs)
        if divisible(d, lin):
            return lin
    return None


# ---------------------------------------------------------------- text I/O


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    order = sorted(f.terms, key=lambda e: (-sum(e), tuple(-x for x in e)))
    pieces = []
    for e in order:
        c = f.terms[e]
        mono = "*".join(f"a{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
        mag = abs(c)
        if not mono:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(mag)}*{mono}"
        pieces.append(("-" if c < 0 else "+", body))
    head = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    return head + "".join(f" {s} {b}" for s, b in pieces[1:])


def format_ratfunc(q: RatFunc) -> str:
    if not q._factors:
        return format_poly(q.num)
    dens = []
    for key in sorted(q._factors):
        body = format_poly(Poly.linear(key))
        k = q._factors[key]
        dens.append(f"({body})" + (f"^{k}" if k > 1 else ""))
    return f"({format_poly(q.num)})/(" + "*".join(dens) + ")"


_TOKEN = re.compile(r"\s*(?:(\d+)|a(\d+)|(.))")


def _tokenize(text):
    pos = 0
    toks = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1))))
        elif m.group(2) is not None:
            toks.append(("var", int(m.group(2))))
        else:
            ch = m.group(3)
            if ch.isspace():
                pass
            elif ch in "+-*/^()":
                toks.append((ch, None))
            else:
                raise PolyParseError(f"unexpected character {ch!r} in {text!r}")
        pos = m.end()
    return toks


class _Parser:
    # expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)*
    # unary := '-' unary | power ; power := atom ('^' num)?
    def __init__(self, text, nvars):
        self.toks = _tokenize(text)
        self.i = 0
        self.n = nvars
        self.text = text

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind=None):
        if self.i >= len(self.toks):
            raise PolyParseError(f"unexpected end of input in {self.text!r}")
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise PolyParseError(f"expected {kind!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise PolyParseError("empty polynomial")
        out = self.expr()
        if self.i != len(self.toks):
            raise PolyParseError(f"trailing input in {self.text!r}")
        return out

    def expr(self):
        out = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self):
        out = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            rhs = self.unary()
            if op == "*":
                out = out * rhs
            else:
                c = rhs.constant_value()
                if c is None or c == 0:
                    raise PolyParseError(f"division by a non-constant or zero in {self.text!r}")
                out = out.scale(1 / c)
        return out

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            k = self.take("num")[1]
            base = base ** k
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Poly.const(self.n, val)
        if kind == "var":
            if not 1 <= val <= self.n:
                raise PolyParseError(f"variable a{val} out of range 1..{self.n}")
            return Poly.var(self.n, val)
        if kind == "(":
            out = self.expr()
            self.take(")")
            return out
        raise PolyParseError(f"unexpected {kind!r} in {self.text!r}")


def parse_poly(text: str, nvars: int) -> Poly:
    """Parse e.g. ``"a1^2*a2 - 1/2*a3"``; parentheses are allowed."""
    return _Parser(str(text), nvars).parse()
