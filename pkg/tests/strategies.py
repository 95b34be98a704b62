"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from foldcat.galleries import Gallery, seq
from foldcat.polyring import Poly
from foldcat.rootsys import build_root_system

SYSTEMS = {name: build_root_system(name[0], int(name[1:])) for name in ("A1", "A2", "A3", "B2", "C3", "G2")}


def polys(n=2, max_deg=3, max_terms=5):
    coeff = st.fractions(min_value=-9, max_value=9, max_denominator=5)
    exps = st.tuples(*[st.integers(0, max_deg)] * n)
    return st.dictionaries(exps, coeff, max_size=max_terms).map(lambda t: Poly(n, t))


@st.composite
def words(draw, system="A3", max_len=5, min_len=0):
    rs = SYSTEMS[system]
    idx = draw(st.lists(st.integers(1, rs.rank), min_size=min_len, max_size=max_len))
    return seq(rs, idx)


@st.composite
def galleries(draw, system="A3", max_len=5, min_len=0):
    s = draw(words(system, max_len, min_len))
    bits = draw(st.lists(st.integers(0, 1), min_size=len(s), max_size=len(s)))
    return Gallery(s, tuple(bits))
