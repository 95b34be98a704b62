import pytest
from hypothesis import given, strategies as st

from foldcat.rootsys import (
    RootSystemError,
    build_product,
    build_root_system,
    cartan_matrix,
    cycles_of,
    format_root,
    from_json,
    identity,
    is_simply_laced,
    neg,
    parse_root_system,
    reduced_word,
    reflect,
    root_reflection,
    simple_reflection,
    weyl_apply,
    weyl_from_cycles,
    weyl_from_permutation,
    weyl_from_word,
    weyl_inv,
    weyl_mul,
)

from strategies import SYSTEMS

# number of positive roots and Weyl group order
COUNTS = {("A", 1): (1, 2), ("A", 2): (3, 6), ("A", 3): (6, 24), ("A", 4): (10, 120),
          ("B", 2): (4, 8), ("B", 3): (9, 48), ("C", 3): (9, 48), ("D", 4): (12, 192),
          ("G", 2): (6, 12), ("F", 4): (24, 1152), ("E", 6): (36, 51840)}


@pytest.mark.parametrize("family,rank", sorted(COUNTS))
def test_positive_root_count(family, rank):
    rs = build_root_system(family, rank)
    assert len(rs.positive_roots) == COUNTS[family, rank][0]
    assert len(rs.roots) == 2 * COUNTS[family, rank][0]


@pytest.mark.parametrize("family,rank", [k for k in sorted(COUNTS) if COUNTS[k][1] <= 1152])
def test_weyl_group_order(family, rank):
    rs = build_root_system(family, rank)
    gens = [simple_reflection(rs, i) for i in range(1, rank + 1)]
    seen = {identity(rs)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                v = weyl_mul(w, s)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    assert len(seen) == COUNTS[family, rank][1]


def test_cartan_conventions():
    # B2: alpha_1 long, alpha_2 short
    assert cartan_matrix("B", 2) == ((2, -1), (-2, 2))
    assert cartan_matrix("C", 2) == ((2, -2), (-1, 2))
    assert SYSTEMS["B2"].positive_roots == ((1, 0), (0, 1), (1, 1), (1, 2))
    assert cartan_matrix("A", 3)[0] == (2, -1, 0)
    with pytest.raises((RootSystemError, ValueError)):
        build_root_system("D", 2)


def test_parse_and_json_round_trip():
    for text in ("A3", "B2", "A1xA2", "G2"):
        rs = parse_root_system(text)
        assert from_json(rs.to_json()) == rs
    prod = build_product([("A", 1), ("A", 1)])
    assert len(prod.positive_roots) == 2
    assert is_simply_laced(prod)
    assert not is_simply_laced(SYSTEMS["B2"])


@given(st.sampled_from(sorted(SYSTEMS)), st.data())
def test_reflections_are_involutions_and_permute_roots(name, data):
    rs = SYSTEMS[name]
    i = data.draw(st.integers(1, rs.rank))
    beta = data.draw(st.sampled_from(sorted(rs.roots)))
    assert rs.is_root(reflect(rs, i, beta))
    assert reflect(rs, i, reflect(rs, i, beta)) == beta
    assert reflect(rs, i, rs.simple_root(i)) == neg(rs.simple_root(i))


@given(st.sampled_from(sorted(SYSTEMS)), st.data())
def test_weyl_word_reduce_and_invert(name, data):
    rs = SYSTEMS[name]
    word = data.draw(st.lists(st.integers(1, rs.rank), max_size=8))
    w = weyl_from_word(rs, word)
    red = reduced_word(rs, w)
    assert len(red) <= len(word)
    assert len(red) % 2 == len(word) % 2
    assert weyl_from_word(rs, red) == w
    assert weyl_mul(w, weyl_inv(w)).is_identity()
    beta = data.draw(st.sampled_from(sorted(rs.roots)))
    assert weyl_apply(weyl_inv(w), weyl_apply(w, beta)) == beta


@given(st.sampled_from(sorted(SYSTEMS)), st.data())
def test_root_reflection_conjugation(name, data):
    rs = SYSTEMS[name]
    w = weyl_from_word(rs, data.draw(st.lists(st.integers(1, rs.rank), max_size=6)))
    i = data.draw(st.integers(1, rs.rank))
    # w s_i w^-1 = s_{w alpha_i}
    lhs = weyl_mul(weyl_mul(w, simple_reflection(rs, i)), weyl_inv(w))
    assert lhs == root_reflection(rs, weyl_apply(w, rs.simple_root(i)))


def test_type_a_permutations():
    rs = build_root_system("A", 4)
    # s_i is the transposition (i, i+1)
    for i in range(1, 5):
        assert weyl_from_cycles(rs, [[i, i + 1]]) == simple_reflection(rs, i)
    w = weyl_from_cycles(rs, [[1, 5], [2, 3, 4]])
    assert cycles_of(rs, w) == [[1, 5], [2, 3, 4]]
    assert weyl_from_permutation(rs, [5, 3, 4, 2, 1]) == w


def test_format_root():
    assert format_root((1, 1, 0)) == "a1+a2"
    assert format_root((0, -1, -2)) == "-a2-2*a3"
