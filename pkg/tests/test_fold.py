import random

import pytest
from hypothesis import given, settings, strategies as st

from foldcat.appendix import fixture_morphism
from foldcat.fold import (
    MonotoneEmbedding,
    MorphismError,
    canonical_from_seq,
    compose,
    embedding,
    extend_morphism,
    identity_morphism,
    image_membership,
    is_pw_pair,
    pair_signs,
    random_morphism_from,
    stabilization_check,
    verify_morphism,
    wall_key,
)
from foldcat.galleries import Gallery, enumerate_galleries, parse_gallery, seq
from foldcat.rootsys import identity

from strategies import SYSTEMS, words

A2 = SYSTEMS["A2"]


def test_embedding_validation():
    p = embedding([1, 3], 3)
    assert p(1) == 1 and p(2) == 3
    assert p.compose(MonotoneEmbedding.identity(2)) == p
    for bad in ([2, 1], [1, 1], [0, 2], [1, 4]):
        with pytest.raises((MorphismError, ValueError)):
            embedding(bad, 3)


def test_two_letter_fixture_signs_and_preimages():
    m = fixture_morphism(3)
    assert m.sign == (-1, 1)
    assert m.w.is_identity()
    d = parse_gallery(m.s2, "(e,s2,s1)")
    assert str(image_membership(m, d)) == "(s1,s2)"
    assert image_membership(m, parse_gallery(m.s2, "(e,e,e)")) is None
    for g, img in m.table():
        assert pair_signs(g, img, m.p, m.w) == m.sign


def test_pair_condition_by_hand():
    # walls of (e,e) over (s1,s2) are -a1, -a2; of (s1,s2,e) over (s1,s2,s1) they
    # are a1, a1+a2, -a2 so positions 1 and 3 carry a1 and -a2
    s, s2 = seq(A2, [1, 2]), seq(A2, [1, 2, 1])
    g = Gallery(s, (0, 0))
    d = Gallery(s2, (1, 1, 0))
    p = embedding([1, 3], 3)
    assert pair_signs(g, d, p, identity(A2)) == (-1, 1)
    # the all-e target has walls -a1, -a2, -a1: position 3 cannot match -a2
    assert is_pw_pair(g, Gallery(s2, (0, 0, 0)), embedding([1, 2], 3), identity(A2))
    assert not is_pw_pair(g, Gallery(s2, (0, 0, 0)), p, identity(A2))


def test_bad_seed_is_rejected():
    s, s2 = seq(A2, [1, 2]), seq(A2, [1, 2, 1])
    with pytest.raises(MorphismError):
        extend_morphism(s, s2, [1, 3], identity(A2), Gallery(s, (0, 0)), Gallery(s2, (0, 0, 0)))


def test_canonical_embedding_has_positive_sign():
    s, s2 = seq(A2, [1, 2]), seq(A2, [2, 1, 1, 2])
    m = canonical_from_seq(s, s2, [2, 4])
    assert m.sign == (1, 1)
    with pytest.raises(MorphismError):
        canonical_from_seq(s, s2, [1, 2])


@settings(max_examples=40, deadline=None)
@given(words("A2", 3), st.integers(0, 2**31))
def test_random_morphisms_are_valid(s, seed):
    m = random_morphism_from(s, random.Random(seed))
    assert m is not None
    assert verify_morphism(m) == "exhaustive"
    imgs = {m.phi(g) for g in enumerate_galleries(s)}
    assert len(imgs) == 2 ** len(s)
    for g in enumerate_galleries(s):
        assert image_membership(m, m.phi(g)) == g


@settings(max_examples=30, deadline=None)
@given(words("B2", 3), st.integers(0, 2**31))
def test_identity_and_composition_laws_b2(s, seed):
    rng = random.Random(seed)
    m1 = random_morphism_from(s, rng)
    m2 = random_morphism_from(m1.s2, rng, extra=1)
    assert compose(identity_morphism(m1.s2), m1).same_as(m1)
    assert compose(m1, identity_morphism(s)).same_as(m1)
    c = compose(m2, m1)
    for g in enumerate_galleries(s):
        assert c.phi(g) == m2.phi(m1.phi(g))
    assert c.sign == tuple(m2.sign[m1.p(i) - 1] * m1.sign[i - 1] for i in range(1, len(s) + 1))


def test_compose_requires_matching_ends():
    m = fixture_morphism(3)
    with pytest.raises(MorphismError):
        compose(m, m)


def test_long_words_are_sampled():
    rs = SYSTEMS["A1"]
    s = seq(rs, [1] * 13)
    m = identity_morphism(s)
    assert verify_morphism(m) == "sampled"


def test_stabilization_on_equal_walls():
    s = seq(A2, [1, 1])
    g, r = Gallery(s, (0, 0)), Gallery(s, (1, 1))
    assert wall_key(g) == wall_key(r)
    v = stabilization_check(s, s, g, r)
    assert v.hypothesis and v.iso.phi(g) == r
    t = seq(A2, [1, 2])
    assert not stabilization_check(s, t, g, Gallery(t, (0, 0))).hypothesis
