import random

import pytest

from foldcat.appendix import fixture_morphism
from foldcat.curves import (
    is_topological,
    is_weakly_curve_preserving,
    missing_curves,
    moment_graph,
    t_curve_exists,
)
from foldcat.fold import canonical_from_seq, identity_morphism, random_morphism_from
from foldcat.galleries import Gallery, seq

from strategies import SYSTEMS

A2 = SYSTEMS["A2"]

DOT_A2_12 = """graph bs {
  "(e,e)";
  "(e,s2)";
  "(s1,e)";
  "(s1,s2)";
  "(e,e)" -- "(s1,e)" [label="a1"];
  "(e,e)" -- "(e,s2)" [label="a2"];
  "(e,s2)" -- "(s1,s2)" [label="a1"];
  "(s1,e)" -- "(s1,s2)" [label="a1+a2"];
}
"""


def test_dot_output():
    assert moment_graph(seq(A2, [1, 2])).to_dot() == DOT_A2_12


def test_repeated_letter_loses_curves():
    # over (s1,s1) the gallery (e,s1) has walls -a1, a1: the later wall
    # cancels the curve at position 1, while (e,e) has walls -a1, -a1
    s = seq(A2, [1, 1])
    assert t_curve_exists(Gallery(s, (0, 0)), 1)
    assert not t_curve_exists(Gallery(s, (0, 1)), 1)
    assert [(str(a), str(b)) for a, b in missing_curves(s)] == [("(e,s1)", "(s1,s1)")]
    mg = moment_graph(s)
    assert len(mg.vertices) == 4 and len(mg.edges) == 3


def test_edge_count_is_full_cube_minus_missing():
    rng = random.Random(3)
    for _ in range(20):
        s = seq(SYSTEMS["A3"], [rng.randint(1, 3) for _ in range(rng.randint(0, 6))])
        r = len(s)
        mg = moment_graph(s)
        assert len(mg.edges) == r * 2 ** max(r - 1, 0) - len(missing_curves(s))
        assert mg.to_json()["vertices"][0] == str(Gallery(s, (0,) * r))


def test_moment_graph_length_limit():
    with pytest.raises(ValueError):
        moment_graph(seq(A2, [1] * 21))


def test_identity_and_canonical_embeddings_are_topological():
    s = seq(A2, [1, 2, 1])
    assert is_topological(identity_morphism(s)).answer == "yes"
    m = canonical_from_seq(seq(A2, [1, 2]), s, [1, 2])
    assert is_weakly_curve_preserving(m).preserving


def test_negative_sign_is_not_topological():
    v = is_topological(fixture_morphism(3))
    assert v.answer == "no"
    assert "sign" in v.reason


def test_non_simply_laced_is_unknown():
    s = seq(SYSTEMS["B2"], [1, 2, 1])
    assert is_topological(identity_morphism(s)).answer == "unknown"


def test_topological_and_non_topological_fixtures():
    assert is_topological(fixture_morphism(7)).answer == "yes"
    v = is_topological(fixture_morphism(8))
    assert v.answer == "no" and len(v.witnesses) == 6


def test_topological_implies_weakly_curve_preserving():
    rng = random.Random(8)
    for _ in range(100):
        s = seq(A2, [rng.randint(1, 2) for _ in range(rng.randint(0, 3))])
        m = random_morphism_from(s, rng)
        if is_topological(m).answer == "yes":
            assert is_weakly_curve_preserving(m).preserving
