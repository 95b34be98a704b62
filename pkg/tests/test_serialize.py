import json

import pytest

from foldcat.appendix import FIXTURES, appendix_examples, fixture_morphism
from foldcat.gkm import GkmClass, gkm_basis
from foldcat.serialize import (
    InputError,
    class_from_doc,
    class_to_doc,
    load_doc,
    morphism_from_doc,
    morphism_to_doc,
    parse_word,
    system_for,
    weyl_from_doc,
    weyl_to_doc,
)
from foldcat.rootsys import build_root_system


def test_parse_word_forms():
    for text in ("1,2,1", "[1,2,1]", "(s1,s2,s1)", "1 2 1", [1, 2, 1]):
        assert parse_word(text) == [1, 2, 1]
    assert parse_word("()") == []
    with pytest.raises(InputError):
        parse_word("1,x")


def test_default_system_is_type_a():
    assert system_for(None, [1, 4]) == build_root_system("A", 4)
    assert system_for("B2", [1]) == build_root_system("B", 2)


def test_weyl_documents_round_trip():
    rs = build_root_system("A", 4)
    w = weyl_from_doc(rs, {"cycles": [[1, 5], [2, 3, 4]]})
    doc = weyl_to_doc(rs, w)
    assert doc["cycles"] == [[1, 5], [2, 3, 4]]
    assert weyl_from_doc(rs, {"word": doc["word"]}) == w
    assert weyl_from_doc(rs, {"matrix": doc["matrix"]}) == w
    with pytest.raises(InputError):
        weyl_from_doc(rs, {"nothing": 1})


@pytest.mark.parametrize("n", sorted(FIXTURES))
def test_morphism_documents_round_trip(n):
    m = fixture_morphism(n)
    doc = json.loads(json.dumps(morphism_to_doc(m)))
    assert morphism_from_doc(doc).same_as(m)


def test_missing_fields(tmp_path):
    with pytest.raises(InputError):
        morphism_from_doc({"s": [1]})
    path = tmp_path / "bad.json"
    path.write_text("{")
    with pytest.raises(InputError):
        load_doc(str(path))


def test_class_documents_round_trip():
    s = fixture_morphism(3).s2
    f = gkm_basis(s, 2)[3]
    doc = json.loads(json.dumps(class_to_doc(f)))
    assert class_from_doc(doc) == f
    assert isinstance(class_from_doc(doc, space=s), GkmClass)


def test_all_worked_fixtures_pass():
    reports = appendix_examples()
    assert [r.number for r in reports] == [3, 4, 5, 6, 7, 8]
    for r in reports:
        assert r.ok, r.to_json()
