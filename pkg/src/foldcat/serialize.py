"""JSON documents for root systems, words, galleries, morphisms and tuples."""

from __future__ import annotations

import json
import os
import re

from .fold import FoldMorphism, extend_morphism
from .galleries import parse_gallery, seq
from .gkm import GkmClass, RankOneSystem
from .polyring import format_poly, parse_poly
from .rootsys import (
    RootSystem,
    WeylElt,
    build_root_system,
    cycles_of,
    from_json,
    parse_root_system,
    reduced_word,
    weyl_from_cycles,
    weyl_from_word,
)


class InputError(ValueError):
    pass


def load_doc(arg: str):
    """A JSON document given inline or as a path to a file."""
    text = arg.strip()
    if text[:1] in "{[":
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"invalid JSON: {e}") from e
    if not os.path.exists(arg):
        raise InputError(f"no such file: {arg}")
    with open(arg) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as e:
            raise InputError(f"invalid JSON in {arg}: {e}") from e


def parse_word(text) -> list[int]:
    """"1,2,1", "[1,2,1]", "(s1,s2,s1)" or a list."""
    if isinstance(text, dict):
        text = text.get("seq")
    if isinstance(text, (list, tuple)):
        return [int(i) for i in text]
    body = str(text).strip()
    if body in ("", "()", "[]"):
        return []
    toks = re.split(r"[\s,]+", body.strip("()[]").strip())
    out = []
    for t in toks:
        if not t:
            continue
        m = re.fullmatch(r"s?(\d+)", t)
        if not m:
            raise InputError(f"bad letter {t!r} in word {text!r}")
        out.append(int(m.group(1)))
    return out


def _max_index_from_cycles(w) -> int:
    if isinstance(w, dict) and "cycles" in w:
        return max((x for c in w["cycles"] for x in c), default=2) - 1
    return 0


def system_for(doc_system, *words, extra: int = 0) -> RootSystem:
    """An explicit system, or A_n with n the largest index used."""
    if doc_system is not None:
        if isinstance(doc_system, dict):
            return from_json(doc_system)
        return parse_root_system(str(doc_system))
    n = max([max(w, default=0) for w in words] + [extra, 1])
    return build_root_system("A", n)


def weyl_from_doc(rs: RootSystem, w) -> WeylElt:
    if w is None:
        return weyl_from_word(rs, [])
    if isinstance(w, list):
        return weyl_from_word(rs, w)
    if "word" in w:
        return weyl_from_word(rs, w["word"])
    if "cycles" in w:
        return weyl_from_cycles(rs, w["cycles"])
    if "matrix" in w:
        return WeylElt(tuple(tuple(int(x) for x in r) for r in w["matrix"]))
    raise InputError("rotation must give a word, cycles or a matrix")


def weyl_to_doc(rs: RootSystem, w: WeylElt) -> dict:
    out = {"word": list(reduced_word(rs, w)), "matrix": [list(r) for r in w.action]}
    if len(rs.components) == 1 and rs.components[0][0] == "A":
        out["cycles"] = cycles_of(rs, w)
    return out


def morphism_from_doc(doc: dict) -> FoldMorphism:
    try:
        s_idx = parse_word(doc["s"])
        s2_idx = parse_word(doc["s2"])
        rs = system_for(doc.get("system"), s_idx, s2_idx, extra=_max_index_from_cycles(doc.get("w")))
        s, s2 = seq(rs, s_idx), seq(rs, s2_idx)
        w = weyl_from_doc(rs, doc.get("w"))
        seed = doc.get("seed") or {}
        g0 = parse_gallery(s, seed.get("gamma", [0] * len(s)))
        d0 = parse_gallery(s2, seed["delta"])
        p = [int(x) for x in doc["p"]]
    except KeyError as e:
        raise InputError(f"morphism document is missing {e}") from e
    return extend_morphism(s, s2, p, w, g0, d0)


def morphism_to_doc(m: FoldMorphism) -> dict:
    rs = m.s.rs
    return {
        "system": rs.to_json(),
        "s": list(m.s.indices),
        "s2": list(m.s2.indices),
        "p": list(m.p.images),
        "w": weyl_to_doc(rs, m.w),
        "seed": {"gamma": str(m.gamma0), "delta": str(m.delta0)},
        "sign": list(m.sign),
        "verification": m.verification,
    }


def class_from_doc(doc: dict, space=None) -> GkmClass:
    try:
        values = doc["values"]
        if space is None:
            idx = parse_word(doc["seq"])
            rs = system_for(doc.get("system"), idx)
            space = seq(rs, idx)
    except KeyError as e:
        raise InputError(f"class document is missing {e}") from e
    n = space.rs.rank
    mapping = {k: parse_poly(v, n) for k, v in values.items()}
    return GkmClass.from_map(space, mapping)


def class_to_doc(f) -> dict:
    space = f.space
    doc = {"system": space.rs.to_json()}
    if isinstance(space, RankOneSystem):
        doc["rank_one"] = {"alpha": list(space.alpha), "length": len(space)}
    else:
        doc["seq"] = list(space.indices)
    doc["values"] = {k: (format_poly(v) if hasattr(v, "terms") else str(v)) for k, v in f.items()}
    return doc


def gallery_doc(g) -> dict:
    return {"gallery": str(g), "bits": list(g.bits)}
