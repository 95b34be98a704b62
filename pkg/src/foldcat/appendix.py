"""Worked type A examples of fold morphisms with their known invariants,
and a runner that recomputes and compares them."""

from __future__ import annotations

from dataclasses import dataclass, field

from .curves import is_topological, is_weakly_curve_preserving, missing_curves, moment_graph
from .fold import FoldMorphism, image_membership
from .serialize import morphism_from_doc, weyl_from_doc

FIXTURES = {
    3: {
        "s": [1, 2], "s2": [1, 2, 1], "p": [1, 3], "w": {"word": []},
        "seed": {"gamma": "(e,e)", "delta": "(s1,s2,e)"},
        "expect": {
            "sign": [-1, 1],
            "rotation": {"word": []},
            "table": {"(e,e)": "(s1,s2,e)", "(s1,e)": "(e,s2,e)", "(e,s2)": "(s1,s2,s1)", "(s1,s2)": "(e,s2,s1)"},
            "topological": "no",
        },
    },
    4: {
        "s": [2, 1], "s2": [1, 2, 1], "p": [1, 3], "w": {"word": [1, 2, 1]},
        "seed": {"gamma": "(e,e)", "delta": "(s1,s2,e)"},
        "expect": {"sign": [1, -1], "rotation": {"word": [1, 2, 1]}, "topological": "no"},
    },
    5: {
        "s": [1, 2, 3], "s2": [1, 2, 1, 3, 2], "p": [1, 3, 5], "w": {"word": []},
        "seed": {"gamma": "(e,e,e)", "delta": "(s1,s2,e,s3,e)"},
        "expect": {"sign": [-1, 1, 1], "rotation": {"word": []}, "topological": "no"},
    },
    6: {
        "system": "A4",
        "s": [2, 3, 1], "s2": [3, 4, 2, 4, 4], "p": [1, 3, 5], "w": {"cycles": [[1, 5], [2, 3, 4]]},
        "seed": {"gamma": "(e,e,e)", "delta": "(s3,s4,s2,s4,e)"},
        "expect": {"sign": [-1, 1, -1], "rotation": {"cycles": [[1, 5], [2, 3, 4]]}, "topological": "no"},
    },
    7: {
        "system": "A4",
        "s": [4, 3, 3], "s2": [4, 3, 2, 3, 2, 1], "p": [1, 2, 5], "w": {"word": []},
        "seed": {"gamma": "(e,e,e)", "delta": "(e,e,s2,s3,e,s1)"},
        "expect": {
            "missing_curves": [["(e,e,s3)", "(e,s3,s3)"], ["(s4,e,s3)", "(s4,s3,s3)"]],
            "moment_graph": [8, 10],
            "weakly_curve_preserving": True,
            "topological": "yes",
        },
    },
    8: {
        "system": "A4",
        "s": [1, 4, 3], "s2": [1, 4, 4, 1, 3, 4], "p": [1, 3, 5], "w": {"word": []},
        "seed": {"gamma": "(e,e,e)", "delta": "(e,e,e,s1,e,s4)"},
        "expect": {
            "sign": [1, 1, 1],
            "witnesses": [
                ["(e,e,e)", "(s1,e,e)"], ["(e,e,e)", "(e,s4,e)"], ["(e,e,s3)", "(s1,e,s3)"],
                ["(e,s4,s3)", "(s1,s4,s3)"], ["(s1,e,e)", "(s1,s4,e)"], ["(e,s4,e)", "(s1,s4,e)"],
            ],
            "weakly_curve_preserving": False,
            "topological": "no",
        },
    },
}


@dataclass
class Check:
    name: str
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got


@dataclass
class ExampleReport:
    number: int
    checks: list[Check] = field(default_factory=list)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "example": self.number,
            "ok": self.ok,
            "error": self.error,
            "checks": [{"name": c.name, "ok": c.ok, "expected": _plain(c.expected), "got": _plain(c.got)} for c in self.checks],
        }


def _plain(x):
    if isinstance(x, (set, frozenset)):
        return sorted(_plain(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    return x


def fixture_morphism(number: int) -> FoldMorphism:
    doc = {k: v for k, v in FIXTURES[number].items() if k != "expect"}
    return morphism_from_doc(doc)


def _pairs(pairs) -> frozenset:
    return frozenset((str(a), str(b)) for a, b in pairs)


def run_example(number: int) -> ExampleReport:
    fx = FIXTURES[number]
    exp = fx["expect"]
    rep = ExampleReport(number)
    try:
        m = fixture_morphism(number)
    except ValueError as e:
        rep.error = str(e)
        return rep
    rs = m.s.rs
    if "sign" in exp:
        rep.checks.append(Check("sign", tuple(exp["sign"]), m.sign))
    if "rotation" in exp:
        rep.checks.append(Check("rotation", weyl_from_doc(rs, exp["rotation"]).action, m.w.action))
    if "table" in exp:
        want = {k: v for k, v in exp["table"].items()}
        got = {str(g): str(d) for g, d in m.table()}
        rep.checks.append(Check("phi table", want, got))
        back = {v: k for k, v in want.items()}
        got_back = {str(d): str(image_membership(m, d)) for _, d in m.table()}
        rep.checks.append(Check("preimages", back, got_back))
    if "missing_curves" in exp:
        want = frozenset(tuple(p) for p in exp["missing_curves"])
        rep.checks.append(Check("missing T-curves", want, _pairs(missing_curves(m.s))))
    if "moment_graph" in exp:
        mg = moment_graph(m.s)
        rep.checks.append(Check("moment graph size", tuple(exp["moment_graph"]), (len(mg.vertices), len(mg.edges))))
    if "weakly_curve_preserving" in exp:
        v = is_weakly_curve_preserving(m)
        rep.checks.append(Check("weakly curve preserving", exp["weakly_curve_preserving"], v.preserving))
        if "witnesses" in exp:
            want = frozenset(tuple(p) for p in exp["witnesses"])
            rep.checks.append(Check("witnesses", want, _pairs(v.witnesses)))
    if "topological" in exp:
        rep.checks.append(Check("topological", exp["topological"], is_topological(m).answer))
    return rep


def appendix_examples() -> list[ExampleReport]:
    return [run_example(k) for k in sorted(FIXTURES)]
