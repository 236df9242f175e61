"""Built-in analysis configurations with their expected-results blocks.

Each entry is a plain JSON-compatible dictionary in the same format that
``workbench run`` reads from a file, so the catalog doubles as the
regression suite.
"""

from __future__ import annotations

import copy
from typing import Dict, List

__all__ = ["CATALOG", "list_examples", "get_example"]

_DOWNUP_01 = {"family": "downup", "params": {"alpha": 0, "beta": 1}}
_Z2 = {"kind": "cyclic", "n": 2}
_Z4 = {"kind": "cyclic", "n": 4}


def _lemma_211(case: int, group: dict, grading: dict, extra: dict, expected: dict,
               description: str) -> dict:
    cfg = {
        "name": f"lemma-2.11-case{case}",
        "description": description,
        "algebra": {"family": "downup_xy", "params": {"alpha": 1}},
        "group": group,
        "grading": grading,
        "N": 14,
        "tasks": ["validate", "hdet", "memberships", "pertinency"],
        "expected": dict({"valid": True, "hdet_trivial": True}, **expected),
    }
    cfg.update(extra)
    return cfg


def _degree_words(n: int) -> List[str]:
    out = [""]
    for _ in range(n):
        out = [w + a for w in out for a in "xy"]
    return out


def _phi_segments(j, k, i, n: int = 3) -> list:
    V = ["yx^3", "xyx^2", "x^2yx", "x^3y"]
    W = ["y^2x^2", "xy^2x", "x^2y^2", "yx^2y"]
    X = ["x", "y"]
    segs: list = []
    for t in range(4):
        segs.append([[V[j[t]], n], [W[k[t]], n]])
        if t < 3:
            segs.append(X[i[t]])
    return segs


CATALOG: List[dict] = [
    {
        "name": "example-3.1-n2",
        "description": "down-up algebra D(0,1) graded by the dihedral group of order 4 (d -> a, u -> b)",
        "algebra": _DOWNUP_01,
        "group": {"kind": "dihedral", "n": 2},
        "grading": {"d": "a", "u": "b"},
        "N": 8,
        "tasks": ["validate", "hdet", "covariants", "pertinency"],
        "expected": {
            "valid": True,
            "hdet_trivial": True,
            "generators": ["d^2", "u^2", "(du)^2", "(ud)^2"],
            "generation_checked": True,
            "pty_ge_2": "certified",
        },
    },
    {
        "name": "example-3.1-n3",
        "description": "down-up algebra D(0,1) graded by the dihedral group of order 6 (d -> a, u -> b)",
        "algebra": _DOWNUP_01,
        "group": {"kind": "dihedral", "n": 3},
        "grading": {"d": "a", "u": "b"},
        "N": 12,
        "tasks": ["validate", "hdet", "covariants", "pertinency"],
        "expected": {
            "valid": True,
            "hdet_trivial": True,
            "generators": ["d^2", "u^2", "(du)^3", "(ud)^3"],
            "generation_checked": True,
            "pty_ge_2": "certified",
        },
    },
    {
        "name": "example-3.2",
        "description": "down-up algebra D(0,1) graded by the quaternion group (d -> i, u -> k)",
        "algebra": _DOWNUP_01,
        "group": {"kind": "quaternion8"},
        "grading": {"d": "i", "u": "k"},
        "N": 8,
        "tasks": ["validate", "hdet", "covariants", "pertinency"],
        "expected": {
            "valid": True,
            "hdet_trivial": True,
            "generators": ["d^4", "u^4", "d^2u^2", "d^2(ud)^2", "(ud)^2u^2", "(du)^2u^2",
                           "d^2(du)^2", "(du)^4", "(ud)^4"],
            "generation_checked": True,
            "pty_ge_2": "certified",
        },
    },
    {
        "name": "example-3.3-n2",
        "description": "algebra H (completed) graded by the dihedral group of order 4 (x -> a, y -> b)",
        "algebra": {"family": "H"},
        "group": {"kind": "dihedral", "n": 2},
        "grading": {"x": "a", "y": "b"},
        "N": 16,
        "tasks": ["validate", "hdet", "covariants", "hilbert", "verify-identities"],
        "series": {"numerator": "1 - t^8", "denominator": "(1 - t^2)^2*(1 - t^4)^2"},
        "definitions": {
            "X": "x^2", "Y": "y^2", "Zp": "(yx)^2", "Zm": "(xy)^2",
            "W": "y^2(y^2 + (y^2 - x^2))(y^2 + 2(y^2 - x^2))(y^2 + 3(y^2 - x^2))",
            "Wr": "x^2(x^2 + (x^2 - y^2))(x^2 + 2(x^2 - y^2))(x^2 + 3(x^2 - y^2))",
        },
        "identities": [
            {"lhs": "X Y", "rhs": "Y X"},
            {"lhs": "Zp X", "rhs": "(X + 4(Y - X)) Zp"},
            {"lhs": "Zp Y", "rhs": "(Y + 4(Y - X)) Zp"},
            {"lhs": "Zm X", "rhs": "(X - 4(Y - X)) Zm"},
            {"lhs": "Zm Y", "rhs": "(Y - 4(Y - X)) Zm"},
            {"lhs": "Zm Zp", "rhs": "Zp Zm - (W - Wr)"},
            {"lhs": "y^2 Zm - Zm y^2", "rhs": "4 Zm (y^2 - x^2)"},
            {"lhs": "Zp Zm", "rhs": "W"},
            {"lhs": "Zm Zp", "rhs": "Wr"},
            {"lhs": "(yx)(xy)", "rhs": "y^2(y^2 + (y^2 - x^2))"},
        ],
        "expected": {
            "valid": True,
            "hdet_trivial": True,
            "generators": ["x^2", "y^2", "(yx)^2", "(xy)^2"],
            "generation_checked": True,
            "hilbert": [1, 0, 2, 0, 5, 0, 8, 0, 13, 0, 18, 0, 25, 0, 32, 0, 41],
            "series_match": True,
            "identities_all_hold": True,
        },
    },
    _lemma_211(
        1, _Z2, {"x": "1", "y": "0"},
        {"memberships": [{"word": w} for w in ("x^2", "xyx", "xy^2x", "y^3")]},
        {"memberships_all_hold": True, "growth": "eventually_zero", "pty_eq_3": "certified",
         "isolated_singularity": True},
        "D(alpha,-1) in the x,y basis, alpha = 1, graded by Z/2 with x -> 1, y -> 0",
    ),
    _lemma_211(
        2, {"kind": "product", "factors": [_Z2, _Z2]}, {"x": "(1,0)", "y": "(0,1)"},
        {"span_check": ["y^3", "y^2x", "xyx", "yxy"], "tasks": ["validate", "hdet", "pertinency"]},
        {"span_reproduced": True, "pty_ge_2": "certified"},
        "D(alpha,-1) in the x,y basis, alpha = 1, graded by Z/2 x Z/2 with x -> (1,0), y -> (0,1)",
    ),
    _lemma_211(
        3, _Z2, {"x": "1", "y": "1"},
        {"memberships": [{"word": w} for w in _degree_words(4)]},
        {"memberships_all_hold": True, "pty_eq_3": "certified"},
        "D(alpha,-1) in the x,y basis, alpha = 1, graded by Z/2 with x, y -> 1",
    ),
    _lemma_211(
        4, _Z4, {"x": "1", "y": "1"},
        {"memberships": [{"word": w} for w in _degree_words(4)]},
        {"memberships_all_hold": True, "pty_eq_3": "certified"},
        "D(alpha,-1) in the x,y basis, alpha = 1, graded by Z/4 with x, y -> 1",
    ),
    _lemma_211(
        5, _Z4, {"x": "1", "y": "3"},
        {"memberships": [{"word": "x^3"}, {"word": "y^3"}]},
        {"memberships_all_hold": True, "pty_ge_2": "certified"},
        "D(alpha,-1) in the x,y basis, alpha = 1, graded by Z/4 with x -> 1, y -> 3",
    ),
    _lemma_211(
        6, {"kind": "product", "factors": [_Z4, _Z2]}, {"x": "(1,0)", "y": "(1,1)"},
        {
            "memberships": [{"word": w} for w in (
                "y^2xy^3x", "xyx^3yx", "yx^3yx^2", "x^3yx^3",
                "x^2yx^3y", "yxy^3xy", "xy^3xy^2", "y^3xy^3")],
            "coefficients": [{
                "poly": "2^7(x^3yx^3 - y^3xy^3)",
                "substitute": {"x": "(d + u)/2", "y": "(d - u)/2"},
                "target": {"family": "downup", "params": {"alpha": 1, "beta": -1}},
                "word": "u^7",
                "value": "-2",
            }],
            "tasks": ["validate", "hdet", "verify-identities", "memberships", "pertinency"],
        },
        {"memberships_all_hold": True, "identities_all_hold": True, "pty_ge_2": "certified"},
        "D(alpha,-1) in the x,y basis, alpha = 1, graded by Z/4 x Z/2 with x -> (1,0), y -> (1,1)",
    ),
    {
        "name": "lemma-2.16-F-D6",
        "description": ("algebra F graded by the group (Z/3 x Z/3) x| Z/4 of order 36; "
                        "x -> 0.0.1, y -> 0.1.1, so n = order of deg(yx^3) = 3"),
        "algebra": {"family": "F"},
        "group": {"kind": "semidirect_z3sq_z4"},
        "grading": {"x": "0.0.1", "y": "0.1.1"},
        "N": 8,
        "tasks": ["validate", "hdet", "memberships", "pertinency"],
        "memberships": [
            {"name": "Phi", "method": "block_suffix_cover",
             "segments": _phi_segments((0, 3, 2, 1), (3, 2, 1, 0), (1, 0, 0))},
            {"name": "Phi'", "method": "block_suffix_cover",
             "segments": _phi_segments((0, 3, 2, 1), (0, 3, 2, 1), (1, 1, 0))},
            {"name": "first", "word": "(yx^3)^12(yx^2)(y^2x^2)^12",
             "method": "equivalence", "certified": "Phi"},
            {"name": "second", "word": "(yx^3)^12(y^2x^2)^13",
             "method": "equivalence", "certified": "Phi'", "right": "x"},
        ],
        "expected": {
            "valid": True,
            "hdet_trivial": True,
            "memberships_all_hold": True,
            "pty_ge_2": "certified",
            "certificate_kind": "pattern",
        },
    },
    {
        "name": "case1-D4",
        "description": "down-up algebra D(0,1) graded by the dihedral group of order 4, truncated at 16",
        "algebra": _DOWNUP_01,
        "group": {"kind": "dihedral", "n": 2},
        "grading": {"d": "a", "u": "b"},
        "N": 16,
        "tasks": ["validate", "hdet", "pertinency"],
        "expected": {
            "valid": True,
            "hdet_trivial": True,
            "growth": "bounded",
            "dims_bound": 2,
            "pty_ge_2": "certified",
            "certificate_kind": "pattern",
        },
    },
    {
        "name": "case1-D6",
        "description": "down-up algebra D(0,1) graded by the dihedral group of order 6, truncated at 16",
        "algebra": _DOWNUP_01,
        "group": {"kind": "dihedral", "n": 3},
        "grading": {"d": "a", "u": "b"},
        "N": 16,
        "tasks": ["validate", "hdet", "pertinency"],
        "expected": {
            "valid": True,
            "hdet_trivial": True,
            "growth": "bounded",
            "dims_bound": 6,
            "pty_ge_2": "certified",
            "certificate_kind": "pattern",
        },
    },
    {
        "name": "B-lemma-2.7",
        "description": "algebra B graded by the quaternion group (x -> i, y -> j, z -> -1)",
        "algebra": {"family": "B"},
        "group": {"kind": "quaternion8"},
        "grading": {"x": "i", "y": "j", "z": "-1"},
        "N": 12,
        "tasks": ["validate", "pertinency"],
        "expected": {
            "valid": True,
            "pty_ge_2": "certified",
            "certificate_kind": "pattern",
        },
    },
    {
        "name": "example-3.1-n2-euler",
        "description": "resolution Euler check for D(0,1) with the dihedral grading of order 4",
        "algebra": _DOWNUP_01,
        "group": {"kind": "dihedral", "n": 2},
        "grading": {"d": "a", "u": "b"},
        "N": 10,
        "tasks": ["validate", "hdet"],
        "expected": {
            "valid": True,
            "hdet_trivial": True,
            "hdet_matches_word": True,
            "euler_passes": True,
        },
    },
]

_BY_NAME: Dict[str, dict] = {c["name"]: c for c in CATALOG}


def list_examples() -> List[dict]:
    """Name and description of every built-in configuration."""
    return [{"name": c["name"], "description": c["description"]} for c in CATALOG]


def get_example(name: str) -> dict:
    """A deep copy of the named configuration; ``KeyError`` if unknown."""
    return copy.deepcopy(_BY_NAME[name])
