import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from convexmeans.bodies import Polygon
from convexmeans.bodyfile import BodyFileError, dumps, format_number, loads, read_body, write_body
from convexmeans.constructions import b_inf, cross_body, regular_triangle

from oracles import random_convex_polygon

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_round_trip_is_byte_identical(seed):
    P = Polygon(random_convex_polygon(np.random.default_rng(seed)))
    text = dumps(P, "random")
    Q, name = loads(text)
    assert name == "random"
    assert np.array_equal(Q.vertices, P.vertices)
    assert dumps(Q, name) == text


def test_hv_body_round_trip(tmp_path):
    C = cross_body(3, 2.0)
    path = tmp_path / "cross.json"
    write_body(path, C, "cross")
    D, name = read_body(path)
    assert name == "cross"
    assert np.array_equal(D.vertices, C.vertices) and np.array_equal(D.offsets, C.offsets)
    assert dumps(D, name) == path.read_text()


def test_numbers_keep_seventeen_digits():
    assert format_number(0.1) == "0.10000000000000001"
    assert float(format_number(np.sqrt(3))) == np.sqrt(3)
    assert format_number(-0.0) == "0"
    with pytest.raises(BodyFileError):
        format_number(float("inf"))


def test_either_representation_is_enough_in_the_plane():
    T = regular_triangle()
    d = json.loads(dumps(T))
    only_v, _ = loads(json.dumps({"dim": 2, "vertices": d["vertices"]}))
    only_h, _ = loads(json.dumps({"dim": 2, "halfspaces": d["halfspaces"]}))
    assert only_v.almost_equal(T) and only_h.almost_equal(T, tol=1e-12)


@pytest.mark.parametrize("doc, message", [
    ("{not json", "JSON"),
    ("[]", "object"),
    ('{"dim": 1, "vertices": [[1]]}', "dim"),
    ('{"dim": 2}', "vertices or halfspaces"),
    ('{"dim": 2, "vertices": [[1, 1], [2, 1], [2, 2]]}', "origin"),
    ('{"dim": 2, "vertices": [[1, 0], [0, 1]]}', "at least 3"),
    ('{"dim": 2, "vertices": [[1, "a"], [0, 1], [-1, -1]]}', "numeric"),
    ('{"dim": 2, "vertices": [[1, 0], [0, 1], [-1, -1]], "extra": 1}', "unknown"),
    ('{"dim": 3, "vertices": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]}', "both"),
    ('{"dim": 2, "halfspaces": [{"a": [1, 0], "b": -1}]}', "positive"),
])
def test_malformed_files_are_rejected(doc, message):
    with pytest.raises(BodyFileError, match=message):
        loads(doc)


def test_inconsistent_representations_are_rejected():
    d = json.loads(dumps(b_inf()))
    d["halfspaces"][0]["b"] *= 1.5
    with pytest.raises(BodyFileError):
        loads(json.dumps(d))
    d = json.loads(dumps(b_inf()))
    d["halfspaces"] = d["halfspaces"][:3]
    with pytest.raises(BodyFileError):
        loads(json.dumps(d))
