"""Smoke tests for the capset python module."""

import pytest

import capset


def test_points_and_lines():
    assert capset.point_from_coords([0, 0, 0, 0]) == 0
    assert capset.point_from_coords([1, 1, 1, 1]) == 40
    assert capset.point_from_coords([2, 1]) == 7
    assert capset.coords_of(4, 40) == [1, 1, 1, 1]
    assert capset.third_point(4, 0, 40) == 80
    assert capset.is_line(4, 0, 40, 80)
    assert [capset.line_count(n) for n in (1, 2, 3, 4)] == [1, 12, 117, 1080]
    assert capset.grid_position(4, 0) == (0, 0)
    with pytest.raises(ValueError):
        capset.point_from_coords([0, 0, 0, 3])


def test_cap_basics():
    assert [capset.max_cap_size(n) for n in (1, 2, 3, 4)] == [2, 4, 9, 20]
    cap = capset.canonical_cap()
    assert len(cap) == 20
    assert cap[:4] == [1, 2, 3, 6]
    assert capset.is_cap(4, cap)
    assert capset.is_complete_cap(4, cap)
    anchor, pairs = capset.anchor_of(4, cap)
    assert anchor == 0
    assert len(pairs) == 10
    assert capset.completion_count(4, cap, 0) == 10
    assert capset.cap_sum(4, cap) == 0


def test_enumeration_and_stabilizer():
    assert capset.anchor0_cap_count() == 8424
    caps2 = capset.maximal_caps(2)
    assert len(caps2) == 54
    cap = capset.canonical_cap()
    assert capset.stabilizer_order(4, cap, "gl") == 2880
    assert capset.gl_order(4) == 24261120
    assert capset.aff_order(4) == 1965150720


def test_censuses():
    cap = capset.canonical_cap()
    census = capset.classify(cap)
    assert census == {"disjoint": 198, "one": 36, "two": 90, "six": 72}
    parts = capset.partition_census(cap)
    assert parts == {"partitions": 216, "e1": 36, "e2": 180}


def test_render():
    cap = capset.canonical_cap()
    art = capset.render_ascii(4, cap, 0)
    assert art.count("#") == 20
    assert art.count("@") == 1
    assert art.lstrip().startswith("@")  # the anchor sits in the upper left


def test_verify_quick():
    report = capset.verify("quick")
    assert report["results"]["pass"] is True
    assert report["results"]["lemma3_2_cap_count"] == 8424
    assert report["results"]["lemma3_2_stabilizer_order"] == 2880
    assert report["digest"]
