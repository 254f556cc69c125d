"""Maximal caps and cap partitions of AG(n,3), n <= 4."""

import json as _json

from capset._core import (  # noqa: F401
    aff_order,
    anchor0_cap_count,
    anchor_of,
    canonical_cap,
    cap_sum,
    classify,
    completion_count,
    coords_of,
    gl_order,
    grid_position,
    is_cap,
    is_complete_cap,
    is_line,
    line_count,
    max_cap_size,
    maximal_caps,
    partition_census,
    point_from_coords,
    render_ascii,
    stabilizer_order,
    third_point,
    verify_json,
)


def verify(depth="quick", jobs=0, seed=0):
    """Run the verification suite and return the report as a dict."""
    return _json.loads(verify_json(depth, jobs, seed))
