# ABOUTME: Unit tests for hyperdet.
# ABOUTME: One package per source subpackage: poly, numerics, intersect, detrep, verify, cli, common.
