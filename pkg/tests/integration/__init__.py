# ABOUTME: Integration tests for hyperdet.
# ABOUTME: The conic, the worked quartic and seeded random instances through represent() and the bench.
