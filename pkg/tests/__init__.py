# ABOUTME: Test package for hyperdet.
# ABOUTME: Unit tests per subpackage, plus end-to-end integration runs of the representation pipeline.
