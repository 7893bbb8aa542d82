"""Numerical tolerances shared across the package.

Catalog frames are entered in closed form, so only floating-point rounding
is present and the absolute tolerances below are deliberately tight.
"""

# Absolute tolerance on column norms at frame construction.
TOL_UNIT = 1e-10

# Tightness defect tolerance scales with frame size: tol = TOL_TIGHT_PER_VECTOR * N.
TOL_TIGHT_PER_VECTOR = 1e-9

# Tolerance on the projective design moment identity.
TOL_DESIGN = 1e-10

# Gap threshold for single-linkage clustering of frame angles.  Angle gaps in
# exact constructions are O(0.2) while rounding noise is O(1e-15), so anything
# in between works; 1e-8 leaves seven orders of margin on either side.
DEFAULT_CLUSTER_TOL = 1e-8


def tightness_tol(n: int) -> float:
    """Default tightness-defect tolerance for an N-vector frame."""
    return TOL_TIGHT_PER_VECTOR * n
