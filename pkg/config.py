"""Size caps and defaults shared by the solvers, enumerators and surfaces."""

# Exact min-cover oracle (bitmask dynamic programme over the point set)
BRUTE_FORCE_MAX_POINTS = 14

# Brute-force Line Point Cover oracle (bitmask over the line set)
LPC_BRUTE_FORCE_MAX_LINES = 14

# Factorial permutation search for canonical order types
CANONICAL_MAX_POINTS = 8

# Exhaustive verifier for special point sets
VERIFY_MAX_POINTS = 12

# Vertex Cover subset oracle
VC_BRUTE_FORCE_MAX_VERTICES = 16

# Grid enumeration work units: subsets (canonical mode) or subsets x n! (ordered mode)
ENUMERATION_BUDGET = 2_000_000

# Random grid samples tried per point of a special point set
SPECIAL_POINT_MAX_TRIALS = 10_000

DEFAULT_SEED = 0

# Output formatting
TABLE_MAX_ROWS = 100
