"""Constants for orbitkit.

Tabulated data follows Bourbaki's planches: positive-root counts and Coxeter
numbers per family, plus the defaults used by the verification driver.
"""

# Supported families and rank bounds (inclusive); ranks stop at 8.
# D2 is the reducible A1 x A1 realization; D3 is isomorphic to A3.
RANK_BOUNDS = {
    "A": (1, 8),
    "B": (2, 8),
    "C": (2, 8),
    "D": (2, 8),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

SIMPLY_LACED = frozenset({"A", "D", "E"})


def positive_root_count(family: str, rank: int) -> int:
    """Classical |Phi+| for a family and rank."""
    if family == "A":
        return rank * (rank + 1) // 2
    if family in ("B", "C"):
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    if family == "E":
        return {6: 36, 7: 63, 8: 120}[rank]
    if family == "F":
        return 24
    if family == "G":
        return 6
    raise KeyError(family)


def coxeter_number(family: str, rank: int) -> int:
    """Coxeter number h of an irreducible system (D2 gives 2, as A1 x A1)."""
    if family == "A":
        return rank + 1
    if family in ("B", "C"):
        return 2 * rank
    if family == "D":
        return 2 * rank - 2
    if family == "E":
        return {6: 12, 7: 18, 8: 30}[rank]
    if family == "F":
        return 12
    if family == "G":
        return 6
    raise KeyError(family)


# Verification defaults
DEFAULT_SEED = 0
DEFAULT_XI_SAMPLES = 5
DEFAULT_SAMPLE_BUDGET = 200
DEFAULT_WORKERS = 1

# Largest accepted field characteristic: int64 matrix products over 120
# positive roots stay exact while p * p * 120 < 2**63.
MAX_PRIME = 2**25

# Exhaustive non-admissible scan guard
SCAN_MAX_POSITIVES = 40

# Systems with more positive roots than this are swept by sampling
EXHAUSTIVE_MAX_POSITIVES = 40

# Environment / settings file
ENV_SEED = "ORBITKIT_SEED"
ENV_CONFIG = "ORBITKIT_CONFIG"
DEFAULT_CONFIG_FILE = "orbitkit.json"

# CLI exit codes
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_FIELD = 4
