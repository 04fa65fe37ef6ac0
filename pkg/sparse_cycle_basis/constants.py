from enum import Enum

# guards
MAX_BRUTE_FORCE_BETTI = 8
MAX_PLANARITY_VERTICES = 40
RECURSION_STEP_LIMIT = 10**6

# defaults for the numeric recursion
DEFAULT_G0 = 64
DEFAULT_FIT_RANGE = tuple(int(10**p) for p in (2, 3, 4, 5, 6))

# defaults for the random embedding generator
DEFAULT_TRIES = 1000


class CaseTag(Enum):
    """How the replacement pair of a three-basis was found.

    * DISJOINT: the two fundamental cycles share no edge.
    * CASE1: a face boundary holds a path between non-consecutive sides.
    * CASE2: no such face; the pair is split at a vertex of the shared path.
    """

    DISJOINT = "disjoint"
    CASE1 = "case1"
    CASE2 = "case2"


class Provenance(Enum):
    FACE = "face"
    FUNDAMENTAL = "fundamental"
    MODIFIED_X = "modified x+h"
    MODIFIED_Y = "modified y+k"


class ThetaPath(Enum):
    """The three branch paths of a theta subgraph built from cycles x, y."""

    X = "x"
    Y = "y"
    XY = "xy"


class SideLabel(Enum):
    P_X = "p_x"
    P_X_PRIME = "p_x'"
    P_Y = "p_y"
    P_Y_PRIME = "p_y'"
    P_XY = "p_xy"
    P_XY_PRIME = "p_xy'"

    @classmethod
    def for_path(cls, path: ThetaPath, primed: bool) -> "SideLabel":
        return cls(f"p_{path.value}" + ("'" if primed else ""))
