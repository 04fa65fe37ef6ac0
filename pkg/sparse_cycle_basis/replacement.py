"""Replacing two basis cycles by face-corrected versions that overlap less."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from .constants import CaseTag
from .cycle_space import EdgeVector
from .exceptions import PreconditionFailed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReplacementWitness:
    """Everything needed to re-check one replacement.

    Parameters
    ----------
    x, y : EdgeVector
        The pair of cycles that were replaced.
    h, k : EdgeVector
        Sums of face boundaries added to ``x`` and ``y``.
    f0 : int
        Index of the face dropped from the basis.
    case_tag : CaseTag
        Which construction produced ``h`` and ``k``.
    q_path : tuple of int, optional
        Edges of the separating face path, when one was used.
    v0 : int, optional
        Split vertex on the shared path (second case only).
    side : str, optional
        Label of the polygon side holding ``v0`` (second case only).
    i_x, i_y : tuple of int
        Faces summed into ``h`` and ``k`` (second case only; in the first
        case both equal the faces below the path).
    """

    x: EdgeVector
    y: EdgeVector
    h: EdgeVector
    k: EdgeVector
    f0: int
    case_tag: CaseTag
    q_path: Optional[tuple[int, ...]] = None
    v0: Optional[int] = None
    side: Optional[str] = None
    i_x: tuple[int, ...] = field(default=())
    i_y: tuple[int, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "case": self.case_tag.value,
            "f0": self.f0,
            "x": list(self.x.edges()),
            "y": list(self.y.edges()),
            "h": list(self.h.edges()),
            "k": list(self.k.edges()),
            "q_path": None if self.q_path is None else list(self.q_path),
            "v0": self.v0,
            "side": self.side,
            "i_x": list(self.i_x),
            "i_y": list(self.i_y),
        }


def replacement_violations(
    x: EdgeVector,
    y: EdgeVector,
    h: EdgeVector,
    k: EdgeVector,
    f0: EdgeVector,
) -> list[str]:
    """The inclusions of the replacement condition that fail, by name."""
    checks = {
        "x & y <= h | k | f0": (x & y, h | k | f0),
        "x & k <= h | y | f0": (x & k, h | y | f0),
        "h & y <= x | k | f0": (h & y, x | k | f0),
        "h & k <= x | y | f0": (h & k, x | y | f0),
    }
    return [
        name
        for name, (left, right) in checks.items()
        if not left.issubset(right)
    ]


def check_replacement_preconditions(
    x: EdgeVector,
    y: EdgeVector,
    h: EdgeVector,
    k: EdgeVector,
    f0: EdgeVector,
) -> bool:
    """Whether ``(x + h) & (y + k)`` is guaranteed to lie inside ``f0``.

    Every edge shared by ``x + h`` and ``y + k`` lies in exactly one of
    ``x, h`` and in exactly one of ``y, k``; the four inclusions cover the
    four combinations.
    """
    return not replacement_violations(x, y, h, k, f0)


def apply_replacement(
    x: EdgeVector,
    y: EdgeVector,
    h: EdgeVector,
    k: EdgeVector,
    f0: Optional[EdgeVector] = None,
) -> tuple[EdgeVector, EdgeVector]:
    """Return ``(x + h, y + k)``.

    Parameters
    ----------
    f0 : EdgeVector, optional
        Edges met by the walk of the face to be dropped, bridges and
        pendant edges included. When given, the preconditions
        are checked and ``PreconditionFailed`` is raised on failure.
    """
    if f0 is not None:
        failed = replacement_violations(x, y, h, k, f0)
        if failed:
            raise PreconditionFailed(f"violated: {', '.join(failed)}")
    x2, y2 = x + h, y + k
    logger.debug(
        "replaced cycles of weight %d, %d by weight %d, %d",
        x.weight,
        y.weight,
        x2.weight,
        y2.weight,
    )
    return x2, y2
