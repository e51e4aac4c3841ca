"""Planar world-frame primitives: vehicle pose and point features."""

from __future__ import annotations

import math
from dataclasses import dataclass, field


def normalize_angle(theta: float) -> float:
    """Wrap an angle to (-pi, pi]."""
    th = math.remainder(theta, math.tau)
    if th <= -math.pi:
        th += math.tau
    return th


@dataclass(frozen=True, slots=True)
class Pose:
    """Vehicle configuration (x, y, heading) in the world frame.

    The heading is measured from the world x-axis and is normalized to
    (-pi, pi] on construction.
    """

    x: float
    y: float
    theta: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.theta)):
            raise ValueError("pose components must be finite")
        object.__setattr__(self, "theta", normalize_angle(self.theta))


@dataclass(frozen=True, slots=True)
class Feature:
    """Named point landmark in the world frame."""

    id: str
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"feature {self.id!r} has non-finite coordinates")


def body_frame_offset(pose: Pose, feature: Feature) -> tuple[float, float]:
    """Return the feature's (longitudinal, lateral) offset in the body frame.

    Longitudinal is along the heading; lateral is positive to the vehicle's left.
    """
    dx = feature.x - pose.x
    dy = feature.y - pose.y
    c = math.cos(pose.theta)
    s = math.sin(pose.theta)
    return c * dx + s * dy, -s * dx + c * dy
