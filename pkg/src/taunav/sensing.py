"""Time-to-transit sensing, geometric and through a side-looking pinhole camera.

The geometric sensor evaluates the transit time directly from world-frame
coordinates.  The image-plane sensor projects a feature through an idealized
pinhole camera whose axis points along the body lateral axis, and recovers
the same quantity from the ratio of image position to image flow.  All
functions are pure and thread-safe.

Conventions (fixed here, validated by the ray-trace and equivalence tests):

* The image plane lies along the body x-axis; the pinhole sits at lateral
  distance ``f`` on the camera side.  A feature at longitudinal offset ``x``
  and lateral distance ``d > 0`` images at ``d_i = -f*x / (d - f)``, so
  features ahead of the transit line image at negative ``d_i``.
* ``d_i_dot`` is the image flow rate measured positive for image motion
  *against* the image axis (the sense in which the scene streams past a
  side-looking eye).  With this orientation ``d_i / d_i_dot`` is the time
  remaining until transit, positive while the feature is still ahead.  The
  raw time derivative of ``d_i`` is ``-d_i_dot``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import IndeterminateFlowError, NotVisibleError, ProjectionSingularError
from .geometry import Feature, Pose, body_frame_offset

#: Flow magnitudes at or below this are treated as indeterminate (feature at
#: transit with degenerate flow).
EPS_FLOW = 1e-12

#: Relative tolerance around d == f where the projection has no finite image.
_EPS_SINGULAR = 1e-12


@dataclass(frozen=True, slots=True)
class Camera:
    """Side-looking pinhole camera: focal length and which half-plane it faces."""

    f: float
    side: str = "right"

    def __post_init__(self):
        if not (self.f > 0.0 and math.isfinite(self.f)):
            raise ValueError("focal length must be positive and finite")
        if self.side not in ("left", "right"):
            raise ValueError("camera side must be 'left' or 'right'")


@dataclass(frozen=True, slots=True)
class ImageObservation:
    """Image coordinate of a feature and its flow rate."""

    d_i: float
    d_i_dot: float

    def __post_init__(self):
        if not (math.isfinite(self.d_i) and math.isfinite(self.d_i_dot)):
            raise ValueError("image observation must be finite")


def tau_geometric(pose: Pose, feature: Feature, v: float) -> float:
    """Time-to-transit of ``feature`` for a vehicle at ``pose`` moving at speed ``v``.

    Negative when the feature lies behind the transit line through the vehicle.

    Raises:
        ValueError: if ``v`` is not strictly positive.
    """
    if not v > 0.0:
        raise ValueError(f"speed must be positive, got {v}")
    return (math.cos(pose.theta) * (feature.x - pose.x)
            + math.sin(pose.theta) * (feature.y - pose.y)) / v


def tau_dtheta(pose: Pose, feature: Feature, v: float) -> float:
    """Partial derivative of the time-to-transit with respect to heading."""
    if not v > 0.0:
        raise ValueError(f"speed must be positive, got {v}")
    return (-math.sin(pose.theta) * (feature.x - pose.x)
            + math.cos(pose.theta) * (feature.y - pose.y)) / v


def _lateral_distance(pose: Pose, feature: Feature, camera: Camera) -> tuple[float, float]:
    """Return (longitudinal offset, lateral distance toward the camera side)."""
    x_rel, y_rel = body_frame_offset(pose, feature)
    d = y_rel if camera.side == "left" else -y_rel
    return x_rel, d


def project_feature(pose: Pose, feature: Feature, camera: Camera) -> float:
    """Image coordinate of ``feature`` on the body x-axis image plane.

    Raises:
        NotVisibleError: feature on the wrong side of, or on, the flight line.
        ProjectionSingularError: lateral distance equals the focal length.
    """
    x_rel, d = _lateral_distance(pose, feature, camera)
    if d <= 0.0:
        raise NotVisibleError(
            f"feature {feature.id!r} not on the {camera.side} camera side (offset {d:g})")
    if abs(d - camera.f) <= _EPS_SINGULAR * max(1.0, camera.f):
        raise ProjectionSingularError(
            f"feature {feature.id!r} at lateral distance {d:g} ~ focal length {camera.f:g}")
    return -camera.f * x_rel / (d - camera.f)


def image_flow(pose: Pose, v: float, u: float, feature: Feature, camera: Camera) -> ImageObservation:
    """Image position and flow rate of ``feature`` under turn rate ``u`` at speed ``v``.

    The flow rate follows the module's sign convention (see module docstring):
    it equals minus the time derivative of the image coordinate along the
    closed-loop motion, so that ``image_tau`` recovers the geometric transit
    time including its sign.

    Raises:
        ValueError: non-positive speed or non-finite turn rate.
        NotVisibleError: propagated from the projection.
    """
    if not v > 0.0:
        raise ValueError(f"speed must be positive, got {v}")
    if not math.isfinite(u):
        raise ValueError("turn rate must be finite")
    x_rel, d = _lateral_distance(pose, feature, camera)
    d_i = project_feature(pose, feature, camera)
    # Body-frame kinematics of the relative offsets under (v, u).
    x_rel_dot = -v + u * (d if camera.side == "left" else -d)
    y_rel_dot = -u * x_rel
    d_dot = y_rel_dot if camera.side == "left" else -y_rel_dot
    denom = d - camera.f
    ddi_dt = -camera.f * (x_rel_dot * denom - x_rel * d_dot) / (denom * denom)
    return ImageObservation(d_i=d_i, d_i_dot=-ddi_dt)


def image_tau(obs: ImageObservation, eps_flow: float = EPS_FLOW) -> float:
    """Time-to-transit recovered from an image observation.

    Raises:
        IndeterminateFlowError: the flow magnitude is at or below ``eps_flow``.
    """
    if abs(obs.d_i_dot) <= eps_flow:
        raise IndeterminateFlowError(
            f"image flow {obs.d_i_dot:g} below threshold {eps_flow:g}")
    return obs.d_i / obs.d_i_dot
