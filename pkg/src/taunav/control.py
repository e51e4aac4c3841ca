"""Steering primitives built on time-to-transit and its heading derivative.

Three laws are provided:

* ``u_distance`` -- paired-feature alignment: steers the heading onto the
  direction from the first feature to the second by climbing the gradient of
  the transit-time difference.
* ``u_circle`` -- single-feature circling: holds the feature's time-to-transit
  at a reference value (zero on the transit manifold, where the motion is an
  exact circular arc around the feature).
* ``u_pass`` -- paired-feature passing: equalizes the two transit times so the
  path crosses the gap between the features.

Also provides the closed-form heading solution under pure alignment feedback
and the time at which the commanded curvature decays to a threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegeneratePairError, SingularCircleError, SingularHeadingError
from .geometry import Feature, Pose, body_frame_offset, normalize_angle
from .sensing import tau_dtheta, tau_geometric

#: Minimum lateral offset (m) for the circling feedback to be well posed.
R_MIN = 1e-6


@dataclass(frozen=True, slots=True)
class Gains:
    """Steering gain and forward speed; ``kc`` tunes the circling correction.

    ``kc`` defaults to ``k`` when unset.
    """

    k: float
    v: float
    kc: float | None = None

    def __post_init__(self):
        if not self.k > 0.0:
            raise ValueError(f"gain k must be positive, got {self.k}")
        if not self.v > 0.0:
            raise ValueError(f"speed v must be positive, got {self.v}")
        if self.kc is not None and not self.kc > 0.0:
            raise ValueError(f"gain kc must be positive, got {self.kc}")

    @property
    def k_circle(self) -> float:
        return self.k if self.kc is None else self.kc


@dataclass(frozen=True, slots=True)
class Circle:
    """Single-feature circling law bound to one feature id."""

    feature: str


@dataclass(frozen=True, slots=True)
class Distance:
    """Paired-feature alignment law bound to an ordered feature pair."""

    feature1: str
    feature2: str


@dataclass(frozen=True, slots=True)
class Pass:
    """Paired-feature passing law; feature1 is on the vehicle's left."""

    feature1: str
    feature2: str


LawKind = Circle | Distance | Pass


def _require_distinct(f1: Feature, f2: Feature) -> None:
    if f1.x == f2.x and f1.y == f2.y:
        raise DegeneratePairError(
            f"features {f1.id!r} and {f2.id!r} coincide at ({f1.x:g}, {f1.y:g})")


def u_distance(pose: Pose, f1: Feature, f2: Feature, g: Gains) -> float:
    """Alignment turn rate k*(dtau2/dtheta - dtau1/dtheta).

    Zero exactly when the heading is parallel or anti-parallel to the segment
    from ``f1`` to ``f2``.

    Raises:
        DegeneratePairError: the two features coincide.
    """
    _require_distinct(f1, f2)
    return g.k * (tau_dtheta(pose, f2, g.v) - tau_dtheta(pose, f1, g.v))


def u_circle(pose: Pose, f: Feature, g: Gains, tau_ref: float = 0.0) -> float:
    """Circling turn rate that regulates the feature's transit time to ``tau_ref``.

    On the ``tau == tau_ref == 0`` manifold this reduces to the exact
    constant-radius feedforward v/r signed by the feature's side; off the
    manifold a proportional correction with gain ``g.k_circle`` drives the
    transit time back to the reference.

    Raises:
        SingularCircleError: the feature's lateral offset is below ``R_MIN``
            (coincident with the vehicle, or dead ahead/astern).
    """
    _, y_rel = body_frame_offset(pose, f)
    if abs(y_rel) < R_MIN:
        raise SingularCircleError(
            f"feature {f.id!r} lateral offset {y_rel:g} below {R_MIN:g}")
    tau = tau_geometric(pose, f, g.v)
    side = 1.0 if y_rel > 0.0 else -1.0
    return g.v / y_rel - g.k_circle * side * (tau - tau_ref)


def u_pass(pose: Pose, f1: Feature, f2: Feature, g: Gains) -> float:
    """Passing turn rate k*(tau1 - tau2) with ``f1`` on the vehicle's left.

    Turns toward whichever feature would be transited later, equalizing the
    two transit times so the path crosses between the features.

    Raises:
        DegeneratePairError: the two features coincide.
    """
    _require_distinct(f1, f2)
    return g.k * (tau_geometric(pose, f1, g.v) - tau_geometric(pose, f2, g.v))


def theta_closed_form(theta0: float, k: float, t: float) -> float:
    """Exact heading at time ``t`` under the alignment flow dtheta/dt = -k sin(theta).

    Raises:
        SingularHeadingError: ``theta0`` is anti-aligned (|theta0| == pi).
        ValueError: non-positive gain.
    """
    if not k > 0.0:
        raise ValueError(f"gain must be positive, got {k}")
    th0 = normalize_angle(theta0)
    if abs(th0) == math.pi:
        raise SingularHeadingError("initial heading exactly anti-aligned")
    return 2.0 * math.atan(math.tan(0.5 * th0) * math.exp(-k * t))


def time_to_curvature(theta0: float, k: float, alpha: float) -> float:
    """Time at which the commanded curvature magnitude k*|sin(theta)| reaches ``alpha``.

    Valid for 0 < alpha < k*|sin(theta0)|; negative initial headings map
    through the flow's odd symmetry.

    Raises:
        ValueError: gain or threshold outside the admissible range.
        SingularHeadingError: |theta0| is 0 or pi (the flow's equilibria).
    """
    if not k > 0.0:
        raise ValueError(f"gain must be positive, got {k}")
    th0 = abs(normalize_angle(theta0))
    if th0 == 0.0 or th0 == math.pi:
        raise SingularHeadingError("initial heading at an equilibrium of the flow")
    if not 0.0 < alpha < k * math.sin(th0):
        raise ValueError(
            f"threshold must lie in (0, {k * math.sin(th0):g}), got {alpha}")
    return (math.log(math.tan(0.5 * th0))
            - math.log(math.tan(0.5 * math.asin(alpha / k)))) / k
