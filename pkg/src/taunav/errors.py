"""Exception hierarchy shared across the toolkit."""


class TauNavError(Exception):
    """Base class for all domain errors raised by this package."""


class NotVisibleError(TauNavError):
    """Feature is on the wrong side of (or on) the camera's flight line."""


class ProjectionSingularError(NotVisibleError):
    """Lateral distance equals the focal length; the projection has no finite image."""


class IndeterminateFlowError(TauNavError):
    """Image flow magnitude is below the resolvable threshold; tau is undefined."""


class DegeneratePairError(TauNavError):
    """A paired-feature law was given two coincident features."""


class SingularCircleError(TauNavError):
    """Circling feedback is singular (feature too close or dead ahead/astern)."""


class SingularHeadingError(TauNavError):
    """Closed-form heading solution is undefined for an anti-aligned initial heading."""


class SceneError(TauNavError):
    """A scene is structurally invalid or a referenced feature does not exist."""


class ParseError(TauNavError):
    """Structured-text input could not be parsed.

    Carries the file path plus 1-based line and column of the offending token.
    """

    def __init__(self, path, line, col, message):
        super().__init__(f"{path}:{line}:{col}: {message}")
        self.path = str(path)
        self.line = line
        self.col = col


class SimulationAborted(TauNavError):
    """A control law failed mid-run; carries the partial trajectory and state."""

    def __init__(self, message, trajectory=None, state=None):
        super().__init__(message)
        self.trajectory = trajectory
        self.state = state


class ProtocolTimeout(TauNavError):
    """The horizon elapsed before the final guard fired; partial trajectory attached."""

    def __init__(self, message, trajectory=None):
        super().__init__(message)
        self.trajectory = trajectory
