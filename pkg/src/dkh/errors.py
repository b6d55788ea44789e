"""Exception hierarchy shared across the package."""


class DKHError(Exception):
    """Base class for all domain errors (CLI exit code 1)."""


class DiagramError(DKHError):
    """Malformed or inconsistent diagram data."""


class MoveError(DKHError):
    """Reidemeister move site not applicable."""


class SingleCycleInterferenceError(DKHError):
    """The cube contains a face with two single-cycle edges whose affected
    circles are disjoint.  The differential components assigned to such a face
    do not compose to zero, so the chain complex is not defined there; the
    library refuses to emit a non-complex.  See README "Known limitation"."""


class UnknownCorpusName(DKHError):
    """No bundled diagram with the requested name."""


class ZeroClassWarning(UserWarning):
    """A component class is the zero vector at positive genus (legal, but often
    an encoding mistake)."""
