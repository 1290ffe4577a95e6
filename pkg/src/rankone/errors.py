"""Exception types shared across the package."""


class RankOneError(Exception):
    """Base class for all library-specific errors."""


class ExtensionExhaustedError(RankOneError):
    """The extension rule cannot materialize the requested stage."""


class NoParseError(RankOneError):
    """A word admits no full-cover block/spacer decomposition."""


class HorizonExhaustedError(RankOneError):
    """No stage within the search budget satisfies a normalization condition.

    For an unbounded parameter this signals that the code is constant on the
    whole language, so the factor is a single point.
    """


class NeedsTelescopingError(RankOneError):
    """Stage-1 spacers are all below the requested threshold."""


class WindowInsufficientError(RankOneError):
    """A witness falls outside every window the caller is willing to build."""


class InternalInconsistencyError(RankOneError):
    """Both the finite and the invertibility certificates validated.

    The factor dichotomy forbids this for aperiodic source words; seeing it
    means a bug, or a degenerate (periodic) parameter.
    """
