"""Exception types raised by phasekit."""


class PhasekitError(Exception):
    """Base class for computation errors (as opposed to bad arguments)."""


class DegenerateNonlinearity(PhasekitError):
    """The nonlinearity f(n) sits on (or numerically at) a Laguerre zero."""


class TruncationSaturated(PhasekitError):
    """The Fock series did not converge before the truncation cap."""


class DegenerateCommutator(PhasekitError):
    """|<[N, Phi]>| is too small for the squeezing parameters to be defined."""


class NoInteriorMinimum(PhasekitError):
    """The smallest sampled value lies on the boundary of the sweep."""
