"""Exception hierarchy shared by the calculus modules and the CLI."""


class BocksteinError(ValueError):
    """Base class for every validation or precondition failure."""


class InvalidDecoration(BocksteinError):
    """A decorated number outside the admissible set (0+, 0-, 1-)."""


class RegularMismatch(BocksteinError):
    """An undecorated per-prime value differs from the value at Q."""


class ZeroRule(BocksteinError):
    """A type with D(Q) = 0 carries a nonzero or decorated entry."""


class NonPrimeKey(BocksteinError):
    """A prime slot was given a composite or non-positive number."""


class PreconditionDim(BocksteinError):
    """``ominus(n, D)`` was requested with ``n < dim D``."""

    def __init__(self, n: int, dim: int):
        super().__init__(f"ominus requires n >= dim D, got n={n}, dim={dim}")
        self.n = n
        self.dim = dim


class TrivialGroup(BocksteinError):
    """The Bockstein basis of the trivial group is empty."""


class OddAmbient(BocksteinError):
    """The embedding criterion is only available in even ambient dimension."""


class InfeasibleQuery(BocksteinError):
    """Dimension triple violates max(dx, dy) <= dxy <= dx + dy."""
