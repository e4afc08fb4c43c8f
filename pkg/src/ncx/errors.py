"""Exception hierarchy shared by every module of the package."""


class NCXError(Exception):
    """Base class for all errors raised by ncx."""


class ZeroInverse(NCXError, ZeroDivisionError):
    """Raised when inverting the zero element of a division ring."""


class DimensionError(NCXError, ValueError):
    pass


class Singular(NCXError):
    """A 2x2 matrix has left-dependent columns and no inverse."""


class Undefined(NCXError):
    """A partial expression (quasideterminant, quasi-Pluecker coordinate,
    cross-ratio) is not defined on the given input.

    ``blame`` names the exact failure site so callers can resample or
    report it, e.g. ``"q^y_{zt}: quasidet box (1,2) of columns (y,z)"``.
    """

    def __init__(self, blame: str, position=None):
        super().__init__(blame)
        self.blame = blame
        self.position = position


class Degenerate(NCXError):
    """Input violates a non-degeneracy hypothesis (dependent columns,
    cross-ratio in {0, 1}, zero entry after reduction)."""

    def __init__(self, blame: str):
        super().__init__(blame)
        self.blame = blame


class DegenerateCoordinates(Degenerate):
    """Some coordinate of x, y, z, t is zero."""


class DegenerateEntry(Degenerate):
    """A zero entry appeared in the reduced (x, y) block."""


class DegenerateConfiguration(Degenerate):
    """Classical cross-ratio denominator vanishes."""


class NotConjugate(NCXError):
    """The proposed conjugator does not relate the two cross-ratios."""


class ResampleExhausted(NCXError):
    """A regularity predicate rejected every draw within the attempt budget."""


class ParseError(NCXError, ValueError):
    def __init__(self, position: int, expected, text: str = ""):
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        self.text = text
        super().__init__(
            f"parse error at position {position}: expected one of "
            f"{', '.join(self.expected)}"
        )
