"""
Utility functions for the rootlength package.

This module contains the configuration constants read from the environment,
the pipeline logger, the typed errors raised throughout the package, and small
helpers for exact rational vectors (formatting, parsing, ceilings).
"""

import os
import sys
from datetime import datetime
from fractions import Fraction
from math import lcm
from zoneinfo import ZoneInfo

from dotenv import load_dotenv
from typeguard import typechecked

load_dotenv()


# types
LatticeVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]
WeylWord = tuple[int, ...]


# constants
DEFAULT_ORBIT_CAP = int(os.getenv("ROOTLENGTH_ORBIT_CAP", "1000000"))
DEFAULT_SLAB_CAP = int(os.getenv("ROOTLENGTH_SLAB_POINT_CAP", "20000000"))
DEFAULT_STATE_CAP = int(os.getenv("ROOTLENGTH_STATE_CAP", "10000000"))
DEFAULT_LEVEL_BOUND = int(os.getenv("ROOTLENGTH_LEVEL_BOUND", "7"))
DEFAULT_R_MAX = int(os.getenv("ROOTLENGTH_R_MAX", "6"))
DEFAULT_SAMPLES = int(os.getenv("ROOTLENGTH_SAMPLES", "500"))
DEFAULT_SEED = int(os.getenv("ROOTLENGTH_SEED", "20240229"))
VERBOSE = os.getenv("ROOTLENGTH_VERBOSE", "0") not in ("", "0", "false", "False")

SUPPORTED_FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


################################################################################
# errors
################################################################################
class RootSystemError(ValueError):
    """Unknown family/rank or malformed fixture data."""


class DimensionError(ValueError):
    """Vector length does not match the rank of the root system."""


class IndexOutOfRange(ValueError):
    """Simple-root index outside 1..rank."""


class NotDominantError(ValueError):
    """A dominant vector was required."""


class NotInMonoidError(ValueError):
    """The lattice point does not lie in M(F)."""


class CapExceeded(RuntimeError):
    """A configurable enumeration cap was hit."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds the configured cap of {cap}")
        self.what = what
        self.cap = cap


class OrbitCapExceeded(CapExceeded):
    pass


class SlabCapExceeded(CapExceeded):
    pass


class StateCapExceeded(CapExceeded):
    pass


class LengthExceeded(RuntimeError):
    """Brute-force search found no decomposition with at most r_max roots."""

    def __init__(self, gamma: tuple, r_max: int):
        super().__init__(f"no decomposition of {list(gamma)} into at most {r_max} roots")
        self.gamma = gamma
        self.r_max = r_max


class InvariantViolation(AssertionError):
    """A mathematical postcondition failed at runtime."""


################################################################################
# logging
################################################################################
_verbose = VERBOSE


@typechecked
def set_verbose(flag: bool) -> None:
    """Switch pipeline logging on or off for the running process."""
    global _verbose
    _verbose = flag


@typechecked
def log_pipeline(msg: str, force: bool = False):
    """
    Print a timestamped log message with UTC time to stderr.

    The timestamp is displayed with millisecond precision in ISO 8601 format.
    Messages are only emitted when verbose logging is enabled (environment
    variable ``ROOTLENGTH_VERBOSE`` or :func:`set_verbose`) or ``force`` is set.

    Parameters
    ----------
    msg : str
        The log message to output
    force : bool, default False
        Emit the message even if verbose logging is off.

    Examples
    --------
    >>> log_pipeline("enumerating facets of E8", force=True)
    [2024-01-15T10:30:45.120Z] enumerating facets of E8
    """
    if not (_verbose or force):
        return
    dt = datetime.now(tz=ZoneInfo("UTC"))
    dt = dt.replace(microsecond=(dt.microsecond // 10000) * 10000)
    dts = dt.isoformat(timespec="milliseconds")
    print(f"[{dts}] {msg}", file=sys.stderr, flush=True)


################################################################################
# exact rationals
################################################################################
@typechecked
def format_rational(q: Fraction | int) -> str:
    """
    Serialize an exact rational as a ``"p/q"`` string.

    Integers are written with denominator 1 so that every value has the same
    shape.

    Examples
    --------
    >>> format_rational(Fraction(2, 3))
    '2/3'
    >>> format_rational(4)
    '4/1'
    """
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@typechecked
def parse_rational(s: str) -> Fraction:
    """
    Parse ``"p/q"`` or ``"p"`` into a Fraction.

    Raises
    ------
    ValueError
        If the string is not an exact rational.
    """
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Invalid rational: {s!r} ({e})")


def ceil_fraction(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def common_denominator(values) -> int:
    return lcm(1, *(Fraction(v).denominator for v in values))


def to_fractions(v) -> RatVec:
    return tuple(Fraction(x) for x in v)


def to_integers(v) -> LatticeVec:
    """Convert an exactly integral vector to a LatticeVec, raising otherwise."""
    out = []
    for x in v:
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError(f"Vector {format_vector(v)} is not integral")
        out.append(int(x))
    return tuple(out)


def format_vector(v) -> list[str]:
    return [format_rational(Fraction(x)) for x in v]


def add_vec(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub_vec(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale_vec(c, v):
    return tuple(c * a for a in v)


def is_nonnegative(v) -> bool:
    return all(x >= 0 for x in v)
