"""Built-in monomial worked examples with their recorded symbolic squares.

These are the two reference computations the ``verify-paper`` command
replays exactly: a three-generator ideal in four variables and Terai's
ten-generator cubic ideal in six variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ideal_files import parse_polynomial
from .ideals import MonomialIdeal
from .rings import Ring


@dataclass(frozen=True)
class MonomialCase:
    name: str
    ring: Ring
    ideal: MonomialIdeal
    components: tuple  # a recorded primary decomposition, or ()
    expected_square: MonomialIdeal  # recorded generators of the symbolic square
    expected_beg: int
    expected_max_degree: int
    generator_degree: int  # D for the D*n bound


def _mono(ring: Ring, text: str):
    m, _ = parse_polynomial(ring, text).as_monomial()
    return m


def _ideal(ring: Ring, *texts) -> MonomialIdeal:
    return MonomialIdeal(ring, [_mono(ring, t) for t in texts])


@lru_cache(maxsize=None)
def case_ex31() -> MonomialCase:
    """(xz, xt^2, y^2z) over x,y,z,t with its recorded square of 6 generators."""
    R = Ring(("x", "y", "z", "t"))
    ideal = _ideal(R, "x*z", "x*t^2", "y^2*z")
    components = (
        _ideal(R, "x", "y^2"),
        _ideal(R, "z", "t^2"),
        _ideal(R, "x", "z"),
    )
    expected = _ideal(
        R,
        "x^2*z^2",
        "x^2*z*t^2",
        "x*y^2*z^2",
        "x^2*t^4",
        "x*y^2*z*t^2",
        "y^4*z^2",
    )
    return MonomialCase("ex31", R, ideal, components, expected,
                        expected_beg=4, expected_max_degree=6, generator_degree=3)


TERAI_DEGREE5 = (
    "b*c*d*e*f", "a*c*d*e*f", "a*b*d*e*f", "a*b*c*e*f", "a*b*c*d*f", "a*b*c*d*e",
)

TERAI_DEGREE6 = (
    "c^2*e^2*f^2", "b*c*e^2*f^2", "b^2*e^2*f^2", "c^2*d*e*f^2", "a*b^2*e*f^2",
    "c^2*d^2*f^2", "a*c*d^2*f^2", "a^2*d^2*f^2", "a^2*b*d*f^2", "a^2*b^2*f^2",
    "b^2*d*e^2*f", "a*c^2*e^2*f", "a^2*d^2*e*f", "b*c^2*d^2*f", "a^2*b^2*c*f",
    "b^2*d^2*e^2", "a*b*d^2*e^2", "a^2*d^2*e^2", "a^2*c*d*e^2", "a^2*c^2*e^2",
    "b^2*c*d^2*e", "a^2*b*c^2*e", "b^2*c^2*d^2", "a*b^2*c^2*d", "a^2*b^2*c^2",
)


@lru_cache(maxsize=None)
def case_ex32() -> MonomialCase:
    """Terai's squarefree cubic ideal; the recorded square has 31 generators."""
    R = Ring(("a", "b", "c", "d", "e", "f"))
    ideal = _ideal(
        R,
        "a*b*c", "a*b*f", "a*c*e", "a*d*e", "a*d*f",
        "b*c*d", "b*d*e", "b*e*f", "c*d*f", "c*e*f",
    )
    expected = _ideal(R, *(TERAI_DEGREE5 + TERAI_DEGREE6))
    return MonomialCase("ex32", R, ideal, (), expected,
                        expected_beg=5, expected_max_degree=6, generator_degree=3)
