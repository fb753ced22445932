"""Closed-form densities for the Lagarias sequence and the known torsion cases.

Every coefficient is derived: the split density from a signed combination of
S_{m,n} coefficients, the inert density from the densities of the two inert
residue classes divided by the ell-wise violation factors at 2, 5 and 11.
"""

import logging
from fractions import Fraction

from ..algebra.recurrence import LAGARIAS, LUCAS, Recurrence
from ..config import DEFAULT_EULER_BOUND
from .approx import ApproxReal, DensityResult, ExactRational
from .products import euler_S, two_variable_product
from .series import DensityError, s_mn, violation_density

logger = logging.getLogger(__name__)

__all__ = [
    "CORRECTION",
    "NoPredictionError",
    "SPLIT_COMBINATION",
    "delta_inert_closed",
    "delta_split_closed",
    "delta_split_coefficient",
    "delta_total",
    "euler_constant",
    "inert_components",
    "lucas_total",
    "predictions_for",
]

# (sign, m, n) terms of 2 * delta_split / S
SPLIT_COMBINATION = (
    (1, 1, 1),
    (1, 2, 2),
    (1, 2, 5),
    (1, 2, 11),
    (1, 2, 10),
    (1, 2, 22),
    (1, 2, 55),
    (1, 2, 110),
)
# the factor 2 at ell = 5 for odd i
CORRECTION = ((1, 1, 5), (-1, 2, 5))

# densities of the inert primes p = 3 mod 4 and p = 1 mod 4 before the ell-conditions
INERT_CLASS_DENSITIES = {
    "inert_3_mod_4": (Fraction(1, 4), (2, 5)),
    "inert_1_mod_4": (Fraction(1, 8), (2, 5, 11)),
}


class NoPredictionError(DensityError):
    """No density formula is known for this recurrence."""

    def __init__(self, rec: Recurrence):
        self.rec = rec
        super().__init__(f"no density prediction for recurrence {rec}")


def _combine(terms: tuple[tuple[int, int, int], ...]) -> ExactRational:
    return sum((sign * s_mn(m, n) for sign, m, n in terms), Fraction(0))


def delta_split_coefficient(include_correction: bool = True) -> ExactRational:
    """delta_split / S, half the S_{m,n} combination."""
    total = _combine(SPLIT_COMBINATION)
    if include_correction:
        total += _combine(CORRECTION)
    return total / 2


def inert_components() -> dict[str, ExactRational]:
    """Coefficients of S for the two inert residue classes.

    Each class density is divided by prod (1 - ell/(ell**3 - 1)) over the ell
    whose condition S already accounts for.
    """
    out = {}
    for name, (density, ells) in INERT_CLASS_DENSITIES.items():
        coefficient = density
        for ell in ells:
            coefficient /= 1 - violation_density(ell)
        out[name] = coefficient
    return out


def euler_constant(euler_bound: int = DEFAULT_EULER_BOUND) -> DensityResult:
    return DensityResult("euler_S", euler_S(euler_bound), Fraction(1), "S")


def delta_split_closed(euler_bound: int = DEFAULT_EULER_BOUND) -> DensityResult:
    coefficient = delta_split_coefficient()
    return DensityResult(
        "delta_split_closed", two_variable_product(coefficient, euler_bound), coefficient
    )


def delta_inert_closed(euler_bound: int = DEFAULT_EULER_BOUND) -> DensityResult:
    components = {
        name: DensityResult(name, two_variable_product(c, euler_bound), c)
        for name, c in inert_components().items()
    }
    coefficient = sum((c.coefficient for c in components.values()), Fraction(0))
    return DensityResult(
        "delta_inert_closed",
        two_variable_product(coefficient, euler_bound),
        coefficient,
        components=components,
    )


def delta_total(euler_bound: int = DEFAULT_EULER_BOUND) -> DensityResult:
    """Density of primes dividing some term of the Lagarias sequence."""
    split = delta_split_closed(euler_bound)
    inert = delta_inert_closed(euler_bound)
    coefficient = split.coefficient + inert.coefficient
    logger.info(f"delta_total coefficient {coefficient}")
    return DensityResult(
        "delta_total",
        two_variable_product(coefficient, euler_bound),
        coefficient,
        components={"delta_split_closed": split, "delta_inert_closed": inert},
    )


def lucas_total() -> DensityResult:
    """Exact density 2/3 of primes dividing some Lucas number."""
    return DensityResult("lucas_total", ApproxReal.exact(Fraction(2, 3)), Fraction(2, 3), "1")


def predictions_for(
    rec: Recurrence, euler_bound: int = DEFAULT_EULER_BOUND
) -> dict[str, DensityResult]:
    """Predicted densities keyed by case ("split", "inert", "total").

    Raises:
        NoPredictionError: If no formula is known for rec
    """
    if rec == LAGARIAS:
        total = delta_total(euler_bound)
        return {
            "split": total.components["delta_split_closed"],
            "inert": total.components["delta_inert_closed"],
            "total": total,
        }
    if rec == LUCAS:
        return {"total": lucas_total()}
    raise NoPredictionError(rec)
