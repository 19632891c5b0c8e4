"""Published girth-12 constructions for t = 3..20, used as regression fixtures.

Rates are kept as printed strings because the source table mixes 2- and
3-decimal precision and truncation with rounding; `printed_rate_matches`
accepts a value iff it rounds or truncates to the printed figure at its own
precision. The t=13 row's block length is stored as 2184 = t*m/2; the printed
2379 contradicts n = t*m/2 as well as both printed rates, which match 2184.
"""

from __future__ import annotations

from dataclasses import dataclass

from .board import DiagonalVector


@dataclass(frozen=True)
class CatalogRow:
    m: int
    t: int
    r_printed: str        # rank-based rate of the cycle code
    r_prime_printed: str  # published rate of the column-weight-3 extension
    n: int                # block length t * floor(m/2)
    min_length_bound: int
    starred: bool         # bound met with equality
    v: tuple[int, ...]

    def vector(self) -> DiagonalVector:
        return DiagonalVector(self.m, self.v)


def printed_rate_matches(printed: str, value: float) -> bool:
    """True iff `value` truncates or rounds to the printed figure."""
    decimals = len(printed.split(".")[1]) if "." in printed else 0
    scale = 10 ** decimals
    printed_scaled = round(float(printed) * scale)
    truncated = int(value * scale)
    rounded = round(value * scale)
    return printed_scaled in (truncated, rounded)


KNOWN_CODES: tuple[CatalogRow, ...] = (
    CatalogRow(14, 3, "0.38", "0.24", 21, 21, True, (1, 5, 13)),
    CatalogRow(26, 4, "0.52", "0.44", 52, 52, True, (1, 5, 17, 25)),
    CatalogRow(42, 5, "0.61", "0.56", 105, 105, True, (1, 11, 15, 35, 41)),
    CatalogRow(62, 6, "0.67", "0.64", 186, 186, True, (1, 15, 21, 25, 33, 61)),
    CatalogRow(96, 7, "0.71", "0.7", 336, 301, False, (1, 29, 51, 71, 85, 89, 95)),
    CatalogRow(114, 8, "0.75", "0.73", 456, 456, True,
               (1, 25, 29, 41, 47, 61, 105, 113)),
    CatalogRow(146, 9, "0.78", "0.77", 657, 657, True,
               (1, 13, 21, 69, 95, 101, 105, 129, 145)),
    CatalogRow(182, 10, "0.8", "0.79", 910, 910, True,
               (1, 3, 13, 21, 47, 53, 69, 83, 107, 111)),
    CatalogRow(240, 11, "0.82", "0.81", 1320, 1221, False,
               (1, 93, 105, 125, 155, 159, 181, 195, 223, 233, 239)),
    CatalogRow(266, 12, "0.83", "0.82", 1596, 1596, True,
               (1, 5, 13, 49, 59, 81, 87, 111, 137, 151, 153, 171)),
    CatalogRow(336, 13, "0.85", "0.84", 2184, 2041, False,
               (1, 39, 61, 69, 75, 93, 127, 171, 175, 191, 217, 325, 335)),
    CatalogRow(366, 14, "0.86", "0.85", 2562, 2562, True,
               (1, 31, 99, 103, 109, 143, 157, 169, 185, 193, 231, 249, 345, 365)),
    CatalogRow(510, 15, "0.87", "0.86", 3825, 3165, False,
               (1, 23, 27, 71, 79, 109, 167, 183, 233, 243, 297, 391, 491, 497, 509)),
    CatalogRow(510, 16, "0.875", "0.87", 4080, 3856, False,
               (1, 21, 23, 63, 67, 117, 141, 147, 155, 173, 245, 255, 303, 315,
                331, 367)),
    CatalogRow(546, 17, "0.88", "0.879", 4641, 4641, True,
               (1, 11, 31, 69, 71, 85, 147, 151, 173, 179, 197, 269, 303, 311,
                355, 367, 403)),
    CatalogRow(614, 18, "0.889", "0.886", 5526, 5526, True,
               (1, 5, 21, 45, 107, 113, 165, 167, 179, 197, 261, 297, 307, 335,
                377, 385, 411, 433)),
    CatalogRow(720, 19, "0.895", "0.892", 6840, 6517, False,
               (1, 7, 63, 65, 83, 135, 173, 189, 221, 233, 257, 267, 369, 397,
                411, 419, 485, 511, 515)),
    CatalogRow(762, 20, "0.9", "0.898", 7620, 7620, True,
               (1, 49, 61, 87, 111, 143, 151, 179, 209, 251, 255, 325, 335, 379,
                413, 431, 545, 551, 565, 567)),
)
