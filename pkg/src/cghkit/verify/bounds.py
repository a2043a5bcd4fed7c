"""Closed-form bounds on extremal numbers and the odd-uniformity arithmetic."""
from fractions import Fraction
from math import comb, isqrt, sqrt
from typing import Dict, Optional, Tuple

__all__ = [
    "ROUNDING_DENOMINATOR",
    "sqrt_upper",
    "phi",
    "ell_for_k",
    "odd_improvement_coefficient",
    "bound_values",
    "BOUND_NAMES",
]

ROUNDING_DENOMINATOR = 10 ** 9

BOUND_NAMES = (
    "trivial",
    "general",
    "conjectured",
    "convex_zigzag",
    "convex_graph",
    "link",
    "odd_improved",
)


def phi(ell_value: int, r: int) -> int:
    """Most lift vertices a tight ``ell_value``-path of an (r+1)-graph can use."""
    if ell_value < 1:
        raise ValueError(f"ell must be >= 1, got {ell_value}")
    if r < 3 or r % 2 == 0:
        raise ValueError(f"r must be odd and >= 3, got {r}")
    return -(-(ell_value + r) // (r + 1))


def ell_for_k(k: int, r: int) -> int:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if r < 3 or r % 2 == 0:
        raise ValueError(f"r must be odd and >= 3, got {r}")
    ell_value = k + (k - 1) // r + 1
    assert ell_value + 1 - phi(ell_value, r) == k, (k, r, ell_value)
    return ell_value


def sqrt_upper(value: Fraction) -> Fraction:
    """Smallest multiple of ``1/ROUNDING_DENOMINATOR`` that is >= sqrt(value)."""
    scaled = value * ROUNDING_DENOMINATOR ** 2
    target = -(-scaled.numerator // scaled.denominator)
    root = isqrt(target)
    if root * root < target:
        root += 1
    return Fraction(root, ROUNDING_DENOMINATOR)


def odd_improvement_coefficient(k: int, r: int) -> Tuple[float, Fraction]:
    """``(sqrt(a) + sqrt(b))^2 / r`` as a float and as a rational rounded up."""
    if r < 3 or r % 2 == 0:
        raise ValueError(f"r must be odd and >= 3, got {r}")
    a = Fraction((k - 1) // r)
    b = Fraction((r - 1) * (k - 1 - (k - 1) // r), 2)
    approx = (sqrt(a) + sqrt(b)) ** 2 / r
    upper = (a + b + 2 * sqrt_upper(a * b)) / r
    return approx, upper


def bound_values(n: int, r: int, k: int) -> Dict[str, Optional[Fraction]]:
    """Upper bounds on the extremal number, each a coefficient times ``C(n, r-1)``.

    Entries that do not apply to ``(r, k)`` are ``None``.
    """
    if not n >= r >= 2:
        raise ValueError(f"need n >= r >= 2, got n={n} r={r}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    base = comb(n, r - 1)
    if r % 2 == 0:
        general = Fraction(k - 1, 2)
    else:
        general = Fraction(k + (k - 1) // r, 2)
    values = {
        "trivial": Fraction(k - 1) * base,
        "general": general * base,
        "conjectured": Fraction(k - 1, r) * base,
        "convex_zigzag": Fraction((k - 1) * (r - 1), r) * base if r % 2 == 0 else None,
        "convex_graph": Fraction((k - 1) * n, 2) if r == 2 else None,
        "link": Fraction(k * k, 2 * r) * base if r >= k - 1 else None,
        "odd_improved": None,
    }
    if r % 2 == 1:
        values["odd_improved"] = odd_improvement_coefficient(k, r)[1] * base
    return values
