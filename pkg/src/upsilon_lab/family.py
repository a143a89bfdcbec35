"""The knots K_n: Alexander polynomial by closed form and by the Torres
formula applied to the three-component link L = K + C_1 + C_2, and the
closed-form Upsilon."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidParameter
from .exactmath import LaurentPoly, PLFunction, TriLaurentPoly, laurent_divexact, tri_substitute

# Multivariable Alexander polynomial of L; x, y, z are the meridians of K, C_1, C_2.
DELTA_L = TriLaurentPoly.from_dict({
    (7, 3, 1): 1,
    (5, 3, 1): -1,
    (5, 2, 1): 1,
    (5, 2, 0): 1,
    (4, 2, 0): -1,
    (5, 1, 0): -1,
    (3, 2, 1): -2,
    (4, 1, 0): 2,
    (2, 2, 1): 1,
    (3, 1, 1): 1,
    (2, 1, 1): -1,
    (2, 1, 0): -1,
    (2, 0, 0): 1,
    (0, 0, 0): -1,
})


@dataclass(frozen=True)
class FamilyConstants:
    delta_l: TriLaurentPoly = field(default=DELTA_L)
    linking_k_c1: int = 4
    linking_k_c2: int = 2
    linking_c1_c2: int = 0


CONSTANTS = FamilyConstants()


def _check_n(n: int):
    if n < 1:
        raise InvalidParameter(f"K_n needs n >= 1, got {n}")


def kn_alexander_closed(n: int) -> LaurentPoly:
    _check_n(n)
    terms = {}

    def put(k, c):
        terms[k] = terms.get(k, 0) + c

    for hi in (2 * n + 16, 2 * n + 12, 2 * n + 10):
        put(hi, 1)
        put(hi - 1, -1)
    # t^9 * (sum_{i=1}^{n-1} (t^{2i} - t^{2i-1}) + 1)
    for i in range(1, n):
        put(9 + 2 * i, 1)
        put(8 + 2 * i, -1)
    put(9, 1)
    for k, c in ((7, -1), (6, 1), (5, -1), (4, 1), (1, -1), (0, 1)):
        put(k, c)
    return LaurentPoly.from_dict(terms)


def kn_torres_numerator(n: int) -> LaurentPoly:
    """Delta_L(t, t^4, t^(2n+2))."""
    _check_n(n)
    c = CONSTANTS
    return tri_substitute(c.delta_l, 1, c.linking_k_c1, c.linking_k_c2 * (n + 1))


def kn_alexander_torres(n: int) -> LaurentPoly:
    """Delta_{K_n} = Delta_L(t, t^4, t^(2n+2)) / ((t^4 - 1)(t + 1))."""
    one = LaurentPoly.one()
    t = LaurentPoly.monomial
    num = kn_torres_numerator(n)
    q = laurent_divexact(num, t(CONSTANTS.linking_k_c1) - one)
    q = laurent_divexact(q, t(1) + one)
    return q.normalized()


def kn_upsilon_closed(n: int) -> PLFunction:
    _check_n(n)
    h, f = Fraction(1, 2), Fraction(4, 5)
    left = [
        (0, 0),
        (h, -(n + 8) * h),
        (f, -(n + 4) * f - 2),
        (1, -(n - 1) - 6),
    ]
    # symmetric about t = 1
    return PLFunction.from_points(left + [(2 - x, y) for x, y in left[:-1]])


def kn_trefoil_difference(n: int) -> PLFunction:
    return kn_upsilon_closed(n + 1) - kn_upsilon_closed(n)


def kn_minus_three_integral(n: int) -> Fraction:
    """3n + 102/5."""
    _check_n(n)
    return 3 * n + Fraction(102, 5)
