"""Unibranched plane curve singularities: multiplicity sequences, the
Upsilon blocks, Milnor numbers and the omega invariant."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ContractViolation, InvalidParameter, InvalidParameters
from .exactmath import LaurentPoly, PLFunction, laurent_divexact, pl_integrate, pl_sum


@dataclass(frozen=True)
class MultiplicitySequence:
    mults: tuple = ()

    def __post_init__(self):
        ms = tuple(int(m) for m in self.mults)
        if any(m < 2 for m in ms):
            raise InvalidParameter(f"multiplicities must be >= 2: {ms}")
        if any(b > a for a, b in zip(ms, ms[1:])):
            raise InvalidParameter(f"multiplicities must be nonincreasing: {ms}")
        object.__setattr__(self, "mults", ms)

    def __iter__(self):
        return iter(self.mults)

    def __len__(self):
        return len(self.mults)

    def merged(self, other: MultiplicitySequence) -> MultiplicitySequence:
        """Multiset union, i.e. the multiplicity data of a connected sum."""
        return MultiplicitySequence(tuple(sorted(self.mults + other.mults, reverse=True)))


def _check_pq(p: int, q: int):
    if p < 2 or q <= p or gcd(p, q) != 1:
        raise InvalidParameters(f"need coprime 2 <= p < q, got ({p}, {q})")


def multiplicity_sequence(p: int, q: int) -> MultiplicitySequence:
    """Multiplicity sequence of x^p = y^q by repeated blow-up (p, q) -> (p, q - p)."""
    _check_pq(p, q)
    ms = []
    a, b = p, q
    while a > 1:
        ms.append(a)
        a, b = sorted((a, b - a))
    return MultiplicitySequence(tuple(ms))


def upsilon_block(m: int) -> PLFunction:
    """Upsilon_m(t) = -i(i+1) - m(m-1-2i)t/2 on [2i/m, (2i+2)/m]."""
    if m < 2:
        raise InvalidParameter(f"block needs m >= 2, got {m}")
    pieces = []
    for i in range(m):
        slope = Fraction(-m * (m - 1 - 2 * i), 2)
        pieces.append((Fraction(2 * i, m), Fraction(2 * i + 2, m), slope, -i * (i + 1)))
    return PLFunction.from_pieces(pieces)


def upsilon_from_mults(ms) -> PLFunction:
    return pl_sum(upsilon_block(m) for m in ms)


def milnor_number(ms) -> int:
    return sum(m * (m - 1) for m in ms)


def omega(ms) -> int:
    return sum(m - 1 for m in ms)


def minus_three_integral(ms) -> int:
    return sum(m * m - 1 for m in ms)


@dataclass(frozen=True)
class SingularityReport:
    mults: MultiplicitySequence
    milnor: int
    genus: int
    omega: int
    minus_three_integral: int
    upsilon: PLFunction

    def to_json(self) -> dict:
        return {
            "mults": list(self.mults.mults),
            "milnor": self.milnor,
            "genus": self.genus,
            "tau": self.genus,
            "omega": self.omega,
            "minus3I": str(self.minus_three_integral),
            "integral": str(Fraction(-self.minus_three_integral, 3)),
            "integral_verdict": True,
            "upsilon": self.upsilon.to_pairs(),
        }


def singularity_report(ms) -> SingularityReport:
    if not isinstance(ms, MultiplicitySequence):
        ms = MultiplicitySequence(tuple(ms))
    mu = milnor_number(ms)
    ups = upsilon_from_mults(ms)
    m3 = minus_three_integral(ms)
    if -3 * pl_integrate(ups) != m3:
        raise ContractViolation(f"closed-form -3*int {m3} disagrees with the summed blocks")
    return SingularityReport(
        mults=ms,
        milnor=mu,
        genus=mu // 2,
        omega=omega(ms),
        minus_three_integral=m3,
        upsilon=ups,
    )


@dataclass(frozen=True)
class InequalityVerdict:
    p: int
    q: int
    omega: int
    milnor: int
    multiplicity: int
    omega_below_p_plus_q: bool
    milnor_at_most_m_omega: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def check_inequalities(p: int, q: int) -> InequalityVerdict:
    """omega < p + q and mu <= m_1 * omega for the (p, q) cusp."""
    ms = multiplicity_sequence(p, q)
    w, mu, m1 = omega(ms), milnor_number(ms), ms.mults[0]
    return InequalityVerdict(p, q, w, mu, m1, w < p + q, mu <= m1 * w)


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))."""
    _check_pq(p, q)
    one = LaurentPoly.one()
    t = LaurentPoly.monomial
    num = (t(p * q) - one) * (t(1) - one)
    den = (t(p) - one) * (t(q) - one)
    return laurent_divexact(num, den).normalized()


def coprime_pairs(limit: int):
    """All coprime (p, q) with 2 <= p < q <= limit."""
    return [(p, q) for q in range(3, limit + 1) for p in range(2, q) if gcd(p, q) == 1]
