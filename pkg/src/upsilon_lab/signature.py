"""Roots of the Alexander polynomial of K_n on the unit circle near 1.

With t = e^{iu} the symmetrized polynomial psi_n = t^{-n-8} Delta_{K_n} is
real, and gamma_n(u) = psi_n(e^{iu}) / 2 splits as alpha_n + beta_n with
closed trigonometric forms. Everything here is double precision; the
conclusions drawn are sign-based with explicit brackets.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, InvalidParameter, NoSignChangeFound
from .exactmath import CycloZ6, LaurentPoly, cyclo_eval
from .family import kn_alexander_closed

GRID = 4096
BISECT_WIDTH = 1e-12
LAMBDA_SAFETY = 0.99


@dataclass(frozen=True)
class SymmetrizedPoly:
    n: int
    psi: LaurentPoly


def symmetrized_psi(n: int) -> SymmetrizedPoly:
    return SymmetrizedPoly(n, kn_alexander_closed(n).shift(-n - 8))


def _check_u(u: float):
    if not 0 < u < math.pi:
        raise DomainError(f"u = {u} outside (0, pi)")


def alpha(n: int, u: float) -> float:
    """-4 sin(u/2) (sin((n + 11/2)u) cos 2u + sin(nu) cos(3u/2))."""
    return -4 * math.sin(u / 2) * (
        math.sin((n + 5.5) * u) * math.cos(2 * u) + math.sin(n * u) * math.cos(1.5 * u)
    )


def alpha_cosine_sum(n: int, u: float) -> float:
    c = math.cos
    return (
        c((n + 8) * u) - c((n + 7) * u) + c((n + 4) * u) - c((n + 3) * u)
        + c((n + 2) * u) - c((n + 1) * u) + c((n - 1) * u) - c((n - 2) * u)
    )


def beta(n: int, u: float) -> float:
    return math.cos((n - 2.5) * u) / (2 * math.cos(u / 2))


def gamma_eval(n: int, u: float) -> float:
    _check_u(u)
    return alpha(n, u) + beta(n, u)


def gamma_direct(n: int, u: float, psi: LaurentPoly | None = None) -> complex:
    """psi_n(e^{iu}) / 2 evaluated term by term from the integer coefficients."""
    if psi is None:
        psi = symmetrized_psi(n).psi
    return 0.5 * sum(c * cmath.exp(1j * k * u) for k, c in psi.terms())


@dataclass(frozen=True)
class RootLocalization:
    n: int
    bracket: tuple
    root: float
    residual: float

    @property
    def upper_limit(self) -> float:
        return math.pi / (2 * self.n - 5)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "bracket": list(self.bracket),
            "root": self.root,
            "residual": self.residual,
            "upper_limit": self.upper_limit,
        }


def locate_first_root(n: int, grid: int = GRID, width: float = BISECT_WIDTH) -> RootLocalization:
    """First sign change of gamma_n on (0, pi/(2n - 5)), bisected to ``width``."""
    if n < 11:
        raise InvalidParameter(f"root localization is only guaranteed for n >= 11, got {n}")
    top = math.pi / (2 * n - 5)
    prev_u = None
    for k in range(1, grid + 1):
        u = top * k / grid
        g = gamma_eval(n, u)
        if g <= 0:
            if g == 0:
                return RootLocalization(n, (u, u), u, 0.0)
            if prev_u is None:
                raise NoSignChangeFound(f"gamma_{n} is not positive at the first grid point")
            lo, hi = prev_u, u
            break
        prev_u = u
    else:
        raise NoSignChangeFound(f"gamma_{n} has no sign change on (0, pi/{2 * n - 5})")
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if gamma_eval(n, mid) > 0:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    return RootLocalization(n, (lo, hi), root, abs(gamma_eval(n, root)))


@dataclass(frozen=True)
class GreedySequence:
    terms: tuple
    radii: tuple
    roots: tuple

    def to_json(self) -> dict:
        return {
            "terms": list(self.terms),
            "radii": list(self.radii),
            "roots": [r.to_json() for r in self.roots],
        }


def _next_term(a: int, lam: float) -> int:
    b = max(a + 1, int((math.pi / lam + 5) / 2))
    while math.pi / (2 * b - 5) >= lam:
        b += 1
    return b


def greedy_sequence(count: int) -> GreedySequence:
    """a_1 = 11; lambda_m = min(lambda_{m-1}, 0.99 * u_{a_m}); a_{m+1} is the
    least integer above a_m with pi/(2a_{m+1} - 5) < lambda_m."""
    if count < 1:
        raise InvalidParameter("count must be >= 1")
    terms, radii, roots = [11], [], []
    lam = math.inf
    while True:
        loc = locate_first_root(terms[-1])
        roots.append(loc)
        lam = min(lam, LAMBDA_SAFETY * loc.root)
        radii.append(lam)
        if len(terms) == count:
            break
        terms.append(_next_term(terms[-1], lam))
    return GreedySequence(tuple(terms), tuple(radii), tuple(roots))


def psi_at_zeta6(n: int) -> CycloZ6:
    return cyclo_eval(symmetrized_psi(n).psi)
