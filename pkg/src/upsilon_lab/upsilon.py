"""L-space knot pipeline: Alexander polynomial -> formal semigroup -> gap
staircase -> lower convex hull -> Legendre-Fenchel transform -> Upsilon.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ContractViolation, MalformedStaircase, NotLSpaceForm
from .exactmath import LaurentPoly, PLFunction, pl_integrate


def validate_lspace_form(d: LaurentPoly) -> tuple:
    """Return the gaps c_1 < ... < c_g with d = 1 + (t - 1)(t^c_1 + ... + t^c_g).

    ``d`` is first normalized (lowest exponent 0, positive value at 1), so a
    symmetrized input such as ``t^-1 - 1 + t`` is accepted.
    """
    if d.is_zero():
        raise NotLSpaceForm("zero polynomial")
    d = d.normalized()
    exps = []
    for k, c in d.terms():
        want = 1 if len(exps) % 2 == 0 else -1
        if c != want:
            raise NotLSpaceForm(
                f"coefficient {c} at t^{k}; L-space knot polynomials alternate +1/-1 from +1"
            )
        exps.append(k)
    if len(exps) % 2 == 0:
        raise NotLSpaceForm("leading coefficient must be +1")
    if not d.is_symmetric():
        raise NotLSpaceForm("not symmetric, so not an Alexander polynomial")
    gaps = []
    # the gaps are the half-open runs [a_{2i-1}, a_{2i})
    for i in range(1, len(exps), 2):
        gaps.extend(range(exps[i], exps[i + 1]))
    if 2 * len(gaps) != d.span:
        raise NotLSpaceForm(f"{len(gaps)} gaps but degree {d.span}")
    return tuple(gaps)


@dataclass(frozen=True)
class FormalSemigroup:
    """S = Z_{>=0} minus a finite set of gaps; every integer >= 2g is a member."""

    genus: int
    gaps: tuple

    def __post_init__(self):
        gaps = tuple(int(c) for c in self.gaps)
        if len(gaps) != self.genus:
            raise ValueError(f"genus {self.genus} but {len(gaps)} gaps")
        if any(c <= 0 for c in gaps) or any(b <= a for a, b in zip(gaps, gaps[1:])):
            raise ValueError("gaps must be strictly increasing positive integers")
        object.__setattr__(self, "gaps", gaps)
        object.__setattr__(self, "_gapset", frozenset(gaps))

    def __contains__(self, s) -> bool:
        return s >= 0 and s not in self._gapset

    def elements(self, upto: int) -> list:
        """Members of S in [0, upto)."""
        return [s for s in range(upto) if s not in self._gapset]

    def count_below(self, n: int) -> int:
        """#(S intersect [0, n))."""
        if n <= 0:
            return 0
        return n - sum(1 for c in self.gaps if c < n)

    @property
    def conductor(self) -> int:
        return self.gaps[-1] + 1 if self.gaps else 0


def semigroup_by_series(d: LaurentPoly, upto: int) -> list:
    """Exponents with coefficient 1 in d(t)/(1 - t) below ``upto``.

    Independent route to the semigroup via power-series division; raises if a
    coefficient other than 0/1 appears.
    """
    d = d.normalized()
    members = []
    partial = 0
    for s in range(upto):
        partial += d.coeff(s)
        if partial not in (0, 1):
            raise NotLSpaceForm(f"series coefficient {partial} at t^{s}")
        if partial:
            members.append(s)
    return members


def formal_semigroup(d: LaurentPoly) -> FormalSemigroup:
    gaps = validate_lspace_form(d)
    sg = FormalSemigroup(len(gaps), gaps)
    upto = 2 * sg.genus + 1
    if semigroup_by_series(d, upto) != sg.elements(upto):
        raise ContractViolation("gap route and series route disagree on the semigroup")
    return sg


def is_closed_under_addition(s: FormalSemigroup):
    """(True, None) if S + S is contained in S, else (False, (a, b)) for the
    first failing pair a <= b in lexicographic order.

    Only a, b < 2g need checking since everything from 2g on lies in S.
    """
    members = s.elements(2 * s.genus)
    for i, a in enumerate(members):
        for b in members[i:]:
            if a + b not in s:
                return False, (a, b)
    return True, None


def jump_sequence(d: LaurentPoly) -> tuple:
    """Differences a_1 - a_0, a_2 - a_1, ... of the exponents of d = sum (-1)^j t^(a_j)."""
    validate_lspace_form(d)
    exps = [k for k, _ in d.normalized().terms()]
    return tuple(b - a for a, b in zip(exps, exps[1:]))


@dataclass(frozen=True)
class GapStaircase:
    points: tuple

    @property
    def genus(self) -> int:
        return -self.points[0][0]


UP = (1, 2)
FLAT = (1, 0)


def staircase_from_jumps(jumps, g: int) -> GapStaircase:
    x, y = -g, 0
    pts = [(x, y)]
    for i, j in enumerate(jumps):
        dx, dy = UP if i % 2 == 0 else FLAT
        for _ in range(j):
            x, y = x + dx, y + dy
            pts.append((x, y))
    if (x, y) != (g, 2 * g):
        raise MalformedStaircase(f"staircase ends at {(x, y)}, expected {(g, 2 * g)}")
    return GapStaircase(tuple(pts))


def gap_staircase(gaps, g: int) -> GapStaircase:
    """Walk from (-g, 0): alternately (a_1 - a_0) up-steps (1, 2) and
    (a_2 - a_1) flat steps (1, 0), finishing at (g, 2g)."""
    gapset = set(gaps)
    jumps = []
    prev = None
    for k in range(2 * g):
        kind = k in gapset
        if kind == prev:
            jumps[-1] += 1
        else:
            if prev is None and kind:
                raise MalformedStaircase("0 cannot be a gap")
            jumps.append(1)
            prev = kind
    return staircase_from_jumps(jumps, g)


@dataclass(frozen=True)
class ConvexHullVertices:
    vertices: tuple


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_minorant(s: GapStaircase) -> ConvexHullVertices:
    """Lower convex hull (monotone chain), collinear points dropped."""
    hull: list = []
    for p in s.points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return ConvexHullVertices(tuple(hull))


def legendre_upsilon(h: ConvexHullVertices) -> PLFunction:
    """Upsilon(t) = max_j (t * x_j - y_j) over hull vertices, on [0, 2].

    The maximizing vertex changes exactly at the slopes of the hull edges.
    """
    vs = h.vertices
    xs = [Fraction(0)]
    for (x0, y0), (x1, y1) in zip(vs, vs[1:]):
        slope = Fraction(y1 - y0, x1 - x0)
        if 0 < slope < 2:
            xs.append(slope)
    xs.append(Fraction(2))
    xs = sorted(set(xs))
    vals = [max(t * x - y for x, y in vs) for t in xs]
    return PLFunction(tuple(xs), tuple(vals))


def upsilon_of(d: LaurentPoly) -> PLFunction:
    sg = formal_semigroup(d)
    return legendre_upsilon(convex_minorant(gap_staircase(sg.gaps, sg.genus)))


@dataclass(frozen=True)
class InvariantReport:
    name: str
    genus: int
    tau: int
    upsilon: PLFunction
    integral: Fraction
    minus_three_integral: Fraction
    omega: Fraction
    is_integral: bool
    semigroup_closed: bool
    closure_witness: Optional[tuple] = None
    delta: Optional[LaurentPoly] = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "genus": self.genus,
            "tau": self.tau,
            "upsilon": self.upsilon.to_pairs(),
            "integral": str(self.integral),
            "minus3I": str(self.minus_three_integral),
            "omega": str(self.omega),
            "integral_verdict": self.is_integral,
            "semigroup_closed": self.semigroup_closed,
            "witness": list(self.closure_witness) if self.closure_witness else None,
        }


def report(d: LaurentPoly, name: str = "") -> InvariantReport:
    """Full invariant record for an L-space knot polynomial.

    tau is taken to be the genus, as holds for every L-space knot.
    """
    sg = formal_semigroup(d)
    stair = gap_staircase(sg.gaps, sg.genus)
    ups = legendre_upsilon(convex_minorant(stair))
    integral = pl_integrate(ups)
    m3 = -3 * integral
    tau = sg.genus
    closed, witness = is_closed_under_addition(sg)
    return InvariantReport(
        name=name,
        genus=sg.genus,
        tau=tau,
        upsilon=ups,
        integral=integral,
        minus_three_integral=m3,
        omega=m3 - 2 * tau,
        is_integral=m3.denominator == 1,
        semigroup_closed=closed,
        closure_witness=witness,
        delta=d.normalized(),
    )
