"""Exact arithmetic: Laurent polynomials, a three-variable Laurent type,
the ring Z[zeta_6], and piecewise-linear functions on [0, 2].

Rationals are ``fractions.Fraction`` throughout; nothing in here touches
floating point except the explicit ``*_float`` helpers.
"""

from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainError, InexactDivision, ParseError

Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.replace("−", "-").strip())
    if isinstance(x, float):
        raise TypeError("refusing to build an exact rational from a float")
    return Fraction(x)


# ---------------------------------------------------------------------------
# LaurentPoly


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial sum(coeffs[i] * t**(min_degree + i)).

    The constructor canonicalizes: leading and trailing zeros are trimmed and
    the zero polynomial is ``LaurentPoly(0, ())``.
    """

    min_degree: int = 0
    coeffs: tuple = ()

    def __post_init__(self):
        cs = [int(c) for c in self.coeffs]
        lo, hi = 0, len(cs)
        while lo < hi and cs[lo] == 0:
            lo += 1
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "min_degree", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "min_degree", int(self.min_degree) + lo)
            object.__setattr__(self, "coeffs", tuple(cs[lo:hi]))

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls(0, ())

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls(0, (1,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> LaurentPoly:
        return cls(k, (c,))

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> LaurentPoly:
        terms = {k: c for k, c in terms.items() if c}
        if not terms:
            return cls.zero()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(k, 0) for k in range(lo, hi + 1)])

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[int, int]]) -> LaurentPoly:
        """Sum of c * t**k over (k, c) pairs; repeated exponents accumulate."""
        acc: dict[int, int] = {}
        for k, c in pairs:
            acc[k] = acc.get(k, 0) + c
        return cls.from_dict(acc)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        return parse_laurent(text)

    @classmethod
    def from_json(cls, obj) -> LaurentPoly:
        try:
            return cls(int(obj["minDegree"]), [int(c) for c in obj["coeffs"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad polynomial JSON: {exc}") from None

    def to_json(self) -> dict:
        return {"minDegree": self.min_degree, "coeffs": list(self.coeffs)}

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        """max_degree - min_degree; the 'degree' of a normalized Alexander polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else 0

    def coeff(self, k: int) -> int:
        i = k - self.min_degree
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self):
        """Nonzero (exponent, coefficient) pairs in increasing exponent order."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_degree + i, c

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms())

    def is_symmetric(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return LaurentPoly(self.min_degree, [-c for c in self.coeffs])

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_degree, other.min_degree)
        hi = max(self.max_degree, other.max_degree)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_degree - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_degree - lo + i] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(self.min_degree + other.min_degree, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) == 1 and abs(self.coeffs[0]) == 1:
                return LaurentPoly(self.min_degree * k, (self.coeffs[0] ** k,))
            raise ValueError("negative power of a non-unit")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t**k."""
        return LaurentPoly(self.min_degree + k, self.coeffs)

    def compose_power(self, k: int) -> LaurentPoly:
        """p(t**k)."""
        if k == 0:
            return LaurentPoly.monomial(0, sum(self.coeffs))
        return LaurentPoly.from_terms((e * k, c) for e, c in self.terms())

    def divexact(self, other: LaurentPoly) -> LaurentPoly:
        return laurent_divexact(self, other)

    def __call__(self, x):
        """Evaluate at x (any ring element supporting +, * and integer powers)."""
        if self.is_zero():
            return 0 * x
        # Horner on the polynomial part, then the monomial factor.
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.min_degree:
            acc = acc * x ** self.min_degree
        return acc

    def normalized(self) -> LaurentPoly:
        """Shift to min degree 0 and fix the sign so that p(1) > 0.

        When p(1) == 0 the constant term is made positive instead.
        """
        if self.is_zero():
            return self
        p = self.shift(-self.min_degree)
        ref = sum(p.coeffs) or p.coeffs[0]
        return -p if ref < 0 else p

    def symmetrized(self) -> LaurentPoly:
        """Shift so that the exponent range is centred on 0 (span must be even)."""
        if self.span % 2:
            raise ValueError("odd span; cannot centre on an integer exponent")
        return self.shift(-self.min_degree - self.span // 2)

    # -- display ----------------------------------------------------------

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


def _coerce_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(0, (x,))
    return NotImplemented


T = LaurentPoly.monomial(1)


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def laurent_divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return q with a == q * b, or raise InexactDivision."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return a
    rem = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    lead = bc[-1]
    nq = len(rem) - db
    if nq <= 0:
        raise InexactDivision(f"({a}) is not divisible by ({b})")
    q = [0] * nq
    for i in range(nq - 1, -1, -1):
        c = rem[i + db]
        if c % lead:
            raise InexactDivision(f"({a}) is not divisible by ({b})")
        qi = c // lead
        q[i] = qi
        if qi:
            for j, bj in enumerate(bc):
                rem[i + j] -= qi * bj
    if any(rem):
        raise InexactDivision(f"({a}) is not divisible by ({b})")
    return LaurentPoly(a.min_degree - b.min_degree, q)


def format_laurent(p: LaurentPoly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k, c in sorted(p.terms(), reverse=True):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_SPLIT = re.compile(r"(?<![\^(])(?=[+-])")
_TERM = re.compile(r"^([+-]?)(\d*)(?:\*?([tx])(?:\^\(?([+-]?\d+)\)?)?)?$")


def parse_laurent(text: str) -> LaurentPoly:
    """Parse text like ``"t^18 - t^17 + 1"`` or ``"t^-1 - 1 + t"``."""
    s = text.replace("−", "-").replace("**", "^")
    s = "".join(s.split())
    if not s:
        raise ParseError("empty polynomial")
    acc: dict[int, int] = {}
    var = None
    for chunk in _SPLIT.split(s):
        if not chunk:
            continue
        m = _TERM.match(chunk)
        if m is None or (not m.group(2) and not m.group(3)):
            raise ParseError(f"cannot parse term {chunk!r} in {text!r}")
        sign, digits, v, exp = m.groups()
        if v is not None:
            if var is not None and v != var:
                raise ParseError(f"mixed variables in {text!r}")
            var = v
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        k = 0 if v is None else (int(exp) if exp is not None else 1)
        acc[k] = acc.get(k, 0) + c
    return LaurentPoly.from_dict(acc)


# ---------------------------------------------------------------------------
# TriLaurentPoly


@dataclass(frozen=True)
class TriLaurentPoly:
    """Integer Laurent polynomial in x, y, z stored as sorted ((ex, ey, ez), c) pairs."""

    terms: tuple = ()

    def __post_init__(self):
        acc: dict[tuple, int] = {}
        for exps, c in self.terms:
            key = tuple(int(e) for e in exps)
            if len(key) != 3:
                raise ValueError(f"exponent triple expected, got {exps!r}")
            acc[key] = acc.get(key, 0) + int(c)
        canon = tuple(sorted(((k, c) for k, c in acc.items() if c), reverse=True))
        object.__setattr__(self, "terms", canon)

    @classmethod
    def from_dict(cls, d: Mapping[tuple, int]) -> TriLaurentPoly:
        return cls(tuple(d.items()))

    def __len__(self):
        return len(self.terms)

    def as_dict(self) -> dict[tuple, int]:
        return dict(self.terms)

    def substitute(self, ex: int, ey: int, ez: int) -> LaurentPoly:
        return tri_substitute(self, ex, ey, ez)

    def __call__(self, x, y, z):
        return sum(c * x ** a * y ** b * z ** e for (a, b, e), c in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for i, ((a, b, e), c) in enumerate(self.terms):
            mono = "".join(
                v if k == 1 else f"{v}^{k}" for v, k in (("x", a), ("y", b), ("z", e)) if k
            )
            mag = abs(c)
            body = mono if (mag == 1 and mono) else f"{mag}{mono}"
            if i == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out


def tri_substitute(p: TriLaurentPoly, ex: int, ey: int, ez: int) -> LaurentPoly:
    """Specialize x -> t**ex, y -> t**ey, z -> t**ez and collect terms."""
    return LaurentPoly.from_terms((a * ex + b * ey + e * ez, c) for (a, b, e), c in p.terms)


# ---------------------------------------------------------------------------
# Z[zeta_6]


@dataclass(frozen=True)
class CycloZ6:
    """a + b*zeta with zeta = exp(2*pi*i/6), so zeta**2 = zeta - 1."""

    a: int = 0
    b: int = 0

    def __add__(self, other):
        other = _coerce_cyclo(other)
        if other is NotImplemented:
            return other
        return CycloZ6(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return CycloZ6(-self.a, -self.b)

    def __sub__(self, other):
        other = _coerce_cyclo(other)
        if other is NotImplemented:
            return other
        return CycloZ6(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_cyclo(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.a, self.b, other.a, other.b
        # (a + b z)(c + d z) = ac + (ad + bc) z + bd (z - 1)
        return CycloZ6(a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if self in ZETA6_POWERS:
                return ZETA6_POWERS[(ZETA6_POWERS.index(self) * k) % 6]
            raise ValueError("negative power of a non-root-of-unity")
        result = CycloZ6(1, 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.a or self.b)

    def __complex__(self):
        return self.a + self.b * ZETA6_COMPLEX

    def conjugate(self) -> CycloZ6:
        # conj(zeta) = zeta**5 = 1 - zeta
        return CycloZ6(self.a + self.b, -self.b)

    def norm(self) -> int:
        """Field norm |a + b zeta|^2 = a^2 + ab + b^2."""
        return self.a * self.a + self.a * self.b + self.b * self.b

    def __str__(self):
        return f"{self.a} + {self.b}*zeta6" if self.b >= 0 else f"{self.a} - {-self.b}*zeta6"


def _coerce_cyclo(x):
    if isinstance(x, CycloZ6):
        return x
    if isinstance(x, int):
        return CycloZ6(x, 0)
    return NotImplemented


ZETA6_COMPLEX = complex(0.5, 3 ** 0.5 / 2)
ZETA6_POWERS = (
    CycloZ6(1, 0),
    CycloZ6(0, 1),
    CycloZ6(-1, 1),
    CycloZ6(-1, 0),
    CycloZ6(0, -1),
    CycloZ6(1, -1),
)


def cyclo_eval(p: LaurentPoly) -> CycloZ6:
    """Exact value of p at zeta_6, reducing exponents mod 6."""
    a = b = 0
    for k, c in p.terms():
        z = ZETA6_POWERS[k % 6]
        a += c * z.a
        b += c * z.b
    return CycloZ6(a, b)


# ---------------------------------------------------------------------------
# PLFunction

DOMAIN = (Fraction(0), Fraction(2))


@dataclass(frozen=True, eq=False)
class PLFunction:
    """Continuous piecewise-linear function on [0, 2] with rational data.

    Stored in normal form: collinear interior breakpoints are removed, so two
    representations of the same function compare equal.
    """

    breakpoints: tuple
    values: tuple

    def __post_init__(self):
        xs = [as_rational(x) for x in self.breakpoints]
        ys = [as_rational(y) for y in self.values]
        if len(xs) != len(ys) or len(xs) < 2:
            raise ValueError("need matching breakpoints/values, at least two of each")
        if xs[0] != DOMAIN[0] or xs[-1] != DOMAIN[1]:
            raise ValueError(f"breakpoints must span [0, 2], got [{xs[0]}, {xs[-1]}]")
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        kx, ky = [xs[0]], [ys[0]]
        for i in range(1, len(xs) - 1):
            s_in = (ys[i] - ky[-1]) / (xs[i] - kx[-1])
            s_out = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
            if s_in != s_out:
                kx.append(xs[i])
                ky.append(ys[i])
        kx.append(xs[-1])
        ky.append(ys[-1])
        object.__setattr__(self, "breakpoints", tuple(kx))
        object.__setattr__(self, "values", tuple(ky))

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> PLFunction:
        return cls((0, 2), (0, 0))

    @classmethod
    def from_points(cls, points) -> PLFunction:
        pts = sorted((as_rational(x), as_rational(y)) for x, y in points)
        return cls(tuple(p[0] for p in pts), tuple(p[1] for p in pts))

    @classmethod
    def from_pieces(cls, pieces) -> PLFunction:
        """Build from (lo, hi, slope, intercept) pieces covering [0, 2] in order.

        Each piece is the line slope*t + intercept on [lo, hi]; adjacent pieces
        must agree at their shared endpoint.
        """
        xs, ys = [], []
        prev_hi = None
        for lo, hi, slope, icpt in pieces:
            lo, hi = as_rational(lo), as_rational(hi)
            slope, icpt = as_rational(slope), as_rational(icpt)
            y_lo, y_hi = slope * lo + icpt, slope * hi + icpt
            if prev_hi is None:
                xs.append(lo)
                ys.append(y_lo)
            else:
                if lo != prev_hi or y_lo != ys[-1]:
                    raise ValueError(f"pieces not contiguous/continuous at t={lo}")
            xs.append(hi)
            ys.append(y_hi)
            prev_hi = hi
        return cls(tuple(xs), tuple(ys))

    @classmethod
    def max_of_lines(cls, lines) -> PLFunction:
        """Upper envelope on [0, 2] of lines t -> a*t + b given as (a, b) pairs."""
        lines = sorted({(as_rational(a), as_rational(b)) for a, b in lines})
        if not lines:
            raise ValueError("no lines")
        # start at t = 0 with the line attaining the max (largest slope on ties)
        t = Fraction(0)
        cur = max(lines, key=lambda ab: (ab[1], ab[0]))
        xs, ys = [t], [cur[1]]
        while True:
            best_t, best = None, None
            for a, b in lines:
                if a <= cur[0]:
                    continue
                cross = (cur[1] - b) / (a - cur[0])
                if cross < t:
                    continue
                if best_t is None or cross < best_t or (cross == best_t and a > best[0]):
                    best_t, best = cross, (a, b)
            if best is None or best_t >= DOMAIN[1]:
                break
            if best_t > t:
                xs.append(best_t)
                ys.append(cur[0] * best_t + cur[1])
            t, cur = best_t, best
        xs.append(DOMAIN[1])
        ys.append(cur[0] * DOMAIN[1] + cur[1])
        return cls(tuple(xs), tuple(ys))

    # -- evaluation -------------------------------------------------------

    def __call__(self, t) -> Fraction:
        t = as_rational(t)
        xs, ys = self.breakpoints, self.values
        if t < xs[0] or t > xs[-1]:
            raise DomainError(f"t={t} outside [0, 2]")
        i = bisect_right(xs, t) - 1
        if i >= len(xs) - 1:
            return ys[-1]
        return ys[i] + (ys[i + 1] - ys[i]) * (t - xs[i]) / (xs[i + 1] - xs[i])

    def evaluate_float(self, t: float) -> float:
        xs = [float(x) for x in self.breakpoints]
        ys = [float(y) for y in self.values]
        if t <= xs[0]:
            return ys[0]
        i = min(bisect_right(xs, t) - 1, len(xs) - 2)
        return ys[i] + (ys[i + 1] - ys[i]) * (t - xs[i]) / (xs[i + 1] - xs[i])

    def slopes(self) -> tuple:
        xs, ys = self.breakpoints, self.values
        return tuple((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]) for i in range(len(xs) - 1))

    def segments(self):
        """Yield (lo, hi, slope, intercept) per linear piece."""
        xs, ys = self.breakpoints, self.values
        for i, s in enumerate(self.slopes()):
            yield xs[i], xs[i + 1], s, ys[i] - s * xs[i]

    def is_convex(self) -> bool:
        s = self.slopes()
        return all(a <= b for a, b in zip(s, s[1:]))

    def integral(self) -> Fraction:
        xs, ys = self.breakpoints, self.values
        return sum(
            ((xs[i + 1] - xs[i]) * (ys[i] + ys[i + 1]) / 2 for i in range(len(xs) - 1)),
            Fraction(0),
        )

    def reflected(self) -> PLFunction:
        """t -> f(2 - t)."""
        return PLFunction(
            tuple(DOMAIN[1] - x for x in reversed(self.breakpoints)), tuple(reversed(self.values))
        )

    def to_pairs(self) -> list:
        return [[str(x), str(y)] for x, y in zip(self.breakpoints, self.values)]

    @classmethod
    def from_pairs(cls, pairs) -> PLFunction:
        return cls.from_points(pairs)

    # -- arithmetic -------------------------------------------------------

    def _combine(self, other, op):
        xs = sorted(set(self.breakpoints) | set(other.breakpoints))
        return PLFunction(tuple(xs), tuple(op(self(x), other(x)) for x in xs))

    def __add__(self, other):
        if not isinstance(other, PLFunction):
            return NotImplemented
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        if not isinstance(other, PLFunction):
            return NotImplemented
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self):
        return PLFunction(self.breakpoints, tuple(-y for y in self.values))

    def __mul__(self, k):
        if isinstance(k, PLFunction):
            return NotImplemented
        k = as_rational(k)
        return PLFunction(self.breakpoints, tuple(k * y for y in self.values))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PLFunction):
            return NotImplemented
        return self.breakpoints == other.breakpoints and self.values == other.values

    def __hash__(self):
        return hash((self.breakpoints, self.values))

    def __repr__(self):
        pts = ", ".join(f"({x}, {y})" for x, y in zip(self.breakpoints, self.values))
        return f"PLFunction[{pts}]"


def pl_sum(functions) -> PLFunction:
    total = PLFunction.zero()
    for f in functions:
        total = total + f
    return total


def pl_integrate(f: PLFunction) -> Fraction:
    return f.integral()
