"""Braid words, the reduced Burau representation and Alexander polynomials
of braid closures."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidParameter, NormalizationFailure, NotAKnot, NotPositive, ParseError
from .exactmath import LaurentPoly, laurent_divexact

ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()
T = LaurentPoly.monomial(1)
T_INV = LaurentPoly.monomial(-1)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = ()

    def __post_init__(self):
        letters = tuple(int(k) for k in self.letters)
        if self.strands < 2:
            raise InvalidParameter(f"need at least 2 strands, got {self.strands}")
        for k in letters:
            if k == 0 or abs(k) > self.strands - 1:
                raise InvalidParameter(f"letter {k} invalid on {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise InvalidParameter("cannot concatenate braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def is_positive(self) -> bool:
        return all(k > 0 for k in self.letters)

    def permutation(self) -> tuple:
        """Image of each strand position after reading the word left to right."""
        perm = list(range(self.strands))
        for k in self.letters:
            i = abs(k) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return tuple(perm)

    def component_count(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for start in range(self.strands):
            if not seen[start]:
                count += 1
                j = start
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        return count

    def is_knot(self) -> bool:
        return self.component_count() == 1

    def __str__(self):
        return f"strands:{self.strands} " + " ".join(str(k) for k in self.letters)


def parse_braid(text: str) -> BraidWord:
    """Parse ``"strands:4 2 1 3 2 ..."`` (commas or whitespace between letters).

    Without a ``strands:`` prefix the strand count is 1 + max |letter|.
    """
    s = text.strip()
    m = re.match(r"^strands\s*[:=]\s*(\d+)\s*[,;]?", s)
    strands = None
    if m:
        strands = int(m.group(1))
        s = s[m.end():]
    tokens = [tok for tok in re.split(r"[\s,]+", s.strip().strip("[]")) if tok]
    try:
        letters = [int(tok) for tok in tokens]
    except ValueError:
        raise ParseError(f"braid letters must be nonzero integers: {text!r}") from None
    if strands is None:
        if not letters:
            raise ParseError("empty braid word needs an explicit strands: prefix")
        strands = max(abs(k) for k in letters) + 1
    try:
        return BraidWord(strands, letters)
    except InvalidParameter as exc:
        raise ParseError(str(exc)) from None


def kn_braid(n: int) -> BraidWord:
    """The 4-braid [2,1,3,2, (3,2,1)^4, 3^(2n+2), 2] whose closure is K_n."""
    if n < 1:
        raise InvalidParameter(f"K_n needs n >= 1, got {n}")
    return BraidWord(4, [2, 1, 3, 2] + [3, 2, 1] * 4 + [3] * (2 * n + 2) + [2])


# ---------------------------------------------------------------------------
# matrices over Z[t, t^-1]


@dataclass(frozen=True)
class BurauMatrix:
    entries: tuple

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, size: int) -> BurauMatrix:
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(size)) for i in range(size)))

    def __matmul__(self, other: BurauMatrix) -> BurauMatrix:
        n = self.size
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ZERO
                for k in range(n):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    b = other.entries[k][j]
                    if not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return BurauMatrix(tuple(rows))

    def __sub__(self, other: BurauMatrix) -> BurauMatrix:
        return BurauMatrix(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def det(self) -> LaurentPoly:
        return det_bareiss([list(r) for r in self.entries])


def det_bareiss(m: list) -> LaurentPoly:
    """Fraction-free Gaussian elimination over Z[t, t^-1]."""
    n = len(m)
    if n == 0:
        return ONE
    m = [list(r) for r in m]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = laurent_divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def _generator(size: int, k: int) -> BurauMatrix:
    """Reduced Burau image of sigma_|k| (inverse when k < 0)."""
    rows = [[ONE if i == j else ZERO for j in range(size)] for i in range(size)]
    i = abs(k) - 1
    if k > 0:
        # row i becomes (.., t, -t, 1, ..) around the diagonal
        if i > 0:
            rows[i][i - 1] = T
        rows[i][i] = -T
        if i < size - 1:
            rows[i][i + 1] = ONE
    else:
        if i > 0:
            rows[i][i - 1] = ONE
        rows[i][i] = -T_INV
        if i < size - 1:
            rows[i][i + 1] = T_INV
    return BurauMatrix(tuple(tuple(r) for r in rows))


def burau(w: BraidWord) -> BurauMatrix:
    size = w.strands - 1
    cache: dict[int, BurauMatrix] = {}
    result = BurauMatrix.identity(size)
    for k in w.letters:
        if k not in cache:
            cache[k] = _generator(size, k)
        result = result @ cache[k]
    return result


def alexander_of_closure(w: BraidWord) -> LaurentPoly:
    """det(I - Burau(w)) * (1 - t) / (1 - t^n), normalized so that Delta(1) = 1
    and the lowest exponent is 0."""
    if not w.is_knot():
        raise NotAKnot(f"closure of {w} has {w.component_count()} components")
    n = w.strands
    d = (BurauMatrix.identity(n - 1) - burau(w)).det()
    num = d * (ONE - T)
    delta = laurent_divexact(num, ONE - LaurentPoly.monomial(n))
    delta = delta.normalized()
    if sum(delta.coeffs) != 1:
        raise NormalizationFailure(f"Delta(1) = {sum(delta.coeffs)} for {w}")
    return delta


def positive_braid_genus(w: BraidWord) -> int:
    if not w.is_positive():
        raise NotPositive(f"{w} has negative letters")
    if not w.is_knot():
        raise NotAKnot(f"closure of {w} is not a knot")
    return (len(w) - w.strands + 1) // 2
