"""Dense exact matrices over a pluggable commutative ring.

RingMatrix stores entries as an immutable tuple of row tuples together with a
ring descriptor (RATIONAL or LAURENT from the rings module).  Determinants use
fraction-free Bareiss elimination, inverses go through the adjugate, and
characteristic polynomials use the Faddeev-LeVerrier recurrence.  Everything
is exact; nothing is ever rounded.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DimensionMismatch, NonUnitDeterminant
from .rings import LAURENT, RATIONAL, LaurentPoly


class RingMatrix:
    """An immutable dense matrix over an exact ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring, rows: Iterable[Iterable]):
        data = tuple(tuple(ring.coerce(x) for x in row) for row in rows)
        if data and any(len(r) != len(data[0]) for r in data):
            raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", len(data[0]) if data else 0)
        object.__setattr__(self, "entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("RingMatrix is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, ring, n: int) -> "RingMatrix":
        one, zero = ring.one, ring.zero
        return cls(ring, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring, rows: int, cols: int | None = None) -> "RingMatrix":
        cols = rows if cols is None else cols
        zero = ring.zero
        return cls(ring, [[zero] * cols for _ in range(rows)])

    @classmethod
    def from_rows(cls, ring, rows: Sequence[Sequence]) -> "RingMatrix":
        return cls(ring, rows)

    @classmethod
    def scalar(cls, ring, n: int, c) -> "RingMatrix":
        c = ring.coerce(c)
        zero = ring.zero
        return cls(ring, [[c if i == j else zero for j in range(n)] for i in range(n)])

    def _same_ring(self, other: "RingMatrix"):
        if self.ring is not other.ring:
            raise DimensionMismatch(
                f"ring mismatch: {self.ring.name} vs {other.ring.name}"
            )

    # -- access -------------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(x) for r in self.entries for x in r)

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (
            self.ring is other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ring.name, self.entries))

    def __repr__(self):
        body = "; ".join(
            ", ".join(self.ring.to_text(x) for x in row) for row in self.entries
        )
        return f"RingMatrix({self.ring.name}, [{body}])"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        self._same_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in addition")
        return RingMatrix(
            self.ring,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        self._same_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in subtraction")
        return RingMatrix(
            self.ring,
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
        )

    def __neg__(self) -> "RingMatrix":
        return RingMatrix(self.ring, [[-x for x in r] for r in self.entries])

    def scale(self, c) -> "RingMatrix":
        c = self.ring.coerce(c)
        return RingMatrix(self.ring, [[c * x for x in r] for r in self.entries])

    def __mul__(self, other: "RingMatrix") -> "RingMatrix":
        self._same_ring(other)
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        zero = self.ring.zero
        cols = tuple(zip(*other.entries)) if other.entries else ()
        out = []
        for r in self.entries:
            out.append(
                [sum((a * b for a, b in zip(r, c)), zero) for c in cols]
            )
        return RingMatrix(self.ring, out)

    def __pow__(self, n: int) -> "RingMatrix":
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        if n < 0:
            return mat_inverse(self) ** (-n)
        result = RingMatrix.identity(self.ring, self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def transpose(self) -> "RingMatrix":
        return RingMatrix(self.ring, list(zip(*self.entries)) if self.entries else [])

    def trace(self):
        if not self.is_square():
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), self.ring.zero)

    def submatrix(self, r0: int, c0: int, r1: int, c1: int) -> "RingMatrix":
        return RingMatrix(self.ring, [row[c0:c1] for row in self.entries[r0:r1]])

    def map_entries(self, fn: Callable, ring=None) -> "RingMatrix":
        return RingMatrix(ring or self.ring, [[fn(x) for x in r] for r in self.entries])

    def to_ring(self, ring) -> "RingMatrix":
        if ring is self.ring:
            return self
        return RingMatrix(ring, self.entries)

    # -- serialization ------------------------------------------------------

    def to_jsonable(self) -> list[list[str]]:
        return [[self.ring.to_text(x) for x in r] for r in self.entries]

    @classmethod
    def from_jsonable(cls, ring, rows: Sequence[Sequence[str]]) -> "RingMatrix":
        return cls(ring, [[ring.from_text(x) for x in r] for r in rows])


def mat_det(a: RingMatrix):
    """Exact determinant by fraction-free Bareiss elimination."""
    if not a.is_square():
        raise DimensionMismatch("determinant of a non-square matrix")
    n = a.rows
    ring = a.ring
    if n == 0:
        return ring.one
    m = [list(r) for r in a.entries]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if ring.is_zero(m[k][k]):
            pivot = next(
                (i for i in range(k + 1, n) if not ring.is_zero(m[i][k])), None
            )
            if pivot is None:
                return ring.zero
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = ring.exact_div(
                    m[k][k] * m[i][j] - m[i][k] * m[k][j], prev
                )
            m[i][k] = ring.zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _minor(a: RingMatrix, i: int, j: int) -> RingMatrix:
    rows = [
        [x for cj, x in enumerate(r) if cj != j]
        for ri, r in enumerate(a.entries)
        if ri != i
    ]
    return RingMatrix(a.ring, rows)


def mat_inverse(a: RingMatrix) -> RingMatrix:
    """Inverse via adjugate over det; requires det to be a unit of the ring."""
    if not a.is_square():
        raise DimensionMismatch("inverse of a non-square matrix")
    ring = a.ring
    n = a.rows
    det = mat_det(a)
    if not ring.is_unit(det):
        raise NonUnitDeterminant(
            f"determinant {ring.to_text(det)} is not a unit of the {ring.name} ring"
        )
    inv_det = ring.unit_inverse(det)
    if n == 0:
        return a
    if n == 1:
        return RingMatrix(ring, [[inv_det]])
    cof = [
        [
            mat_det(_minor(a, i, j)) * (ring.one if (i + j) % 2 == 0 else -ring.one)
            for j in range(n)
        ]
        for i in range(n)
    ]
    # Adjugate is the transposed cofactor matrix.
    return RingMatrix(ring, [[cof[j][i] * inv_det for j in range(n)] for i in range(n)])


def char_poly(a: RingMatrix) -> list:
    """Coefficients of det(X*I - a), ascending from X^0 to X^m, leading 1.

    Uses the Faddeev-LeVerrier recurrence, which needs division by integers
    only; valid over any ring containing the rationals.
    """
    if not a.is_square():
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    n = a.rows
    ring = a.ring
    coeffs = [ring.zero] * (n + 1)
    coeffs[n] = ring.one
    m = RingMatrix.zeros(ring, n)
    ident = RingMatrix.identity(ring, n)
    c = ring.one
    for k in range(1, n + 1):
        m = a * (m + ident.scale(c))
        c = ring.div_int(-m.trace(), k)
        coeffs[n - k] = c
    return coeffs


def kron(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    """Kronecker product with row-major index convention (i1*dim2 + i2)."""
    a._same_ring(b)
    out = []
    for i1 in range(a.rows):
        for i2 in range(b.rows):
            out.append(
                [
                    a.entries[i1][j1] * b.entries[i2][j2]
                    for j1 in range(a.cols)
                    for j2 in range(b.cols)
                ]
            )
    return RingMatrix(a.ring, out)


def random_rational_matrix(
    n: int, rng: random.Random, lo: int = -4, hi: int = 4
) -> RingMatrix:
    """A random n x n matrix with small integer entries, over the rationals."""
    return RingMatrix(
        RATIONAL, [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]
    )


def random_invertible_matrix(
    n: int, rng: random.Random, lo: int = -4, hi: int = 4
) -> RingMatrix:
    """A random invertible n x n rational matrix (rejection sampling)."""
    while True:
        m = random_rational_matrix(n, rng, lo, hi)
        if mat_det(m):
            return m


def laurent_matrix(rows: Sequence[Sequence]) -> RingMatrix:
    return RingMatrix(LAURENT, rows)


def rational_matrix(rows: Sequence[Sequence]) -> RingMatrix:
    return RingMatrix(RATIONAL, rows)
