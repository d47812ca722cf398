"""Exact scalars (Q, F_p), dense matrices, subspaces, Laurent polynomials.

Everything downstream reduces to exact dense linear algebra over Q or a
prime field.  Rationals are `fractions.Fraction`; F_p elements are plain
ints in [0, p).  RREF pivoting is deterministic (first nonzero column,
lowest row) so every basis produced anywhere in the library is canonical.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np
import sympy

ScalarLike = Union[int, str, Fraction]

# numpy fast path is safe while p*p + p fits in int64
_NUMPY_PRIME_CAP = 2**31


class Field:
    """Ground field descriptor: Q or F_p."""

    def __init__(self, p: Optional[int] = None):
        if p is not None:
            if p >= 2**61:
                raise ValueError(f"prime too large: {p} >= 2^61")
            if not sympy.isprime(p):
                raise ValueError(f"not a prime: {p}")
        self.p = p

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def coerce(self, x: ScalarLike):
        if self.p is not None:
            if isinstance(x, str):
                x = int(x)
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise ZeroDivisionError("denominator divisible by p")
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        if isinstance(x, str):
            return Fraction(x)
        return Fraction(x)

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a):
        return (-a) % self.p if self.p is not None else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in field")
        return pow(a, -1, self.p) if self.p is not None else Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def fmt(self, a) -> str:
        return str(a)


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


class Matrix:
    """Dense exact matrix; row-major list-of-lists storage."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, data: Sequence[Sequence], cols: Optional[int] = None):
        self.field = field
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
            for row in self.data:
                if len(row) != self.cols:
                    raise ValueError("ragged matrix")
        else:
            if cols is None:
                raise ValueError("empty matrix needs explicit column count")
            self.cols = cols

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero(field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return Matrix(field, [[z] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        m = Matrix.zero(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    @staticmethod
    def from_rows(field: Field, rows: Sequence[Sequence[ScalarLike]], cols: Optional[int] = None) -> "Matrix":
        return Matrix(field, [[field.coerce(x) for x in row] for row in rows], cols=cols)

    @staticmethod
    def column(field: Field, vec: Sequence) -> "Matrix":
        return Matrix(field, [[x] for x in vec], cols=1)

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.data, cols=self.cols)

    # -- basics -------------------------------------------------------
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field})"

    def row(self, i: int) -> list:
        return list(self.data[i])

    def col(self, j: int) -> list:
        return [self.data[i][j] for i in range(self.rows)]

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.data for x in row)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Matrix(self.field, [a + b for a, b in zip(self.data, other.data)],
                      cols=self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return Matrix(self.field, self.data + other.data, cols=self.cols)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [[self.data[i][j] for j in col_idx] for i in row_idx],
                      cols=len(col_idx))

    def scale(self, c) -> "Matrix":
        f = self.field
        return Matrix(f, [[f.mul(c, x) for x in row] for row in self.data], cols=self.cols)

    def add(self, other: "Matrix") -> "Matrix":
        f = self.field
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in add")
        return Matrix(f, [[f.add(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)], cols=self.cols)

    def sub(self, other: "Matrix") -> "Matrix":
        return self.add(other.scale(self.field.neg(self.field.one)))

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in mul")
        f = self.field
        if f.is_prime_field and f.p < _NUMPY_PRIME_CAP:
            a = np.array(self.data, dtype=np.int64).reshape(self.rows, self.cols)
            b = np.array(other.data, dtype=np.int64).reshape(other.rows, other.cols)
            # chunk the inner product to avoid int64 overflow on long rows
            p = f.p
            out = np.zeros((self.rows, other.cols), dtype=np.int64)
            step = max(1, (2**62) // max(1, (p - 1) ** 2))
            for k0 in range(0, self.cols, step):
                out = (out + a[:, k0:k0 + step] @ b[k0:k0 + step, :]) % p
            return Matrix(f, out.tolist(), cols=other.cols)
        z = f.zero
        bt = other.transpose().data
        out = []
        for row in self.data:
            orow = []
            for bcol in bt:
                s = z
                for x, y in zip(row, bcol):
                    if x and y:
                        s += x * y
                orow.append(s)
            out.append(orow)
        return Matrix(f, out, cols=other.cols)

    def apply(self, vec: Sequence) -> list:
        """Matrix times column vector, returned as a list."""
        return [r[0] for r in self.mul(Matrix.column(self.field, vec)).data]

    # -- elimination --------------------------------------------------
    def rref(self) -> tuple["Matrix", list[int], int]:
        """Reduced row echelon form; returns (R, pivot columns, rank)."""
        f = self.field
        if f.is_prime_field and f.p < _NUMPY_PRIME_CAP:
            return self._rref_mod()
        m = [row[:] for row in self.data]
        rows, cols = self.rows, self.cols
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            pr = next((i for i in range(r, rows) if m[i][c]), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = f.inv(m[r][c])
            m[r] = [f.mul(inv, x) for x in m[r]]
            for i in range(rows):
                if i != r and m[i][c]:
                    coef = m[i][c]
                    m[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return Matrix(f, m, cols=cols), pivots, len(pivots)

    def _rref_mod(self) -> tuple["Matrix", list[int], int]:
        f = self.field
        p = f.p
        m = np.array(self.data, dtype=np.int64).reshape(self.rows, self.cols) % p
        rows, cols = self.rows, self.cols
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(m[r:, c])[0]
            if nz.size == 0:
                continue
            pr = r + int(nz[0])
            if pr != r:
                m[[r, pr]] = m[[pr, r]]
            m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
            col = m[:, c].copy()
            col[r] = 0
            m = (m - np.outer(col, m[r])) % p
            pivots.append(c)
            r += 1
        return Matrix(f, m.tolist(), cols=cols), pivots, len(pivots)

    def rank(self) -> int:
        return self.rref()[2]

    def kernel(self) -> "Subspace":
        """Right kernel {v : Mv = 0} as a subspace of K^cols."""
        R, pivots, rank = self.rref()
        f = self.field
        free = [c for c in range(self.cols) if c not in set(pivots)]
        basis = []
        for c in free:
            v = [f.zero] * self.cols
            v[c] = f.one
            for i, pc in enumerate(pivots):
                v[pc] = f.neg(R.data[i][c])
            basis.append(v)
        # re-normalize: the free-variable parametrization is not in RREF
        return Subspace.from_spanning(f, self.cols, basis)

    def image(self) -> "Subspace":
        """Column space as a subspace of K^rows."""
        return Subspace.from_spanning(self.field, self.rows, self.transpose().data)

    def row_space(self) -> "Subspace":
        return Subspace.from_spanning(self.field, self.cols, self.data)

    def solve(self, b: Sequence) -> Optional[list]:
        """One solution of Mx = b (RREF-canonical: free variables zero), or None."""
        f = self.field
        aug = self.hstack(Matrix.column(f, list(b)))
        R, pivots, rank = aug.rref()
        if self.cols in pivots:
            return None
        x = [f.zero] * self.cols
        for i, pc in enumerate(pivots):
            x[pc] = R.data[i][self.cols]
        return x

    def solve_all(self, b: Sequence) -> Optional[tuple[list, "Subspace"]]:
        """Particular solution plus kernel, or None when inconsistent."""
        x = self.solve(b)
        if x is None:
            return None
        return x, self.kernel()

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        f = self.field
        R, pivots, rank = self.hstack(Matrix.identity(f, self.rows)).rref()
        if rank != self.rows:
            raise ValueError("singular matrix")
        return R.submatrix(range(self.rows), range(self.cols, 2 * self.cols))

    def det_is_zero(self) -> bool:
        return self.rows != self.cols or self.rank() < self.rows


def det_int(m: Matrix) -> Fraction:
    """Determinant over Q by fraction-free-ish elimination (small sizes)."""
    if m.field.is_prime_field:
        raise ValueError("det_int is for rational matrices")
    a = [row[:] for row in m.data]
    n = m.rows
    if n != m.cols:
        raise ValueError("determinant of non-square matrix")
    d = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c]), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            d = -d
        d *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                coef = a[i][c] * inv
                a[i] = [x - coef * y for x, y in zip(a[i], a[c])]
    return d


class Subspace:
    """Subspace of K^n held as an RREF row-basis."""

    __slots__ = ("field", "ambient", "basis")

    def __init__(self, field: Field, ambient: int, basis: Matrix):
        self.field = field
        self.ambient = ambient
        if basis.cols != ambient:
            raise ValueError("ambient dimension mismatch")
        self.basis = basis  # rows assumed in RREF

    @staticmethod
    def from_spanning(field: Field, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [[field.coerce(x) for x in v] for v in vectors]
        if not vecs:
            return Subspace.zero(field, ambient)
        R, pivots, rank = Matrix(field, vecs, cols=ambient).rref()
        return Subspace(field, ambient, R.submatrix(range(rank), range(ambient)))

    @staticmethod
    def zero(field: Field, ambient: int) -> "Subspace":
        return Subspace(field, ambient, Matrix.zero(field, 0, ambient))

    @staticmethod
    def full(field: Field, ambient: int) -> "Subspace":
        return Subspace(field, ambient, Matrix.identity(field, ambient))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[list]:
        return [self.basis.row(i) for i in range(self.dim)]

    def contains(self, v: Sequence) -> bool:
        return self.coords(v) is not None

    def coords(self, v: Sequence) -> Optional[list]:
        """Coordinates of v in the RREF basis, or None."""
        if self.dim == 0:
            z = self.field.zero
            return [] if all(x == z for x in v) else None
        return self.basis.transpose().solve(list(v))

    def add(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_spanning(self.field, self.ambient,
                                      self.vectors() + other.vectors())

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        # rows of [U; V]; kernel of [U^T | -V^T] gives matching coefficients
        ut = self.basis.transpose()
        vt = other.basis.transpose().scale(self.field.neg(self.field.one))
        ker = ut.hstack(vt).kernel()
        vecs = []
        for kv in ker.vectors():
            coeffs = kv[: self.dim]
            vecs.append(self.basis.transpose().apply(coeffs))
        return Subspace.from_spanning(self.field, self.ambient, vecs)

    def extend_to_basis(self) -> Matrix:
        """Coset representatives completing the basis to a basis of K^n."""
        f = self.field
        pivots = set()
        for i in range(self.dim):
            pivots.add(next(j for j in range(self.ambient) if self.basis.data[i][j]))
        extra = []
        for j in range(self.ambient):
            if j not in pivots:
                v = [f.zero] * self.ambient
                v[j] = f.one
                extra.append(v)
        return Matrix(f, extra, cols=self.ambient)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __repr__(self):
        return f"Subspace(dim {self.dim} of K^{self.ambient})"

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")


@dataclass(frozen=True)
class LaurentPoly:
    """Z[t, t^-1] with integer coefficients; no stored zeros."""

    coeffs: tuple[tuple[int, int], ...]  # sorted (exponent, coefficient)

    @staticmethod
    def from_dict(d: dict[int, int]) -> "LaurentPoly":
        return LaurentPoly(tuple(sorted((e, c) for e, c in d.items() if c)))

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly(())

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly(((0, 1),))

    @staticmethod
    def t(e: int = 1, c: int = 1) -> "LaurentPoly":
        return LaurentPoly.from_dict({e: c})

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = self.as_dict()
        for e, c in other.coeffs:
            d[e] = d.get(e, 0) + c
        return LaurentPoly.from_dict(d)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        d: dict[int, int] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(d)

    def scale(self, n: int) -> "LaurentPoly":
        return LaurentPoly.from_dict({e: n * c for e, c in self.coeffs})

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by t^n."""
        return LaurentPoly(tuple((e + n, c) for e, c in self.coeffs))

    def bar(self) -> "LaurentPoly":
        """The involution t -> t^-1."""
        return LaurentPoly(tuple(sorted((-e, c) for e, c in self.coeffs)))

    def at_one(self) -> int:
        return sum(c for _, c in self.coeffs)

    def coeff(self, e: int) -> int:
        return self.as_dict().get(e, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.coeffs:
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{e}" if c != 1 else f"t^{e}")
        return " + ".join(parts)
