"""Exact rational matrices: row reduction, rank, kernels and linear solves.

Scalars are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator. Row reduction is delegated to
sympy's ``DomainMatrix`` over ``QQ`` so large sparse systems (derivation
equations, cross-action constraints) stay fast while the results remain
exact and canonical.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from leibniz.exceptions import DimensionMismatch

Rational = Fraction
Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value):
    """Coerce an int, Fraction or 'p/q' string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {value!r} as an exact rational")


def parse_rational(text):
    """Parse the interchange form "p/q" (or "p") into a Fraction.

    Decimal points, exponents and whitespace are rejected: only the integer
    forms the serializer writes are accepted.
    """
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {text!r}")
    num, sep, den = text.partition('/')
    if not _is_integer_literal(num) or (sep and not _is_integer_literal(den, signed=False)):
        raise ValueError(f"not a rational literal: {text!r}")
    if sep and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if sep else 1)


def _is_integer_literal(text, signed=True):
    if signed and text[:1] == '-':
        text = text[1:]
    return text.isdigit() and text.isascii()


def format_rational(value):
    """Render a Fraction as "p/q", omitting q when it is 1."""
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Matrix:
    """Dense immutable matrix of Fractions stored row-major."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch(f"negative matrix shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [tuple(to_rational(v) for v in row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatch(f"ragged row of length {len(row)}, expected {cols}")
        return cls(len(rows), cols, tuple(v for row in rows for v in row))

    @classmethod
    def from_columns(cls, columns, rows):
        columns = [tuple(to_rational(v) for v in col) for col in columns]
        return cls.from_rows([[col[i] for col in columns] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, index):
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def is_zero(self):
        return not any(self.entries)

    def apply(self, vector):
        """Multiply this matrix by a column vector."""
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} against {self.cols} columns")
        return tuple(
            sum((a * b for a, b in zip(self.row(i), vector) if a and b), ZERO)
            for i in range(self.rows))

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = [other.column(j) for j in range(other.cols)]
        return Matrix.from_rows(
            [[sum((a * b for a, b in zip(self.row(i), col) if a and b), ZERO) for col in columns]
             for i in range(self.rows)],
            other.cols)

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def power(self, k):
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices have powers")
        result = Matrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def flatten(self):
        return self.entries

    def _check_same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(
                f"shapes {self.rows}x{self.cols} and {other.rows}x{other.cols} differ")


def _to_domain(equations, cols):
    rep = {}
    for i, row in enumerate(equations):
        entries = {j: QQ(v.numerator, v.denominator) for j, v in row.items() if v}
        if entries:
            rep[i] = entries
    return DomainMatrix(rep, (len(equations), cols), QQ)


def _from_domain_value(value):
    return Fraction(int(value.numerator), int(value.denominator))


def rref_equations(equations, cols):
    """Row-reduce a system given as one {column: value} map per row.

    Returns the nonzero rows of the reduced row-echelon form (again as maps)
    and the pivot columns, in order.
    """
    equations = [row for row in equations if any(row.values())]
    if not equations or cols == 0:
        return [], []
    reduced, pivots = _to_domain(equations, cols).rref()
    sdm = reduced.to_sparse().rep
    rows = []
    for i in range(len(pivots)):
        rows.append({j: _from_domain_value(v) for j, v in sdm.get(i, {}).items()})
    return rows, list(pivots)


def _dense_equations(m):
    return [{j: v for j, v in enumerate(m.row(i)) if v} for i in range(m.rows)]


def rref(m):
    """Reduced row-echelon form of ``m`` and its pivot columns."""
    rows, pivots = rref_equations(_dense_equations(m), m.cols)
    dense = [[row.get(j, ZERO) for j in range(m.cols)] for row in rows]
    dense.extend([[ZERO] * m.cols for _ in range(m.rows - len(rows))])
    return Matrix.from_rows(dense, m.cols), pivots


def rank(m):
    return len(rref(m)[1])


def kernel_from_equations(equations, cols):
    """Canonical kernel basis of a homogeneous system of {column: value} rows.

    Free variables are set to unit vectors in increasing column order, so the
    basis is deterministic for a given system.
    """
    rows, pivots = rref_equations(equations, cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vector = [ZERO] * cols
        vector[free] = ONE
        for row, pivot in zip(rows, pivots):
            value = row.get(free)
            if value:
                vector[pivot] = -value
        basis.append(tuple(vector))
    return basis


def kernel_basis(m):
    """Column vectors spanning {v : m v = 0}, in canonical form."""
    return kernel_from_equations(_dense_equations(m), m.cols)


def solve(m, b):
    """One particular solution of ``m x = b``, or None when inconsistent.

    Free variables are set to zero.
    """
    b = tuple(to_rational(v) for v in b)
    if len(b) != m.rows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} against {m.rows} rows")
    augmented = _dense_equations(m)
    for row, value in zip(augmented, b):
        if value:
            row[m.cols] = value
    rows, pivots = rref_equations(augmented, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    solution = [ZERO] * m.cols
    for row, pivot in zip(rows, pivots):
        solution[pivot] = row.get(m.cols, ZERO)
    return tuple(solution)


def inverse(m):
    """Inverse of a square matrix; raises DimensionMismatch when singular."""
    if m.rows != m.cols:
        raise DimensionMismatch("only square matrices are invertible")
    n = m.rows
    augmented = _dense_equations(m)
    for i, row in enumerate(augmented):
        row[n + i] = ONE
    rows, pivots = rref_equations(augmented, 2 * n)
    if pivots != list(range(n)):
        raise DimensionMismatch("matrix is singular")
    return Matrix.from_rows([[row.get(n + j, ZERO) for j in range(n)] for row in rows], n)


def row_space_rank(vectors: Iterable[Sequence[Fraction]], cols: int) -> int:
    """Rank of the span of ``vectors``."""
    return len(rref_equations([{j: v for j, v in enumerate(vec) if v} for vec in vectors], cols)[1])


def canonical_span(vectors, cols):
    """RREF rows (as dense tuples) spanning the same space as ``vectors``."""
    rows, _ = rref_equations([{j: v for j, v in enumerate(vec) if v} for vec in vectors], cols)
    return [tuple(row.get(j, ZERO) for j in range(cols)) for row in rows]


def as_vector(values: Iterable) -> Vector:
    return tuple(to_rational(v) for v in values)


def densify(entries: Mapping[int, Fraction], length: int) -> Vector:
    return tuple(entries.get(j, ZERO) for j in range(length))


def first_nonzero(vector: Sequence[Fraction]) -> Optional[int]:
    for j, v in enumerate(vector):
        if v:
            return j
    return None


def unit_vector(i: int, length: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(length))


def zero_vector(length: int) -> Vector:
    return (ZERO,) * length
