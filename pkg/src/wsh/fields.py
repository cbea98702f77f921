"""Exact linear algebra over the rationals and over prime fields.

Scalars are plain Python values: Fraction for the rationals, ints in
range(p) for GF(p). A FieldSpec bundles the arithmetic so everything
downstream stays field generic. Matrices are small and dense; boundary
matrices enter as per-column sparse data and are densified only for the
eliminations, which at this scale is the simplest exact approach.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MismatchedDimensions, NotInSpan

__all__ = [
    "FieldSpec",
    "Matrix",
    "rank",
    "kernel_basis",
    "solve_in_span",
    "row_reduce_with_ops",
    "apply_row_ops",
]


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FieldSpec:
    """Arithmetic context: the rationals (p is None) or GF(p) for prime p."""

    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None and not _is_prime(p):
            raise ValueError(f"field order must be prime, got {p!r}")
        self.p = p

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime_field(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def from_name(cls, name: str) -> "FieldSpec":
        """Parse 'rational' or 'gf:<p>'."""
        if name == "rational":
            return cls(None)
        if name.startswith("gf:"):
            try:
                p = int(name[3:])
            except ValueError:
                raise ValueError(f"bad field name {name!r}") from None
            return cls(p)
        raise ValueError(f"bad field name {name!r}")

    @property
    def name(self) -> str:
        return "rational" if self.p is None else f"gf:{self.p}"

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def from_int(self, k: int):
        return Fraction(k) if self.p is None else k % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def div(self, a, b):
        if self.is_zero(b):
            raise ZeroDivisionError("division by zero field element")
        if self.p is None:
            return a / b
        return (a * pow(b, -1, self.p)) % self.p

    def inv(self, a):
        return self.div(self.one(), a)

    def is_zero(self, a) -> bool:
        return a == 0

    def is_pm_one(self, a) -> bool:
        # unit preference helper for pivot choice
        return a == self.one() or a == self.from_int(-1)

    def to_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.p == other.p

    def __hash__(self):
        return hash(("FieldSpec", self.p))

    def __repr__(self):
        return f"FieldSpec({self.name})"


class Matrix:
    """Dense matrix with entries in one FieldSpec."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: FieldSpec, rows, ncols=None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            for r in self.rows:
                if len(r) != self.ncols:
                    raise MismatchedDimensions("ragged rows")
        else:
            self.ncols = 0 if ncols is None else ncols

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero()
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        one = field.one()
        for i in range(n):
            m.rows[i][i] = one
        return m

    @classmethod
    def from_columns(cls, field, columns, nrows):
        """Build from a list of length-nrows column vectors."""
        for c in columns:
            if len(c) != nrows:
                raise MismatchedDimensions(f"column of length {len(c)}, expected {nrows}")
        m = cls.zeros(field, nrows, len(columns))
        for j, c in enumerate(columns):
            for i, v in enumerate(c):
                m.rows[i][j] = v
        return m

    def column(self, j):
        return [r[j] for r in self.rows]

    def copy(self):
        return Matrix(self.field, self.rows, ncols=self.ncols)

    def transpose(self):
        t = Matrix.zeros(self.field, self.ncols, self.nrows)
        for i in range(self.nrows):
            for j in range(self.ncols):
                t.rows[j][i] = self.rows[i][j]
        return t

    def mat_vec(self, v):
        if len(v) != self.ncols:
            raise MismatchedDimensions("vector length does not match column count")
        F = self.field
        out = []
        for row in self.rows:
            acc = F.zero()
            for a, b in zip(row, v):
                acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field.name})"


def row_reduce_with_ops(matrix: Matrix):
    """Reduced row echelon form with a replayable operation log.

    Returns (reduced, pivots, ops). pivots is a list of (row, col) pairs.
    ops entries are ("swap", i, j), ("scale", i, c) for row_i *= c, and
    ("addmul", i, j, c) for row_i += c * row_j. Replaying ops on the input
    (see apply_row_ops) reproduces the reduced matrix exactly.
    """
    F = matrix.field
    a = [list(r) for r in matrix.rows]
    nrows, ncols = matrix.nrows, matrix.ncols
    ops = []
    pivots = []
    pr = 0
    for col in range(ncols):
        if pr >= nrows:
            break
        # first nonzero in column order, preferring +-1 to limit growth
        candidates = [i for i in range(pr, nrows) if not F.is_zero(a[i][col])]
        if not candidates:
            continue
        piv = next((i for i in candidates if F.is_pm_one(a[i][col])), candidates[0])
        if piv != pr:
            a[piv], a[pr] = a[pr], a[piv]
            ops.append(("swap", piv, pr))
        if a[pr][col] != F.one():
            c = F.inv(a[pr][col])
            a[pr] = [F.mul(c, v) for v in a[pr]]
            ops.append(("scale", pr, c))
        for i in range(nrows):
            if i != pr and not F.is_zero(a[i][col]):
                c = F.neg(a[i][col])
                a[i] = [F.add(v, F.mul(c, w)) for v, w in zip(a[i], a[pr])]
                ops.append(("addmul", i, pr, c))
        pivots.append((pr, col))
        pr += 1
    return Matrix(F, a, ncols=ncols), pivots, ops


def apply_row_ops(ops, matrix: Matrix) -> Matrix:
    """Replay an operation log from row_reduce_with_ops on a fresh copy."""
    F = matrix.field
    a = [list(r) for r in matrix.rows]
    for op in ops:
        if op[0] == "swap":
            _, i, j = op
            a[i], a[j] = a[j], a[i]
        elif op[0] == "scale":
            _, i, c = op
            a[i] = [F.mul(c, v) for v in a[i]]
        elif op[0] == "addmul":
            _, i, j, c = op
            a[i] = [F.add(v, F.mul(c, w)) for v, w in zip(a[i], a[j])]
        else:
            raise ValueError(f"unknown op {op!r}")
    return Matrix(F, a, ncols=matrix.ncols)


def rank(matrix: Matrix) -> int:
    _, pivots, _ = row_reduce_with_ops(matrix)
    return len(pivots)


def kernel_basis(matrix: Matrix):
    """Basis of the right kernel, one dense column vector per free column."""
    F = matrix.field
    reduced, pivots, _ = row_reduce_with_ops(matrix)
    pivot_cols = {c: r for r, c in pivots}
    basis = []
    for free in range(matrix.ncols):
        if free in pivot_cols:
            continue
        v = [F.zero()] * matrix.ncols
        v[free] = F.one()
        for c, r in pivot_cols.items():
            v[c] = F.neg(reduced.rows[r][free])
        basis.append(v)
    return Matrix.from_columns(F, basis, matrix.ncols)


def solve_in_span(columns: Matrix, target):
    """Coefficients c with columns * c == target, or raise NotInSpan.

    Free coordinates, if any, are set to zero; when the columns are linearly
    independent the solution is unique.
    """
    if len(target) != columns.nrows:
        raise MismatchedDimensions(
            f"target of length {len(target)}, columns have {columns.nrows} rows"
        )
    F = columns.field
    aug = Matrix.zeros(F, columns.nrows, columns.ncols + 1)
    for i in range(columns.nrows):
        aug.rows[i][: columns.ncols] = columns.rows[i]
        aug.rows[i][columns.ncols] = target[i]
    reduced, pivots, _ = row_reduce_with_ops(aug)
    coeffs = [F.zero()] * columns.ncols
    for r, c in pivots:
        if c == columns.ncols:
            raise NotInSpan("target is outside the column span")
        coeffs[c] = reduced.rows[r][columns.ncols]
    return coeffs
