"""Exact dense linear algebra over a :class:`~statesum.fields.Field`.

Row reduction uses a fixed deterministic pivot rule (first nonzero entry
scanning columns left to right, rows top to bottom) so that every derived
basis -- centres, idempotent images, kernels -- is reproducible across runs.
"""

from __future__ import annotations

from .errors import SingularMatrixError
from .fields import Field


class Matrix:
    """Immutable-by-convention dense matrix with exact entries."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data  # list of row lists; not aliased by callers

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero()
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        m = cls.zeros(field, n, n)
        one = field.one()
        for i in range(n):
            m.data[i][i] = one
        return m

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Matrix":
        data = [list(r) for r in rows]
        ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls(field, len(data), ncols, data)

    @classmethod
    def column_vector(cls, field: Field, vec) -> "Matrix":
        return cls(field, len(vec), 1, [[v] for v in vec])

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, [row[:] for row in self.data])

    # -- basic queries ---------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field})"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    # -- arithmetic -------------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        # sparsity-aware: skips zero entries of both factors, which is what
        # keeps the boundary-projector algebra affordable at dimension ~2000
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        p = self.field.p
        zero = self.field.zero()
        b_sparse = [[(j, v) for j, v in enumerate(row) if v != 0] for row in other.data]
        out = []
        for ai in self.data:
            acc = [zero] * other.cols
            for r, av in enumerate(ai):
                if av == 0:
                    continue
                for j, bv in b_sparse[r]:
                    acc[j] = acc[j] + av * bv
            if p is not None:
                acc = [x % p for x in acc]
            out.append(acc)
        return Matrix(self.field, self.rows, other.cols, out)

    def mul_vec(self, vec):
        """Matrix times column vector, returned as a list."""
        if self.cols != len(vec):
            raise ValueError("shape mismatch in mul_vec")
        p = self.field.p
        nz = [(j, v) for j, v in enumerate(vec) if v != 0]
        zero = self.field.zero()
        out = []
        for row in self.data:
            acc = zero
            for j, v in nz:
                rj = row[j]
                if rj != 0:
                    acc = acc + rj * v
            out.append(acc if p is None else acc % p)
        return out

    def add(self, other: "Matrix") -> "Matrix":
        f = self.field
        return Matrix(
            f, self.rows, self.cols,
            [[f.add(x, y) for x, y in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
        )

    def sub(self, other: "Matrix") -> "Matrix":
        f = self.field
        return Matrix(
            f, self.rows, self.cols,
            [[f.sub(x, y) for x, y in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
        )

    def scale(self, c) -> "Matrix":
        f = self.field
        return Matrix(f, self.rows, self.cols, [[f.mul(c, x) for x in row] for row in self.data])

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field, self.cols, self.rows,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; left factor is the most significant index."""
        f = self.field
        rows = self.rows * other.rows
        cols = self.cols * other.cols
        out = [[None] * cols for _ in range(rows)]
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.data[i][j]
                for r in range(other.rows):
                    orow = other.data[r]
                    target = out[i * other.rows + r]
                    base = j * other.cols
                    for c in range(other.cols):
                        target[base + c] = f.mul(a, orow[c])
        return Matrix(f, rows, cols, out)

    # -- elimination --------------------------------------------------------------

    def rref(self):
        """Reduced row-echelon form.

        Returns ``(R, pivot_columns, rank)``.  Pivot choice is deterministic:
        scan columns left to right, take the first row (top to bottom) with a
        nonzero entry.
        """
        m = [row[:] for row in self.data]
        rows, cols = self.rows, self.cols
        p = self.field.p
        pivots = []
        r = 0
        for c in range(cols):
            pivot_row = None
            for i in range(r, rows):
                if m[i][c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            if pivot_row != r:
                m[r], m[pivot_row] = m[pivot_row], m[r]
            pv = m[r][c]
            if p is None:
                inv = 1 / pv
                m[r] = [x * inv for x in m[r]]
                for i in range(rows):
                    if i != r and m[i][c] != 0:
                        factor = m[i][c]
                        mr = m[r]
                        m[i] = [x - factor * y for x, y in zip(m[i], mr)]
            else:
                inv = pow(pv, -1, p)
                m[r] = [(x * inv) % p for x in m[r]]
                for i in range(rows):
                    if i != r and m[i][c] != 0:
                        factor = m[i][c]
                        mr = m[r]
                        m[i] = [(x - factor * y) % p for x, y in zip(m[i], mr)]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return Matrix(self.field, rows, cols, m), tuple(pivots), len(pivots)

    def rank(self) -> int:
        return self.rref()[2]

    def solve(self, b):
        """One exact solution of ``self @ x = b`` or ``None`` if inconsistent.

        Free variables are set to zero under the deterministic pivot rule.
        """
        if len(b) != self.rows:
            raise ValueError("right-hand side has wrong length")
        aug = Matrix(
            self.field, self.rows, self.cols + 1,
            [row[:] + [b[i]] for i, row in enumerate(self.data)],
        )
        red, pivots, rank = aug.rref()
        if rank and pivots[-1] == self.cols:
            return None
        x = [self.field.zero()] * self.cols
        for r, c in enumerate(pivots):
            x[c] = red.data[r][self.cols]
        return x

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices can be inverted")
        n = self.rows
        aug = Matrix(
            self.field, n, 2 * n,
            [
                row[:] + [self.field.one() if i == j else self.field.zero() for j in range(n)]
                for i, row in enumerate(self.data)
            ],
        )
        red, pivots, rank = aug.rref()
        if rank < n or any(c != i for i, c in enumerate(pivots)):
            raise SingularMatrixError(f"matrix of rank {rank} < {n} has no inverse")
        return Matrix(self.field, n, n, [row[n:] for row in red.data])

    def kernel_basis(self):
        """Deterministic basis of the null space, one vector per free column."""
        red, pivots, rank = self.rref()
        pivot_set = set(pivots)
        basis = []
        f = self.field
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [f.zero()] * self.cols
            v[free] = f.one()
            for r, c in enumerate(pivots):
                v[c] = f.neg(red.data[r][free])
            basis.append(v)
        return basis
