"""Finite-dimensional associative unital algebras over an exact field.

An algebra is given by sparse structure constants ``e_i * e_j = sum_k
c[i,j,k] e_k`` and a unit vector.  Construction validates associativity and
the unit laws exhaustively over basis triples, which is cheap at desk scale
(dimensions up to ~25).

The canonical bilinear form ``(a, b) -> trace(L_{ab})`` of the left-regular
representation is the workhorse here: the algebra is *strongly separable*
precisely when that form is nondegenerate, and that is the precondition for
everything the state sum does later.
"""

from __future__ import annotations

from .errors import BadUnitError, NotAssociativeError
from .fields import Field
from .linalg import Matrix


class Algebra:
    """Associative unital algebra with a distinguished basis."""

    __slots__ = ("field", "dim", "basis_names", "unit", "_mul", "_mul_sparse", "_trace_vec", "_cache")

    def __init__(self, field: Field, dim: int, mul_entries, unit, basis_names=None, validate: bool = True):
        """``mul_entries`` iterates sparse quadruples ``(i, j, k, coeff)``."""
        self.field = field
        self.dim = dim
        if basis_names is None:
            basis_names = [f"e{i}" for i in range(dim)]
        if len(basis_names) != dim:
            raise ValueError("basis_names length must equal dim")
        self.basis_names = tuple(basis_names)
        table = {}
        for (i, j, k, c) in mul_entries:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise ValueError(f"structure constant index out of range: ({i},{j},{k})")
            if c == 0:
                continue
            key = (i, j)
            table.setdefault(key, {})
            table[key][k] = field.add(table[key].get(k, field.zero()), c)
        # sparse rows e_i e_j -> tuple of (k, coeff)
        self._mul_sparse = {
            key: tuple(sorted((k, c) for k, c in row.items() if c != 0))
            for key, row in table.items()
        }
        self._mul_sparse = {k: v for k, v in self._mul_sparse.items() if v}
        self._mul = None
        if len(unit) != dim:
            raise ValueError("unit vector length must equal dim")
        self.unit = tuple(unit)
        self._trace_vec = None
        self._cache = {}
        if validate:
            self._validate()

    # -- structure constants -----------------------------------------------

    def mul_row(self, i: int, j: int):
        """Sparse product of basis elements: tuple of ``(k, coeff)``."""
        return self._mul_sparse.get((i, j), ())

    def mul_entries(self):
        """All nonzero structure constants as quadruples, sorted."""
        for (i, j) in sorted(self._mul_sparse):
            for k, c in self._mul_sparse[(i, j)]:
                yield (i, j, k, c)

    def basis_element(self, i: int) -> "Element":
        coeffs = [self.field.zero()] * self.dim
        coeffs[i] = self.field.one()
        return Element(self, coeffs)

    def element(self, coeffs) -> "Element":
        return Element(self, coeffs)

    def unit_element(self) -> "Element":
        return Element(self, self.unit)

    def zero_element(self) -> "Element":
        return Element(self, [self.field.zero()] * self.dim)

    def mul_vectors(self, a, b):
        """Bilinear extension of the structure constants on coefficient vectors."""
        f = self.field
        out = [f.zero()] * self.dim
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj == 0:
                    continue
                c = f.mul(ai, bj)
                for k, coeff in self.mul_row(i, j):
                    out[k] = f.add(out[k], f.mul(c, coeff))
        return out

    # -- validation -----------------------------------------------------------

    def _validate(self):
        f = self.field
        n = self.dim
        for i in range(n):
            ei = [f.one() if t == i else f.zero() for t in range(n)]
            left = self.mul_vectors(self.unit, ei)
            if left != ei:
                raise BadUnitError(i, "left")
            right = self.mul_vectors(ei, self.unit)
            if right != ei:
                raise BadUnitError(i, "right")
        basis = [[f.one() if t == i else f.zero() for t in range(n)] for i in range(n)]
        products = [[self.mul_vectors(basis[i], basis[j]) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = self.mul_vectors(products[i][j], basis[k])
                    rhs = self.mul_vectors(basis[i], products[j][k])
                    if lhs != rhs:
                        raise NotAssociativeError(i, j, k)

    # -- representation-theoretic data ----------------------------------------

    def left_regular_matrix(self, a) -> Matrix:
        """Matrix of ``L_a : b -> a*b`` in the chosen basis."""
        coeffs = a.coeffs if isinstance(a, Element) else a
        f = self.field
        cols = []
        for j in range(self.dim):
            col = [f.zero()] * self.dim
            for i, ai in enumerate(coeffs):
                if ai == 0:
                    continue
                for k, c in self.mul_row(i, j):
                    col[k] = f.add(col[k], f.mul(ai, c))
            cols.append(col)
        return Matrix(f, self.dim, self.dim, [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)])

    def _traces(self):
        # trace of L_{e_k}, cached
        if self._trace_vec is None:
            f = self.field
            tv = []
            for k in range(self.dim):
                t = f.zero()
                for m in range(self.dim):
                    for (out, c) in self.mul_row(k, m):
                        if out == m:
                            t = f.add(t, c)
                tv.append(t)
            self._trace_vec = tv
        return self._trace_vec

    def canonical_pairing(self) -> Matrix:
        """Symmetric invariant form ``G[i][j] = trace(L_{e_i e_j})``."""
        if "Gcan" not in self._cache:
            f = self.field
            tv = self._traces()
            n = self.dim
            g = Matrix.zeros(f, n, n)
            for i in range(n):
                for j in range(n):
                    acc = f.zero()
                    for k, c in self.mul_row(i, j):
                        acc = f.add(acc, f.mul(c, tv[k]))
                    g.data[i][j] = acc
            self._cache["Gcan"] = g
        return self._cache["Gcan"]

    def is_strongly_separable(self) -> bool:
        return self.canonical_pairing().rank() == self.dim

    def centre_basis(self):
        """Basis of the centre, from the kernel of the stacked commutator system.

        Row order and free-variable choices follow the deterministic rref
        pivoting, so the result is reproducible.
        """
        if "centre" not in self._cache:
            f = self.field
            n = self.dim
            rows = []
            for i in range(n):
                for m in range(n):
                    row = [f.zero()] * n
                    for k in range(n):
                        for (out, c) in self.mul_row(k, i):
                            if out == m:
                                row[k] = f.add(row[k], c)
                        for (out, c) in self.mul_row(i, k):
                            if out == m:
                                row[k] = f.sub(row[k], c)
                    rows.append(row)
            system = Matrix(f, len(rows), n, rows)
            self._cache["centre"] = [Element(self, v) for v in system.kernel_basis()]
        return list(self._cache["centre"])

    def __repr__(self):
        return f"Algebra(dim={self.dim} over {self.field})"


class Element:
    """An algebra element as a coefficient vector over the algebra's basis."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: Algebra, coeffs):
        if len(coeffs) != algebra.dim:
            raise ValueError("coefficient vector has wrong length")
        self.algebra = algebra
        self.coeffs = tuple(coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.algebra is other.algebra
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other: "Element") -> "Element":
        if self.algebra is not other.algebra:
            raise ValueError("elements live in different algebras")
        return Element(self.algebra, self.algebra.mul_vectors(self.coeffs, other.coeffs))

    def __add__(self, other: "Element") -> "Element":
        f = self.algebra.field
        return Element(self.algebra, [f.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Element") -> "Element":
        f = self.algebra.field
        return Element(self.algebra, [f.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c) -> "Element":
        f = self.algebra.field
        return Element(self.algebra, [f.mul(c, a) for a in self.coeffs])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_central(self) -> bool:
        alg = self.algebra
        for i in range(alg.dim):
            ei = alg.basis_element(i)
            if alg.mul_vectors(self.coeffs, ei.coeffs) != alg.mul_vectors(ei.coeffs, self.coeffs):
                return False
        return True

    def inverse(self):
        """Two-sided inverse, or ``None`` if the element is not invertible."""
        alg = self.algebra
        la = alg.left_regular_matrix(self)
        x = la.solve(list(alg.unit))
        if x is None:
            return None
        # right inverse of a solves L_a x = 1; confirm it is two-sided
        if alg.mul_vectors(x, self.coeffs) != list(alg.unit):
            return None
        return Element(alg, x)

    def __repr__(self):
        names = self.algebra.basis_names
        fmt = self.algebra.field.format
        terms = [f"{fmt(c)}*{names[i]}" for i, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(terms) if terms else "0"


# -- free-function forms ------------------------------------------------------

def make_algebra(field: Field, dim: int, mul_entries, unit, basis_names=None) -> Algebra:
    """Validated algebra from sparse structure constants and a unit vector."""
    return Algebra(field, dim, mul_entries, unit, basis_names=basis_names, validate=True)


def multiply(a: Element, b: Element) -> Element:
    return a * b


def left_regular_matrix(a: Element) -> Matrix:
    return a.algebra.left_regular_matrix(a)


def canonical_pairing(algebra: Algebra) -> Matrix:
    return algebra.canonical_pairing()


def is_strongly_separable(algebra: Algebra) -> bool:
    return algebra.is_strongly_separable()


def centre_basis(algebra: Algebra):
    return algebra.centre_basis()


def is_central(a: Element) -> bool:
    return a.is_central()


def invert_element(a: Element):
    return a.inverse()
