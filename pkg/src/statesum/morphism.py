"""Typed linear maps between tensor products of the open and closed spaces.

A :class:`Morphism` is an exact matrix together with domain and codomain
signatures.  A signature is an ordered tuple of factors; each factor is the
full algebra ``A`` or a split image such as ``C = p(A)``.  Tensor indices are
lexicographic in factor order with the leftmost factor most significant, so
the matrix of ``f (x) g`` is the Kronecker product of the matrices.

Keeping the signatures on the value means that composing a reduced state sum
with the wrong leg type fails loudly instead of silently reindexing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SignatureMismatchError
from .fields import Field
from .linalg import Matrix

FULL = "full"    # the algebra A itself
SPLIT = "split"  # a split image, e.g. C = p(A) or im P_kk


@dataclass(frozen=True)
class Factor:
    kind: str
    dim: int

    def __repr__(self):
        return f"{self.kind}({self.dim})"


def full_factor(dim: int) -> Factor:
    return Factor(FULL, dim)


def split_factor(dim: int) -> Factor:
    return Factor(SPLIT, dim)


def signature_dim(signature) -> int:
    d = 1
    for f in signature:
        d *= f.dim
    return d


class Morphism:
    __slots__ = ("field", "domain", "codomain", "matrix")

    def __init__(self, field: Field, domain, codomain, matrix: Matrix):
        domain = tuple(domain)
        codomain = tuple(codomain)
        if matrix.rows != signature_dim(codomain) or matrix.cols != signature_dim(domain):
            raise ValueError(
                f"matrix {matrix.rows}x{matrix.cols} does not match signatures "
                f"{codomain} <- {domain}"
            )
        self.field = field
        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix

    @classmethod
    def identity(cls, field: Field, signature) -> "Morphism":
        n = signature_dim(signature)
        return cls(field, signature, signature, Matrix.identity(field, n))

    @classmethod
    def scalar(cls, field: Field, value) -> "Morphism":
        return cls(field, (), (), Matrix(field, 1, 1, [[value]]))

    def compose(self, other: "Morphism") -> "Morphism":
        """``self`` after ``other``."""
        if self.domain != other.codomain:
            raise SignatureMismatchError(
                f"cannot compose: domain {self.domain} != codomain {other.codomain}"
            )
        return Morphism(self.field, other.domain, self.codomain, self.matrix @ other.matrix)

    def tensor(self, other: "Morphism") -> "Morphism":
        return Morphism(
            self.field,
            self.domain + other.domain,
            self.codomain + other.codomain,
            self.matrix.kron(other.matrix),
        )

    def equal(self, other: "Morphism") -> bool:
        return (
            self.field == other.field
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.matrix == other.matrix
        )

    def __eq__(self, other):
        return isinstance(other, Morphism) and self.equal(other)

    def scalar_value(self):
        if self.domain or self.codomain:
            raise ValueError("not a scalar morphism")
        return self.matrix[0, 0]

    def __repr__(self):
        return f"Morphism({list(self.codomain)} <- {list(self.domain)})"


def compose(f: Morphism, g: Morphism) -> Morphism:
    """Composite ``f o g`` (apply ``g`` first)."""
    return f.compose(g)


def tensor(f: Morphism, g: Morphism) -> Morphism:
    return f.tensor(g)


def equal(f: Morphism, g: Morphism) -> bool:
    return f.equal(g)
