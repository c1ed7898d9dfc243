"""Worked families of strongly separable algebras and their invariants.

Three constructions: direct sums of matrix algebras with a prescribed window
element, group algebras with the delta-at-identity counit, and groupoid
algebras with the star-weighted counit (whose window element comes out to be
the unit).  The closed-form surface invariant and the genus/window operator
composite give two independent oracles for the contracted state sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .algebra import Algebra
from .complexes import OpenClosedComplex
from .errors import (
    CharDividesBlockError,
    CharDividesOrderError,
    CharDividesStarError,
    IncompatibleColoursError,
    InvalidInput,
    MissingColourError,
    ZeroWindowCoefficientError,
)
from .evaluation import state_sum
from .fields import Field
from .frobenius import FrobeniusStructure, KnowledgeableFrobenius
from .linalg import Matrix
from .morphism import Factor, Morphism


# -- finite groups ------------------------------------------------------------------


class GroupTable:
    """A finite group as an explicit multiplication table (validated)."""

    __slots__ = ("order", "table", "identity", "inverse", "names")

    def __init__(self, table, names=None):
        n = len(table)
        self.order = n
        self.table = tuple(tuple(row) for row in table)
        self.names = tuple(names) if names else tuple(f"g{i}" for i in range(n))
        for row in self.table:
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise InvalidInput("multiplication table is not closed")
        identity = None
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise InvalidInput("no identity element")
        self.identity = identity
        inverse = []
        for x in range(n):
            inv = [y for y in range(n) if self.table[x][y] == identity]
            if len(inv) != 1 or self.table[inv[0]][x] != identity:
                raise InvalidInput(f"element {x} has no two-sided inverse")
            inverse.append(inv[0])
        self.inverse = tuple(inverse)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise InvalidInput(f"table is not associative at ({a},{b},{c})")

    @classmethod
    def cyclic(cls, n: int) -> "GroupTable":
        return cls([[(i + j) % n for j in range(n)] for i in range(n)],
                   names=[f"r{i}" for i in range(n)])

    @classmethod
    def symmetric(cls, n: int) -> "GroupTable":
        """Symmetric group on ``n`` letters; permutations in lexicographic order."""
        from itertools import permutations

        perms = list(permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        # product = apply right permutation first, then the left one
        table = [
            [index[tuple(p[q[i]] for i in range(n))] for q in perms]
            for p in perms
        ]
        return cls(table, names=["".join(map(str, p)) for p in perms])


def group_algebra(field: Field, group: GroupTable):
    """``k[G]`` with the delta-at-identity counit; window element ``|G|``."""
    p = field.characteristic()
    if p and group.order % p == 0:
        raise CharDividesOrderError(
            f"characteristic {p} divides |G| = {group.order}; k[G] is not strongly separable"
        )
    n = group.order
    entries = [(i, j, group.table[i][j], field.one()) for i in range(n) for j in range(n)]
    unit = [field.one() if i == group.identity else field.zero() for i in range(n)]
    alg = Algebra(field, n, entries, unit, basis_names=group.names)
    eps = [field.one() if i == group.identity else field.zero() for i in range(n)]
    return alg, FrobeniusStructure(alg, eps)


# -- matrix direct sums ------------------------------------------------------------


def matrix_direct_sum(field: Field, sizes, windows):
    """``A = (+)_j M_{m_j}`` with window element ``sum_j a_j z_j``.

    Basis ``e^{(j)}_{pq}`` ordered block by block, row-major inside a block.
    The counit is ``eps(e^{(j)}_{pq}) = delta_pq m_j / a_j``.
    """
    sizes = list(sizes)
    windows = list(windows)
    if len(sizes) != len(windows):
        raise InvalidInput("sizes and windows must have equal length")
    p = field.characteristic()
    for m in sizes:
        if m < 1:
            raise InvalidInput("block sizes must be >= 1")
        if p and m % p == 0:
            raise CharDividesBlockError(f"characteristic {p} divides block size {m}")
    win = [field.parse(str(a)) if isinstance(a, str) else field.of_int(a) if isinstance(a, int) else a
           for a in windows]
    for a in win:
        if a == 0:
            raise ZeroWindowCoefficientError("window coefficients must be invertible")

    offsets = []
    off = 0
    for m in sizes:
        offsets.append(off)
        off += m * m
    dim = off

    def idx(j, pq):
        r, cc = pq
        return offsets[j] + r * sizes[j] + cc

    entries = []
    names = [None] * dim
    for j, m in enumerate(sizes):
        for r in range(m):
            for cc in range(m):
                names[idx(j, (r, cc))] = f"e{j}_{r}{cc}"
        for r in range(m):
            for s in range(m):
                for t in range(m):
                    entries.append((idx(j, (r, s)), idx(j, (s, t)), idx(j, (r, t)), field.one()))
    unit = [field.zero()] * dim
    for j, m in enumerate(sizes):
        for r in range(m):
            unit[idx(j, (r, r))] = field.one()
    alg = Algebra(field, dim, entries, unit, basis_names=names)

    eps = [field.zero()] * dim
    for j, m in enumerate(sizes):
        diag = field.div(field.of_int(m), win[j])
        for r in range(m):
            eps[idx(j, (r, r))] = diag
    return alg, FrobeniusStructure(alg, eps)


def surface_invariant_closed_form(sizes, windows, genus: int, punctures: int, field: Field = None):
    """Closed form ``sum_j a_j^(k + 2(l-1)) m_j^(-2(l-1))`` for the invariant
    of the genus-``l`` surface with ``k`` coloured punctures."""
    field = field or Field()
    total = field.zero()
    e = punctures + 2 * (genus - 1)
    for m, a in zip(sizes, windows):
        av = field.of_int(a) if isinstance(a, int) else a
        mv = field.of_int(m)
        term = field.one()
        for _ in range(abs(e)):
            term = field.mul(term, av)
        if e < 0:
            term = field.inv(term)
        mexp = -2 * (genus - 1)
        mm = field.one()
        for _ in range(abs(mexp)):
            mm = field.mul(mm, mv)
        if mexp < 0:
            mm = field.inv(mm)
        total = field.add(total, field.mul(term, mm))
    return total


def genus_window_scalar(K: KnowledgeableFrobenius, genus: int, punctures: int):
    """``eps_C o (window operator)^k o (genus-one operator)^l o eta_C``.

    Computed purely in the closed space; independent of any triangulation,
    so it serves as a second oracle for the contracted invariant.
    """
    C = K.C
    d = C.dim
    f = C.field
    genus_op = C.mu_matrix() @ C.delta_matrix()
    window_op = K.iota_star @ K.iota
    vec = list(C.algebra.unit)
    for _ in range(genus):
        vec = genus_op.mul_vec(vec)
    for _ in range(punctures):
        vec = window_op.mul_vec(vec)
    acc = f.zero()
    for ci, v in zip(C.counit, vec):
        acc = f.add(acc, f.mul(ci, v))
    return acc


# -- finite groupoids -----------------------------------------------------------------


class FiniteGroupoid:
    """Explicit finite groupoid: morphism list, composition and inverse tables.

    Composition is written left to right: ``compose[g][h]`` is defined when
    ``target(g) == source(h)``.
    """

    __slots__ = ("num_objects", "source", "target", "identity_of", "compose_table", "inverse")

    def __init__(self, num_objects, source, target, identity_of, compose_table, inverse):
        self.num_objects = num_objects
        self.source = tuple(source)
        self.target = tuple(target)
        self.identity_of = tuple(identity_of)
        self.compose_table = tuple(tuple(row) for row in compose_table)
        self.inverse = tuple(inverse)
        self._validate()

    @property
    def num_morphisms(self):
        return len(self.source)

    def _validate(self):
        n = self.num_morphisms
        X = self.num_objects
        if len(self.identity_of) != X:
            raise InvalidInput("identity map must assign one morphism per object")
        for x in range(X):
            i = self.identity_of[x]
            if self.source[i] != x or self.target[i] != x:
                raise InvalidInput(f"identity of object {x} has wrong endpoints")
        for g in range(n):
            for h in range(n):
                val = self.compose_table[g][h]
                defined = self.target[g] == self.source[h]
                if defined != (val is not None):
                    raise InvalidInput(f"composability mismatch at ({g},{h})")
                if val is not None:
                    if self.source[val] != self.source[g] or self.target[val] != self.target[h]:
                        raise InvalidInput(f"composite ({g},{h}) has wrong endpoints")
        for g in range(n):
            for h in range(n):
                for k in range(n):
                    if self.target[g] == self.source[h] and self.target[h] == self.source[k]:
                        lhs = self.compose_table[self.compose_table[g][h]][k]
                        rhs = self.compose_table[g][self.compose_table[h][k]]
                        if lhs != rhs:
                            raise InvalidInput(f"composition not associative at ({g},{h},{k})")
        for g in range(n):
            if self.compose_table[self.identity_of[self.source[g]]][g] != g:
                raise InvalidInput(f"left identity law fails at {g}")
            if self.compose_table[g][self.identity_of[self.target[g]]] != g:
                raise InvalidInput(f"right identity law fails at {g}")
            gi = self.inverse[g]
            if self.source[gi] != self.target[g] or self.target[gi] != self.source[g]:
                raise InvalidInput(f"inverse of {g} has wrong endpoints")
            if self.compose_table[g][gi] != self.identity_of[self.source[g]]:
                raise InvalidInput(f"g o g^-1 is not an identity at {g}")
            if self.compose_table[gi][g] != self.identity_of[self.target[g]]:
                raise InvalidInput(f"g^-1 o g is not an identity at {g}")

    def star_size(self, x: int) -> int:
        return sum(1 for g in range(self.num_morphisms) if self.source[g] == x)

    @classmethod
    def from_group(cls, group: GroupTable) -> "FiniteGroupoid":
        n = group.order
        return cls(
            1, [0] * n, [0] * n, [group.identity],
            [[group.table[i][j] for j in range(n)] for i in range(n)],
            list(group.inverse),
        )

    @classmethod
    def transitive(cls, num_objects: int, group: GroupTable) -> "FiniteGroupoid":
        """Groupoid ``X x X x H``: morphisms ``(x, y, h)``, composed head to tail."""
        n = group.order
        morphs = [(x, y, h) for x in range(num_objects) for y in range(num_objects) for h in range(n)]
        index = {m: i for i, m in enumerate(morphs)}
        source = [x for (x, y, h) in morphs]
        target = [y for (x, y, h) in morphs]
        identity_of = [index[(x, x, group.identity)] for x in range(num_objects)]
        compose = []
        for (x1, y1, h1) in morphs:
            row = []
            for (x2, y2, h2) in morphs:
                if y1 != x2:
                    row.append(None)
                else:
                    row.append(index[(x1, y2, group.table[h1][h2])])
            compose.append(row)
        inverse = [index[(y, x, group.inverse[h])] for (x, y, h) in morphs]
        return cls(num_objects, source, target, identity_of, compose, inverse)

    @classmethod
    def pair(cls, num_objects: int) -> "FiniteGroupoid":
        return cls.transitive(num_objects, GroupTable.cyclic(1))


@dataclass
class BlockModel:
    """Block decomposition ``A = (+)_{x,y} A_xy`` of a groupoid algebra."""

    num_objects: int
    block_indices: dict   # (x, y) -> tuple of basis indices
    object_idempotents: dict  # x -> Element

    def block(self, x, y):
        return self.block_indices.get((x, y), ())


def groupoid_algebra(field: Field, gd: FiniteGroupoid):
    """Groupoid algebra with the star-weighted symmetric Frobenius structure.

    ``eps(g) = N_[source(g)]`` on identities and 0 elsewhere; the induced
    window element is the unit, so this is the canonical structure.
    """
    p = field.characteristic()
    for x in range(gd.num_objects):
        if p and gd.star_size(x) % p == 0:
            raise CharDividesStarError(
                f"characteristic {p} divides the star size at object {x}"
            )
    n = gd.num_morphisms
    entries = []
    for g in range(n):
        for h in range(n):
            val = gd.compose_table[g][h]
            if val is not None:
                entries.append((g, h, val, field.one()))
    unit = [field.zero()] * n
    for x in range(gd.num_objects):
        unit[gd.identity_of[x]] = field.one()
    names = [f"m{g}" for g in range(n)]
    alg = Algebra(field, n, entries, unit, basis_names=names)
    eps = [field.zero()] * n
    for x in range(gd.num_objects):
        eps[gd.identity_of[x]] = field.of_int(gd.star_size(x))
    frob = FrobeniusStructure(alg, eps)
    blocks = {}
    for g in range(n):
        blocks.setdefault((gd.source[g], gd.target[g]), []).append(g)
    model = BlockModel(
        gd.num_objects,
        {k: tuple(v) for k, v in blocks.items()},
        {x: alg.basis_element(gd.identity_of[x]) for x in range(gd.num_objects)},
    )
    return alg, frob, model


def groupoid_idempotent_closed_form(field: Field, gd: FiniteGroupoid) -> Matrix:
    """Conjugation average: automorphisms map to ``(1/N_[t(g)]) sum_h h o g o h^-1``
    over the ``N_[t(g)]`` morphisms ``h`` into ``t(g)``; non-automorphisms to zero.

    Summed over conjugators (with multiplicity), this is the class sum of
    ``g`` rescaled by the class size -- the normalisation that actually makes
    the map idempotent.
    """
    n = gd.num_morphisms
    m = Matrix.zeros(field, n, n)
    for g in range(n):
        if gd.source[g] != gd.target[g]:
            continue
        w = field.inv(field.of_int(gd.star_size(gd.target[g])))
        for h in range(n):
            if gd.target[h] == gd.target[g]:
                conj = gd.compose_table[gd.compose_table[h][g]][gd.inverse[h]]
                m.data[conj][g] = field.add(m.data[conj][g], w)
    return m


# -- D-brane coloured evaluation ---------------------------------------------------------


def _interval_blocks(model: BlockModel, c: OpenClosedComplex, colour_of_arc, components):
    """Block index lists for each black interval, from adjacent arc colours."""
    arcs = c.coloured_arcs()
    arc_of_vertex = {}
    for ai, arc in enumerate(arcs):
        for e in arc:
            arc_of_vertex.setdefault(e[0], set()).add(ai)
            arc_of_vertex.setdefault(e[1], set()).add(ai)
    out = []
    for comp in components:
        if comp.kind != "interval":
            out.append(None)
            continue
        seq = comp.vertices()
        first, last = seq[0], seq[-1]
        cols = []
        for v in (first, last):
            ais = arc_of_vertex.get(v, set())
            vcols = {colour_of_arc[ai] for ai in ais if ai in colour_of_arc}
            if len(vcols) > 1:
                raise IncompatibleColoursError(f"corner {v} meets arcs of different colours")
            cols.append(next(iter(vcols)) if vcols else None)
        if cols[0] is None and cols[1] is None:
            out.append(None)
        elif cols[0] is None or cols[1] is None:
            raise IncompatibleColoursError("interval has one coloured and one uncoloured side")
        else:
            # interval legs live on Hom(first-endpoint colour, last-endpoint colour)
            out.append(tuple(model.block(cols[0], cols[1])))
    return out


def colored_evaluate(model: BlockModel, F: FrobeniusStructure,
                     c: OpenClosedComplex) -> Morphism:
    """State sum with D-brane colours: coloured arcs contribute their object
    idempotent instead of the unit, and every black interval leg is restricted
    to the block its adjacent colours select.

    Uncoloured arcs keep the unit; a fully uncoloured complex reproduces
    ``state_sum`` exactly.
    """
    colour_of_arc = c.arc_colours()
    arcs = c.coloured_arcs()
    for ai, col in colour_of_arc.items():
        if ai >= len(arcs):
            raise MissingColourError(f"colour assigned to nonexistent arc {ai}")
        if col not in model.object_idempotents:
            raise MissingColourError(f"colour {col!r} is not an object of the model")
    overrides = {}
    for ai, col in colour_of_arc.items():
        for e in arcs[ai]:
            overrides[e] = model.object_idempotents[col]

    z = state_sum(F, c, coloured_elements=overrides)
    in_blocks = _interval_blocks(model, c, colour_of_arc, c.black_in)
    out_blocks = _interval_blocks(model, c, colour_of_arc, c.black_out)
    if all(b is None for b in in_blocks + out_blocks):
        return z
    return _restrict(z, in_blocks, out_blocks)


def _restrict(z: Morphism, in_blocks, out_blocks) -> Morphism:
    def leg_ranges(signature, blocks):
        ranges = []
        factors = []
        for fac, blk in zip(signature, blocks):
            if blk is None:
                ranges.append(range(fac.dim))
                factors.append(fac)
            else:
                ranges.append(list(blk))
                factors.append(Factor("block", len(blk)))
        return ranges, tuple(factors)

    in_ranges, dom = leg_ranges(z.domain, in_blocks)
    out_ranges, cod = leg_ranges(z.codomain, out_blocks)

    def flat_indices(signature, ranges):
        dims = [f.dim for f in signature]
        strides = [1] * len(dims)
        for i in range(len(dims) - 2, -1, -1):
            strides[i] = strides[i + 1] * dims[i + 1]
        out = []
        for combo in iproduct(*ranges) if ranges else [()]:
            out.append(sum(s * v for s, v in zip(strides, combo)))
        return out

    rows = flat_indices(z.codomain, out_ranges)
    cols = flat_indices(z.domain, in_ranges)
    m = Matrix(
        z.field, len(rows), len(cols),
        [[z.matrix.data[r][cc] for cc in cols] for r in rows],
    )
    return Morphism(z.field, dom, cod, m)
