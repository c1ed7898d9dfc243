"""Sparse exact tensors and deterministic greedy contraction.

Tensors carry named legs; contraction matches leg names, so the permutation
bookkeeping of a tensor network never becomes an explicit matrix.  Data is a
dict from index tuples to nonzero field values: the structure tensors of the
state sum (the trilinear form, the inverse pairing, units) are very sparse
and stay sparse under contraction, which is what keeps exact evaluation at
dimension ~15 affordable.

The pair-selection rule is greedy on the *dense* size of the resulting
tensor (ties broken by the smallest shared leg, then creation order), which
is deterministic; any order yields the same result by multilinearity, and a
seeded shuffled order is available to test exactly that.
"""

from __future__ import annotations

from .linalg import Matrix


class Tensor:
    __slots__ = ("field", "legs", "dims", "data")

    def __init__(self, field, legs, dims, data):
        self.field = field
        self.legs = tuple(legs)
        self.dims = tuple(dims)
        self.data = data  # dict: index tuple -> nonzero value

    @classmethod
    def from_matrix_sparse(cls, field, legs, dims, matrix: Matrix):
        data = {}
        for i, row in enumerate(matrix.data):
            for j, v in enumerate(row):
                if v != 0:
                    data[(i, j)] = v
        return cls(field, legs, dims, data)

    @classmethod
    def vector(cls, field, leg, dim, coeffs):
        return cls(field, (leg,), (dim,), {(i,): v for i, v in enumerate(coeffs) if v != 0})

    def dense_size(self) -> int:
        s = 1
        for d in self.dims:
            s *= d
        return s

    def scalar(self):
        if self.legs:
            raise ValueError("tensor still has open legs")
        return self.data.get((), self.field.zero())

    def with_leg_order(self, new_legs) -> "Tensor":
        new_legs = tuple(new_legs)
        if new_legs == self.legs:
            return self
        perm = [self.legs.index(l) for l in new_legs]
        dims = tuple(self.dims[p] for p in perm)
        data = {tuple(idx[p] for p in perm): v for idx, v in self.data.items()}
        return Tensor(self.field, new_legs, dims, data)

    def apply_matrix(self, leg, matrix: Matrix, transpose: bool = False) -> "Tensor":
        """Act with a matrix on one leg: ``T'[.. j ..] = sum_i M[j][i] T[.. i ..]``.

        With ``transpose=True`` the sum runs over the row index instead, which
        is the correct action when pre-composing on an input leg.
        """
        pos = self.legs.index(leg)
        cols = {}
        for r, row in enumerate(matrix.data):
            for c, v in enumerate(row):
                if v != 0:
                    if transpose:
                        cols.setdefault(r, []).append((c, v))
                    else:
                        cols.setdefault(c, []).append((r, v))
        new_dim = matrix.cols if transpose else matrix.rows
        p = self.field.p
        acc = {}
        for idx, v in self.data.items():
            hits = cols.get(idx[pos])
            if not hits:
                continue
            for out_i, m in hits:
                key = idx[:pos] + (out_i,) + idx[pos + 1:]
                prev = acc.get(key)
                val = v * m if prev is None else prev + v * m
                acc[key] = val if p is None else val % p
        data = {k: v for k, v in acc.items() if v != 0}
        dims = self.dims[:pos] + (new_dim,) + self.dims[pos + 1:]
        return Tensor(self.field, self.legs, dims, data)

    def contract_group(self, group_legs, matrix: Matrix, new_leg, codomain: bool) -> "Tensor":
        """Replace an ordered leg group by a single leg through a matrix.

        ``codomain=False``: ``matrix`` maps the new space into the group
        (shape ``prod(group dims) x d``); the group legs are summed against
        matrix rows.  ``codomain=True``: ``matrix`` maps the group onto the
        new space (shape ``d x prod(group dims)``), summed against columns.
        """
        positions = [self.legs.index(l) for l in group_legs]
        gdims = [self.dims[p] for p in positions]
        strides = [1] * len(gdims)
        for i in range(len(gdims) - 2, -1, -1):
            strides[i] = strides[i + 1] * gdims[i + 1]
        lookup = {}
        if codomain:
            new_dim = matrix.rows
            for r, row in enumerate(matrix.data):
                for flat, v in enumerate(row):
                    if v != 0:
                        lookup.setdefault(flat, []).append((r, v))
        else:
            new_dim = matrix.cols
            for flat, row in enumerate(matrix.data):
                for c, v in enumerate(row):
                    if v != 0:
                        lookup.setdefault(flat, []).append((c, v))
        posset = set(positions)
        keep = [i for i in range(len(self.legs)) if i not in posset]
        p = self.field.p
        acc = {}
        for idx, v in self.data.items():
            flat = 0
            for s, pos in zip(strides, positions):
                flat += s * idx[pos]
            hits = lookup.get(flat)
            if not hits:
                continue
            base = tuple(idx[i] for i in keep)
            for out_i, m in hits:
                key = base + (out_i,)
                prev = acc.get(key)
                val = v * m if prev is None else prev + v * m
                acc[key] = val if p is None else val % p
        data = {k: v for k, v in acc.items() if v != 0}
        legs = tuple(self.legs[i] for i in keep) + (new_leg,)
        dims = tuple(self.dims[i] for i in keep) + (new_dim,)
        return Tensor(self.field, legs, dims, data)

    def scale(self, value) -> "Tensor":
        f = self.field
        data = {k: f.mul(v, value) for k, v in self.data.items()}
        return Tensor(f, self.legs, self.dims, {k: v for k, v in data.items() if v != 0})

    def to_matrix(self, row_legs, col_legs) -> Matrix:
        t = self.with_leg_order(tuple(row_legs) + tuple(col_legs))
        nrow_legs = len(row_legs)
        rdims = t.dims[:nrow_legs]
        cdims = t.dims[nrow_legs:]
        rn = 1
        for d in rdims:
            rn *= d
        cn = 1
        for d in cdims:
            cn *= d
        m = Matrix.zeros(self.field, rn, cn)
        rstr = _strides(rdims)
        cstr = _strides(cdims)
        for idx, v in t.data.items():
            r = sum(s * i for s, i in zip(rstr, idx[:nrow_legs]))
            c = sum(s * i for s, i in zip(cstr, idx[nrow_legs:]))
            m.data[r][c] = v
        return m

    def __repr__(self):
        return f"Tensor(legs={list(self.legs)}, nnz={len(self.data)})"


def _strides(dims):
    s = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        s[i] = s[i + 1] * dims[i + 1]
    return s


def contract_pair(t1: Tensor, t2: Tensor) -> Tensor:
    """Contract all legs shared by name between two tensors."""
    legs2 = set(t2.legs)
    shared = [l for l in t1.legs if l in legs2]
    sset = set(shared)
    keep1 = [i for i, l in enumerate(t1.legs) if l not in sset]
    spos1 = [t1.legs.index(l) for l in shared]
    keep2 = [i for i, l in enumerate(t2.legs) if l not in sset]
    spos2 = [t2.legs.index(l) for l in shared]

    buckets = {}
    for idx, v in t2.data.items():
        key = tuple(idx[p] for p in spos2)
        buckets.setdefault(key, []).append((tuple(idx[i] for i in keep2), v))

    p = t1.field.p
    acc = {}
    for idx, v in t1.data.items():
        key = tuple(idx[p_] for p_ in spos1)
        hits = buckets.get(key)
        if not hits:
            continue
        base = tuple(idx[i] for i in keep1)
        for free2, v2 in hits:
            out = base + free2
            prev = acc.get(out)
            val = v * v2 if prev is None else prev + v * v2
            acc[out] = val if p is None else val % p
    data = {k: v for k, v in acc.items() if v != 0}
    legs = tuple(t1.legs[i] for i in keep1) + tuple(t2.legs[i] for i in keep2)
    dims = tuple(t1.dims[i] for i in keep1) + tuple(t2.dims[i] for i in keep2)
    return Tensor(t1.field, legs, dims, data)


def _pair_cost(t1, t2):
    shared = set(t1.legs) & set(t2.legs)
    size = 1
    for l, d in zip(t1.legs, t1.dims):
        if l not in shared:
            size *= d
    for l, d in zip(t2.legs, t2.dims):
        if l not in shared:
            size *= d
    min_shared = min(shared) if shared else min(t1.legs + t2.legs) if (t1.legs or t2.legs) else None
    return size, min_shared


def greedy_contract(tensors, shuffle_rng=None) -> Tensor:
    """Contract a list of tensors down to one.

    Default order: repeatedly contract the connected pair whose result has
    the smallest dense size (ties by smallest shared leg id, then insertion
    order); disconnected remainders are combined smallest-first.  If
    ``shuffle_rng`` is given, candidate pairs are drawn at random instead --
    used to assert order independence.
    """
    items = {}
    for i, t in enumerate(tensors):
        items[i] = t
    next_id = len(tensors)

    leg_holders = {}
    for tid, t in items.items():
        for l in t.legs:
            leg_holders.setdefault(l, set()).add(tid)

    def candidate_pairs():
        pairs = set()
        for l, holders in leg_holders.items():
            if len(holders) == 2:
                a, b = sorted(holders)
                pairs.add((a, b))
        return pairs

    while len(items) > 1:
        pairs = candidate_pairs()
        if pairs:
            if shuffle_rng is not None:
                a, b = sorted(pairs)[shuffle_rng.randrange(len(pairs))]
            else:
                def rank(pair):
                    size, min_shared = _pair_cost(items[pair[0]], items[pair[1]])
                    return (size, min_shared, pair)
                a, b = min(pairs, key=rank)
        else:
            order = sorted(items, key=lambda tid: (items[tid].dense_size(), tid))
            a, b = order[0], order[1]
        merged = contract_pair(items[a], items[b])
        for tid in (a, b):
            for l in items[tid].legs:
                holders = leg_holders.get(l)
                if holders:
                    holders.discard(tid)
                    if not holders:
                        del leg_holders[l]
            del items[tid]
        items[next_id] = merged
        for l in merged.legs:
            leg_holders.setdefault(l, set()).add(next_id)
        next_id += 1
    return items.popitem()[1]
