"""The state sum: dual tensor network of a triangulation and its evaluations.

``state_sum_raw`` realises the triangulation-level morphism: one copy of the
trilinear form per triangle (legs in the cyclic order of the stored
orientation), one inverse pairing per interior edge, one inverse pairing with
a free leg per black out-edge, a unit (or a D-brane idempotent) per coloured
edge, one open leg per black in-edge, and one factor of the inverse window
element per interior vertex and per non-corner vertex of the black
out-boundary.  Because the inverse window element is central, that factor may
be applied anywhere in each connected component; the placement here is
deterministic and a test asserts it is immaterial.

``state_sum_reduced`` compresses every black component through the splitting
of its boundary projector, and ``state_sum`` further conjugates with the
boundary isomorphisms, producing the triangulation-independent morphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .complexes import OpenClosedComplex, ekey
from .errors import HasBlackBoundaryError
from .frobenius import FrobeniusStructure
from .morphism import Morphism, full_factor, split_factor
from .tensors import Tensor, greedy_contract


def _gstar_sparse(F: FrobeniusStructure):
    if "gstar_sparse" not in F._cache:
        d = {}
        for i, row in enumerate(F.pairing_inverse.data):
            for j, v in enumerate(row):
                if v != 0:
                    d[(i, j)] = v
        F._cache["gstar_sparse"] = d
    return F._cache["gstar_sparse"]


@dataclass
class DualNetwork:
    field: object
    tensors: list
    in_legs: list       # open input legs in global component order
    out_legs: list      # open output legs in global component order
    in_components: list  # (kind, [leg ids]) per black_in component
    out_components: list
    exponents: dict = dataclass_field(default_factory=dict)  # component root -> a^-k power


def build_dual_network(F: FrobeniusStructure, c: OpenClosedComplex,
                       coloured_elements=None, carrier_choice=None) -> DualNetwork:
    """Assemble the tensor network dual to a validated triangulation.

    ``coloured_elements`` optionally maps coloured edge keys to algebra
    elements that replace the unit (D-brane colouring).  ``carrier_choice``
    overrides which tensor absorbs the inverse-window factors (testing hook);
    it maps component roots to indices into the tensor list.
    """
    c.require_valid()
    alg = F.algebra
    n = alg.dim
    g3 = F.trilinear()
    gstar = _gstar_sparse(F)
    coloured_elements = coloured_elements or {}

    in_leg_of_edge = {}
    in_components = []
    for ci, comp in enumerate(c.black_in):
        legs = []
        for pos, e in enumerate(comp.edge_keys()):
            leg = ("in", ci, pos, 0)
            in_leg_of_edge[e] = leg
            legs.append(leg)
        in_components.append((comp.kind, legs))
    out_leg_of_edge = {}
    out_components = []
    for ci, comp in enumerate(c.black_out):
        legs = []
        for pos, e in enumerate(comp.edge_keys()):
            leg = ("out", ci, pos, 0)
            out_leg_of_edge[e] = leg
            legs.append(leg)
        out_components.append((comp.kind, legs))

    interior = set(c.interior_edges())
    tensors = []
    tensor_component = []  # vertex-root of the component each tensor belongs to
    roots = c.vertex_components()

    slot_used = {}

    def edge_slot_leg(u, v):
        e = ekey(u, v)
        if e in in_leg_of_edge:
            return in_leg_of_edge[e]
        s = slot_used.get(e, 0)
        slot_used[e] = s + 1
        return ("e", e[0], e[1], s)

    for (a, b, cc) in c.triangles:
        legs = [edge_slot_leg(a, b), edge_slot_leg(b, cc), edge_slot_leg(cc, a)]
        tensors.append(Tensor(F.field, legs, (n, n, n), g3))
        tensor_component.append(roots[a])

    for e in sorted(interior):
        legs = (("e", e[0], e[1], 0), ("e", e[0], e[1], 1))
        tensors.append(Tensor(F.field, legs, (n, n), gstar))
        tensor_component.append(roots[e[0]])
    for e, leg in sorted(out_leg_of_edge.items()):
        legs = (("e", e[0], e[1], 0), leg)
        tensors.append(Tensor(F.field, legs, (n, n), gstar))
        tensor_component.append(roots[e[0]])
    for e in sorted(c.coloured_edges):
        elem = coloured_elements.get(e)
        coeffs = elem.coeffs if elem is not None else alg.unit
        tensors.append(Tensor.vector(F.field, ("e", e[0], e[1], 0), n, coeffs))
        tensor_component.append(roots[e[0]])

    # inverse-window exponent per connected component
    boundary_vs = c.boundary_vertex_set()
    corners = c.corner_vertices()
    out_vs = set()
    for comp in c.black_out:
        for e in comp.edge_keys():
            out_vs.update(e)
    exponents = {}
    for v in range(c.vertex_count):
        k = 0
        if v not in boundary_vs:
            k = 1
        elif v in out_vs and v not in corners:
            k = 1
        if k:
            exponents[roots[v]] = exponents.get(roots[v], 0) + 1

    net = DualNetwork(F.field, tensors, [l for (_, legs) in in_components for l in legs],
                      [l for (_, legs) in out_components for l in legs],
                      in_components, out_components, exponents)
    _apply_window_factors(F, net, tensor_component, carrier_choice)
    return net


def _apply_window_factors(F, net, tensor_component, carrier_choice=None):
    """Multiply each component's ``a^{-k}`` into one deterministic carrier tensor."""
    for root, k in sorted(net.exponents.items()):
        m = F.window_power_matrix(-k)
        member_ids = [i for i, r in enumerate(tensor_component) if r == root]
        if carrier_choice and root in carrier_choice:
            tid = carrier_choice[root]
            t = net.tensors[tid]
            leg = min(t.legs)
            transpose = leg[0] == "in"
            net.tensors[tid] = t.apply_matrix(leg, m, transpose=transpose)
            continue
        open_legs = sorted(
            (leg, i) for i in member_ids for leg in net.tensors[i].legs
            if leg[0] in ("in", "out")
        )
        if open_legs:
            leg, tid = open_legs[0]
            net.tensors[tid] = net.tensors[tid].apply_matrix(leg, m, transpose=(leg[0] == "in"))
        else:
            conn = sorted(
                (t.legs, i) for i, t in ((j, net.tensors[j]) for j in member_ids)
                if len(t.legs) == 2 and t.legs[0][0] == "e" and t.legs[1][0] == "e"
            )
            legs, tid = conn[0]
            net.tensors[tid] = net.tensors[tid].apply_matrix(legs[0], m)


def contract_network(net: DualNetwork, shuffle_rng=None) -> Tensor:
    return greedy_contract(net.tensors, shuffle_rng=shuffle_rng)


# -- the three evaluation levels -----------------------------------------------------


def _raw_tensor(F, c, coloured_elements=None, shuffle_rng=None, carrier_choice=None):
    net = build_dual_network(F, c, coloured_elements, carrier_choice)
    t = contract_network(net, shuffle_rng=shuffle_rng)
    return t.with_leg_order(tuple(net.out_legs) + tuple(net.in_legs)), net


def state_sum_raw(F: FrobeniusStructure, c: OpenClosedComplex,
                  coloured_elements=None) -> Morphism:
    """Triangulation-level morphism ``A^{m1} -> A^{m2}``, one leg per black edge."""
    t, net = _raw_tensor(F, c, coloured_elements)
    n = F.dim
    dom = tuple(full_factor(n) for _ in net.in_legs)
    cod = tuple(full_factor(n) for _ in net.out_legs)
    return Morphism(F.field, dom, cod, t.to_matrix(net.out_legs, net.in_legs))


def _compressor_tensor(field, matrix, legs, new_leg, dim, from_rows):
    """Tensor form of a leg-group (co)restriction, joined to the network so
    greedy contraction can compress boundary legs before they accumulate."""
    h = len(legs)
    data = {}
    if from_rows:  # matrix: n^h x d, indexed (flat group, new)
        for flat, row in enumerate(matrix.data):
            idx = []
            rem = flat
            for _ in range(h):
                idx.append(rem // dim ** (h - 1 - len(idx)) % dim)
            base = tuple(idx)
            for c, v in enumerate(row):
                if v != 0:
                    data[base + (c,)] = v
        new_dim = matrix.cols
    else:  # matrix: d x n^h, indexed (new, flat group)
        for r, row in enumerate(matrix.data):
            for flat, v in enumerate(row):
                if v == 0:
                    continue
                idx = []
                rem = flat
                for k in range(h - 1, -1, -1):
                    idx.append((rem // dim ** k) % dim)
                data[tuple(idx) + (r,)] = v
        new_dim = matrix.rows
    return Tensor(field, tuple(legs) + (new_leg,), (dim,) * h + (new_dim,), data)


def _reduced_tensor(F, c, coloured_elements=None):
    net = build_dual_network(F, c, coloured_elements)
    n = F.dim
    dom = []
    cod = []
    for ci, (kind, legs) in enumerate(net.in_components):
        h = len(legs)
        im, _ = (F.split_pkk(h) if kind == "interval" else F.split_qkk(h))
        net.tensors.append(_compressor_tensor(F.field, im, legs, ("rin", ci, 0, 0), n, True))
        dom.append(split_factor(im.cols))
    for ci, (kind, legs) in enumerate(net.out_components):
        h = len(legs)
        _, coim = (F.split_pkk(h) if kind == "interval" else F.split_qkk(h))
        net.tensors.append(_compressor_tensor(F.field, coim, legs, ("rout", ci, 0, 0), n, False))
        cod.append(split_factor(coim.rows))
    out_legs = [("rout", ci, 0, 0) for ci in range(len(net.out_components))]
    in_legs = [("rin", ci, 0, 0) for ci in range(len(net.in_components))]
    t = contract_network(net).with_leg_order(tuple(out_legs) + tuple(in_legs))
    return t, net, tuple(dom), tuple(cod), out_legs, in_legs


def state_sum_reduced(F: FrobeniusStructure, c: OpenClosedComplex,
                      coloured_elements=None) -> Morphism:
    """State sum compressed through the boundary projectors' splittings."""
    t, _, dom, cod, out_legs, in_legs = _reduced_tensor(F, c, coloured_elements)
    return Morphism(F.field, dom, cod, t.to_matrix(out_legs, in_legs))


def state_sum(F: FrobeniusStructure, c: OpenClosedComplex,
              coloured_elements=None) -> Morphism:
    """The triangulation-independent morphism of the underlying cobordism.

    Interval legs land on the full algebra ``A``; circle legs on the split
    closed space ``C = p(A)``.
    """
    t, net, _, _, out_legs, in_legs = _reduced_tensor(F, c, coloured_elements)
    dom = []
    cod = []
    for ci, (kind, legs) in enumerate(net.in_components):
        h = len(legs)
        if kind == "interval":
            xi, _ = F.phi_matrices(h)
            dom.append(full_factor(F.dim))
        else:
            xi, _ = F.circle_boundary_matrices(h)
            dom.append(split_factor(xi.cols))
        t = t.apply_matrix(("rin", ci, 0, 0), xi, transpose=True)
    for ci, (kind, legs) in enumerate(net.out_components):
        h = len(legs)
        if kind == "interval":
            _, xi_inv = F.phi_matrices(h)
            cod.append(full_factor(F.dim))
        else:
            _, xi_inv = F.circle_boundary_matrices(h)
            cod.append(split_factor(xi_inv.rows))
        t = t.apply_matrix(("rout", ci, 0, 0), xi_inv)
    return Morphism(F.field, tuple(dom), tuple(cod), t.to_matrix(out_legs, in_legs))


def evaluate_closed(F: FrobeniusStructure, c: OpenClosedComplex):
    """Scalar invariant of a closed (no black boundary) complex."""
    if c.black_in or c.black_out:
        raise HasBlackBoundaryError("complex has black boundary; use state_sum")
    t, _ = _raw_tensor(F, c)
    return t.scalar()
