"""Symmetric Frobenius structures on strongly separable algebras.

A structure is keyed by its counit vector; the pairing ``g = eps o mu``, its
inverse, the comultiplication, and the window element are all derived at
construction time, so validation errors surface immediately and later
operations are table lookups.

The window element ``a = mu o Delta o eta`` is central, and its invertibility
is equivalent to strong separability.  Everything downstream (the canonical
central idempotent ``p``, the split closed-string space ``C = p(A)``, the
boundary projector families ``P_kl``/``Q_kl`` and the isomorphisms that
normalise boundary triangulations) assumes an invertible window, so the
constructor insists on one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, Element
from .errors import (
    ArityError,
    DegeneratePairingError,
    NotCentralError,
    NotIdempotentError,
    NotInvertibleError,
    NotStronglySeparableError,
    NotSymmetricError,
    StateSumError,
    WindowNotInvertibleError,
)
from .linalg import Matrix
from .morphism import Morphism, full_factor, split_factor


def swap_matrix(field, n: int) -> Matrix:
    """Matrix of the flip ``x (x) y -> y (x) x`` on an n-dim factor pair."""
    m = Matrix.zeros(field, n * n, n * n)
    one = field.one()
    for i in range(n):
        for j in range(n):
            m.data[j * n + i][i * n + j] = one
    return m


class FrobeniusStructure:
    """A symmetric Frobenius algebra with invertible window element."""

    __slots__ = ("algebra", "counit", "pairing", "pairing_inverse", "comul",
                 "window", "window_inverse", "_cache")

    def __init__(self, algebra: Algebra, counit):
        f = algebra.field
        n = algebra.dim
        counit = tuple(counit)
        if len(counit) != n:
            raise ValueError("counit vector has wrong length")
        self.algebra = algebra
        self.counit = counit

        g = Matrix.zeros(f, n, n)
        for i in range(n):
            for j in range(n):
                acc = f.zero()
                for k, c in algebra.mul_row(i, j):
                    acc = f.add(acc, f.mul(c, counit[k]))
                g.data[i][j] = acc
        if not g.is_symmetric():
            raise NotSymmetricError("eps o mu is not a symmetric form")
        if g.rank() < n:
            raise DegeneratePairingError("eps o mu is degenerate")
        self.pairing = g
        self.pairing_inverse = g.inverse()

        # Delta(e_i) = sum_{a,b} g*[a][b] (e_i e_a) (x) e_b
        gstar = self.pairing_inverse
        comul = []
        for i in range(n):
            rows = {}
            for a in range(n):
                for j, c in algebra.mul_row(i, a):
                    grow = gstar.data[a]
                    for b in range(n):
                        if grow[b] == 0:
                            continue
                        key = (j, b)
                        val = f.add(rows.get(key, f.zero()), f.mul(c, grow[b]))
                        if val == 0:
                            rows.pop(key, None)
                        else:
                            rows[key] = val
            comul.append(tuple(sorted((j, b, v) for (j, b), v in rows.items())))
        self.comul = tuple(comul)

        self._verify_coalgebra_laws()

        # window = mu o Delta o eta
        wvec = [f.zero()] * n
        for a in range(n):
            grow = gstar.data[a]
            for b in range(n):
                if grow[b] == 0:
                    continue
                for k, c in algebra.mul_row(a, b):
                    wvec[k] = f.add(wvec[k], f.mul(grow[b], c))
        window = Element(algebra, wvec)
        if not window.is_central():
            raise StateSumError("window element failed centrality check")
        inv = window.inverse()
        if inv is None:
            raise WindowNotInvertibleError(
                "window element is not invertible; the algebra is not strongly separable"
            )
        self.window = window
        self.window_inverse = inv
        self._cache = {}

    # -- construction-time law checks ---------------------------------------

    def _verify_coalgebra_laws(self):
        alg = self.algebra
        f = alg.field
        n = alg.dim
        eps = self.counit
        for i in range(n):
            left = [f.zero()] * n
            right = [f.zero()] * n
            for (j, b, v) in self.comul[i]:
                left[b] = f.add(left[b], f.mul(eps[j], v))
                right[j] = f.add(right[j], f.mul(v, eps[b]))
            expect = [f.one() if t == i else f.zero() for t in range(n)]
            if left != expect or right != expect:
                raise StateSumError(f"counit law fails on basis element {i}")
        # coassociativity and the Frobenius relation hold by construction of
        # Delta from a symmetric invariant nondegenerate pairing; spot-check
        # the Frobenius relation on basis pairs anyway.
        for i in range(n):
            for j in range(n):
                lhs = {}
                for k, c in alg.mul_row(i, j):
                    for (a, b, v) in self.comul[k]:
                        key = (a, b)
                        lhs[key] = f.add(lhs.get(key, f.zero()), f.mul(c, v))
                rhs = {}
                for (a, b, v) in self.comul[i]:
                    for m, c in alg.mul_row(b, j):
                        key = (a, m)
                        rhs[key] = f.add(rhs.get(key, f.zero()), f.mul(v, c))
                lhs = {k: v for k, v in lhs.items() if v != 0}
                rhs = {k: v for k, v in rhs.items() if v != 0}
                if lhs != rhs:
                    raise StateSumError(f"Frobenius relation fails on basis pair ({i},{j})")

    # -- basic derived matrices ----------------------------------------------

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    def mu_matrix(self) -> Matrix:
        """Multiplication as an ``n x n^2`` matrix (columns indexed i*n+j)."""
        if "mu2" not in self._cache:
            alg = self.algebra
            n = alg.dim
            m = Matrix.zeros(alg.field, n, n * n)
            for i in range(n):
                for j in range(n):
                    for k, c in alg.mul_row(i, j):
                        m.data[k][i * n + j] = c
            self._cache["mu2"] = m
        return self._cache["mu2"]

    def delta_matrix(self) -> Matrix:
        """Comultiplication as an ``n^2 x n`` matrix (rows indexed j*n+k)."""
        if "delta2" not in self._cache:
            n = self.dim
            m = Matrix.zeros(self.field, n * n, n)
            for i in range(n):
                for (j, b, v) in self.comul[i]:
                    m.data[j * n + b][i] = v
            self._cache["delta2"] = m
        return self._cache["delta2"]

    def eps_matrix(self) -> Matrix:
        return Matrix(self.field, 1, self.dim, [list(self.counit)])

    def eta_matrix(self) -> Matrix:
        return Matrix.column_vector(self.field, list(self.algebra.unit))

    def swap(self) -> Matrix:
        if "swap" not in self._cache:
            self._cache["swap"] = swap_matrix(self.field, self.dim)
        return self._cache["swap"]

    def left_mul_matrix(self, elem: Element) -> Matrix:
        return self.algebra.left_regular_matrix(elem)

    def window_power_matrix(self, k: int) -> Matrix:
        """Matrix of the central action ``a^k . id`` (negative powers allowed)."""
        key = ("apow", k)
        if key not in self._cache:
            base = self.window if k >= 0 else self.window_inverse
            m = Matrix.identity(self.field, self.dim)
            lb = self.left_mul_matrix(base)
            for _ in range(abs(k)):
                m = lb @ m
            self._cache[key] = m
        return self._cache[key]

    def is_special(self) -> bool:
        """Window element equal to an invertible scalar multiple of the unit."""
        f = self.field
        w, u = self.window.coeffs, self.algebra.unit
        zeta = None
        for wi, ui in zip(w, u):
            if ui == 0:
                if wi != 0:
                    return False
                continue
            cand = f.div(wi, ui)
            if zeta is None:
                zeta = cand
            elif cand != zeta:
                return False
        return zeta is not None and zeta != 0

    # -- trilinear form -------------------------------------------------------

    def trilinear(self) -> dict:
        """Sparse ``g3[(i,j,k)] = eps(e_i e_j e_k)``; cyclically invariant."""
        if "g3" not in self._cache:
            alg = self.algebra
            f = alg.field
            g = self.pairing
            out = {}
            for i in range(alg.dim):
                for j in range(alg.dim):
                    row = alg.mul_row(i, j)
                    if not row:
                        continue
                    for k in range(alg.dim):
                        acc = f.zero()
                        for m, c in row:
                            acc = f.add(acc, f.mul(c, g.data[m][k]))
                        if acc != 0:
                            out[(i, j, k)] = acc
            self._cache["g3"] = out
        return self._cache["g3"]

    # -- the canonical central idempotent --------------------------------------

    def idempotent_matrix(self) -> Matrix:
        """Matrix of ``p = (a^{-1} . id) o mu o tau o Delta``."""
        if "p" not in self._cache:
            alg = self.algebra
            f = alg.field
            n = alg.dim
            m = Matrix.zeros(f, n, n)
            for i in range(n):
                col = [f.zero()] * n
                for (j, b, v) in self.comul[i]:
                    for k, c in alg.mul_row(b, j):  # tau before mu
                        col[k] = f.add(col[k], f.mul(v, c))
                for r, val in enumerate(self.left_mul_matrix(self.window_inverse).mul_vec(col)):
                    m.data[r][i] = val
            pp = m @ m
            if pp != m:
                raise StateSumError("canonical idempotent failed p^2 = p")
            self._cache["p"] = m
        return self._cache["p"]

    def split_p(self):
        if "split_p" not in self._cache:
            self._cache["split_p"] = split_idempotent(self.idempotent_matrix())
        return self._cache["split_p"]

    # -- iterated (co)multiplication and the P/Q families ----------------------

    def iterated_mu_matrix(self, arity: int) -> Matrix:
        if arity < 1:
            raise ArityError("iterated multiplication needs arity >= 1")
        key = ("mu", arity)
        if key not in self._cache:
            if arity == 1:
                m = Matrix.identity(self.field, self.dim)
            else:
                prev = self.iterated_mu_matrix(arity - 1)
                m = self.mu_matrix() @ prev.kron(Matrix.identity(self.field, self.dim))
            self._cache[key] = m
        return self._cache[key]

    def iterated_delta_matrix(self, arity: int) -> Matrix:
        if arity < 1:
            raise ArityError("iterated comultiplication needs arity >= 1")
        key = ("delta", arity)
        if key not in self._cache:
            if arity == 1:
                m = Matrix.identity(self.field, self.dim)
            else:
                prev = self.iterated_delta_matrix(arity - 1)
                m = prev.kron(Matrix.identity(self.field, self.dim)) @ self.delta_matrix()
            self._cache[key] = m
        return self._cache[key]

    def p_matrix(self, k: int, l: int) -> Matrix:
        """``P_kl = Delta^(k) o (a^{-(k-1)} . id) o mu^(l)`` as a matrix."""
        key = ("P", k, l)
        if key not in self._cache:
            self._cache[key] = (
                self.iterated_delta_matrix(k)
                @ self.window_power_matrix(-(k - 1))
                @ self.iterated_mu_matrix(l)
            )
        return self._cache[key]

    def q_matrix(self, k: int, l: int) -> Matrix:
        key = ("Q", k, l)
        if key not in self._cache:
            self._cache[key] = (
                self.iterated_delta_matrix(k)
                @ self.window_power_matrix(-(k - 1))
                @ self.idempotent_matrix()
                @ self.iterated_mu_matrix(l)
            )
        return self._cache[key]

    def split_pkk(self, k: int):
        key = ("splitP", k)
        if key not in self._cache:
            self._cache[key] = split_idempotent(self.p_matrix(k, k))
        return self._cache[key]

    def split_qkk(self, k: int):
        key = ("splitQ", k)
        if key not in self._cache:
            self._cache[key] = split_idempotent(self.q_matrix(k, k))
        return self._cache[key]

    def phi_matrices(self, k: int):
        """Iso ``A -> P_kk(A^k)`` and its inverse, as matrices."""
        key = ("phi", k)
        if key not in self._cache:
            im, coim = self.split_pkk(k)
            phi = coim @ self.p_matrix(k, 1)
            phi_inv = self.p_matrix(1, k) @ im
            self._cache[key] = (phi, phi_inv)
        return self._cache[key]

    def psi_matrices(self, k: int):
        """Iso ``p(A) -> Q_kk(A^k)`` and its inverse, as matrices."""
        key = ("psi", k)
        if key not in self._cache:
            im_q, coim_q = self.split_qkk(k)
            im_p, coim_p = self.split_p()
            psi = coim_q @ self.q_matrix(k, 1) @ im_p
            psi_inv = coim_p @ self.q_matrix(1, k) @ im_q
            self._cache[key] = (psi, psi_inv)
        return self._cache[key]

    def closed_window_matrix(self, power: int):
        """Multiplication by ``a^power`` on the split closed space ``p(A)``."""
        key = ("aC", power)
        if key not in self._cache:
            im_p, coim_p = self.split_p()
            self._cache[key] = coim_p @ self.window_power_matrix(power) @ im_p
        return self._cache[key]

    def circle_boundary_matrices(self, k: int):
        """The circle-leg isomorphisms actually used by the full state sum.

        These are the psi isomorphisms corrected by one central window factor
        on the closed space: the correction makes the evaluated generators
        land exactly on the knowledgeable Frobenius algebra obtained from the
        idempotent splitting, rather than on its transport along
        multiplication by the window element.
        """
        key = ("circle_iso", k)
        if key not in self._cache:
            psi, psi_inv = self.psi_matrices(k)
            self._cache[key] = (
                psi @ self.closed_window_matrix(-1),
                self.closed_window_matrix(1) @ psi_inv,
            )
        return self._cache[key]

    def knowledgeable(self) -> "KnowledgeableFrobenius":
        if "knowledgeable" not in self._cache:
            self._cache["knowledgeable"] = knowledgeable_from_frobenius(self)
        return self._cache["knowledgeable"]

    def __repr__(self):
        return f"FrobeniusStructure(dim={self.dim} over {self.field})"


# -- constructors --------------------------------------------------------------


def frobenius_from_counit(algebra: Algebra, eps) -> FrobeniusStructure:
    """Symmetric Frobenius structure determined by a counit vector."""
    return FrobeniusStructure(algebra, eps)


def frobenius_from_window(algebra: Algebra, z: Element) -> FrobeniusStructure:
    """The unique symmetric Frobenius structure with window element ``z``.

    The counit is ``x -> trace(L_{z^{-1} x})``.  With ``z`` the unit this is
    the canonical structure whose pairing is the canonical bilinear form.
    """
    if not algebra.is_strongly_separable():
        raise NotStronglySeparableError("canonical bilinear form is degenerate")
    if z.algebra is not algebra:
        raise ValueError("window candidate lives in a different algebra")
    if not z.is_central():
        raise NotCentralError("window candidate is not central")
    zinv = z.inverse()
    if zinv is None:
        raise NotInvertibleError("window candidate is not invertible")
    f = algebra.field
    tv = algebra._traces()
    eps = []
    for k in range(algebra.dim):
        v = algebra.mul_vectors(zinv.coeffs, algebra.basis_element(k).coeffs)
        eps.append(sum_product(f, v, tv))
    return FrobeniusStructure(algebra, eps)


def canonical_frobenius(algebra: Algebra) -> FrobeniusStructure:
    return frobenius_from_window(algebra, algebra.unit_element())


def sum_product(field, xs, ys):
    acc = field.zero()
    for x, y in zip(xs, ys):
        if x != 0 and y != 0:
            acc = field.add(acc, field.mul(x, y))
    return acc


# -- free-function forms of the structure operations ------------------------------


def window_element(F: FrobeniusStructure) -> Element:
    """Recompute ``mu o Delta o eta`` directly (always central)."""
    alg = F.algebra
    f = alg.field
    n = alg.dim
    two = [f.zero()] * (n * n)
    for i, ui in enumerate(alg.unit):
        if ui == 0:
            continue
        for (j, b, v) in F.comul[i]:
            two[j * n + b] = f.add(two[j * n + b], f.mul(ui, v))
    out = [f.zero()] * n
    for j in range(n):
        for b in range(n):
            c = two[j * n + b]
            if c == 0:
                continue
            for k, cc in alg.mul_row(j, b):
                out[k] = f.add(out[k], f.mul(c, cc))
    return Element(alg, out)


def trilinear_form(F: FrobeniusStructure) -> dict:
    return dict(F.trilinear())


def central_idempotent_p(F: FrobeniusStructure) -> Matrix:
    return F.idempotent_matrix()


def split_idempotent(p: Matrix):
    """Split ``p = im o coim`` with ``coim o im = id`` on the image.

    The image basis is the pivot columns of ``rref(p)`` -- equivalently the
    leftmost maximal independent column set, found here by a greedy scan so
    that projectors with low rank but large ambient dimension (the boundary
    projectors on ``A^{(x)k}``) split in ``O(cols * rank * rows)`` time.
    """
    f = p.field
    nrows, ncols = p.rows, p.cols
    if nrows != ncols:
        raise NotIdempotentError("idempotent must be square")
    cols_sparse = [{} for _ in range(ncols)]
    for i, row in enumerate(p.data):
        for j, v in enumerate(row):
            if v != 0:
                cols_sparse[j][i] = v
    # echelon basis of selected columns: (lead row, normalized sparse vector,
    # representation of that vector over the selected original columns)
    basis = []
    selected = []
    coords = []  # per input column: dict selected-position -> coefficient
    for j in range(ncols):
        v = dict(cols_sparse[j])
        combo = {}
        for (lead, w, rep) in basis:
            c = v.get(lead)
            if not c:
                continue
            for idx, y in w.items():
                nv = f.sub(v.get(idx, 0), f.mul(c, y))
                if nv == 0:
                    v.pop(idx, None)
                else:
                    v[idx] = nv
            for pos, r in rep.items():
                combo[pos] = f.add(combo.get(pos, f.zero()), f.mul(c, r))
        if not v:
            coords.append(combo)
            continue
        lead = min(v)
        inv = f.inv(v[lead])
        w = {idx: f.mul(inv, x) for idx, x in v.items()}
        rep = {pos: f.neg(f.mul(inv, r)) for pos, r in combo.items()}
        pos = len(selected)
        rep[pos] = inv
        basis.append((lead, w, rep))
        selected.append(j)
        coords.append({pos: f.one()})
    rank = len(selected)
    im = Matrix(f, nrows, rank, [[p.data[i][c] for c in selected] for i in range(nrows)])
    coim = Matrix.zeros(f, rank, ncols)
    for j, combo in enumerate(coords):
        for pos, c in combo.items():
            coim.data[pos][j] = c
    # p fixes its column space pointwise iff p is idempotent
    if p @ im != im:
        raise NotIdempotentError("matrix is not idempotent")
    return im, coim


def idempotent_property_report(F: FrobeniusStructure):
    """Exact check of the defining properties of the canonical idempotent.

    Returns a list of ``(name, ok)`` pairs covering: idempotence, unit and
    counit compatibility, the four absorption identities, fixing of central
    elements, commuting with central multiplications, and centrality of the
    image.
    """
    f = F.field
    n = F.dim
    P = F.idempotent_matrix()
    I = Matrix.identity(f, n)
    MU = F.mu_matrix()
    DE = F.delta_matrix()
    TAU = F.swap()
    results = []

    results.append(("p squared equals p", P @ P == P))
    results.append(("p fixes the unit", P.mul_vec(list(F.algebra.unit)) == list(F.algebra.unit)))
    eps_row = F.eps_matrix()
    results.append(("counit absorbs p", eps_row @ P == eps_row))

    pp = P.kron(P)
    a1 = P @ MU @ pp
    a2 = MU @ pp
    a3 = P @ MU @ P.kron(I)
    a4 = P @ MU @ I.kron(P)
    results.append(("multiplication absorption", a1 == a2 and a2 == a3 and a3 == a4))

    b1 = pp @ DE @ P
    b2 = pp @ DE
    b3 = P.kron(I) @ DE @ P
    b4 = I.kron(P) @ DE @ P
    results.append(("comultiplication absorption", b1 == b2 and b2 == b3 and b3 == b4))

    centre = F.algebra.centre_basis()
    results.append(
        ("p fixes central elements",
         all(P.mul_vec(list(c.coeffs)) == list(c.coeffs) for c in centre))
    )
    results.append(
        ("p commutes with central multiplications",
         all(F.left_mul_matrix(c) @ P == P @ F.left_mul_matrix(c) for c in centre))
    )
    results.append(("image of p is central", MU @ P.kron(I) == MU @ TAU @ P.kron(I)))
    return results


@dataclass
class KnowledgeableFrobenius:
    """Open/closed pair ``(A, C, iota, iota_star)`` with its structure maps."""

    A: FrobeniusStructure
    C: FrobeniusStructure
    iota: Matrix       # C -> A, n x d
    iota_star: Matrix  # A -> C, d x n


def knowledgeable_from_frobenius(F: FrobeniusStructure) -> KnowledgeableFrobenius:
    """Split the canonical idempotent and transport the structure to ``C = p(A)``.

    ``mu_C = coim o mu_A o (im (x) im)``, ``eta_C = coim o eta_A``,
    ``Delta_C = (coim (x) coim) o Delta_A o (a . id) o im``,
    ``eps_C = eps_A o (a^{-1} . id) o im``, ``iota = im`` and
    ``iota_star = coim o (a . id)``.
    """
    f = F.field
    im, coim = F.split_p()
    d = im.cols
    la = F.window_power_matrix(1)
    lainv = F.window_power_matrix(-1)

    mu_c = coim @ F.mu_matrix() @ im.kron(im)
    eta_c = coim.mul_vec(list(F.algebra.unit))
    delta_c = coim.kron(coim) @ F.delta_matrix() @ la @ im
    eps_c = (F.eps_matrix() @ lainv @ im).row(0)

    entries = []
    for i in range(d):
        for j in range(d):
            for k in range(d):
                c = mu_c.data[k][i * d + j]
                if c != 0:
                    entries.append((i, j, k, c))
    c_names = [f"c{i}" for i in range(d)]
    c_alg = Algebra(f, d, entries, eta_c, basis_names=c_names, validate=True)
    c_frob = FrobeniusStructure(c_alg, eps_c)
    if c_frob.delta_matrix() != delta_c:
        raise StateSumError("closed-space comultiplication disagrees with its counit-derived form")

    return KnowledgeableFrobenius(A=F, C=c_frob, iota=im, iota_star=coim @ la)


def check_knowledgeable(K: KnowledgeableFrobenius):
    """Verify the axioms of a knowledgeable Frobenius algebra exactly.

    Returns a list of ``(axiom, ok, witness)`` triples; ``witness`` is a
    matrix index where the first discrepancy occurs, or ``None``.
    """
    A, C = K.A, K.C
    f = A.field
    n, d = A.dim, C.dim
    I_n = Matrix.identity(f, n)
    I_d = Matrix.identity(f, d)
    results = []

    def record(name, lhs, rhs):
        if lhs == rhs:
            results.append((name, True, None))
            return
        witness = None
        for i in range(lhs.rows):
            for j in range(lhs.cols):
                if lhs.data[i][j] != rhs.data[i][j]:
                    witness = (i, j)
                    break
            if witness:
                break
        results.append((name, False, witness))

    record("iota preserves unit",
           Matrix.column_vector(f, K.iota.mul_vec(list(C.algebra.unit))),
           A.eta_matrix())
    record("iota is an algebra map",
           K.iota @ C.mu_matrix(),
           A.mu_matrix() @ K.iota.kron(K.iota))
    record("knowledge",
           A.mu_matrix() @ K.iota.kron(I_n),
           A.mu_matrix() @ A.swap() @ K.iota.kron(I_n))
    record("duality",
           C.eps_matrix() @ C.mu_matrix() @ I_d.kron(K.iota_star),
           A.eps_matrix() @ A.mu_matrix() @ K.iota.kron(I_n))
    record("cardy",
           A.mu_matrix() @ A.swap() @ A.delta_matrix(),
           K.iota @ K.iota_star)
    record("open symmetry",
           A.eps_matrix() @ A.mu_matrix(),
           A.eps_matrix() @ A.mu_matrix() @ A.swap())
    record("closed commutativity",
           C.mu_matrix(),
           C.mu_matrix() @ C.swap())
    return results


def all_axioms_pass(report) -> bool:
    return all(ok for (_, ok, _) in report)


# -- P/Q/Phi/Psi as typed morphisms ---------------------------------------------


def iterated_mu(F: FrobeniusStructure, arity: int) -> Morphism:
    a = full_factor(F.dim)
    return Morphism(F.field, (a,) * arity, (a,), F.iterated_mu_matrix(arity))


def iterated_delta(F: FrobeniusStructure, arity: int) -> Morphism:
    a = full_factor(F.dim)
    return Morphism(F.field, (a,), (a,) * arity, F.iterated_delta_matrix(arity))


def P_map(F: FrobeniusStructure, k: int, l: int) -> Morphism:
    a = full_factor(F.dim)
    return Morphism(F.field, (a,) * l, (a,) * k, F.p_matrix(k, l))


def Q_map(F: FrobeniusStructure, k: int, l: int) -> Morphism:
    a = full_factor(F.dim)
    return Morphism(F.field, (a,) * l, (a,) * k, F.q_matrix(k, l))


def phi_iso(F: FrobeniusStructure, k: int):
    phi, phi_inv = F.phi_matrices(k)
    a = full_factor(F.dim)
    s = split_factor(phi.rows)
    return (
        Morphism(F.field, (a,), (s,), phi),
        Morphism(F.field, (s,), (a,), phi_inv),
    )


def psi_iso(F: FrobeniusStructure, k: int):
    psi, psi_inv = F.psi_matrices(k)
    d = split_factor(psi.cols)
    s = split_factor(psi.rows)
    return (
        Morphism(F.field, (d,), (s,), psi),
        Morphism(F.field, (s,), (d,), psi_inv),
    )
