from fractions import Fraction

import pytest

import statesum as S
from statesum.errors import BadUnitError, NotAssociativeError
from statesum.fields import GF, QQ


def m2_indices():
    # basis order of matrix_direct_sum: e00, e01, e10, e11
    return {"00": 0, "01": 1, "10": 2, "11": 3}


def test_make_algebra_matrix_units():
    alg, _ = S.matrix_direct_sum(QQ, [2], [1])
    assert alg.dim == 4
    i = m2_indices()
    e01, e10, e11 = (alg.basis_element(i[k]) for k in ("01", "10", "11"))
    assert (e01 * e10).coeffs == alg.basis_element(i["00"]).coeffs
    assert (e10 * e01).coeffs == e11.coeffs
    assert (e01 * e01).is_zero()


def test_make_algebra_group_table():
    alg, _ = S.group_algebra(QQ, S.GroupTable.cyclic(2))
    assert alg.dim == 2
    g = alg.basis_element(1)
    assert (g * g).coeffs == alg.unit


def test_make_algebra_rejects_non_associative():
    field = QQ
    # unit laws hold, but x*x = y while x*y = 0 and y*x = y:
    # (x x) x = y x = y whereas x (x x) = x y = 0
    one = field.one()
    entries = [
        (0, 0, 0, one), (0, 1, 1, one), (1, 0, 1, one), (0, 2, 2, one), (2, 0, 2, one),
        (1, 1, 2, one), (2, 1, 2, one),
    ]
    unit = [one, field.zero(), field.zero()]
    with pytest.raises(NotAssociativeError):
        S.make_algebra(field, 3, entries, unit)


def test_make_algebra_rejects_bad_unit():
    field = QQ
    entries = [(0, 0, 0, field.one()), (1, 1, 1, field.one())]
    unit = [field.one(), field.zero()]  # misses the second block
    with pytest.raises(BadUnitError):
        S.make_algebra(field, 2, entries, unit)


def test_unit_multiplication_is_identity():
    alg, _ = S.matrix_direct_sum(QQ, [2, 3], [1, 1])
    one = alg.unit_element()
    for k in range(alg.dim):
        e = alg.basis_element(k)
        assert (one * e).coeffs == e.coeffs
        assert (e * one).coeffs == e.coeffs


def test_left_regular_matrix_unit_and_idempotent():
    alg, _ = S.matrix_direct_sum(QQ, [2], [1])
    assert alg.left_regular_matrix(alg.unit_element()) == S.Matrix.identity(QQ, 4)
    # brute force L_{e00} from the structure constants: fixes e00, e01
    i = m2_indices()
    l00 = alg.left_regular_matrix(alg.basis_element(i["00"]))
    expected = S.Matrix.zeros(QQ, 4, 4)
    expected.data[i["00"]][i["00"]] = Fraction(1)
    expected.data[i["01"]][i["01"]] = Fraction(1)
    assert l00 == expected
    assert l00 @ l00 == l00 and l00.rank() == 2


def test_left_regular_matrix_group_swap():
    alg, _ = S.group_algebra(QQ, S.GroupTable.cyclic(2))
    lg = alg.left_regular_matrix(alg.basis_element(1))
    assert lg == S.Matrix.from_rows(QQ, [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]])


def test_left_regular_is_multiplicative():
    alg, _ = S.matrix_direct_sum(QQ, [2], [1])
    a = alg.element([Fraction(1), Fraction(2), Fraction(0), Fraction(-1)])
    b = alg.element([Fraction(0), Fraction(1), Fraction(3), Fraction(2)])
    assert alg.left_regular_matrix(a * b) == alg.left_regular_matrix(a) @ alg.left_regular_matrix(b)


def test_canonical_pairing_matrix_algebra():
    alg, _ = S.matrix_direct_sum(QQ, [2], [1])
    i = m2_indices()
    g = alg.canonical_pairing()
    assert g[(i["01"], i["10"])] == Fraction(2)
    assert g[(i["00"], i["01"])] == Fraction(0)
    assert g.is_symmetric()


def test_canonical_pairing_group_algebra():
    alg, _ = S.group_algebra(QQ, S.GroupTable.cyclic(2))
    assert alg.canonical_pairing() == S.Matrix.from_rows(
        QQ, [[Fraction(2), Fraction(0)], [Fraction(0), Fraction(2)]]
    )


def test_canonical_pairing_invariance_on_basis_triples():
    alg, _ = S.matrix_direct_sum(QQ, [2], [1])
    g = alg.canonical_pairing()

    def pair(v, w):
        return sum(g[(i, j)] * v[i] * w[j] for i in range(4) for j in range(4))

    for i in range(4):
        for j in range(4):
            for k in range(4):
                ei, ej, ek = (alg.basis_element(t) for t in (i, j, k))
                assert pair((ei * ej).coeffs, ek.coeffs) == pair(ei.coeffs, (ej * ek).coeffs)


def test_matrix_algebra_char_two_pairing_vanishes():
    f2 = GF(2)
    # build M_2(F_2) directly; the frobenius construction would refuse
    entries = []
    def idx(r, c):
        return 2 * r + c
    for r in range(2):
        for s in range(2):
            for t in range(2):
                entries.append((idx(r, s), idx(s, t), idx(r, t), 1))
    alg = S.make_algebra(f2, 4, entries, [1, 0, 0, 1])
    assert alg.canonical_pairing().is_zero()
    assert not alg.is_strongly_separable()


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_strong_separability_of_matrix_algebras_mod_p(p, n):
    field = GF(p)
    entries = []
    def idx(r, c):
        return n * r + c
    for r in range(n):
        for s in range(n):
            for t in range(n):
                entries.append((idx(r, s), idx(s, t), idx(r, t), 1))
    unit = [0] * (n * n)
    for r in range(n):
        unit[idx(r, r)] = 1
    alg = S.make_algebra(field, n * n, entries, unit)
    assert alg.is_strongly_separable() == (n % p != 0)


def test_strong_separability_of_group_algebras():
    assert S.group_algebra(QQ, S.GroupTable.cyclic(2))[0].is_strongly_separable()
    assert S.group_algebra(QQ, S.GroupTable.symmetric(3))[0].is_strongly_separable()
    f2 = GF(2)
    table = S.GroupTable.cyclic(2)
    entries = [(i, j, table.table[i][j], 1) for i in range(2) for j in range(2)]
    alg = S.make_algebra(f2, 2, entries, [1, 0])
    assert not alg.is_strongly_separable()


def test_centre_of_matrix_algebra_is_spanned_by_unit():
    alg, _ = S.matrix_direct_sum(QQ, [2], [1])
    basis = alg.centre_basis()
    assert len(basis) == 1
    z = basis[0]
    # must be proportional to e00 + e11
    assert z.coeffs[1] == 0 and z.coeffs[2] == 0 and z.coeffs[0] == z.coeffs[3] != 0


def test_centre_of_symmetric_group_algebra_matches_class_sums():
    alg, _ = S.group_algebra(QQ, S.GroupTable.symmetric(3))
    basis = alg.centre_basis()
    assert len(basis) == 3
    # hand-listed conjugacy classes in the lexicographic permutation order:
    # identity 012; transpositions 021, 102, 210; three-cycles 120, 201
    classes = [{0}, {1, 2, 5}, {3, 4}]
    span_contains = []
    for cls in classes:
        vec = [QQ.one() if i in cls else QQ.zero() for i in range(6)]
        m = S.Matrix.from_rows(QQ, [list(b.coeffs) for b in basis]).transpose()
        span_contains.append(m.solve(vec) is not None)
    assert all(span_contains)
    for b in basis:
        assert b.is_central()


def test_centre_of_commutative_algebra_is_everything(structures):
    alg, _ = structures["QxQ (1,1)"]
    assert len(alg.centre_basis()) == alg.dim


def test_centre_contains_unit(structures):
    for label, (alg, _) in structures.items():
        basis = alg.centre_basis()
        m = S.Matrix.from_rows(alg.field, [list(b.coeffs) for b in basis]).transpose()
        assert m.solve(list(alg.unit)) is not None, label


def test_is_central_and_inverse():
    alg, _ = S.matrix_direct_sum(QQ, [2], [1])
    one = alg.unit_element()
    assert one.is_central() and one.inverse().coeffs == one.coeffs
    e00 = alg.basis_element(0)
    assert not e00.is_central()
    assert e00.inverse() is None
    two = one.scale(Fraction(2))
    inv = two.inverse()
    assert inv.coeffs == one.scale(Fraction(1, 2)).coeffs
    assert (two * inv).coeffs == one.coeffs
