from fractions import Fraction

import pytest

from colorlie.errors import IrrationalEigenvalue, SingularForm
from colorlie.linalg import (
    SMat,
    SubspaceBasis,
    eigensplit,
    gaussian_rational_roots,
    invert,
    kernel_basis,
    kron,
    minimal_polynomial,
    poly_gcd,
    poly_is_squarefree,
    poly_lcm,
    poly_mul,
    rank,
    solve_gram,
    span_dim,
    unit_vec,
    vec_axpy,
    vec_dot,
    vec_scale,
)
from colorlie.scalars import GQ, I, MINUS_ONE, ONE, ZERO


def test_vec_ops():
    x = {0: ONE, 2: I}
    y = dict(x)
    vec_axpy(y, GQ(2), {0: ONE, 1: MINUS_ONE})
    assert y == {0: GQ(3), 1: GQ(-2), 2: I}
    assert vec_scale(x, ZERO) == {}
    assert vec_dot({0: I}, {0: I}) == GQ(-1)
    assert unit_vec(3) == {3: ONE}


def test_smat_basics():
    m = SMat.from_dense([[ONE, I], [ZERO, GQ(2)]])
    assert m.get(0, 1) == I
    assert m.trace() == GQ(3)
    mt = m.transpose()
    assert mt.get(1, 0) == I
    assert (m @ SMat.identity(2)) == m
    assert m.matvec({1: ONE}) == {0: I, 1: GQ(2)}
    assert m.trace_mul(m) == (m @ m).trace()


def test_kron():
    a = SMat.from_dense([[ONE, GQ(2)], [ZERO, ONE]])
    b = SMat.from_dense([[I]])
    k = kron(a, b)
    assert k.nrows == 2 and k.get(0, 1) == GQ(2) * I


def test_subspace_basis_membership_and_coords():
    sb = SubspaceBasis()
    v1 = {0: ONE, 1: ONE}
    v2 = {1: ONE, 2: ONE}
    assert sb.add(v1) and sb.add(v2)
    assert not sb.add({0: ONE, 1: GQ(2), 2: ONE})  # v1 + v2
    assert sb.dim == 2
    c = sb.coords({0: GQ(3), 1: GQ(5), 2: GQ(2)})
    assert c == {0: GQ(3), 1: GQ(2)}
    assert sb.coords({3: ONE}) is None


def test_kernel_rank_invert():
    m = SMat.from_dense([[ONE, GQ(2), GQ(3)], [GQ(2), GQ(4), GQ(6)]])
    assert rank(m) == 1
    ker = kernel_basis(m)
    assert len(ker) == 2
    for v in ker:
        assert not m.matvec(v)
    a = SMat.from_dense([[ONE, I], [ZERO, GQ(2)]])
    ainv = invert(a)
    assert (a @ ainv) == SMat.identity(2)
    with pytest.raises(SingularForm):
        invert(SMat.from_dense([[ONE, ONE], [ONE, ONE]]))


def test_solve_gram():
    g = SMat.from_dense([[GQ(2), ONE], [ONE, GQ(2)]])
    x = solve_gram(g, {0: GQ(4), 1: GQ(5)})
    assert g.matvec(x) == {0: GQ(4), 1: GQ(5)}
    with pytest.raises(SingularForm):
        solve_gram(SMat.from_dense([[ONE, ONE], [ONE, ONE]]), {0: ONE})


def test_span_dim():
    assert span_dim([{0: ONE}, {0: GQ(2)}, {1: ONE}]) == 2


def test_polynomials():
    # (x - 1)(x - 2) = 2 - 3x + x^2
    p = [GQ(2), GQ(-3), ONE]
    q = [GQ(-1), ONE]  # x - 1
    assert poly_gcd(p, q) == q  # gcd is returned monic
    assert poly_is_squarefree(p)
    assert not poly_is_squarefree(poly_mul(q, q))
    assert poly_lcm(q, [GQ(-2), ONE]) == p


def test_gaussian_rational_roots():
    # (x - i)(x + 2)^2
    p = poly_mul([GQ(0, -1), ONE], poly_mul([GQ(2), ONE], [GQ(2), ONE]))
    roots, residual = gaussian_rational_roots(p)
    assert residual == 0
    assert sorted(((r.re, r.im), m) for r, m in roots) == [
        ((Fraction(-2), Fraction(0)), 2),
        ((Fraction(0), Fraction(1)), 1),
    ]
    # x^2 - 2 has no roots in Q(i)
    roots, residual = gaussian_rational_roots([GQ(-2), ZERO, ONE])
    assert roots == [] and residual == 2
    # x^2 + 1 = (x - i)(x + i)
    roots, residual = gaussian_rational_roots([ONE, ZERO, ONE])
    assert residual == 0 and sorted((r.re, r.im) for r, _ in roots) == [
        (Fraction(0), Fraction(-1)),
        (Fraction(0), Fraction(1)),
    ]


def test_minimal_polynomial():
    m = SMat.from_dense([[GQ(2), ZERO], [ZERO, GQ(3)]])
    mp = minimal_polynomial(m)
    # (x-2)(x-3) = 6 - 5x + x^2
    assert mp == [GQ(6), GQ(-5), ONE]
    # nilpotent Jordan block: minimal polynomial x^2
    j = SMat.from_dense([[ZERO, ONE], [ZERO, ZERO]])
    assert minimal_polynomial(j) == [ZERO, ZERO, ONE]


def test_eigensplit_diagonalizable():
    m = SMat.from_dense([[ZERO, ONE], [ONE, ZERO]])  # eigenvalues +-1
    pieces = eigensplit([unit_vec(0), unit_vec(1)], [m])
    assert [p[0] for p in pieces] == [(MINUS_ONE,), (ONE,)]
    for (lam,), vecs in pieces:
        for v in vecs:
            assert m.matvec(v) == vec_scale(v, lam)


def test_eigensplit_generalized_and_joint():
    j = SMat.from_dense([[ONE, ONE], [ZERO, ONE]])  # Jordan block at 1
    pieces = eigensplit([unit_vec(0), unit_vec(1)], [j])
    assert len(pieces) == 1 and pieces[0][0] == (ONE,)
    assert len(pieces[0][1]) == 2
    a = SMat.from_dense([[ONE, ZERO], [ZERO, MINUS_ONE]])
    b = SMat.from_dense([[GQ(5), ZERO], [ZERO, GQ(5)]])
    pieces = eigensplit([unit_vec(0), unit_vec(1)], [a, b])
    assert [p[0] for p in pieces] == [(MINUS_ONE, GQ(5)), (ONE, GQ(5))]


def test_eigensplit_irrational_raises():
    m = SMat.from_dense([[ZERO, GQ(2)], [ONE, ZERO]])  # eigenvalues +-sqrt(2)
    with pytest.raises(IrrationalEigenvalue):
        eigensplit([unit_vec(0), unit_vec(1)], [m])
