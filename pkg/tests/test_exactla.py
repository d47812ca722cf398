"""Exact linear algebra: RREF, kernels, subspaces, Laurent polynomials."""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tricore.exactla import GF, LaurentPoly, Matrix, QQ, Subspace, det_int

FIELDS = [QQ, GF(5)]

scalars = st.integers(-6, 6)


def mats(min_rows=1, max_rows=5, min_cols=1, max_cols=5):
    return st.integers(min_rows, max_rows).flatmap(
        lambda r: st.integers(min_cols, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(scalars, min_size=c, max_size=c),
                min_size=r, max_size=r)))


def build(field, rows):
    return Matrix(field, [[field.coerce(x) for x in r] for r in rows],
                  cols=len(rows[0]))


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(rows=mats())
@settings(max_examples=60, deadline=None)
def test_rref_idempotent_and_rank(field, rows):
    m = build(field, rows)
    r, piv, rank = m.rref()
    r2, piv2, rank2 = r.rref()
    assert r2 == r and piv2 == piv and rank2 == rank
    assert rank == len(piv) <= min(m.rows, m.cols)
    assert m.transpose().rank() == rank


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(rows=mats())
@settings(max_examples=60, deadline=None)
def test_kernel_annihilates_and_is_rref(field, rows):
    m = build(field, rows)
    ker = m.kernel()
    assert ker.dim == m.cols - m.rank()
    for v in ker.vectors():
        assert not any(m.apply(v))
    # basis rows must be an RREF matrix: pivot columns trick depends on it
    r, _, rank = ker.basis.rref()
    assert r == ker.basis and rank == ker.dim


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(rows=mats(), vec=st.lists(scalars, min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_solve_consistency(field, rows, vec):
    m = build(field, rows)
    b = [field.coerce(x) for x in (vec * m.rows)[:m.rows]]
    sol = m.solve(b)
    if sol is not None:
        assert m.apply(sol) == b
    else:
        assert not m.image().contains(b)


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(rows=mats(max_rows=4, max_cols=4), rows2=mats(max_rows=4, max_cols=4))
@settings(max_examples=60, deadline=None)
def test_subspace_dimension_formula(field, rows, rows2):
    amb = max(len(rows[0]), len(rows2[0]))
    pad = lambda rs: [list(r) + [0] * (amb - len(r)) for r in rs]
    u = Subspace.from_spanning(field, amb,
                               [[field.coerce(x) for x in r] for r in pad(rows)])
    v = Subspace.from_spanning(field, amb,
                               [[field.coerce(x) for x in r] for r in pad(rows2)])
    s = u.add(v)
    i = u.intersect(v)
    assert u.dim + v.dim == s.dim + i.dim
    for w in i.vectors():
        assert u.contains(w) and v.contains(w)
    for w in u.vectors():
        assert s.contains(w)


def test_subspace_coords_roundtrip():
    f = QQ
    u = Subspace.from_spanning(f, 4, [[1, 2, 0, 1], [0, 1, 1, 1]])
    for v in u.vectors():
        c = u.coords(v)
        got = [f.zero] * 4
        for x, b in zip(c, u.vectors()):
            got = [f.add(g, f.mul(x, bb)) for g, bb in zip(got, b)]
        assert got == v
    assert u.coords([1, 0, 0, 0]) is None


def test_extend_to_basis_invertible():
    f = GF(7)
    u = Subspace.from_spanning(f, 5, [[1, 2, 3, 0, 0], [0, 0, 1, 1, 1]])
    extra = u.extend_to_basis()
    assert extra.rows == 5 - u.dim
    assert u.basis.vstack(extra).rank() == 5


def test_inverse_and_det():
    m = Matrix(QQ, [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]])
    inv = m.inverse()
    assert m.mul(inv) == Matrix.identity(QQ, 2)
    assert det_int(m) == Fraction(1)
    sing = Matrix(QQ, [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
    assert det_int(sing) == Fraction(0)


@given(a=st.dictionaries(st.integers(-4, 4), scalars, max_size=4),
       b=st.dictionaries(st.integers(-4, 4), scalars, max_size=4),
       c=st.dictionaries(st.integers(-4, 4), scalars, max_size=4))
@settings(max_examples=80, deadline=None)
def test_laurent_ring_axioms(a, b, c):
    pa, pb, pc = (LaurentPoly.from_dict(d) for d in (a, b, c))
    assert pa * pb == pb * pa
    assert (pa + pb) * pc == pa * pc + pb * pc
    assert (pa * pb) * pc == pa * (pb * pc)
    assert pa + (-pa) == LaurentPoly.zero()
    assert pa * LaurentPoly.one() == pa
    assert (pa * pb).at_one() == pa.at_one() * pb.at_one()
    assert pa.bar().bar() == pa
    assert pa.shift(3).shift(-3) == pa


def test_laurent_no_stored_zeros():
    p = LaurentPoly.from_dict({0: 1, 2: 0, -1: 3})
    assert all(c for _, c in p.coeffs)
    assert p.coeff(2) == 0 and p.coeff(-1) == 3


def test_gf_arithmetic():
    f = GF(5)
    assert f.coerce(Fraction(1, 2)) == 3  # 2 * 3 = 6 = 1 mod 5
    assert f.inv(4) == 4
    with pytest.raises(ZeroDivisionError):
        f.inv(0)
    with pytest.raises(ValueError):
        GF(6)
