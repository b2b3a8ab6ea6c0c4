"""Direct property tests for the exact integer linear algebra."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from quandleforge import snf

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-20, 20), min_size=c, max_size=c),
            min_size=r, max_size=r)))


def det(m):
    n = len(m)
    m = [[Fraction(v) for v in row] for row in m]
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    out = Fraction(sign)
    for i in range(n):
        out *= m[i][i]
    return out


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_smith_form_properties(a):
    form = snf.smith_normal_form(a, want=("U", "Uinv", "V", "Vinv"))
    s = snf.mat_mul(snf.mat_mul(form.U, a), form.V)
    nr, nc = len(a), len(a[0])
    for i in range(nr):
        for j in range(nc):
            if i == j and i < form.rank:
                assert s[i][j] == form.diag[i] > 0
            else:
                assert s[i][j] == 0
    for i in range(form.rank - 1):
        assert form.diag[i + 1] % form.diag[i] == 0
    assert abs(det(form.U)) == 1
    assert abs(det(form.V)) == 1
    ident_r = snf.identity(nr)
    ident_c = snf.identity(nc)
    assert snf.mat_mul(form.U, form.Uinv) == ident_r
    assert snf.mat_mul(form.Vinv, form.V) == ident_c


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_row_reduce_spans_same_lattice(a):
    nc = len(a[0])
    reduced = snf.row_reduce(a, nc)
    # reduced rows are combinations of the input by construction; check the
    # converse by echelon back-substitution membership
    pivots = []
    for row in reduced:
        col = next(j for j in range(nc) if row[j])
        pivots.append((col, row))
    for original in a:
        rem = list(original)
        for col, row in pivots:
            if rem[col]:
                assert rem[col] % row[col] == 0
                q = rem[col] // row[col]
                for j in range(nc):
                    rem[j] -= q * row[j]
        assert not any(rem)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_row_reduce_preserves_rank(a):
    nc = len(a[0])
    reduced = snf.row_reduce(a, nc)
    assert snf.smith_normal_form(reduced).rank if reduced else 0 \
        == snf.smith_normal_form(a).rank
