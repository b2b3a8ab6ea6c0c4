"""Exact integer linear algebra: row reduction and Smith normal form.

Matrices are lists of lists of Python ints, so everything is exact.  Sizes
here are small (a few hundred rows/columns); no attempt is made to be
asymptotically clever.
"""

from dataclasses import dataclass


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def identity(k):
    m = zeros(k, k)
    for i in range(k):
        m[i][i] = 1
    return m


def mat_mul(a, b):
    ra, ca = len(a), len(a[0]) if a else 0
    cb = len(b[0]) if b else 0
    out = zeros(ra, cb)
    for i in range(ra):
        ai = a[i]
        oi = out[i]
        for k in range(ca):
            v = ai[k]
            if v:
                bk = b[k]
                for j in range(cb):
                    oi[j] += v * bk[j]
    return out


def row_reduce(rows, ncols):
    """Row-echelon reduction over Z by gcd-style row operations.

    Returns a list of at most ncols independent rows spanning the same row
    lattice as the input; in particular the kernel is unchanged.  Input rows
    are consumed (copied first by the caller if needed).
    """
    rows = [list(r) for r in rows if any(r)]
    out = []
    col = 0
    while col < ncols and rows:
        live = [r for r in rows if r[col] != 0]
        if not live:
            rows = [r for r in rows if any(r[col + 1:])]
            col += 1
            continue
        # repeatedly reduce by the row with the smallest pivot until one remains
        while True:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            done = True
            for r in live[1:]:
                q = r[col] // piv[col]
                if q:
                    for j in range(col, ncols):
                        r[j] -= q * piv[j]
                if r[col]:
                    done = False
            live = [piv] + [r for r in live[1:] if r[col] != 0]
            if done or len(live) == 1:
                break
        piv = live[0]
        if piv[col] < 0:
            for j in range(col, ncols):
                piv[j] = -piv[j]
        out.append(piv)
        rest = [r for r in rows if r is not piv and r[col] == 0] + live[1:]
        rows = [r for r in rest if any(r[col:])]
        col += 1
    return out


@dataclass
class SmithForm:
    """S = U @ A @ V with U, V unimodular; diag = invariant factors d1 | d2 | ...

    Only the transform pieces requested from smith_normal_form are populated;
    the rest are None.
    """

    diag: list
    rank: int
    nrows: int
    ncols: int
    U: list | None = None
    Uinv: list | None = None
    V: list | None = None
    Vinv: list | None = None


def smith_normal_form(a, want=()):
    """Smith normal form of an integer matrix with optional transforms.

    want is a subset of {"U", "Uinv", "V", "Vinv"}.  U acts on rows (S = U A V),
    Uinv/Vinv are the exact integer inverses of U/V.
    """
    nr = len(a)
    nc = len(a[0]) if nr else 0
    s = [list(row) for row in a]

    need_u = "U" in want
    need_ui = "Uinv" in want
    need_v = "V" in want
    need_vi = "Vinv" in want
    U = identity(nr) if need_u else None
    Ui = identity(nr) if need_ui else None
    V = identity(nc) if need_v else None
    Vi = identity(nc) if need_vi else None

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        if need_u:
            U[i], U[j] = U[j], U[i]
        if need_ui:  # columns of Uinv
            for r in Ui:
                r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in s:
            r[i], r[j] = r[j], r[i]
        if need_v:
            for r in V:
                r[i], r[j] = r[j], r[i]
        if need_vi:
            Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(src, dst, q):
        # row dst += q * row src
        rs, rd = s[src], s[dst]
        for j in range(nc):
            rd[j] += q * rs[j]
        if need_u:
            rs, rd = U[src], U[dst]
            for j in range(nr):
                rd[j] += q * rs[j]
        if need_ui:  # Uinv: col src -= q * col dst
            for r in Ui:
                r[src] -= q * r[dst]

    def add_col(src, dst, q):
        # col dst += q * col src
        for r in s:
            r[dst] += q * r[src]
        if need_v:
            for r in V:
                r[dst] += q * r[src]
        if need_vi:  # Vinv: row src -= q * row dst
            rs, rd = Vi[src], Vi[dst]
            for j in range(nc):
                rs[j] -= q * rd[j]

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        if need_u:
            U[i] = [-x for x in U[i]]
        if need_ui:
            for r in Ui:
                r[i] = -r[i]

    def select_pivot(t):
        piv = None
        best = None
        for i in range(t, nr):
            row = s[i]
            for j in range(t, nc):
                v = row[j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
                    if best == 1:
                        return piv
        return piv

    t = 0
    while t < min(nr, nc):
        # always restart from the smallest entry of the block: remainders
        # are strictly smaller than the pivot, so this terminates, and it
        # keeps the coefficients from exploding
        piv = select_pivot(t)
        if piv is None:
            break
        while True:
            i, j = piv
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            if s[t][t] < 0:
                negate_row(t)
            p = s[t][t]
            for i in range(t + 1, nr):
                q = s[i][t] // p
                if q:
                    add_row(t, i, -q)
            for j in range(t + 1, nc):
                q = s[t][j] // p
                if q:
                    add_col(t, j, -q)
            if any(s[i][t] for i in range(t + 1, nr)) \
                    or any(s[t][j] for j in range(t + 1, nc)):
                piv = select_pivot(t)
                continue
            break
        t += 1

    # enforce the divisibility chain d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for k in range(t - 1):
            a_, b_ = s[k][k], s[k + 1][k + 1]
            if b_ % a_ == 0:
                continue
            changed = True
            # fold entry b into position k via one column add, then re-clear
            add_col(k + 1, k, 1)
            while s[k + 1][k] != 0:
                # euclid on the 2x2 block (k,k),(k+1,k)
                q = s[k][k] // s[k + 1][k]
                if q:
                    add_row(k + 1, k, -q)
                swap_rows(k, k + 1)
            if s[k][k] < 0:
                negate_row(k)
            # row op may have refilled (k, k+1); clear it
            if s[k][k + 1]:
                q = s[k][k + 1] // s[k][k]
                add_col(k, k + 1, -q)
            if s[k + 1][k + 1] < 0:
                negate_row(k + 1)

    diag = [s[i][i] for i in range(min(nr, nc))]
    rank = sum(1 for d in diag if d != 0)
    diag = diag[:rank]
    return SmithForm(diag=diag, rank=rank, nrows=nr, ncols=nc,
                     U=U, Uinv=Ui, V=V, Vinv=Vi)
