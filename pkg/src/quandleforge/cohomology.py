"""Second quandle cohomology with cyclic coefficients.

Cochains are stored additively: the multiplicative identity of the
coefficient group becomes 0 in Z_m.  A 2-cochain is an n x n table over Z_m
that vanishes on the diagonal; it is a cocycle when

    values[x][y] - values[x][z] + values[x*y][z] - values[x*z][y*z] == 0 (mod m)

for all x, y, z.  Coboundaries follow the convention

    (d gamma)(x, y) = gamma(x) - gamma(x*y),

which matches relabeling extension fibers by (x, a) -> (x, a - gamma(x));
the mirror convention differs by a sign and produces the same cohomology.

H^2 is computed over the integers: the off-diagonal pairs index the cochain
coordinates, the cocycle constraints are row-reduced, and one Smith normal
form produces the kernel lattice while a second one presents the quotient by
coboundaries plus m times everything.  Everything is exact.
"""

from dataclasses import dataclass
from math import gcd

from . import snf
from .errors import DNotDividesModulus, NotACocycle, ShapeMismatch


@dataclass(frozen=True)
class Cocycle2:
    """A Z_m-valued 2-cochain with zero diagonal.

    Shape and the diagonal are enforced here; use cocycle() to also verify
    the cocycle identity against a quandle.
    """

    n: int
    m: int
    values: tuple

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("modulus must be >= 1")
        if len(self.values) != self.n or any(len(r) != self.n for r in self.values):
            raise ValueError("values must be n x n")
        for x in range(self.n):
            if self.values[x][x] % self.m != 0:
                raise NotACocycle(x, "nonzero diagonal entry")
            if any(not (0 <= v < self.m) for v in self.values[x]):
                raise ValueError("values must be reduced mod m")

    def __call__(self, x, y):
        return self.values[x][y]

    def add(self, other):
        if (self.n, self.m) != (other.n, other.m):
            raise ShapeMismatch("cochain shapes differ")
        return Cocycle2(self.n, self.m, tuple(
            tuple((a + b) % self.m for a, b in zip(r1, r2))
            for r1, r2 in zip(self.values, other.values)))

    def scale(self, k):
        return Cocycle2(self.n, self.m, tuple(
            tuple((k * v) % self.m for v in row) for row in self.values))

    @staticmethod
    def zero(n, m):
        return Cocycle2(n, m, tuple(tuple(0 for _ in range(n)) for _ in range(n)))


def _as_values(phi):
    return getattr(phi, "values", phi)


def cocycle_witness(q, m, values):
    """None if values is a diagonal-zero 2-cocycle mod m on q; otherwise a
    witness: ('diagonal', x) or ('identity', x, y, z)."""
    values = _as_values(values)
    n = q.n
    t = q.table
    for x in range(n):
        if values[x][x] % m != 0:
            return ("diagonal", x)
    for x in range(n):
        vx = values[x]
        for y in range(n):
            xy = t[x][y]
            vxy = values[xy]
            for z in range(n):
                if (vx[y] - vx[z] + vxy[z] - values[t[x][z]][t[y][z]]) % m:
                    return ("identity", x, y, z)
    return None


def is_cocycle(q, m, values):
    return cocycle_witness(q, m, values) is None


def cocycle(q, m, values):
    """Validate values as a 2-cocycle on q and wrap it (NotACocycle otherwise)."""
    values = _as_values(values)
    w = cocycle_witness(q, m, values)
    if w is not None:
        raise NotACocycle(w)
    return Cocycle2(q.n, m, tuple(tuple(v % m for v in row) for row in values))


def coboundary(q, m, gamma):
    """The coboundary of a 1-cochain gamma: X -> Z_m (callable or indexable)."""
    gamma = [gamma(x) if callable(gamma) else gamma[x] for x in range(q.n)]
    vals = [[(gamma[x] - gamma[q.table[x][y]]) % m for y in range(q.n)]
            for x in range(q.n)]
    return Cocycle2(q.n, m, tuple(tuple(r) for r in vals))


def _pair_index(n):
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    return pairs, {p: i for i, p in enumerate(pairs)}


def _constraint_rows(q, pairs, pidx):
    """Integer rows of the cocycle identity, one per useful (x,y,z); rows are
    deduplicated up to sign."""
    n = q.n
    t = q.table
    npairs = len(pairs)
    seen = set()
    rows = []
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            xy = t[x][y]
            for z in range(n):
                if y == z:
                    continue
                row = [0] * npairs
                row[pidx[(x, y)]] += 1
                if x != z:
                    row[pidx[(x, z)]] -= 1
                if xy != z:
                    row[pidx[(xy, z)]] += 1
                xz, yz = t[x][z], t[y][z]
                if xz != yz:
                    row[pidx[(xz, yz)]] -= 1
                if not any(row):
                    continue
                for v in row:
                    if v:
                        key = tuple(row) if v > 0 else tuple(-u for u in row)
                        break
                if key not in seen:
                    seen.add(key)
                    rows.append(list(key))
    return rows


def _coboundary_matrix(q, pairs):
    """Columns indexed by elements, rows by off-diagonal pairs."""
    rows = []
    for (x, y) in pairs:
        row = [0] * q.n
        row[x] += 1
        row[q.table[x][y]] -= 1
        rows.append(row)
    return rows


@dataclass(frozen=True)
class CohomologyGroup:
    """H^2 as a product of cyclic groups: invariant factors (each dividing m,
    ascending, 1s dropped) with one representative cocycle per factor."""

    m: int
    invariant_factors: tuple
    representatives: tuple

    @property
    def order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    @property
    def is_trivial(self):
        return not self.invariant_factors


def _space_orders(diags, rank, ncols, m):
    """(#solutions of Av=0 over Z_m, given SNF diagonal of A)."""
    out = 1
    for d in diags:
        out *= gcd(d, m)
    return out * m ** (ncols - rank)


def cocycle_space_order(q, m):
    """Number of diagonal-zero 2-cocycles mod m (SNF route)."""
    n = q.n
    pairs, pidx = _pair_index(n)
    if not pairs:
        return 1
    rows = _constraint_rows(q, pairs, pidx)
    reduced = snf.row_reduce(rows, len(pairs))
    if not reduced:
        return m ** len(pairs)
    form = snf.smith_normal_form(reduced)
    return _space_orders(form.diag, form.rank, len(pairs), m)


def coboundary_space_order(q, m):
    """Number of distinct coboundaries mod m (SNF route)."""
    n = q.n
    pairs, _ = _pair_index(n)
    if not pairs:
        return 1
    d = _coboundary_matrix(q, pairs)
    form = snf.smith_normal_form(d)
    kernel = _space_orders(form.diag, form.rank, n, m)
    return m ** n // kernel


def second_cohomology(q, m):
    """H^2_Q(q, Z_m): invariant factors plus representative cocycles.

    Representatives come from the change of basis of the quotient
    presentation; each is verified to be a cocycle, and the returned classes
    are verified independent against the coboundary space.
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    n = q.n
    pairs, pidx = _pair_index(n)
    npairs = len(pairs)
    if npairs == 0:
        return CohomologyGroup(m=m, invariant_factors=(), representatives=())

    rows = _constraint_rows(q, pairs, pidx)
    reduced = snf.row_reduce(rows, npairs)
    if reduced:
        form = snf.smith_normal_form(reduced, want=("Vinv",))
        vinv = form.Vinv
        tdiag = [m // gcd(d, m) for d in form.diag]
    else:
        form = None
        vinv = snf.identity(npairs)
        tdiag = []
    tdiag += [1] * (npairs - len(tdiag))

    # kernel lattice K = V . diag(tdiag); relations = coboundaries + m Z^N,
    # expressed in the K basis as X = diag(tdiag)^-1 . Vinv . [D | mI]
    dmat = _coboundary_matrix(q, pairs)
    rel = [row + [0] * npairs for row in dmat]
    for i in range(npairs):
        rel[i][n + i] = m
    x = snf.mat_mul(vinv, rel)
    for i in range(npairs):
        t = tdiag[i]
        if t != 1:
            for j in range(len(x[i])):
                v = x[i][j]
                if v % t:
                    raise AssertionError("relation lattice not inside kernel")
                x[i][j] = v // t

    qform = snf.smith_normal_form(x, want=("Uinv",))
    if qform.rank != npairs:
        raise AssertionError("relation lattice should have full rank")

    factors = []
    reps = []
    uinv = qform.Uinv
    for i, d in enumerate(qform.diag):
        if d == 1:
            continue
        factors.append(d)
        # generator = K-basis times column i of Uinv, i.e. V . diag . Uinv[:, i]
        w = [tdiag[r] * uinv[r][i] for r in range(npairs)]
        vec = _apply_v(form, npairs, w)
        vals = [[0] * n for _ in range(n)]
        for k, (a, b) in enumerate(pairs):
            vals[a][b] = vec[k] % m
        reps.append(cocycle(q, m, vals))

    # SNF already orders the factors by the divisibility chain
    group = CohomologyGroup(m=m, invariant_factors=tuple(factors),
                            representatives=tuple(reps))

    order = cocycle_space_order(q, m) // coboundary_space_order(q, m)
    if order != group.order:
        raise AssertionError("invariant factors disagree with space orders")
    _verify_independent(q, group)
    return group


def _apply_v(form, npairs, w):
    """V . w where V is the (untracked) inverse of form.Vinv; solved via Vinv."""
    if form is None:
        return list(w)
    # V = Vinv^-1 is unimodular; solve Vinv * vec = w exactly by elimination
    return _solve_unimodular(form.Vinv, w)


def _solve_unimodular(a, b):
    """Solve a x = b for unimodular integer a (exact, destructive on copies)."""
    k = len(a)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(k):
        piv = None
        for r in range(col, k):
            if m[r][col] != 0:
                if piv is None or abs(m[r][col]) < abs(m[piv][col]):
                    piv = r
        if piv is None:
            raise AssertionError("matrix is singular, expected unimodular")
        m[col], m[piv] = m[piv], m[col]
        while True:
            done = True
            for r in range(col + 1, k):
                if m[r][col]:
                    qq = m[r][col] // m[col][col]
                    if qq:
                        for j in range(col, k + 1):
                            m[r][j] -= qq * m[col][j]
                    if m[r][col]:
                        m[col], m[r] = m[r], m[col]
                        done = False
            if done:
                break
    x = [0] * k
    for r in range(k - 1, -1, -1):
        s = m[r][k] - sum(m[r][j] * x[j] for j in range(r + 1, k))
        if s % m[r][r]:
            raise AssertionError("unimodular solve lost exactness")
        x[r] = s // m[r][r]
    return x


def _verify_independent(q, group):
    """Every nonzero combination of the representatives must miss the
    coboundary space; totals are tiny so the check is exhaustive."""
    k = len(group.representatives)
    if k == 0:
        return
    from itertools import product as iproduct

    for combo in iproduct(*(range(d) for d in group.invariant_factors)):
        if not any(combo):
            continue
        acc = Cocycle2.zero(q.n, group.m)
        for c, rep in zip(combo, group.representatives):
            acc = acc.add(rep.scale(c))
        if _is_coboundary(q, acc):
            raise AssertionError(
                f"representatives are dependent at combination {combo}")
    for d, rep in zip(group.invariant_factors, group.representatives):
        if not _is_coboundary(q, rep.scale(d)):
            raise AssertionError("representative order exceeds its factor")


def _is_coboundary(q, phi):
    n, m = q.n, phi.m
    pairs, _ = _pair_index(n)
    if not pairs:
        return True
    d = _coboundary_matrix(q, pairs)
    form = snf.smith_normal_form(d, want=("U",))
    target = [phi.values[a][b] for (a, b) in pairs]
    c = [sum(form.U[i][j] * target[j] for j in range(len(pairs)))
         for i in range(len(pairs))]
    for i in range(len(pairs)):
        if i < form.rank:
            if c[i] % gcd(form.diag[i], m):
                return False
        elif c[i] % m:
            return False
    return True


def cohomologous(q, phi1, phi2):
    """True iff phi1 - phi2 is a coboundary on q."""
    if (phi1.n, phi1.m) != (phi2.n, phi2.m) or phi1.n != q.n:
        raise ShapeMismatch("cocycles live on different spaces")
    return _is_coboundary(q, phi1.add(phi2.scale(-1)))


def cocycle_power(psi, d):
    """Reindex d*psi into Z_{n/d} along the isomorphism d Z_n = Z_{n/d}.

    Concretely the result is psi reduced mod m = n/d, which is again a
    cocycle; requires d | n.
    """
    n = psi.m
    if d < 1 or n % d:
        raise DNotDividesModulus(f"{d} does not divide the modulus {n}")
    m = n // d
    return Cocycle2(psi.n, m, tuple(
        tuple(v % m for v in row) for row in psi.values))
