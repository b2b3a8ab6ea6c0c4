"""The quandle families: dihedral / Alexander quandles, generalized Alexander
quandles over a group automorphism, conjugacy-class quandles, and abelian
extensions by a Z_m-valued 2-cocycle.

Coefficient groups are always cyclic Z_m written additively (identity 0);
that covers every computation this package targets.  Groups are raw
multiplication tables with helper constructors for cyclic and symmetric
groups; group multiplication composes left to right like permutations.
"""

from dataclasses import dataclass
from itertools import permutations
from math import gcd

import numpy as np

from .core import QuandleMap, validate_quandle
from .errors import NotACocycle, NotAUnit


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group as a multiplication table; validated on construction."""

    order: int
    mult: tuple
    identity: int
    inverse: tuple

    def op(self, a, b):
        return self.mult[a][b]

    def conj(self, a, b):
        """b^-1 * a * b."""
        m = self.mult
        return m[m[self.inverse[b]][a]][b]


def finite_group(mult_table):
    """Validate associativity / identity / inverses and wrap the table."""
    k = len(mult_table)
    m = np.asarray(mult_table, dtype=np.int64)
    if m.shape != (k, k) or m.min() < 0 or m.max() >= k:
        raise ValueError("multiplication table must be k x k over 0..k-1")
    # (ab)c == a(bc) by broadcasting
    left = m[m, :]
    right = m[:, m]        # right[a,b,c] = m[a, m[b,c]]
    if not np.array_equal(left, right):
        raise ValueError("multiplication is not associative")
    ident = None
    for e in range(k):
        if all(m[e][a] == a and m[a][e] == a for a in range(k)):
            ident = e
            break
    if ident is None:
        raise ValueError("no identity element")
    inv = [-1] * k
    for a in range(k):
        for b in range(k):
            if m[a][b] == ident and m[b][a] == ident:
                inv[a] = b
                break
        if inv[a] < 0:
            raise ValueError(f"element {a} has no inverse")
    return FiniteGroup(order=k,
                       mult=tuple(tuple(int(x) for x in row) for row in m),
                       identity=ident, inverse=tuple(inv))


def cyclic_group(k):
    return finite_group([[(a + b) % k for b in range(k)] for a in range(k)])


def symmetric_group(degree):
    """Sym(degree) on 0..degree-1; elements are permutation tuples in
    lexicographic order, product applies the left factor first."""
    if not 1 <= degree <= 5:
        raise ValueError("symmetric_group supports degrees 1..5")
    elems = sorted(permutations(range(degree)))
    index = {p: i for i, p in enumerate(elems)}
    mult = [[index[tuple(q[i] for i in p)] for q in elems] for p in elems]
    g = finite_group(mult)
    return g, tuple(elems)


@dataclass(frozen=True)
class GroupAutomorphism:
    group: FiniteGroup
    images: tuple

    def __post_init__(self):
        g, img = self.group, self.images
        if sorted(img) != list(range(g.order)):
            raise ValueError("automorphism images must be a bijection")
        for a in range(g.order):
            for b in range(g.order):
                if img[g.mult[a][b]] != g.mult[img[a]][img[b]]:
                    raise ValueError(
                        f"not multiplicative at ({a}, {b})")

    def __call__(self, a):
        return self.images[a]


def conjugation_automorphism(g, x):
    """The inner automorphism a -> x^-1 a x."""
    return GroupAutomorphism(g, tuple(g.conj(a, x) for a in range(g.order)))


def inversion_automorphism(g):
    """a -> a^-1; an automorphism exactly when g is abelian."""
    return GroupAutomorphism(g, g.inverse)


def dihedral_quandle(n):
    """a*b = 2b - a mod n."""
    if n < 1:
        raise ValueError("order must be positive")
    return validate_quandle(
        n, [[(2 * b - a) % n for b in range(n)] for a in range(n)])


def alexander_quandle(n, t):
    """a*b = t*a + (1-t)*b mod n for a unit t; t = n-1 is the dihedral case."""
    if gcd(t % n, n) != 1:
        raise NotAUnit(f"{t} is not a unit mod {n}")
    return validate_quandle(
        n, [[(t * a + (1 - t) * b) % n for b in range(n)] for a in range(n)])


def trivial_quandle(n):
    return validate_quandle(n, [[a] * n for a in range(n)])


def generalized_alexander_quandle(g, f):
    """The quandle on the group g with x*y = f(x y^-1) y."""
    if f.group is not g and f.group != g:
        raise ValueError("automorphism is for a different group")
    k = g.order
    table = [[g.mult[f(g.mult[x][g.inverse[y]])][y] for y in range(k)]
             for x in range(k)]
    return validate_quandle(k, table)


def conjugation_quandle(g, x):
    """The conjugacy class of x under a*b = b^-1 a b, with labels mapping
    quandle indices back to group elements (ascending)."""
    cls = sorted({g.conj(x, h) for h in range(g.order)})
    pos = {v: i for i, v in enumerate(cls)}
    k = len(cls)
    table = [[pos[g.conj(cls[a], cls[b])] for b in range(k)] for a in range(k)]
    return validate_quandle(k, table), tuple(cls)


def extension_table(x, m, values):
    """The raw table on X x Z_m for (x,a)*(y,b) = (x*y, a + values[x][y]).

    No cocycle check: the table is a quandle exactly when values is a
    diagonal-zero 2-cocycle, which tests exercise both ways.  Pairs are
    encoded as x*m + a.
    """
    n = x.n
    size = n * m
    table = [[0] * size for _ in range(size)]
    for a in range(n):
        for lev in range(m):
            row = table[a * m + lev]
            for b in range(n):
                base = x.table[a][b] * m + (lev + values[a][b]) % m
                for lev2 in range(m):
                    row[b * m + lev2] = base
    return table


def abelian_extension(x, m, phi):
    """The extension quandle E(X, Z_m, phi) plus the projection onto X.

    phi may be a Cocycle2 or a raw n x n value table; it is checked to be a
    diagonal-zero 2-cocycle (NotACocycle with a witness otherwise).
    """
    from .cohomology import cocycle_witness

    values = getattr(phi, "values", phi)
    if getattr(phi, "m", m) != m or len(values) != x.n:
        raise NotACocycle(None, "cocycle shape does not match the quandle")
    w = cocycle_witness(x, m, values)
    if w is not None:
        raise NotACocycle(w)
    e = validate_quandle(x.n * m, extension_table(x, m, values))
    proj = QuandleMap(e, x, tuple(i // m for i in range(e.n)))
    return e, proj
