"""Finite quandles and their structural invariants.

Conventions, used everywhere in this package:

* elements are 0-based indices; ``table[a][b]`` is the product ``a * b``
  (row = left argument),
* the right translation by ``a`` sends ``x`` to ``x * a``, i.e. it is
  column ``a`` of the table,
* permutations compose left to right: ``(p * q)(x) = q(p(x))``.  Under this
  convention the translations satisfy ``R[a * b] == R[b].inverse() * R[a] * R[b]``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (AxiomViolation, GroupTooLarge, NonIntegralIndex,
                     NotAHomomorphism, NotEpimorphism)

DEFAULT_GROUP_CAP = 10 ** 7


@dataclass(frozen=True)
class Permutation:
    """A bijection of 0..n-1, stored as the tuple of images."""

    images: tuple

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a bijection: {self.images}")

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        """Left-to-right composition: apply self first, then other."""
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def order(self):
        k = 1
        p = self.images
        cur = p
        ident = tuple(range(len(p)))
        while cur != ident:
            cur = tuple(p[i] for i in cur)
            k += 1
        return k

    def cycle_type(self):
        n = len(self.images)
        seen = [False] * n
        lens = []
        for i in range(n):
            if seen[i]:
                continue
            l, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                l += 1
            lens.append(l)
        return tuple(sorted(lens))

    @staticmethod
    def identity(n):
        return Permutation(tuple(range(n)))


@dataclass(frozen=True)
class PermGroup:
    """A permutation group with its full element list (desk scale)."""

    degree: int
    generators: tuple
    elements: tuple

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, p):
        return p.images in self._index

    @property
    def _index(self):
        return {e.images for e in self.elements}

    def orbit(self, x):
        seen = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g in self.generators:
                    z = g.images[y]
                    if z not in seen:
                        seen.add(z)
                        nxt.append(z)
            frontier = nxt
        return frozenset(seen)


@dataclass(frozen=True)
class Quandle:
    """An order-n quandle given by its Cayley table.

    Construct through validate_quandle (or the constructors in
    quandleforge.constructions) so the axioms are guaranteed.
    """

    n: int
    table: tuple

    def op(self, a, b):
        return self.table[a][b]

    def column(self, a):
        """The right translation by a, as a raw image tuple."""
        return tuple(row[a] for row in self.table)

    def rows_as_lists(self):
        return [list(r) for r in self.table]

    def __repr__(self):
        return f"Quandle(n={self.n})"


@dataclass(frozen=True)
class QuandleMap:
    """A quandle homomorphism; verified on construction."""

    source: Quandle
    target: Quandle
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.source.n:
            raise NotAHomomorphism("image list has wrong length")
        if any(not (0 <= v < self.target.n) for v in self.images):
            raise NotAHomomorphism("image out of range")
        src, tgt, img = self.source.table, self.target.table, self.images
        for a in range(self.source.n):
            for b in range(self.source.n):
                if img[src[a][b]] != tgt[img[a]][img[b]]:
                    raise NotAHomomorphism(
                        f"f({a}*{b}) != f({a})*f({b})")

    def __call__(self, x):
        return self.images[x]

    def is_epimorphism(self):
        return len(set(self.images)) == self.target.n

    def is_bijective(self):
        return self.source.n == self.target.n and self.is_epimorphism()

    def fibers(self):
        out = {}
        for x, v in enumerate(self.images):
            out.setdefault(v, []).append(x)
        return out

    def then(self, other):
        """Composition self followed by other."""
        if other.source is not self.target and other.source != self.target:
            raise NotAHomomorphism("composition target/source mismatch")
        return QuandleMap(self.source, other.target,
                          tuple(other.images[v] for v in self.images))


def validate_quandle(n, table):
    """Check the three quandle axioms and return the validated Quandle.

    Raises AxiomViolation(kind, witness) on the first failure found: kind is
    'idempotency' (witness a), 'invertibility' (witness the bad column), or
    'distributivity' (witness the triple a, b, c).
    """
    if n <= 0:
        raise ValueError("order must be positive")
    if len(table) != n or any(len(r) != n for r in table):
        raise ValueError("table must be n x n")
    t = np.asarray(table, dtype=np.int64)
    if t.min() < 0 or t.max() >= n:
        raise ValueError("entries must lie in 0..n-1")

    diag = np.diagonal(t)
    bad = np.nonzero(diag != np.arange(n))[0]
    if bad.size:
        raise AxiomViolation("idempotency", int(bad[0]))

    for b in range(n):
        if len(set(int(x) for x in t[:, b])) != n:
            raise AxiomViolation("invertibility", b)

    # (a*b)*c == (a*c)*(b*c), all triples at once
    left = t[t, :]                      # left[a,b,c] = t[t[a,b], c]
    right = t[t[:, None, :], t[None, :, :]]
    if not np.array_equal(left, right):
        a, b, c = (int(v) for v in np.argwhere(left != right)[0])
        raise AxiomViolation("distributivity", (a, b, c))

    return Quandle(n=n, table=tuple(tuple(int(x) for x in row) for row in table))


def right_translation(q, a):
    """The automorphism x -> x*a."""
    if not 0 <= a < q.n:
        raise ValueError("element out of range")
    return Permutation(q.column(a))


def _closure(degree, gen_tuples, cap):
    ident = tuple(range(degree))
    seen = {ident: None}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gen_tuples:
                c = tuple(g[i] for i in p)
                if c not in seen:
                    if len(seen) >= cap:
                        raise GroupTooLarge(
                            f"group closure exceeded cap {cap}")
                    seen[c] = None
                    nxt.append(c)
        frontier = nxt
    return list(seen)


def inner_group(q, cap=DEFAULT_GROUP_CAP):
    """The group generated by all right translations, with its full element
    list in discovery order (identity first)."""
    gens = [q.column(a) for a in range(q.n)]
    elements = _closure(q.n, gens, cap)
    return PermGroup(degree=q.n,
                     generators=tuple(Permutation(g) for g in gens),
                     elements=tuple(Permutation(e) for e in elements))


def is_connected(q):
    """True iff the translations act transitively (single orbit)."""
    gens = [q.column(a) for a in range(q.n)]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen) == q.n


def is_faithful(q):
    """True iff distinct elements have distinct right translations."""
    return len({q.column(a) for a in range(q.n)}) == q.n


def inn_image(q):
    """The quandle of distinct right translations, plus the projection onto it.

    Elements of the image are numbered by first occurrence.  The operation is
    induced by representatives, which is well defined because translations of
    products depend only on the translations of the factors.
    """
    index = {}
    reps = []
    img = []
    for a in range(q.n):
        col = q.column(a)
        if col not in index:
            index[col] = len(reps)
            reps.append(a)
        img.append(index[col])
    m = len(reps)
    table = [[img[q.op(reps[i], reps[j])] for j in range(m)] for i in range(m)]
    image_q = validate_quandle(m, table)
    return image_q, QuandleMap(q, image_q, tuple(img))


def is_covering(f):
    """True iff f(x) == f(y) forces a*x == a*y for all a.

    f must be an epimorphism (NotEpimorphism otherwise).
    """
    if not f.is_epimorphism():
        raise NotEpimorphism("covering test requires an epimorphism")
    q = f.source
    for fiber in f.fibers().values():
        col0 = q.column(fiber[0])
        for y in fiber[1:]:
            if q.column(y) != col0:
                return False
    return True


def _iso_profiles(q):
    cols = [q.column(a) for a in range(q.n)]
    mult = {}
    for c in cols:
        mult[c] = mult.get(c, 0) + 1
    return [(Permutation(cols[a]).cycle_type(), mult[cols[a]])
            for a in range(q.n)]


def are_isomorphic(q1, q2):
    """Search for an isomorphism q1 -> q2; returns a QuandleMap or None.

    Backtracking over elements, pruned by per-element profiles (cycle type of
    the translation and its multiplicity among the columns).
    """
    if q1.n != q2.n:
        return None
    p1, p2 = _iso_profiles(q1), _iso_profiles(q2)
    if sorted(p1) != sorted(p2):
        return None
    n = q1.n
    candidates = [[b for b in range(n) if p2[b] == p1[a]] for a in range(n)]
    # rarest profiles first to fail fast
    order = sorted(range(n), key=lambda a: len(candidates[a]))
    img = [-1] * n
    used = [False] * n
    t1, t2 = q1.table, q2.table

    def complete():
        # pruning checks only factor pairs; verify the whole table at leaves
        return all(img[t1[a][b]] == t2[img[a]][img[b]]
                   for a in range(n) for b in range(n))

    def extend(k):
        if k == n:
            return complete()
        a = order[k]
        for b in candidates[a]:
            if used[b]:
                continue
            ok = True
            for c in order[:k]:
                d = img[c]
                ac, ca = img[t1[a][c]], img[t1[c][a]]
                if (ac != -1 and ac != t2[b][d]) or (ca != -1 and ca != t2[d][b]):
                    ok = False
                    break
            if not ok:
                continue
            img[a] = b
            used[b] = True
            if extend(k + 1):
                return True
            img[a] = -1
            used[b] = False
        return False

    if not extend(0):
        return None
    return QuandleMap(q1, q2, tuple(img))


def product_quandle(q1, q2):
    """Componentwise operation on pairs, encoded as a*len(q2) + b."""
    n1, n2 = q1.n, q2.n
    n = n1 * n2
    table = [[0] * n for _ in range(n)]
    for a1 in range(n1):
        for a2 in range(n2):
            i = a1 * n2 + a2
            row = table[i]
            for b1 in range(n1):
                rb1 = q1.table[a1][b1]
                for b2 in range(n2):
                    row[b1 * n2 + b2] = rb1 * n2 + q2.table[a2][b2]
    return validate_quandle(n, table)


@dataclass(frozen=True)
class IndexReport:
    index: int
    fibers_equal: bool


def epimorphism_index(f):
    """|source| / |target| for an epimorphism, plus whether all fibers have
    the same cardinality.  NonIntegralIndex if the quotient is not integral."""
    if not f.is_epimorphism():
        raise NotEpimorphism("index defined for epimorphisms only")
    ns, nt = f.source.n, f.target.n
    if ns % nt:
        raise NonIntegralIndex(f"{ns} not a multiple of {nt}")
    sizes = {len(v) for v in f.fibers().values()}
    return IndexReport(index=ns // nt, fibers_equal=len(sizes) == 1)
