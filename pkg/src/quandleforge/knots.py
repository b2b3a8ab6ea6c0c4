"""Knots and 1-tangles as braid closures; colorings and the cocycle state sum.

Diagram model: a braid on s strands, all oriented downward, closed by the
trace (bottom of position p returns to top of position p).  The word is a
sequence of nonzero signed integers; letter g acts at positions |g|-1, |g|.

Propagation of colors, fixed once and certified by the braid-relation and
Markov tests rather than by pictures:

* positive letter, incoming (a, b):  outgoing (b, a*b), source pair (a, b),
  weight +phi(a, b);
* negative letter, incoming (c, d):  outgoing (Rc^-1(d), c), source pair
  (Rc^-1(d), c), weight -phi(Rc^-1(d), c).

A 1-tangle is the knot cut open at the closure arc of position 0; its
endpoints are the top of position 0 (y0) and the bottom of position 0 (y1).
"""

from dataclasses import dataclass

from ._kernels import braid_closure_colorings
from .core import Permutation, is_covering
from .errors import (BadGenerator, EnumerationTooLarge, FiberMismatch,
                     NotACovering, NotAKnot, TheoremViolation)

DEFAULT_ASSIGNMENT_CAP = 10 ** 8


@dataclass(frozen=True)
class BraidKnot:
    """A braid word whose closure is a knot (single component)."""

    name: str
    strands: int
    word: tuple
    closure_perm: tuple   # bottom position -> top position of the same strand

    def crossings(self):
        return len(self.word)

    def writhe(self):
        return sum(1 if g > 0 else -1 for g in self.word)

    def __repr__(self):
        return f"BraidKnot({self.name!r}, s={self.strands}, word={list(self.word)})"


@dataclass(frozen=True)
class Tangle:
    """The 1-tangle of a knot: the closure arc at position 0 is cut."""

    knot: BraidKnot

    @property
    def name(self):
        return self.knot.name


@dataclass(frozen=True)
class Coloring:
    """A quandle coloring of a braid diagram.

    top/bottom are the color tuples at the top and bottom of the braid;
    source_pairs holds one (x, y, sign) per crossing in word order.  For
    tangles, y0/y1 are the endpoint colors of the cut arc.
    """

    top: tuple
    bottom: tuple
    source_pairs: tuple

    @property
    def y0(self):
        return self.top[0]

    @property
    def y1(self):
        return self.bottom[0]


@dataclass(frozen=True)
class GroupRingElt:
    """Sum of non-negative multiples of powers of u, the generator of Z_m."""

    m: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.m:
            raise ValueError("coefficient vector must have length m")

    def total(self):
        return sum(self.coeffs)

    def __str__(self):
        terms = [f"{c}*u^{j}" for j, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def parse_braid(name, strands, word):
    """Validate a braid word and check its closure is a knot.

    BadGenerator for out-of-range letters, NotAKnot when the closure has
    more than one component.
    """
    if strands < 1:
        raise BadGenerator("strand count must be positive")
    for g in word:
        if g == 0 or abs(g) > strands - 1:
            raise BadGenerator(f"letter {g} invalid on {strands} strands")
    cur = list(range(strands))
    for g in word:
        p = abs(g) - 1
        cur[p], cur[p + 1] = cur[p + 1], cur[p]
    # follow the closure starting at top 0; it must visit every strand
    seen = 1
    pos = cur.index(0)
    while pos != 0:
        pos = cur.index(pos)
        seen += 1
    if seen != strands:
        raise NotAKnot(f"closure of {name} has more than one component")
    return BraidKnot(name=name, strands=strands, word=tuple(word),
                     closure_perm=tuple(cur))


def _inverse_translation(q, c, d):
    # the unique x with x*c = d
    col = q.column(c)
    return col.index(d)


def _propagate(q, word, top):
    """Replay the propagation, recording bottom colors and source pairs."""
    state = list(top)
    pairs = []
    for g in word:
        p = abs(g) - 1
        a, b = state[p], state[p + 1]
        if g > 0:
            state[p], state[p + 1] = b, q.table[a][b]
            pairs.append((a, b, 1))
        else:
            x = _inverse_translation(q, a, b)
            state[p], state[p + 1] = x, a
            pairs.append((x, a, -1))
    return tuple(state), tuple(pairs)


def _raw_colorings(q, strands, word, relax_first, cap):
    space = q.n ** strands
    if space > cap:
        raise EnumerationTooLarge(
            f"{space} top assignments exceed the cap {cap}")
    flat = [v for row in q.table for v in row]
    return braid_closure_colorings(flat, q.n, strands, list(word),
                                   relax_first=relax_first)


def enumerate_colorings(q, k, cap=DEFAULT_ASSIGNMENT_CAP):
    """All colorings of the closed braid diagram by q."""
    tops = _raw_colorings(q, k.strands, k.word, False, cap)
    out = []
    for top in tops:
        bottom, pairs = _propagate(q, k.word, top)
        out.append(Coloring(top=top, bottom=bottom, source_pairs=pairs))
    return out


def tangle_colorings(q, t, cap=DEFAULT_ASSIGNMENT_CAP):
    """Colorings of the 1-tangle: the closure constraint is dropped at the
    cut arc, so y0 and y1 may differ."""
    k = t.knot
    tops = _raw_colorings(q, k.strands, k.word, True, cap)
    out = []
    for top in tops:
        bottom, pairs = _propagate(q, k.word, top)
        out.append(Coloring(top=top, bottom=bottom, source_pairs=pairs))
    return out


def coloring_weight(phi, coloring):
    """Sum of signed cocycle values over the crossings, in Z_m."""
    w = 0
    for (x, y, sign) in coloring.source_pairs:
        w += sign * phi.values[x][y]
    return w % phi.m


def state_sum(q, phi, k, cap=DEFAULT_ASSIGNMENT_CAP):
    """The cocycle invariant: one u^weight per coloring of the closure."""
    coeffs = [0] * phi.m
    for c in enumerate_colorings(q, k, cap=cap):
        coeffs[coloring_weight(phi, c)] += 1
    return GroupRingElt(m=phi.m, coeffs=tuple(coeffs))


def is_constant(e):
    """True iff every coefficient away from u^0 vanishes."""
    return all(c == 0 for c in e.coeffs[1:])


def end_monochromatic(q, t, cap=DEFAULT_ASSIGNMENT_CAP):
    """True iff every tangle coloring gives both endpoints the same color."""
    return all(c.y0 == c.y1 for c in tangle_colorings(q, t, cap=cap))


def endpoints_same_translation(q, t, cap=DEFAULT_ASSIGNMENT_CAP):
    """True iff R_{y0} == R_{y1} for every tangle coloring.

    This must hold for every quandle, because our tangles are classical by
    construction; a failure here is an implementation bug.
    """
    return all(q.column(c.y0) == q.column(c.y1)
               for c in tangle_colorings(q, t, cap=cap))


def lift_coloring(f, t, coloring, y, cap=DEFAULT_ASSIGNMENT_CAP):
    """The unique lift of a base tangle coloring along a covering f, with top
    cut color y over coloring.y0.

    Uniqueness and existence are certified by exhausting all source
    colorings; a count other than one contradicts the covering lifting
    property and raises TheoremViolation.
    """
    if not is_covering(f):
        raise NotACovering("lifting requires a covering map")
    if f.images[y] != coloring.y0:
        raise FiberMismatch(f"f({y}) != base color {coloring.y0}")
    lifts = [c for c in tangle_colorings(f.source, t, cap=cap)
             if c.top[0] == y
             and tuple(f.images[v] for v in c.top) == coloring.top]
    if len(lifts) != 1:
        raise TheoremViolation(
            f"expected exactly one lift, found {len(lifts)}")
    return lifts[0]


def propagation_map(q, strands, word):
    """The permutation of Q^strands induced by the word; tuples are encoded
    base |Q| with position 0 most significant.  Used by the braid-relation
    soundness tests."""
    n = q.n
    size = n ** strands
    images = []
    for idx in range(size):
        top = tuple((idx // n ** (strands - 1 - j)) % n for j in range(strands))
        bottom, _ = _propagate(q, word, top)
        images.append(sum(v * n ** (strands - 1 - j) for j, v in enumerate(bottom)))
    return Permutation(tuple(images))
