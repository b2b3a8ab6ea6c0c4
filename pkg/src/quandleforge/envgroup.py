"""Enveloping groups of quandles and the conjugation-quandle criterion.

The enveloping group of a quandle has one generator per element and the
conjugation relations  x_j^-1 x_i x_j = x_{i*j}.  Adjoining x_i^{n_i}, where
n_i is the order of the right translation by i, gives the finite enveloping
group; coset enumeration over the trivial subgroup realizes it as a
permutation group on itself (the regular action), and a connected quandle is
a conjugation quandle exactly when the generator images stay pairwise
distinct there.

Words are tuples of signed 1-based generator indices.  Enumeration is
HLT-style with union-find coincidence handling and deterministic numbering
by discovery order; completed tables get a full verification pass (every
column a permutation, every relator tracing trivially from every coset).
"""

from dataclasses import dataclass

from ._kernels import coset_enumeration
from .core import is_connected, right_translation
from .errors import Capped

DEFAULT_MAX_COSETS = 10 ** 6


@dataclass(frozen=True)
class Presentation:
    """A finite group presentation; relators are words over signed 1-based
    generator indices."""

    ngens: int
    relators: tuple

    def __post_init__(self):
        for rel in self.relators:
            if len(rel) == 0:
                raise ValueError("relators must be nonempty")
            for g in rel:
                if g == 0 or abs(g) > self.ngens:
                    raise ValueError(f"bad generator {g}")


@dataclass(frozen=True)
class CosetTable:
    """A completed coset table: the regular action of the presented group.

    action[c][2*i] is c moved by generator i, action[c][2*i + 1] by its
    inverse.  size is the live coset count, i.e. the group order.
    """

    presentation: Presentation
    size: int
    action: tuple
    status: str = "complete"

    def generator_column(self, i):
        """The permutation induced by generator i on the cosets."""
        return tuple(row[2 * i] for row in self.action)

    def trace(self, coset, word):
        for g in word:
            col = 2 * (g - 1) if g > 0 else 2 * (-g - 1) + 1
            coset = self.action[coset][col]
        return coset


def _to_columns(word):
    return tuple(2 * (g - 1) if g > 0 else 2 * (-g - 1) + 1 for g in word)


def enveloping_presentation(q, finite=True):
    """The conjugation presentation of q's enveloping group; with finite=True
    the power relators that make it the finite enveloping group are added."""
    rels = []
    for i in range(q.n):
        for j in range(q.n):
            rels.append((-(j + 1), i + 1, j + 1, -(q.table[i][j] + 1)))
    if finite:
        for i in range(q.n):
            rels.append((i + 1,) * right_translation(q, i).order())
    return Presentation(ngens=q.n, relators=tuple(rels))


def todd_coxeter(p, max_cosets=DEFAULT_MAX_COSETS):
    """Enumerate the cosets of the trivial subgroup; the live count is the
    group order.  Raises Capped when the allocation budget is exceeded, and
    verifies the completed table before returning it."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    complete, result = coset_enumeration(
        p.ngens, [_to_columns(r) for r in p.relators], max_cosets)
    if not complete:
        raise Capped(max_cosets, result)
    table = CosetTable(presentation=p, size=len(result),
                       action=tuple(tuple(row) for row in result))
    verify_coset_table(table)
    return table


def verify_coset_table(t):
    """Full verification pass: permutation columns, inverse consistency, and
    every relator tracing to its start from every coset."""
    size = t.size
    ng = t.presentation.ngens
    for i in range(ng):
        fwd = [row[2 * i] for row in t.action]
        bwd = [row[2 * i + 1] for row in t.action]
        if sorted(fwd) != list(range(size)) or sorted(bwd) != list(range(size)):
            raise AssertionError(f"generator {i} does not act by a permutation")
        if any(bwd[fwd[c]] != c for c in range(size)):
            raise AssertionError(f"generator {i} columns are not inverse")
    for rel in t.presentation.relators:
        for c in range(size):
            if t.trace(c, rel) != c:
                raise AssertionError(
                    f"relator {rel} does not close at coset {c}")


def rho_injective(q, max_cosets=DEFAULT_MAX_COSETS):
    """Whether the natural map into the finite enveloping group is injective:
    the generator images in the regular action must be pairwise distinct."""
    t = todd_coxeter(enveloping_presentation(q, finite=True), max_cosets)
    cols = [t.generator_column(i) for i in range(q.n)]
    return len(set(cols)) == q.n


def generator_collision(q, max_cosets=DEFAULT_MAX_COSETS):
    """A pair (i, j) of distinct elements with equal images in the finite
    enveloping group, or None when the map is injective."""
    t = todd_coxeter(enveloping_presentation(q, finite=True), max_cosets)
    seen = {}
    for i in range(q.n):
        col = t.generator_column(i)
        if col in seen:
            return (seen[col], i)
        seen[col] = i
    return None


def is_conjugation_quandle(q, max_cosets=DEFAULT_MAX_COSETS):
    """'yes' / 'no' for connected quandles by the injectivity criterion;
    'not_applicable' for disconnected ones (the criterion is stated for
    connected quandles only)."""
    if not is_connected(q):
        return "not_applicable"
    return "yes" if rho_injective(q, max_cosets) else "no"


def enveloping_group_order(q, finite=True, max_cosets=DEFAULT_MAX_COSETS):
    return todd_coxeter(enveloping_presentation(q, finite), max_cosets).size


def regular_group(t):
    """Rebuild the enumerated group as an explicit multiplication table.

    Cosets over the trivial subgroup are the group elements; words reaching
    each coset from 0 are found by breadth-first search, and i*j traces j's
    word from i.  Returns the group plus the element index of each generator.
    Quadratic in the group order, so keep it for small enumerations.
    """
    from .constructions import finite_group

    size = t.size
    ng = t.presentation.ngens
    words = {0: ()}
    frontier = [0]
    while frontier:
        nxt = []
        for c in frontier:
            for g in range(1, ng + 1):
                for step in (g, -g):
                    d = t.trace(c, (step,))
                    if d not in words:
                        words[d] = words[c] + (step,)
                        nxt.append(d)
        frontier = nxt
    if len(words) != size:
        raise AssertionError("coset table is not transitive")
    mult = [[t.trace(i, words[j]) for j in range(size)] for i in range(size)]
    g = finite_group(mult)
    gens = tuple(t.trace(0, (i + 1,)) for i in range(ng))
    return g, gens
