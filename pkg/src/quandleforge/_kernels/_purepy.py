"""Pure-Python backend for the hot kernels.

Coloring enumeration is vectorized with numpy over blocks of top
assignments; coset enumeration is plain Python (inherently sequential).
Results, including their order, must match _speedups exactly: colorings come
back in lexicographic top-tuple order, cosets in discovery order.
"""

import numpy as np

_BLOCK = 1 << 18


def braid_closure_colorings(table, n, strands, word, relax_first=False):
    """Top tuples whose propagation through the braid word closes up.

    table: flat row-major n*n quandle table (a*b at index a*n+b).
    word: signed 1-based braid generators.
    Propagation at a positive letter with incoming (a, b) is (b, a*b); at a
    negative letter with incoming (c, d) it is (Rc^-1(d), c).  The closure
    constraint bottom == top is checked at every position, or at positions
    1.. when relax_first is set (the 1-tangle case).
    """
    tab = np.asarray(table, dtype=np.int64)
    inv = np.empty(n * n, dtype=np.int64)
    for c in range(n):
        for q in range(n):
            inv[c * n + tab[q * n + c]] = q

    moves = [(abs(g) - 1, 1 if g > 0 else -1) for g in word]
    total = n ** strands
    out = []
    start_col = 1 if relax_first else 0

    for lo in range(0, total, _BLOCK):
        hi = min(lo + _BLOCK, total)
        idx = np.arange(lo, hi, dtype=np.int64)
        tops = np.empty((hi - lo, strands), dtype=np.int64)
        for j in range(strands):
            tops[:, j] = (idx // n ** (strands - 1 - j)) % n
        state = tops.copy()
        for p, sign in moves:
            a = state[:, p].copy()
            b = state[:, p + 1].copy()
            if sign > 0:
                state[:, p] = b
                state[:, p + 1] = tab[a * n + b]
            else:
                state[:, p] = inv[a * n + b]
                state[:, p + 1] = a
        ok = np.all(state[:, start_col:] == tops[:, start_col:], axis=1)
        for row in tops[ok].tolist():
            out.append(tuple(row))
    return out


def coset_enumeration(ngens, relators, max_cosets):
    """HLT coset enumeration of a presentation over the trivial subgroup.

    relators are words over column indices 0..2*ngens-1 (2i = generator i,
    2i+1 = its inverse); inverse-cancellation relators are added here.  New
    cosets are numbered in discovery order and coincidences are merged with
    union-find, so the output is deterministic.

    Returns (True, table) on completion, where table[c] lists the 2*ngens
    neighbors of live coset c after renumbering, or (False, allocated) once
    more than max_cosets cosets have been allocated.
    """
    width = 2 * ngens
    rels = []
    for i in range(ngens):
        rels.append((2 * i, 2 * i + 1))
        rels.append((2 * i + 1, 2 * i))
    rels.extend(tuple(r) for r in relators)

    parent = [0]
    nbr = [[-1] * width]

    def find(c):
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def follow(c, d):
        c = find(c)
        row = nbr[c]
        if row[d] < 0:
            new = len(parent)
            parent.append(new)
            nbr.append([-1] * width)
            row[d] = new
            return new
        return find(row[d])

    def unify(a, b):
        stack = [(a, b)]
        while stack:
            a, b = stack.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            parent[b] = a
            ra, rb = nbr[a], nbr[b]
            for d in range(width):
                if ra[d] < 0:
                    ra[d] = rb[d]
                elif rb[d] >= 0:
                    stack.append((ra[d], rb[d]))

    visit = 0
    while visit < len(parent):
        if find(visit) == visit:
            for rel in rels:
                cur = visit
                for d in rel:
                    cur = follow(cur, d)
                unify(cur, visit)
                if len(parent) > max_cosets:
                    return False, len(parent)
                if find(visit) != visit:
                    break
        visit += 1

    live = [c for c in range(len(parent)) if find(c) == c]
    renum = {c: i for i, c in enumerate(live)}
    table = [[renum[find(nbr[c][d])] for d in range(width)] for c in live]
    return True, table
