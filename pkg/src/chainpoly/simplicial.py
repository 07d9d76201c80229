"""Simplicial posets: builders, h-vectors and the descent-class route.

A graded bounded poset is simplicial when every lower interval [0-hat, y]
is a Boolean lattice; the check realizes the isomorphism explicitly
through atom sets.  For such posets of rank n the h-vector comes from
the level counts, and the flag beta vector factors through descent
classes of permutations of n+1 letters: beta(S) equals the sum over k of
h_k times the number of w in S_(n+1) with last letter k+1 whose ascent
set is exactly S.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable

from .errors import DomainError, GradedStructureError
from .polynomials import Poly, h_from_f
from .posets import GradedBoundedPoset


def boolean_lattice(n: int) -> GradedBoundedPoset:
    """Subsets of {1..n} ordered by inclusion, ranked by size."""
    if not isinstance(n, int) or n < 0:
        raise DomainError("boolean lattice needs n >= 0")
    elements = []
    for size in range(n + 1):
        elements.extend(frozenset(c) for c in combinations(range(1, n + 1), size))
    covers = []
    for x in elements:
        for extra in range(1, n + 1):
            if extra not in x:
                covers.append((x, x | {extra}))
    ranks = {x: len(x) for x in elements}
    return GradedBoundedPoset(
        elements, covers, bottom=frozenset(), ranks=ranks, validate=False
    )


def colored_subset_poset(n: int, r: int) -> GradedBoundedPoset:
    """Sets of colored points: at most one of r colors per point of {1..n}.

    Elements are frozensets of (point, color) pairs with distinct points,
    ordered by inclusion.  For r = 1 this is the Boolean lattice.
    """
    if not isinstance(n, int) or n < 0 or not isinstance(r, int) or r < 1:
        raise DomainError("colored subset poset needs n >= 0 and r >= 1")
    elements = []
    for size in range(n + 1):
        for points in combinations(range(1, n + 1), size):
            for colors in product(range(r), repeat=size):
                elements.append(frozenset(zip(points, colors)))
    covers = []
    for x in elements:
        used = {p for p, _ in x}
        for p in range(1, n + 1):
            if p not in used:
                for c in range(r):
                    covers.append((x, x | {(p, c)}))
    ranks = {x: len(x) for x in elements}
    return GradedBoundedPoset(
        elements, covers, bottom=frozenset(), ranks=ranks, validate=False
    )


def face_poset(facets: Iterable) -> GradedBoundedPoset:
    """Face poset of the pure simplicial complex generated by the facets.

    Faces (the empty face included) are ranked by size.  The facet list
    must generate a pure complex, otherwise the poset is not graded and
    GradedStructureError is raised.
    """
    facet_sets = [frozenset(f) for f in facets]
    if not facet_sets or any(not f for f in facet_sets):
        raise DomainError("need a nonempty list of nonempty facets")
    maximal = [
        f
        for f in facet_sets
        if not any(f < g for g in facet_sets)
    ]
    sizes = {len(f) for f in maximal}
    if len(sizes) != 1:
        raise GradedStructureError(
            "facets of different sizes give a non-graded face poset"
        )
    faces = set()
    for f in maximal:
        members = sorted(f)
        for size in range(len(members) + 1):
            faces.update(frozenset(c) for c in combinations(members, size))
    elements = sorted(faces, key=lambda s: (len(s), sorted(map(repr, s))))
    covers = []
    face_set = set(elements)
    for x in elements:
        for y in face_set:
            if len(y) == len(x) + 1 and x < y:
                covers.append((x, y))
    ranks = {x: len(x) for x in elements}
    return GradedBoundedPoset(
        elements, covers, bottom=frozenset(), ranks=ranks, validate=False
    )


@lru_cache(maxsize=None)
def is_simplicial(poset: GradedBoundedPoset) -> bool:
    """Whether every lower interval is Boolean, via atom-set coordinates."""
    n_elem = len(poset)
    up = poset._up
    bottom_idx = poset.index(poset.bottom)
    atoms = [poset.index(a) for a in poset.levels[1]] if poset.rank >= 1 else []
    atom_pos = {a: i for i, a in enumerate(atoms)}
    # atom coordinates: bitmask over atoms lying weakly below each element
    coord = [0] * n_elem
    for i in range(n_elem):
        mask = 0
        for k, a in enumerate(atoms):
            if a == i or (up[a] >> i) & 1:
                mask |= 1 << k
        coord[i] = mask
    for y in range(n_elem):
        r = poset.rank_of(poset.elements[y])
        below = [x for x in range(n_elem) if (up[x] >> y) & 1]
        below.append(y)
        if len(below) != 1 << r:
            return False
        if bin(coord[y]).count("1") != r:
            return False
        seen = set()
        for x in below:
            c = coord[x]
            if c & ~coord[y] or c in seen:
                return False
            seen.add(c)
        # order must agree with containment of atom sets
        for x in below:
            for z in below:
                contained = coord[x] & ~coord[z] == 0
                related = x == z or (up[x] >> z) & 1 == 1
                if contained != related:
                    return False
    return True


def simplicial_h(poset: GradedBoundedPoset) -> Poly:
    """h-polynomial of a simplicial poset of rank n from its level counts.

    The face counts f_(j-1) are the level sizes; h is their (1-x) binomial
    transform at degree n.
    """
    n = poset.rank
    f = Poly([len(level) for level in poset.levels])
    return h_from_f(f, n)


@lru_cache(maxsize=None)
def _ascent_class_counts(n: int) -> dict:
    """Count w in S_(n+1) by (last letter - 1, ascent set bitmask).

    Ascents are positions i in 1..n with w(i) < w(i+1); the bitmask has
    bit i-1 set for each ascent i.
    """
    counts = {}
    for w in permutations(range(1, n + 2)):
        mask = 0
        for i in range(n):
            if w[i] < w[i + 1]:
                mask |= 1 << i
        key = (w[-1] - 1, mask)
        counts[key] = counts.get(key, 0) + 1
    return counts


def stanley_flag_beta(poset: GradedBoundedPoset, s: Iterable) -> int:
    """beta(S) of a simplicial poset through h-weighted ascent classes."""
    n = poset.rank
    s = frozenset(s)
    if any(not isinstance(r, int) or r < 1 or r > n for r in s):
        raise DomainError("rank subset must lie in 1..%d" % n)
    if not is_simplicial(poset):
        raise DomainError("poset is not simplicial")
    h = simplicial_h(poset)
    counts = _ascent_class_counts(n)
    mask = 0
    for r in s:
        mask |= 1 << (r - 1)
    total = 0
    for k in range(n + 1):
        hk = h.coefficient(k)
        if hk:
            total += hk * counts.get((k, mask), 0)
    return total
