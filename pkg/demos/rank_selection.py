"""
Rank selection and flag vectors
===============================

Selecting a set T of ranks from a graded poset and rebounding the result
gives the rank-selected subposet; the h-polynomial of its order complex
is the flag-beta generating function over subsets of T.  For simplicial
posets that h-polynomial expands over the first-letter descent rows with
the simplicial h-vector as coefficients.
"""

from chainpoly import (
    adjoin_max,
    boolean_lattice,
    chain_polynomial,
    colored_subset_poset,
    first_letter_descent_polynomials,
    flag_vectors,
    h_from_f,
    rank_selected,
    rank_selected_h,
    simplicial_h,
)

# The Boolean lattice of rank 3: subsets of {1,2,3} under inclusion.
b3 = boolean_lattice(3)
print("chain polynomial of B_3:", chain_polynomial(b3).coeffs)

# Selecting ranks {1,2} keeps the six proper subsets.
print("h of the {1,2}-selection:", rank_selected_h(b3, {1, 2}).coeffs)

# The flag vectors tabulate all selections at once.
fv = flag_vectors(b3)
for s in fv.subsets():
    print("  S=%-6s alpha=%d beta=%d" % (sorted(s), fv.alpha(s), fv.beta(s)))

# A simplicial poset: subsets of {1,..,n} with r-colored elements.
poset = colored_subset_poset(3, 2)
print("\ncolored poset h-vector:", simplicial_h(poset).coeffs)

# Adjoin a new maximum, select ranks {1,3}, and compare the h-polynomial
# of the selection with the weighted sum of first-letter rows.
hat = adjoin_max(poset)
t = frozenset({1, 3})
sel = rank_selected(hat, t)
lhs = h_from_f(chain_polynomial(sel.proper_part()), len(t))
print("h by chain enumeration:   ", lhs.coeffs)

n = poset.rank
row = first_letter_descent_polynomials(n, frozenset(n + 1 - a for a in t))
rhs = row[0].scale(0)
for k, c in enumerate(simplicial_h(poset).coeffs):
    rhs = rhs + row[k].scale(c)
print("h by the row expansion:   ", rhs.coeffs)
