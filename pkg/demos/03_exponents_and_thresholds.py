"""Exact rational exponent and threshold calculators.

Every formula here is evaluated with fractions.Fraction, so the outputs
are exact rationals rather than floats.  PatternStats carries the four
integers that drive all of them: the vertex/edge counts of a pattern H
and of its rooted subforest F.
"""

from fractions import Fraction

from edgeglue.bounds import (
    PatternStats,
    binom_ratio_bounds,
    cleaning_threshold,
    cycle_tree_exponent,
    deletion_exponent,
    es_exponent_branches,
    es_exponent_forest,
    tree_gluing_exponent,
)
from edgeglue.gluing import edge_rooted
from edgeglue.graphs import complete_bipartite, cycle, path, star

c4 = PatternStats.from_rooted(edge_rooted(cycle(4), (0, 1)))
c6 = PatternStats.from_rooted(edge_rooted(cycle(6), (0, 1)))

print("gluing exponents (upper-bound side):")
for name, s, alpha in (("C4", c4, Fraction(1, 2)), ("C6", c6, Fraction(1, 3))):
    e = es_exponent_forest(alpha, s)
    b1, b2 = es_exponent_branches(alpha, s)
    print(f"  {name}, alpha={alpha}: exponent {e}  (branches {b1}, {b2})")

print("\ntree gluing exponents 1 - 1/r (r = number of leaves):")
for t in (star(3), path(4), star(5)):
    print(f"  {t.vertex_count}-vertex tree: {tree_gluing_exponent(t)}")

print("\ntree-of-cycles exponents 2/min cycle length:")
print("  cycles (4, 6):", cycle_tree_exponent([4, 6]))
print("  cycles (6, 8):", cycle_tree_exponent([6, 8]))

print("\ndeletion lower-bound exponents 2 - (v-2)/(e-1):")
for f in (cycle(4), cycle(6), complete_bipartite(3, 3)):
    print(f"  {f.vertex_count} vertices, {f.edge_count} edges:", deletion_exponent(f))

print("\ncleaning threshold g(n) for edge-rooted C4, gamma = 1/10:")
for n in (100, 10_000, 1_000_000):
    t = cleaning_threshold(n, c4, Fraction(1, 10), Fraction(1, 2))
    b = t.branch1 if t.dominating_branch == 1 else t.branch2
    print(
        f"  n={n}: {t.value:.3e}  dominating branch {t.dominating_branch} "
        f"~ n^{b.n_exponent} gamma^{b.gamma_exponent}"
    )

print("\nbinomial ratio sandwich C(n-s, qn-s)/C(n, qn), n=20, q=1/4:")
for s in (1, 2, 3):
    lo, exact, hi = binom_ratio_bounds(20, Fraction(1, 4), s)
    print(f"  s={s}: {lo} <= {exact} <= {hi}")
