"""Balanced families of pattern copies and gluing them inside a host.

A balanced family is a set of embeddings of a rooted pattern into a host
graph in which no host edge (and no root pair) is used by too many
members.  The greedy builder recruits embeddings in a seeded order,
skipping any that would break a cap; the result is verified independently
and checked for maximality.
"""

from edgeglue.constructions import SeededSampler
from edgeglue.gluing import edge_rooted
from edgeglue.graphs import complete_bipartite, cycle
from edgeglue.supersat import (
    FamilyConstraints,
    assemble_glued_copies,
    build_balanced_family,
    extension_degrees,
    heavy_light_split,
    remaining_recruitable,
    verify_family,
)

host = complete_bipartite(3, 3)
rooted = edge_rooted(cycle(4), (0, 1))

# Uncapped: every embedding of C4 into K_{3,3} joins the family.
full = build_balanced_family(host, rooted, FamilyConstraints())
print("uncapped family size:", full.size)

# Cap each host edge at 2 uses: the builder stops recruiting through
# saturated edges, and the result is still maximal under the cap.
caps = FamilyConstraints(per_edge_cap=2)
fam = build_balanced_family(host, rooted, caps, SeededSampler(11))
report = verify_family(fam, caps)
print(f"capped family: size {fam.size}, violations {report.violation_count},")
print("  maximal:", remaining_recruitable(fam, caps) == [])

# Root-image usage degrees split into heavy and light classes.
degrees = extension_degrees(fam)
heavy, light, light_mass = heavy_light_split(degrees, 3)
print(f"  {len(heavy)} heavy and {len(light)} light root images "
      f"at threshold 3 (light mass {light_mass})")

# Two families through a common host edge can be assembled into one glued
# copy: the members overlap exactly in the shared endpoints.
shared = (0, 3)
glued = assemble_glued_copies(host, [full, full], shared)
if glued is None:
    print("greedy assembly blocked: no vertex-disjoint pair of members")
else:
    g = glued.glued_pattern
    print(f"glued copy through edge {shared}: {g.vertex_count} vertices, "
          f"{g.edge_count} edges")

print("\nfamily JSON round-trips:", len(fam.to_json()) > 0)
