"""
From a facet coloring to a characteristic pair
==============================================

A simple 3-polytope whose facets are properly colored with at most four
colors carries a canonical assignment of integer vectors to facets: send
the colors to e1, e2, e3, e1+e2+e3.  Around every vertex the three
incident facets receive distinct colors, and any three distinct vectors
from that list form a basis of Z^3 — so the assignment satisfies the
basis condition at every vertex and the polytope supports a quasitoric
structure.  This script runs that pipeline on the dodecahedron.
"""

from toriclab import (
    CharacteristicPair,
    check_star_condition,
    coloring_to_charfunc,
    dual_sphere,
    face_histogram,
    four_color,
    is_fullerene,
)
from toriclab.corpus import load_polytope

# the C20 fullerene: twelve pentagons, twenty vertices, thirty edges
p = load_polytope("dodecahedron")
print(f"{p.name}: {p.num_facets} facets, {p.num_vertices} vertices, "
      f"{p.num_edges} edges")
print(f"face histogram: {face_histogram(p)}")
print(f"fullerene: {is_fullerene(p)}")

# work on the dual simplicial 2-sphere, whose vertices are the facets
sphere = dual_sphere(p)

# a proper 4-coloring of the facets, found by backtracking
coloring = four_color(sphere)
print(f"\ncoloring: {''.join(coloring.colors)}")

# colors become primitive vectors...
lam = coloring_to_charfunc(coloring)
for i in range(lam.m):
    print(f"  facet {i}: color {coloring.colors[i]} -> {lam[i]}")

# ...and the basis condition holds at every vertex of the polytope
verdict = check_star_condition(CharacteristicPair(sphere, lam))
print(f"\nbasis condition at all {len(sphere.triangles)} vertices: "
      f"{'ok' if verdict.ok else 'VIOLATED'}")
assert verdict.ok and verdict.violations == ()

# conclusion: the dodecahedron is quasitoric.  Contrast with smooth
# projective toric, which demands a degree-3 or degree-4 facet — see
# demos/05_small_face_witness.py for that obstruction.
