"""
The small-face obstruction
==========================

A projective unimodular fan always has an extremal wall of positive
curvature, and the normalized coefficients (a1 <= a2) at such a wall
force a small face in the dual polytope: a1 < 0 pins a vertex of degree
exactly 3 (a triangular face), a1 = 0 a vertex of degree exactly 4 (a
quadrangular face).  So a polytope all of whose faces have at least
five sides — a fullerene, say — can never arise from a smooth
projective toric variety, even though demos/01 shows it is quasitoric.
"""

from toriclab import (
    CharacteristicPair,
    check_star_condition,
    coloring_to_charfunc,
    delzant_obstruction_witness,
    dual_sphere,
    face_histogram,
    four_color,
)
from toriclab.corpus import FAN_NAMES, load_fan, load_polytope

# every bundled fan is projective, so every one yields a witness
for name in FAN_NAMES:
    f = load_fan(name)
    w = delzant_obstruction_witness(f)
    face = "triangle" if w.dual_face_size == 3 else "quadrilateral"
    print(f"{f.name}:")
    print(f"  wall {w.wall} with a = {w.a}, curvature {w.curvature} "
          f"({w.case})")
    print(f"  vertex {w.vertex} has neighbors {w.neighbors} -> "
          f"degree {len(w.neighbors)}, a {face} in the dual polytope")

# now the fullerene verdict
p = load_polytope("dodecahedron")
hist = face_histogram(p)
print(f"\n{p.name}: face histogram {hist}")

# quasitoric? yes — the coloring pipeline succeeds
sphere = dual_sphere(p)
lam = coloring_to_charfunc(four_color(sphere))
ok = check_star_condition(CharacteristicPair(sphere, lam)).ok
print(f"admits a characteristic pair (quasitoric): {'YES' if ok else 'no'}")

# smooth projective toric?  no — every face has >= 5 sides, but any
# projective unimodular fan would force a 3- or 4-sided face
smallest = min(hist)
verdict = "NO" if smallest >= 5 else "not excluded"
print(f"smallest face has {smallest} sides -> smooth projective toric: "
      f"{verdict}")
