"""
Wall classes, the effective cone, and extremal rays
===================================================

Every wall of a fan defines a class in the top-minus-one cohomology of
the associated toric space, encoded here as the integer vector of its
products against all degree-2 generators.  The nonnegative span of
these classes is the effective cone.  A wall is extremal when its class
generates an extreme ray — it cannot be written as a nonnegative
combination of the classes outside its own proportionality group.  All
decisions below are exact rational linear programs with certificates.
"""

from toriclab import extremal_walls, strict_convexity_witness, wall_classes
from toriclab.corpus import load_fan

# the blow-up of the simplex fan at one fixed point is the smallest
# bundled example with a non-extremal wall class
f = load_fan("blowup-cp3")
print(f"{f.name}: {f.m} rays, {len(f.maximal_cones)} cones")

classes = wall_classes(f)
print("\nwall classes (pairings against the degree-2 generators):")
for c in classes:
    print(f"  {c.wall}: {c.pairing}")

analysis = extremal_walls(f)
print("\npositive-proportionality groups:")
for g in analysis.groups:
    print(f"  {g}")
print(f"\nextremal walls (one representative per extremal group): "
      f"{analysis.extremal}")

# the non-extremal group decomposes: its class is the sum of the other two
by_wall = dict((c.wall, c.pairing) for c in classes)
left, middle, right = by_wall[(0, 1)], by_wall[(0, 3)], by_wall[(0, 4)]
print(f"\n  {middle}")
print(f"= {left} + {right}")
assert middle == tuple(x + y for x, y in zip(left, right))

def pretty(vec):
    return "(" + ", ".join(str(x) for x in vec) + ")"


# strict convexity: the bundled support parameters evaluate positively
# on every class, certifying that the fan is projective
witness = strict_convexity_witness(classes, f.support)
print(f"\nstrict convexity witness from the support: {pretty(witness)}")

# the same certificate can be found from nothing, by linear programming
lp_witness = strict_convexity_witness(classes)
print(f"strict convexity witness from the LP     : {pretty(lp_witness)}")

# compare a fan where every wall is extremal: the box fan has three
# groups of four parallel edges, each extremal
box = load_fan("cube-fan")
a = extremal_walls(box)
print(f"\n{box.name}: {len(a.classes)} classes, {len(a.groups)} groups, "
      f"extremal {a.extremal}")
