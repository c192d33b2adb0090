"""
Normal curves on a tetrahedron boundary: the 3-or-4n length law.

A normal curve crosses the six edges transversally; arcs of the same
type drawn parallel give every balanced arc-count pattern a canonical
embedded realization, and decomposing it into loops is pure
combinatorics.
"""

from normalhst.curve_patterns import (CurvePattern, check_348,
                                      decompose_pattern,
                                      enumerate_normal_loops, loop_pattern)

print("All embedded normal loops up to length 20, up to symmetry:")
for cls in enumerate_normal_loops(20):
    print(f"  length {cls.length:2d}: class of {cls.size} loops, "
          f"representative word {cls.representative}")

print()
print("Lengths 3 (vertex triangles), 4 (quads) and 8 (octagons) are the")
print("only ones a surface piece can bound; longer loops exist but wind")
print("around the tetrahedron.")

print()
print("Two quad curves of different types cannot be drawn disjointly;")
print("their combined counts realize as a single octagon:")
q0 = next(c for c in enumerate_normal_loops(4) if c.length == 4)
w0, w1 = q0.members[0], q0.members[1]
merged = loop_pattern(w0).add(loop_pattern(w1))
print(f"  {w0} + {w1} decomposes to lengths "
      f"{decompose_pattern(merged).lengths}")

print()
print("The length-3/4/8 test behind almost-normality:")
octagon = CurvePattern.from_block(((1, 1, 0, 0), (0, 0, 0), (1, 0, 0)))
result = check_348(octagon)
print(f"  octagon plus two triangles: pass = {result.passed}")
twelve = next(c for c in enumerate_normal_loops(12) if c.length == 12)
result = check_348(loop_pattern(twelve.representative))
print(f"  a length-12 loop: pass = {result.passed}, witness length "
      f"{len(result.witness)}")
