"""
Triangulations from face pairings: parsing, skeleta, manifold checks.

Every triangulation is a list of tetrahedra plus gluings identifying
faces in pairs; vertices, edges and faces of the space are orbits of the
model cells under those identifications.
"""

from normalhst import library
from normalhst.triangulation import (compute_skeleton, parse_triangulation,
                                     validate_manifold)

print("The five-tetrahedron boundary of the 4-simplex, as a file:")
penta = library.boundary_4_simplex()
print(penta.to_text())

skeleton = compute_skeleton(penta)
v, e, f = skeleton.counts
print(f"cells: V={v} E={e} F={f} T={penta.tetrahedron_count}, "
      f"alternating sum {skeleton.euler_alternating_sum(5)} "
      "(zero, as for every closed 3-manifold)")

report = validate_manifold(penta, skeleton)
print(f"is_manifold: {report.is_manifold}, orientable: {report.orientable}")
print("vertex link Euler characteristics:",
      [link.euler_characteristic for link in report.links])
print()

print("A pseudo-manifold parses fine; validation flags the bad vertex:")
pseudo = library.pseudomanifold_two_tet()
report = validate_manifold(pseudo)
for link in report.links:
    status = "ok" if link.passes else "NOT A MANIFOLD POINT"
    print(f"  vertex orbit {link.vertex_orbit}: link chi = "
          f"{link.euler_characteristic} ({status})")

print()
print("Round trip through the text format:")
text = library.doubled_tetrahedron().to_text()
assert parse_triangulation(text) == library.doubled_tetrahedron()
print(text.strip())
