"""
Enumeration of admissible normal surfaces.

Two independent routes:

* :func:`enumerate_vertex_surfaces` computes the extreme rays of the
  cone {x >= 0, matching(x) = 0} by incremental double description with
  exact integer arithmetic, then filters to quad-admissible vectors.
* :func:`brute_force_enumerate` walks the lattice of all coordinate
  vectors of bounded total weight by backtracking, checking the matching
  equations as soon as both sides of a face are assigned.

Octagon-carrying surfaces are produced by augmentation: add a single
octagon to a quad-admissible normal solution and keep the results that
stay admissible.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .normal_surfaces import (MatchingSystem, SurfaceVector, check_admissible,
                              matching_system, reconstruct_surface)


class ResourceCeilingError(RuntimeError):
    """A configured resource ceiling was exceeded."""


DEFAULT_CEILINGS = {
    "rays": 20000,              # intermediate ray count in double description
    "brute_force_weight": 12,   # maximal total coordinate for brute force
    "loop_length": 20,          # normal curve enumeration ceiling
    "search_budget": 200000,    # rewrite search states
}


def ceiling(name):
    """Resource ceiling, overridable globally via NORMALHST_CEILING."""
    env = os.environ.get("NORMALHST_CEILING")
    if env is not None:
        return int(env)
    return DEFAULT_CEILINGS[name]


def _reduce(vec):
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g in (0, 1):
        return tuple(vec)
    return tuple(x // g for x in vec)


@dataclass(frozen=True)
class SolutionCone:
    """Extreme rays of the matching cone, with admissibility flags."""
    system: MatchingSystem
    rays: tuple
    admissible: tuple


def _quad_admissible_flat(flat):
    for t in range(len(flat) // 7):
        if sum(1 for q in flat[7 * t + 4: 7 * t + 7] if q) > 1:
            return False
    return True


def extreme_rays(system, max_rays=None):
    """Extreme rays of {x >= 0, rows(x) = 0} by double description.

    Equations are inserted in order of increasing support size (ties by
    index), which keeps intermediate ray counts small and fixes the
    output order.  Rays are primitive integer vectors.
    """
    n = system.columns
    if max_rays is None:
        max_rays = ceiling("rays")
    rays = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    order = sorted(range(len(system.rows)),
                   key=lambda i: (sum(1 for c in system.rows[i] if c), i))
    for row_index in order:
        a = system.rows[row_index]
        dots = [sum(c * r for c, r in zip(a, ray)) for ray in rays]
        pos = [i for i, d in enumerate(dots) if d > 0]
        neg = [i for i, d in enumerate(dots) if d < 0]
        zero = [i for i, d in enumerate(dots) if d == 0]
        zero_sets = [frozenset(k for k, x in enumerate(ray) if x == 0)
                     for ray in rays]

        def adjacent(i, j):
            common = zero_sets[i] & zero_sets[j]
            for k, zs in enumerate(zero_sets):
                if k != i and k != j and zs >= common:
                    return False
            return True

        new_rays = [rays[i] for i in zero]
        for i in pos:
            for j in neg:
                if not adjacent(i, j):
                    continue
                combo = tuple(dots[i] * rays[j][k] - dots[j] * rays[i][k]
                              for k in range(n))
                new_rays.append(_reduce(combo))
        if len(new_rays) > max_rays:
            raise ResourceCeilingError(
                f"double description exceeded {max_rays} rays")
        rays = new_rays
    return rays


def solution_cone(tri, max_rays=None):
    system = matching_system(tri)
    rays = tuple(sorted(extreme_rays(system, max_rays)))
    flags = tuple(_quad_admissible_flat(r) for r in rays)
    return SolutionCone(system=system, rays=rays, admissible=flags)


def _vector_from_flat(tri, flat):
    blocks = []
    for t in range(tri.tetrahedron_count):
        seg = flat[7 * t: 7 * t + 7]
        blocks.append((tuple(seg[:4]), tuple(seg[4:7]), (0, 0, 0)))
    return SurfaceVector(tuple(blocks))


def enumerate_vertex_surfaces(tri, max_rays=None):
    """Quad-admissible extreme rays of the matching cone, sorted.

    Output order is lexicographic on the flat coordinate tuples, so
    repeated runs produce identical results.
    """
    cone = solution_cone(tri, max_rays)
    out = [_vector_from_flat(tri, ray)
           for ray, ok in zip(cone.rays, cone.admissible) if ok]
    return out


def _local_blocks(budget):
    """All (tri, quad) blocks for one tetrahedron with weight <= budget.

    At most one quad type is nonzero, per the quad constraint.
    """
    blocks = []
    for a0 in range(budget + 1):
        for a1 in range(budget + 1 - a0):
            for a2 in range(budget + 1 - a0 - a1):
                for a3 in range(budget + 1 - a0 - a1 - a2):
                    tri_c = (a0, a1, a2, a3)
                    rest = budget - a0 - a1 - a2 - a3
                    blocks.append((tri_c, (0, 0, 0)))
                    for q in range(3):
                        for k in range(1, rest + 1):
                            quad_c = tuple(k if i == q else 0
                                           for i in range(3))
                            blocks.append((tri_c, quad_c))
    return blocks


def brute_force_enumerate(tri, max_total_coordinate):
    """All quad-admissible matching solutions of bounded total weight.

    Backtracks over tetrahedra, propagating the weight budget and
    checking each face equation as soon as the tetrahedra on both sides
    are assigned.  Deterministic output order (lexicographic).
    """
    if max_total_coordinate > ceiling("brute_force_weight"):
        raise ResourceCeilingError(
            f"brute force bound {max_total_coordinate} exceeds ceiling "
            f"{ceiling('brute_force_weight')}")
    n = tri.tetrahedron_count

    # Face equations keyed by the larger assigned tetrahedron.
    equations = []
    for t in range(n):
        for f in range(4):
            g = tri.gluings[t][f]
            if g is None:
                continue
            if (g.tet, g.face, t, f) < (t, f, g.tet, g.face):
                continue
            equations.append(((t, f), (g.tet, g.face), g))
    eq_by_stage = {t: [] for t in range(n)}
    for (t, f), (t2, f2), g in equations:
        eq_by_stage[max(t, t2)].append(((t, f), (t2, f2), g))

    from . import model
    results = []
    assigned = [None] * n

    def extend(t, remaining):
        if t == n:
            results.append(tuple(assigned))
            return
        for block in _local_blocks(remaining):
            weight = sum(block[0]) + sum(block[1])
            assigned[t] = block
            ok = True
            for (ta, fa), (tb, fb), g in eq_by_stage[t]:
                ba = assigned[ta] + ((0, 0, 0),)
                bb = assigned[tb] + ((0, 0, 0),)
                for w in model.FACE_VERTICES[fa]:
                    if model.arc_count(ba, fa, w) != \
                            model.arc_count(bb, fb, g.image_of_vertex(w)):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                extend(t + 1, remaining - weight)
        assigned[t] = None

    extend(0, max_total_coordinate)
    vectors = [SurfaceVector(tuple((b[0], b[1], (0, 0, 0)) for b in blocks))
               for blocks in results]
    vectors.sort(key=lambda v: v.normal_coordinates())
    return vectors


# ---------------------------------------------------------------------------
# Exact rational rank, used for the independent extremality test.
# ---------------------------------------------------------------------------

def rational_rank(rows):
    """Rank of an integer matrix by exact fraction elimination."""
    mat = [[Fraction(x) for x in row] for row in rows if any(row)]
    rank = 0
    col = 0
    ncols = len(mat[0]) if mat else 0
    while rank < len(mat) and col < ncols:
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def is_extreme_ray(system, flat):
    """Whether a nonzero matching solution spans an extreme ray.

    A point of the cone {x >= 0, Ax = 0} lies on an extreme ray exactly
    when its active constraints (the equations plus its zero
    coordinates) have rank n - 1.  Independent of double description.
    """
    n = system.columns
    rows = [list(r) for r in system.rows]
    for i, x in enumerate(flat):
        if x == 0:
            rows.append([1 if j == i else 0 for j in range(n)])
    if not rows:
        return n == 1
    return rational_rank(rows) == n - 1


def reduced_extreme_solutions(tri, bound):
    """gcd-reduced brute-force solutions that are extreme rays, sorted.

    The oracle counterpart of :func:`enumerate_vertex_surfaces`
    restricted to coordinate sum <= bound: brute-force results are
    reduced to primitive vectors, deduplicated, and kept when the exact
    rank test certifies extremality.
    """
    system = matching_system(tri)
    seen = set()
    out = []
    for v in brute_force_enumerate(tri, bound):
        flat = _reduce(v.normal_coordinates())
        if not any(flat) or flat in seen:
            continue
        seen.add(flat)
        if is_extreme_ray(system, flat):
            out.append(_vector_from_flat(tri, flat))
    out.sort(key=lambda v: v.normal_coordinates())
    return out


# ---------------------------------------------------------------------------
# Derived searches
# ---------------------------------------------------------------------------

def find_connected_chi2(tri, search="vertex", bound=None):
    """Vectors whose surface is connected with Euler characteristic 2.

    ``search`` picks the candidate set: "vertex" for the extreme-ray
    surfaces, "brute" for all admissible vectors of weight <= bound.
    Complete only relative to the searched set.
    """
    if search == "vertex":
        candidates = enumerate_vertex_surfaces(tri)
    elif search == "brute":
        if bound is None:
            raise ValueError("brute search needs a bound")
        candidates = brute_force_enumerate(tri, bound)
    else:
        raise ValueError(f"unknown search {search!r}")
    out = []
    for v in candidates:
        summary = reconstruct_surface(tri, v).summary()
        if summary.component_count == 1 and summary.euler_characteristic == 2:
            out.append(v)
    return out


def octagon_augmentations(tri, base_vectors):
    """Admissible octagon surfaces obtained from normal solutions.

    For each base vector and each (tetrahedron, octagon type), add one
    octagon and keep the result if it passes the almost-normal
    admissibility check (one exceptional piece, quad-free tetrahedron,
    matching with the octagon's two arcs per face).
    """
    out = []
    seen = set()
    for base in base_vectors:
        for t in range(tri.tetrahedron_count):
            for q in range(3):
                blocks = list(base.tets)
                tri_c, quad_c, oct_c = blocks[t]
                new_oct = tuple(1 if i == q else 0 for i in range(3))
                blocks[t] = (tri_c, quad_c, new_oct)
                candidate = SurfaceVector(tuple(blocks))
                key = candidate.coordinates()
                if key in seen:
                    continue
                seen.add(key)
                if check_admissible(tri, candidate, "almost_normal").admissible:
                    out.append(candidate)
    out.sort(key=lambda v: v.coordinates())
    return out
