"""
Independent oracles used by the test suite.

These re-derive quantities along different routes than the package:
rank by fraction-free (Bareiss) elimination instead of rational
elimination, vertex links built directly from corner triangles, and
surfaces assembled as explicit cell complexes from face-side arc lists
(with the opposite labelling convention for parallel quads, which must
not matter).
"""

from normalhst import model


class UnionFind:
    """Recursive union-by-size, distinct from the package's iterative one."""

    def __init__(self):
        self.parent = {}
        self.size = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x):
        self.add(x)
        if self.parent[x] != x:
            self.parent[x] = self.find(self.parent[x])
        return self.parent[x]

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]

    def orbit_count(self):
        return len({self.find(x) for x in self.parent})

    def orbits(self):
        groups = {}
        for x in self.parent:
            groups.setdefault(self.find(x), set()).add(x)
        return list(groups.values())


def bareiss_rank(rows):
    """Rank over the integers by fraction-free elimination."""
    mat = [list(map(int, row)) for row in rows if any(row)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    prev = 1
    col = 0
    while rank < len(mat) and col < ncols:
        pivot_row = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot_row is None:
            col += 1
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        pivot = mat[rank][col]
        for r in range(rank + 1, len(mat)):
            for c in range(col + 1, ncols):
                mat[r][c] = (pivot * mat[r][c] - mat[r][col] * mat[rank][c]) \
                    // prev
            mat[r][col] = 0
        prev = pivot
        rank += 1
        col += 1
    return rank


def link_chi(tri, vertex_orbit_members):
    """Euler characteristic of a vertex link, built from scratch.

    Faces of the link are the corner triangles (t, v); edges are corner
    sides identified across face gluings; vertices are directed edge
    ends.
    """
    members = set(vertex_orbit_members)
    sides = UnionFind()
    ends = UnionFind()
    for (t, v) in members:
        for f in range(4):
            if f != v:
                sides.add((t, v, f))
        for e in range(6):
            if v in model.EDGES[e]:
                ends.add((t, v, e))
    for (t, v) in members:
        for f in range(4):
            if f == v:
                continue
            g = tri.gluings[t][f]
            if g is None:
                continue
            v2 = g.image_of_vertex(v)
            sides.union((t, v, f), (g.tet, v2, g.face))
            for e in model.FACE_EDGES[f]:
                if v in model.EDGES[e]:
                    ends.union((t, v, e), (g.tet, v2, g.image_of_edge(e)))
    return ends.orbit_count() - sides.orbit_count() + len(members)


# ---------------------------------------------------------------------------
# Cell-complex surface oracle
# ---------------------------------------------------------------------------

def _arc_rank_positions(vector, t, f, v):
    """Pieces carrying arcs of type (f, v), ordered away from v.

    Same geometric content as the package's stacking but labelled from
    the opposite end of each quad family: copy j is taken at distance j
    from the HIGHER-indexed edge of its pair.  A valid realization can
    relabel parallel copies, so every derived invariant must agree.
    """
    tri_c, quad_c, oct_c = vector.tets[t]
    arcs = [("tri", v, i) for i in range(tri_c[v])]
    q = model.quad_type_for_arc(f, v)
    if quad_c[q]:
        hi = max(model.PAIRS[q])
        copies = range(quad_c[q])
        if v not in model.EDGES[hi]:
            copies = reversed(copies)
        arcs.extend(("quad", q, i) for i in copies)
    for qq in range(3):
        if oct_c[qq] and model.oct_arc_count(qq, f, v):
            arcs.extend(("oct", qq, i) for i in range(oct_c[qq]))
    return arcs


def _edge_width(vector, t, e):
    return model.edge_weight(vector.tets[t], e)


def _crossings_on_edge(vector, t, e):
    """Pieces at each position along edge e, one reading per incident face.

    Every arc cutting off an endpoint of e has exactly one endpoint on
    e, so the two endpoint groups of a face tile the edge; the two
    faces' readings must name the same piece at every position.
    """
    u, w = model.EDGES[e]
    width = _edge_width(vector, t, e)
    readings = []
    for f in model.FACES_OF_EDGE[e]:
        slots = [None] * width
        for rank, piece in enumerate(_arc_rank_positions(vector, t, f, u)):
            assert slots[rank] is None
            slots[rank] = piece
        for rank, piece in enumerate(_arc_rank_positions(vector, t, f, w)):
            assert slots[width - 1 - rank] is None
            slots[width - 1 - rank] = piece
        assert None not in slots
        readings.append(slots)
    assert readings[0] == readings[1], "face readings of an edge disagree"
    return readings


def surface_cells(tri, vector):
    """Explicit cell complex of an admissible vector.

    Returns (piece list, component ids per piece, per-component chi,
    per-component closed flags) computed with union-find over all cells.
    """
    n = tri.tetrahedron_count
    pieces = []
    for t in range(n):
        tri_c, quad_c, oct_c = vector.tets[t]
        for v in range(4):
            for i in range(tri_c[v]):
                pieces.append((t, "tri", v, i))
        for q in range(3):
            for i in range(quad_c[q]):
                pieces.append((t, "quad", q, i))
        for q in range(3):
            for i in range(oct_c[q]):
                pieces.append((t, "oct", q, i))

    cells = UnionFind()
    for p in pieces:
        cells.add(("piece",) + p)

    # Arc cells: (t, f, v, rank); tie each to its piece.
    arc_cells = []
    for t in range(n):
        for f in range(4):
            for v in model.FACE_VERTICES[f]:
                ranked = _arc_rank_positions(vector, t, f, v)
                for rank, piece in enumerate(ranked):
                    arc = ("arc", t, f, v, rank)
                    cells.add(arc)
                    cells.union(arc, ("piece", t) + piece)
                    arc_cells.append(arc)

    # Identify arcs across gluings.
    boundary_arc = set()
    arc_orbits = UnionFind()
    for a in arc_cells:
        arc_orbits.add(a)
    for t in range(n):
        for f in range(4):
            g = tri.gluings[t][f]
            if g is None:
                for v in model.FACE_VERTICES[f]:
                    for rank in range(len(_arc_rank_positions(vector, t, f, v))):
                        boundary_arc.add(("arc", t, f, v, rank))
                continue
            for v in model.FACE_VERTICES[f]:
                v2 = g.image_of_vertex(v)
                a_list = _arc_rank_positions(vector, t, f, v)
                b_list = _arc_rank_positions(vector, g.tet, g.face, v2)
                assert len(a_list) == len(b_list)
                for rank in range(len(a_list)):
                    cells.union(("arc", t, f, v, rank),
                                ("arc", g.tet, g.face, v2, rank))
                    arc_orbits.union(("arc", t, f, v, rank),
                                     ("arc", g.tet, g.face, v2, rank))

    # Crossing cells: (t, e, pos), identified across gluings via the
    # endpoint correspondence; tie to the pieces crossing there.
    crossing_orbits = UnionFind()
    for t in range(n):
        for e in range(6):
            readings = _crossings_on_edge(vector, t, e)
            for pos, piece in enumerate(readings[0]):
                cell = ("cross", t, e, pos)
                cells.add(cell)
                crossing_orbits.add(cell)
                cells.union(cell, ("piece", t) + piece)
            for pos, piece in enumerate(readings[1]):
                cells.union(("cross", t, e, pos), ("piece", t) + piece)
    for t in range(n):
        for f in range(4):
            g = tri.gluings[t][f]
            if g is None:
                continue
            for e in model.FACE_EDGES[f]:
                e2 = g.image_of_edge(e)
                u, w = model.EDGES[e]
                width = _edge_width(vector, t, e)
                assert width == _edge_width(vector, g.tet, e2)
                u2 = g.image_of_vertex(u)
                same = u2 == min(u2, g.image_of_vertex(w))
                for pos in range(width):
                    pos2 = pos if same else width - 1 - pos
                    cells.union(("cross", t, e, pos),
                                ("cross", g.tet, e2, pos2))
                    crossing_orbits.union(("cross", t, e, pos),
                                          ("cross", g.tet, e2, pos2))

    if vector.tube is not None:
        t = vector.tube.tet
        cells.union(("piece", t) + vector.tube.piece_a,
                    ("piece", t) + vector.tube.piece_b)

    # Components and counts.
    comp_of_root = {}
    piece_comp = []
    for p in pieces:
        root = cells.find(("piece",) + p)
        comp_of_root.setdefault(root, len(comp_of_root))
        piece_comp.append(comp_of_root[root])
    ncomp = len(comp_of_root)

    v_count = [0] * ncomp
    e_count = [0] * ncomp
    f_count = [0] * ncomp
    closed = [True] * ncomp
    for orbit in crossing_orbits.orbits():
        cell = next(iter(orbit))
        comp = comp_of_root[cells.find(cell)]
        v_count[comp] += 1
    for orbit in arc_orbits.orbits():
        cell = next(iter(orbit))
        comp = comp_of_root[cells.find(cell)]
        e_count[comp] += 1
        if orbit & boundary_arc:
            closed[comp] = False
    for i, p in enumerate(pieces):
        f_count[piece_comp[i]] += 1
    if vector.tube is not None:
        t = vector.tube.tet
        comp = comp_of_root[cells.find(("piece", t) + vector.tube.piece_a)]
        f_count[comp] -= 2

    chis = [v_count[c] - e_count[c] + f_count[c] for c in range(ncomp)]
    return pieces, piece_comp, chis, closed
