"""
Normal curves on the boundary of a single tetrahedron.

A curve pattern counts normal arcs by type: for each of the four faces,
the three arc types are labelled by the vertex the arc cuts off.  A
pattern with balanced endpoint counts along every edge has a canonical
embedded realization, unique up to normal isotopy: arcs of the same type
are drawn parallel, nested around the vertex they cut off, and matched
along each edge by position.  Decomposing that realization into loops is
therefore a pure function of the counts, and a combinatorial loop (a
cyclic word in the six edges) is realizable as an embedded curve exactly
when it appears in the decomposition of its own counts.
"""

from dataclasses import dataclass

from . import model
from .enumeration import ResourceCeilingError, ceiling


class PatternError(ValueError):
    """Raised for malformed or unbalanced curve patterns."""


@dataclass(frozen=True)
class CurvePattern:
    """Counts of the 12 normal arc types, face-major order.

    ``counts[i]`` is the count of arc type ``model.ARC_TYPES[i]``; for
    face f the three types are ordered by ascending cut vertex.
    """
    counts: tuple

    def __post_init__(self):
        if len(self.counts) != 12:
            raise PatternError("a curve pattern needs exactly 12 counts")
        if any(c < 0 for c in self.counts):
            raise PatternError("arc counts must be nonnegative")

    @classmethod
    def from_block(cls, block):
        """Boundary pattern of one tetrahedron's (tri, quad, oct) block."""
        return cls(tuple(model.arc_count(block, f, v)
                         for (f, v) in model.ARC_TYPES))

    def count(self, f, v):
        return self.counts[model.ARC_INDEX[(f, v)]]

    def total(self):
        return sum(self.counts)

    def edge_endpoints(self, e, f):
        """Arc endpoints on edge e contributed by face f."""
        u, w = model.EDGES[e]
        return self.count(f, u) + self.count(f, w)

    def balance_violations(self):
        out = []
        for e in range(6):
            a, b = model.FACES_OF_EDGE[e]
            if self.edge_endpoints(e, a) != self.edge_endpoints(e, b):
                out.append(e)
        return out

    def add(self, other):
        return CurvePattern(tuple(x + y
                                  for x, y in zip(self.counts, other.counts)))


def loop_pattern(word):
    """The curve pattern of a single combinatorial loop.

    ``word`` is a cyclic sequence of edge indices; the arc between
    consecutive edges lies in their unique common face and cuts off
    their common vertex.
    """
    counts = [0] * 12
    arcs = _word_arcs(word)
    for (f, v) in arcs:
        counts[model.ARC_INDEX[(f, v)]] += 1
    return CurvePattern(tuple(counts))


def _word_arcs(word):
    """Arc types traversed by a cyclic edge word, or raise PatternError."""
    if len(word) < 3:
        raise PatternError("a normal loop crosses at least three edges")
    arcs = []
    faces = []
    for i, e in enumerate(word):
        e2 = word[(i + 1) % len(word)]
        if e == e2:
            raise PatternError("consecutive crossings of the same edge")
        shared = set(model.FACES_OF_EDGE[e]) & set(model.FACES_OF_EDGE[e2])
        if not shared:
            raise PatternError(f"edges {e} and {e2} share no face")
        f = shared.pop()
        u = set(model.EDGES[e]) & set(model.EDGES[e2])
        arcs.append((f, u.pop()))
        faces.append(f)
    for i in range(len(word)):
        if faces[i - 1] == faces[i]:
            raise PatternError(
                "curve fails transversality: consecutive arcs share a face")
    return arcs


# ---------------------------------------------------------------------------
# Canonical realization and loop decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LoopDecomposition:
    """The embedded loops realizing a balanced pattern.

    ``loops`` holds canonical cyclic edge words (lexicographically least
    rotation of the word or its reversal); ``lengths`` is the sorted
    multiset of loop lengths.
    """
    loops: tuple
    lengths: tuple


def canonical_word(word):
    """Least rotation of the word or its reversal."""
    best = None
    for w in (tuple(word), tuple(reversed(word))):
        for r in range(len(w)):
            rot = w[r:] + w[:r]
            if best is None or rot < best:
                best = rot
    return best


def decompose_pattern(pattern):
    """Split the canonical realization of a balanced pattern into loops.

    Raises :class:`PatternError` when the edge-balance invariant fails;
    balanced patterns always have an embedded realization.
    """
    bad = pattern.balance_violations()
    if bad:
        raise PatternError(
            f"edge balance violated on edges {bad}")

    # Position of the rank-r arc of type (f, v) on edge e: ranks count
    # away from the cut vertex, absolute positions from the lower edge
    # endpoint.
    def position(f, v, rank, e):
        u, w = model.EDGES[e]
        width = pattern.edge_endpoints(e, f)
        return rank if v == u else width - 1 - rank

    # Each crossing (e, pos) joins exactly two arc ends.
    ends_at = {}
    for (f, v) in model.ARC_TYPES:
        for rank in range(pattern.count(f, v)):
            for e in model.arc_endpoints(f, v):
                key = (e, position(f, v, rank, e))
                ends_at.setdefault(key, []).append((f, v, rank))
    for key, ends in ends_at.items():
        assert len(ends) == 2, (key, ends)

    visited = set()
    loops = []
    for start in sorted(ends_at):
        if start in visited:
            continue
        word = []
        crossing = start
        f, v, rank = ends_at[crossing][0]
        while crossing not in visited:
            visited.add(crossing)
            word.append(crossing[0])
            # leave the crossing along the other incident arc
            a, b = ends_at[crossing]
            f, v, rank = b if a == (f, v, rank) else a
            e1, e2 = model.arc_endpoints(f, v)
            e_out = e2 if crossing[0] == e1 else e1
            crossing = (e_out, position(f, v, rank, e_out))
        loops.append(canonical_word(word))

    loops.sort()
    return LoopDecomposition(loops=tuple(loops),
                             lengths=tuple(sorted(len(w) for w in loops)))


# ---------------------------------------------------------------------------
# Loop enumeration up to the symmetry group of the tetrahedron
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LoopClass:
    """An orbit of embedded loops under the S4 symmetry action."""
    length: int
    representative: tuple
    members: tuple

    @property
    def size(self):
        return len(self.members)


def _balanced_patterns(max_total):
    """All edge-balanced patterns with at most max_total arcs.

    Faces are filled in order 0..3; each balance equation is solved as
    soon as its second face is reached, so faces 1, 2, 3 contribute two,
    one and zero free counts.
    """
    out = []
    # n[f][v] indexed by cut vertex; face vertex sets per model.
    for n01 in range(max_total + 1):
        for n02 in range(max_total + 1 - n01):
            for n03 in range(max_total + 1 - n01 - n02):
                n0 = {1: n01, 2: n02, 3: n03}
                used0 = n01 + n02 + n03
                # face 1 shares edge {2,3} with face 0
                for n10 in range(max_total + 1 - used0):
                    for n12 in range(max_total + 1 - used0 - n10):
                        n13 = n0[2] + n0[3] - n12
                        if n13 < 0 or used0 + n10 + n12 + n13 > max_total:
                            continue
                        n1 = {0: n10, 2: n12, 3: n13}
                        used1 = used0 + n10 + n12 + n13
                        # face 2 shares {1,3} with face 0, {0,3} with face 1
                        for n23 in range(max_total + 1 - used1):
                            n21 = n0[1] + n0[3] - n23
                            n20 = n1[0] + n1[3] - n23
                            if n21 < 0 or n20 < 0:
                                continue
                            used2 = used1 + n20 + n21 + n23
                            if used2 > max_total:
                                continue
                            n2 = {0: n20, 1: n21, 3: n23}
                            # face 3 is determined by its three edges
                            r0 = n0[1] + n0[2]       # edge {1,2}
                            r1 = n1[0] + n1[2]       # edge {0,2}
                            r2 = n2[0] + n2[1]       # edge {0,1}
                            twice = r0 + r1 - r2
                            if twice < 0 or twice % 2:
                                continue
                            n32 = twice // 2
                            n31 = r0 - n32
                            n30 = r1 - n32
                            if n30 < 0 or n31 < 0:
                                continue
                            if n30 + n31 != r2:
                                continue
                            if used2 + n30 + n31 + n32 > max_total:
                                continue
                            counts = [0] * 12
                            for f, nf in ((0, n0), (1, n1), (2, n2),
                                          (3, {0: n30, 1: n31, 2: n32})):
                                for v, c in nf.items():
                                    counts[model.ARC_INDEX[(f, v)]] = c
                            out.append(CurvePattern(tuple(counts)))
    return out


def word_image(word, perm):
    """Image of a cyclic edge word under a vertex permutation."""
    return canonical_word([model.perm_on_edge(perm, e) for e in word])


def enumerate_normal_loops(max_length=None):
    """All embedded normal loops of bounded length, up to symmetry.

    Enumerates every edge-balanced pattern with at most ``max_length``
    arcs and keeps the ones whose canonical realization is a single
    loop; these are exactly the embedded normal curves.  Loops are
    grouped into orbits under the full 24-element symmetry group.
    """
    if max_length is None:
        max_length = ceiling("loop_length")
    if max_length > ceiling("loop_length"):
        raise ResourceCeilingError(
            f"loop length {max_length} exceeds ceiling "
            f"{ceiling('loop_length')}")
    loops = set()
    for pattern in _balanced_patterns(max_length):
        if pattern.total() == 0:
            continue
        dec = decompose_pattern(pattern)
        if len(dec.loops) == 1:
            loops.add(dec.loops[0])

    classes = []
    remaining = set(loops)
    while remaining:
        rep = min(remaining)
        orbit = {word_image(rep, p) for p in model.S4}
        assert orbit <= loops
        remaining -= orbit
        classes.append(LoopClass(length=len(rep), representative=rep,
                                 members=tuple(sorted(orbit))))
    classes.sort(key=lambda c: (c.length, c.representative))
    return classes


# ---------------------------------------------------------------------------
# The length-3/4/8 pattern condition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Check348:
    passed: bool
    witness: tuple = None        # offending loop word, when failing
    octagons: int = 0            # number of length-8 loops seen

    def __bool__(self):
        return self.passed


def check_348(pattern):
    """Pass iff the pattern's loops have lengths 3 and 4, plus at most
    one loop of length 8.

    The witness names an offending loop: either a loop of some other
    length, or the second length-8 loop.  The one-octagon rule across a
    whole surface (at most one tetrahedron carrying the length-8 loop)
    is enforced by the caller, which sees all tetrahedra.
    """
    dec = decompose_pattern(pattern)
    octagons = 0
    for word in dec.loops:
        n = len(word)
        if n in (3, 4):
            continue
        if n == 8:
            octagons += 1
            if octagons > 1:
                return Check348(False, witness=word, octagons=octagons)
            continue
        return Check348(False, witness=word, octagons=octagons)
    return Check348(True, octagons=octagons)
