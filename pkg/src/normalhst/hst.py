"""
The complexity calculus of Heegaard-Scharlemann-Thompson splittings.

Surfaces are modelled at the component level: a component is a closed
surface of even Euler characteristic at most 2, optionally punctured by
a transverse graph (only the puncture count matters).  A splitting is an
alternating sequence of such surfaces, thin levels at even positions and
thick levels at odd ones.

The complexity of a surface is the sum of (2 - chi)^2 over components;
a splitting's complexity is the non-increasing vector of its thick-level
complexities, compared lexicographically with the convention that a
proper prefix is smaller.  Compression rewrites and the four-case
weak-reduction step strictly decrease these complexities, which is what
makes every rewrite search terminate.
"""

from dataclasses import dataclass, field


class HstError(ValueError):
    """Raised for invalid surfaces, splittings or moves."""


@dataclass(frozen=True)
class Component:
    """One closed surface component, possibly punctured."""
    closed_chi: int
    punctures: int = 0

    def __post_init__(self):
        if self.closed_chi % 2 or self.closed_chi > 2:
            raise HstError(
                f"closed Euler characteristic must be even and <= 2, "
                f"got {self.closed_chi}")
        if self.punctures < 0:
            raise HstError("puncture count must be nonnegative")

    @property
    def punctured_chi(self):
        return self.closed_chi - self.punctures

    def chi(self, relative):
        return self.punctured_chi if relative else self.closed_chi


SPHERE = Component(2)
TORUS = Component(0)


def genus(g, punctures=0):
    """Orientable genus-g component."""
    return Component(2 - 2 * g, punctures)


@dataclass(frozen=True)
class AbstractSurface:
    """A surface as an addressable list of components.

    Components are kept in list order so that moves can name them by
    index; multiset equality is what the splitting calculus compares.
    """
    components: tuple

    @classmethod
    def of(cls, *components):
        return cls(tuple(components))

    @property
    def is_empty(self):
        return not self.components

    def multiset(self):
        return tuple(sorted((c.closed_chi, c.punctures)
                            for c in self.components))

    def same_surface(self, other):
        return self.multiset() == other.multiset()


EMPTY_SURFACE = AbstractSurface(())


def c_surface(surface, relative=False):
    """Sum of (2 - chi)^2 over components.

    With ``relative`` the punctured Euler characteristic is used, so a
    torus with three punctures scores (2 - (0 - 3))^2 = 25.
    """
    return sum((2 - comp.chi(relative)) ** 2 for comp in surface.components)


# ---------------------------------------------------------------------------
# Complexity vectors
# ---------------------------------------------------------------------------

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class ComplexityVector:
    """Non-increasing vector of nonnegative integers."""
    entries: tuple

    def __post_init__(self):
        if any(e < 0 for e in self.entries):
            raise HstError("complexity entries must be nonnegative")
        if any(self.entries[i] < self.entries[i + 1]
               for i in range(len(self.entries) - 1)):
            raise HstError("complexity vector must be non-increasing")

    def __len__(self):
        return len(self.entries)


def compare_complexity(a, b):
    """Lexicographic comparison; a proper prefix is smaller.

    The prefix rule makes dropping a thick level a strict decrease,
    which the termination arguments rely on.
    """
    xs = a.entries if isinstance(a, ComplexityVector) else tuple(a)
    ys = b.entries if isinstance(b, ComplexityVector) else tuple(b)
    for x, y in zip(xs, ys):
        if x != y:
            return LESS if x < y else GREATER
    if len(xs) != len(ys):
        return LESS if len(xs) < len(ys) else GREATER
    return EQUAL


# ---------------------------------------------------------------------------
# Splittings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbstractSplitting:
    """Alternating sequence of surfaces: thin at even, thick at odd index.

    Thick levels must be nonempty surfaces; thin levels, including the
    ends, may be empty.
    """
    levels: tuple

    def __post_init__(self):
        if not self.levels:
            raise HstError("a splitting has at least one level")
        for i, level in enumerate(self.levels):
            if i % 2 == 1 and level.is_empty:
                raise HstError(f"thick level {i} is empty")

    @classmethod
    def of(cls, *levels):
        return cls(tuple(levels))

    def thick_indices(self):
        return tuple(i for i in range(1, len(self.levels), 2))

    def thin_indices(self):
        return tuple(i for i in range(0, len(self.levels), 2))

    @property
    def is_degenerate(self):
        """No thick level at all (a product or a collapsed splitting)."""
        return not self.thick_indices()

    def canonical(self):
        return tuple(level.multiset() for level in self.levels)


def splitting_complexity(splitting, relative=False):
    """Thick-level complexities, sorted non-increasing."""
    values = sorted((c_surface(splitting.levels[i], relative)
                     for i in splitting.thick_indices()), reverse=True)
    return ComplexityVector(tuple(values))


# ---------------------------------------------------------------------------
# Compressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NonseparatingCompression:
    """Compress along a nonseparating disk: chi increases by 2."""
    component: int
    branch: int = 0
    kind: str = field(default="nonseparating", init=False)


@dataclass(frozen=True)
class SeparatingCompression:
    """Compress along a separating disk, splitting one component in two.

    chi1 + chi2 = chi + 2 with both parts of nonpositive Euler
    characteristic (no sphere is cut off); punctures are divided as the
    caller directs.
    """
    component: int
    chi1: int
    punctures1: int = 0
    branch: int = 0
    kind: str = field(default="separating", init=False)


@dataclass(frozen=True)
class RelativeCompression:
    """Isotopy across a disk cutting |F ∩ K| down by exactly two."""
    component: int
    branch: int = 0
    kind: str = field(default="relative", init=False)


def compress(surface, move):
    """Apply one compression move; raises HstError on precondition failure."""
    comps = list(surface.components)
    if not (0 <= move.component < len(comps)):
        raise HstError(f"no component {move.component}")
    comp = comps[move.component]
    if isinstance(move, NonseparatingCompression):
        if comp.closed_chi > 0:
            raise HstError(
                "nonseparating compression needs chi <= 0 "
                "(essentiality: spheres admit none)")
        comps[move.component] = Component(comp.closed_chi + 2, comp.punctures)
    elif isinstance(move, SeparatingCompression):
        chi2 = comp.closed_chi + 2 - move.chi1
        if move.chi1 > 0 or chi2 > 0:
            raise HstError(
                "separating compression must not cut off a sphere "
                "(essentiality: both sides need chi <= 0)")
        if not (0 <= move.punctures1 <= comp.punctures):
            raise HstError("puncture split out of range")
        comps[move.component: move.component + 1] = [
            Component(move.chi1, move.punctures1),
            Component(chi2, comp.punctures - move.punctures1),
        ]
    elif isinstance(move, RelativeCompression):
        if comp.punctures < 2:
            raise HstError("relative compression needs at least 2 punctures")
        if comp.punctured_chi > 0:
            raise HstError(
                "relative compression needs punctured chi <= 0 "
                "(essentiality clause)")
        comps[move.component] = Component(comp.closed_chi, comp.punctures - 2)
    else:
        raise HstError(f"unknown move {move!r}")
    return AbstractSurface(tuple(comps))


def _compose_after(d_move, e_move):
    """Re-address the E move so it applies after the D move.

    When D was separating and both moves target the same component,
    ``e_move.branch`` picks which of the two pieces E acts on.
    """
    shift = 0
    if isinstance(d_move, SeparatingCompression):
        if e_move.component > d_move.component:
            shift = 1
        elif e_move.component == d_move.component:
            if e_move.branch not in (0, 1):
                raise HstError(
                    "E move on the component split by D needs branch 0 or 1")
            shift = e_move.branch
    cls = type(e_move)
    kwargs = {"component": e_move.component + shift}
    if isinstance(e_move, SeparatingCompression):
        kwargs.update(chi1=e_move.chi1, punctures1=e_move.punctures1)
    return cls(**kwargs)


# ---------------------------------------------------------------------------
# The four-case weak reduction step
# ---------------------------------------------------------------------------

def untangle_step(splitting, p, move_d, move_e, eq_d, eq_e):
    """Rewrite a thick level along a pair of opposite-side compressions.

    ``move_d`` compresses toward the thin level below, ``move_e`` toward
    the one above; both address components of level p.  ``eq_d`` and
    ``eq_e`` assert that the compressed surface is (parallel to) the
    neighbouring thin level; an equality claim whose surfaces do not
    even agree as multisets is rejected.  The four cases:

    1. neither equal: level p becomes G_D, G_DE, G_E;
    2. G_D equal below: levels p-1, p become G_DE, G_E;
    3. G_E equal above: levels p, p+1 become G_D, G_DE;
    4. both equal: levels p-1, p, p+1 collapse to G_DE.
    """
    levels = splitting.levels
    if p % 2 == 0:
        raise HstError(f"level {p} is thin; untangling rewrites thick levels")
    if not (1 <= p < len(levels) - 1):
        raise HstError(f"thick level {p} needs thin neighbours on both sides")
    g_p = levels[p]
    g_d = compress(g_p, move_d)
    g_e = compress(g_p, move_e)
    g_de = compress(g_d, _compose_after(move_d, move_e))

    if eq_d and not g_d.same_surface(levels[p - 1]):
        raise HstError("equality flag for the D side is inconsistent")
    if eq_e and not g_e.same_surface(levels[p + 1]):
        raise HstError("equality flag for the E side is inconsistent")

    if not eq_d and not eq_e:
        new = levels[:p] + (g_d, g_de, g_e) + levels[p + 1:]
    elif eq_d and not eq_e:
        new = levels[:p - 1] + (g_de, g_e) + levels[p + 1:]
    elif not eq_d and eq_e:
        new = levels[:p] + (g_d, g_de) + levels[p + 2:]
    else:
        new = levels[:p - 1] + (g_de,) + levels[p + 2:]
    return AbstractSplitting(new)


# ---------------------------------------------------------------------------
# Underlying splitting
# ---------------------------------------------------------------------------

def _strip_spheres(surface):
    return AbstractSurface(tuple(Component(c.closed_chi)
                                 for c in surface.components
                                 if c.closed_chi != 2))


def underlying_splitting(splitting):
    """Forget sphere components and punctures, then renormalize.

    Sphere components are dropped from every level (punctures with
    them: the underlying splitting lives in the ambient manifold, not
    the pair).  Runs of consecutive levels that become equal multisets
    collapse to one level, the abstract surrogate for cobounding a
    product; empty surfaces landing at thick positions are then removed
    until the alternating shape is restored.  Idempotent; a result with
    no thick level is flagged via ``is_degenerate``.
    """
    seq = [_strip_spheres(level) for level in splitting.levels]
    while True:
        merged = []
        for level in seq:
            if not merged or not merged[-1].same_surface(level):
                merged.append(level)
        for i, level in enumerate(merged):
            if i % 2 == 1 and level.is_empty:
                del merged[i]
                break
        else:
            return AbstractSplitting(tuple(merged))
        seq = merged


# ---------------------------------------------------------------------------
# Move generation and the descent search
# ---------------------------------------------------------------------------

def component_moves(surface):
    """All legal compression moves on a surface, in deterministic order."""
    moves = []
    for i, comp in enumerate(surface.components):
        chi, p = comp.closed_chi, comp.punctures
        if chi <= 0:
            moves.append(NonseparatingCompression(i))
        for chi1 in range(chi + 2, 1, 2):
            if chi1 > 0:
                continue
            for p1 in range(p + 1):
                moves.append(SeparatingCompression(i, chi1, p1))
        if p >= 2 and comp.punctured_chi <= 0:
            moves.append(RelativeCompression(i))
    return moves


def _untangle_candidates(splitting, p):
    """All legal untangle steps at thick level p, with derived flags."""
    g_p = splitting.levels[p]
    below = splitting.levels[p - 1]
    above = splitting.levels[p + 1]
    for d in component_moves(g_p):
        g_d = compress(g_p, d)
        for e_base in component_moves(g_p):
            branches = (0, 1) if (isinstance(d, SeparatingCompression)
                                  and e_base.component == d.component) else (0,)
            for branch in branches:
                e = _rebrand(e_base, branch)
                try:
                    compress(g_d, _compose_after(d, e))
                except HstError:
                    continue
                yield d, e, g_d.same_surface(below), \
                    compress(g_p, e).same_surface(above)


def _rebrand(move, branch):
    if branch == move.branch:
        return move
    kwargs = {"component": move.component, "branch": branch}
    if isinstance(move, SeparatingCompression):
        kwargs.update(chi1=move.chi1, punctures1=move.punctures1)
    return type(move)(**kwargs)


def legal_rewrites(splitting):
    """All single-move successors: thick-level compressions and
    untangle steps.  Deterministic order."""
    out = []
    levels = splitting.levels
    for p in splitting.thick_indices():
        for move in component_moves(levels[p]):
            new_level = compress(levels[p], move)
            out.append((("compress", p, move),
                        AbstractSplitting(levels[:p] + (new_level,)
                                          + levels[p + 1:])))
        if 1 <= p < len(levels) - 1:
            for d, e, eq_d, eq_e in _untangle_candidates(splitting, p):
                out.append((("untangle", p, d, e, eq_d, eq_e),
                            untangle_step(splitting, p, d, e, eq_d, eq_e)))
    return out


@dataclass(frozen=True)
class MinimalSearchResult:
    minimum: ComplexityVector
    splitting: AbstractSplitting
    trace: tuple
    certified: bool
    states_explored: int


def is_minimal_reachable(splitting, budget=10000):
    """Smallest complexity vector reachable by legal rewrites.

    Exhaustive depth-first search; every move strictly decreases the
    (relative) complexity vector, so the search space is finite and the
    search terminates.  ``certified`` reports whether it was exhausted
    within the budget; with punctures absent the relative vector equals
    the absolute one.
    """
    best = splitting_complexity(splitting, relative=True)
    best_state = splitting
    best_trace = ()
    visited = set()
    explored = 0
    exhausted = True

    stack = [(splitting, ())]
    while stack:
        state, trace = stack.pop()
        key = state.canonical()
        if key in visited:
            continue
        visited.add(key)
        explored += 1
        if explored > budget:
            exhausted = False
            break
        vec = splitting_complexity(state, relative=True)
        if compare_complexity(vec, best) == LESS:
            best, best_state, best_trace = vec, state, trace
        for move, successor in reversed(legal_rewrites(state)):
            stack.append((successor, trace + (move,)))

    return MinimalSearchResult(minimum=best, splitting=best_state,
                               trace=best_trace, certified=exhausted,
                               states_explored=explored)


def random_descent(splitting, rng, untangle_probability=0.5):
    """Apply random legal rewrites until none remain.

    Draws single compressions directly and attempts untangle steps with
    randomly paired moves (full enumeration of move pairs is avoided, so
    long runs stay cheap).  Returns (moves applied, final splitting);
    asserts strict lexicographic descent at every step, so
    nontermination would surface as an error.
    """
    steps = 0
    current = splitting
    vec = splitting_complexity(current, relative=True)
    while True:
        thicks = current.thick_indices()
        levels = current.levels
        compressions = [(p, m) for p in thicks
                        for m in component_moves(levels[p])]
        if not compressions:
            return steps, current
        successor = None
        interior = [p for p in thicks if 1 <= p < len(levels) - 1]
        if interior and rng.random() < untangle_probability:
            for _ in range(4):
                p = rng.choice(interior)
                moves = component_moves(levels[p])
                if not moves:
                    continue
                d = rng.choice(moves)
                e = rng.choice(moves)
                if isinstance(d, SeparatingCompression) \
                        and e.component == d.component:
                    e = _rebrand(e, rng.randint(0, 1))
                try:
                    g_d = compress(levels[p], d)
                    compress(g_d, _compose_after(d, e))
                except HstError:
                    continue
                eq_d = g_d.same_surface(levels[p - 1])
                eq_e = compress(levels[p], e).same_surface(levels[p + 1])
                successor = untangle_step(current, p, d, e, eq_d, eq_e)
                break
        if successor is None:
            p, move = rng.choice(compressions)
            successor = AbstractSplitting(
                levels[:p] + (compress(levels[p], move),) + levels[p + 1:])
        new_vec = splitting_complexity(successor, relative=True)
        assert compare_complexity(new_vec, vec) == LESS, \
            "a rewrite failed to decrease complexity"
        current, vec = successor, new_vec
        steps += 1


def random_splitting(rng, max_thick=2, max_components=2,
                     chi_range=(-4, 0), max_punctures=3):
    """A random valid splitting for termination experiments."""
    n_thick = rng.randint(1, max_thick)
    levels = [EMPTY_SURFACE]
    for _ in range(n_thick):
        comps = tuple(
            Component(2 * rng.randint(chi_range[0] // 2, chi_range[1] // 2),
                      rng.randint(0, max_punctures))
            for _ in range(rng.randint(1, max_components)))
        levels.append(AbstractSurface(comps))
        thin = tuple(
            Component(2 * rng.randint(chi_range[0] // 2, chi_range[1] // 2),
                      rng.randint(0, max_punctures))
            for _ in range(rng.randint(0, max_components)))
        levels.append(AbstractSurface(thin))
    return AbstractSplitting(tuple(levels))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def surface_to_json(surface):
    return [[c.closed_chi, c.punctures] for c in surface.components]


def surface_from_json(data):
    return AbstractSurface(tuple(Component(int(chi), int(p))
                                 for chi, p in data))


def splitting_to_json(splitting):
    return [surface_to_json(level) for level in splitting.levels]


def splitting_from_json(data):
    return AbstractSplitting(tuple(surface_from_json(level)
                                   for level in data))


def move_to_json(move):
    out = {"kind": move.kind, "component": move.component}
    if isinstance(move, SeparatingCompression):
        out["chi1"] = move.chi1
        out["punctures1"] = move.punctures1
    if move.branch:
        out["branch"] = move.branch
    return out


def trace_to_json(trace):
    out = []
    for step in trace:
        if step[0] == "compress":
            out.append({"step": "compress", "level": step[1],
                        "move": move_to_json(step[2])})
        else:
            out.append({"step": "untangle", "level": step[1],
                        "move_d": move_to_json(step[2]),
                        "move_e": move_to_json(step[3]),
                        "eq_d": step[4], "eq_e": step[5]})
    return out
