import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normalhst.hst import (EMPTY_SURFACE, EQUAL, GREATER, LESS, SPHERE, TORUS,
                           AbstractSplitting, AbstractSurface, Component,
                           ComplexityVector, HstError,
                           NonseparatingCompression, RelativeCompression,
                           SeparatingCompression, c_surface,
                           compare_complexity, component_moves, compress,
                           genus, is_minimal_reachable, legal_rewrites,
                           random_descent, random_splitting,
                           splitting_complexity, splitting_from_json,
                           splitting_to_json, underlying_splitting,
                           untangle_step)


# ---------------------------------------------------------------------------
# c(F) and comparisons
# ---------------------------------------------------------------------------

def test_c_surface_values():
    assert c_surface(AbstractSurface.of(SPHERE)) == 0
    assert c_surface(AbstractSurface.of(TORUS)) == 4
    assert c_surface(AbstractSurface.of(genus(2))) == 16
    assert c_surface(AbstractSurface.of(Component(0, 3)), relative=True) == 25


def test_relative_equals_absolute_without_punctures():
    for chi in range(-8, 4, 2):
        surf = AbstractSurface.of(Component(chi))
        assert c_surface(surf) == c_surface(surf, relative=True)


def test_component_validation():
    with pytest.raises(HstError):
        Component(1)          # odd
    with pytest.raises(HstError):
        Component(4)          # chi > 2
    with pytest.raises(HstError):
        Component(0, -1)


def test_compare_examples():
    assert compare_complexity((4,), (4, 0)) == LESS
    assert compare_complexity((16, 4), (16, 3, 3)) == GREATER
    assert compare_complexity((4, 4), (4, 4)) == EQUAL
    assert compare_complexity((), (0,)) == LESS


def test_complexity_vector_validation():
    with pytest.raises(HstError):
        ComplexityVector((1, 2))
    with pytest.raises(HstError):
        ComplexityVector((-1,))
    assert ComplexityVector((4, 4, 0)).entries == (4, 4, 0)


vectors = st.lists(st.integers(0, 40), max_size=5).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


@given(vectors, vectors, vectors)
@settings(max_examples=200, deadline=None)
def test_compare_is_total_order(a, b, c):
    ab = compare_complexity(a, b)
    ba = compare_complexity(b, a)
    assert ab == -ba
    assert (ab == EQUAL) == (a == b)
    if ab != GREATER and compare_complexity(b, c) != GREATER:
        assert compare_complexity(a, c) != GREATER


# ---------------------------------------------------------------------------
# Splitting complexity
# ---------------------------------------------------------------------------

def test_splitting_complexity_examples():
    genus2 = AbstractSplitting.of(EMPTY_SURFACE, AbstractSurface.of(genus(2)),
                                  EMPTY_SURFACE)
    assert splitting_complexity(genus2).entries == (16,)

    torus = AbstractSurface.of(TORUS)
    product = AbstractSplitting.of(torus, torus, torus)
    assert splitting_complexity(product).entries == (4,)

    two_thick = AbstractSplitting.of(
        EMPTY_SURFACE, AbstractSurface.of(TORUS), EMPTY_SURFACE,
        AbstractSurface.of(SPHERE), EMPTY_SURFACE)
    assert splitting_complexity(two_thick).entries == (4, 0)


def test_thick_levels_nonempty():
    with pytest.raises(HstError, match="thick"):
        AbstractSplitting.of(EMPTY_SURFACE, EMPTY_SURFACE, EMPTY_SURFACE)


# ---------------------------------------------------------------------------
# Compressions
# ---------------------------------------------------------------------------

def test_compress_nonseparating():
    surf = AbstractSurface.of(TORUS)
    out = compress(surf, NonseparatingCompression(0))
    assert out.components == (SPHERE,)
    assert (c_surface(surf), c_surface(out)) == (4, 0)


def test_compress_separating():
    surf = AbstractSurface.of(genus(2))
    out = compress(surf, SeparatingCompression(0, 0))
    assert out.components == (TORUS, TORUS)
    assert (c_surface(surf), c_surface(out)) == (16, 8)


def test_compress_relative():
    surf = AbstractSurface.of(Component(0, 2))
    out = compress(surf, RelativeCompression(0))
    assert out.components == (Component(0, 0),)
    assert c_surface(surf, relative=True) == 16
    assert c_surface(out, relative=True) == 4
    assert c_surface(out) == c_surface(surf)    # absolute unchanged


def test_compress_preconditions_name_essentiality():
    sphere = AbstractSurface.of(SPHERE)
    with pytest.raises(HstError, match="essentiality"):
        compress(sphere, NonseparatingCompression(0))
    torus = AbstractSurface.of(TORUS)
    with pytest.raises(HstError, match="essentiality"):
        compress(torus, SeparatingCompression(0, 2))
    with pytest.raises(HstError, match="punctures"):
        compress(AbstractSurface.of(Component(0, 1)), RelativeCompression(0))
    # a twice-punctured sphere is the thin-position case and is legal
    out = compress(AbstractSurface.of(Component(2, 2)),
                   RelativeCompression(0))
    assert out.components == (Component(2, 0),)


def test_compress_descent_window():
    for chi in range(-8, 2, 2):
        for punctures in range(7):
            surf = AbstractSurface.of(Component(chi, punctures))
            for move in component_moves(surf):
                out = compress(surf, move)
                assert c_surface(out, True) < c_surface(surf, True)
                if not isinstance(move, RelativeCompression):
                    assert c_surface(out) < c_surface(surf)


# ---------------------------------------------------------------------------
# Untangle step
# ---------------------------------------------------------------------------

def _torus_level():
    return AbstractSurface.of(TORUS)


def test_untangle_case_1():
    base = AbstractSplitting.of(EMPTY_SURFACE, AbstractSurface.of(genus(2)),
                                EMPTY_SURFACE)
    out = untangle_step(base, 1, NonseparatingCompression(0),
                        NonseparatingCompression(0), False, False)
    assert len(out.levels) == 5
    assert out.thick_indices() == (1, 3)
    assert compare_complexity(splitting_complexity(out),
                              splitting_complexity(base)) == LESS


def test_untangle_case_2():
    base = AbstractSplitting.of(_torus_level(), AbstractSurface.of(genus(2)),
                                EMPTY_SURFACE)
    out = untangle_step(base, 1, NonseparatingCompression(0),
                        NonseparatingCompression(0), True, False)
    assert len(out.levels) == 3
    # levels: G_DE (sphere), G_E (torus), empty
    assert out.levels[0].components == (SPHERE,)
    assert out.levels[1].components == (TORUS,)


def test_untangle_case_3():
    base = AbstractSplitting.of(EMPTY_SURFACE, AbstractSurface.of(genus(2)),
                                _torus_level())
    out = untangle_step(base, 1, NonseparatingCompression(0),
                        NonseparatingCompression(0), False, True)
    assert len(out.levels) == 3
    assert out.levels[1].components == (TORUS,)
    assert out.levels[2].components == (SPHERE,)


def test_untangle_case_4_collapses():
    base = AbstractSplitting.of(_torus_level(), AbstractSurface.of(genus(2)),
                                _torus_level())
    out = untangle_step(base, 1, NonseparatingCompression(0),
                        NonseparatingCompression(0), True, True)
    assert len(out.levels) == 1
    assert out.levels[0].components == (SPHERE,)
    assert compare_complexity(splitting_complexity(out),
                              splitting_complexity(base)) == LESS


def test_untangle_rejects_even_level():
    base = AbstractSplitting.of(EMPTY_SURFACE, AbstractSurface.of(genus(2)),
                                EMPTY_SURFACE)
    with pytest.raises(HstError, match="thin"):
        untangle_step(base, 0, NonseparatingCompression(0),
                      NonseparatingCompression(0), False, False)
    with pytest.raises(HstError, match="neighbours"):
        untangle_step(base, 3, NonseparatingCompression(0),
                      NonseparatingCompression(0), False, False)


def test_untangle_rejects_inconsistent_flags():
    base = AbstractSplitting.of(EMPTY_SURFACE, AbstractSurface.of(genus(2)),
                                EMPTY_SURFACE)
    with pytest.raises(HstError, match="inconsistent"):
        untangle_step(base, 1, NonseparatingCompression(0),
                      NonseparatingCompression(0), True, False)


def test_untangle_case_1_descent_window():
    # exhaustive over single-component thick levels in the chi window
    for chi in range(-8, 2, 2):
        level = AbstractSurface.of(Component(chi))
        base = AbstractSplitting.of(EMPTY_SURFACE, level, EMPTY_SURFACE)
        for d in component_moves(level):
            g_d = compress(level, d)
            for e in component_moves(level):
                from normalhst.hst import _compose_after
                try:
                    compress(g_d, _compose_after(d, e))
                except HstError:
                    continue
                out = untangle_step(base, 1, d, e, False, False)
                assert compare_complexity(
                    splitting_complexity(out, True),
                    splitting_complexity(base, True)) == LESS
                for p in out.thick_indices():
                    assert c_surface(out.levels[p], True) < \
                        c_surface(level, True)


def test_untangle_separating_branches():
    level = AbstractSurface.of(genus(3))
    base = AbstractSplitting.of(EMPTY_SURFACE, level, EMPTY_SURFACE)
    d = SeparatingCompression(0, -2)      # genus-3 -> genus-2 + torus
    for branch in (0, 1):
        e = NonseparatingCompression(0, branch=branch)
        out = untangle_step(base, 1, d, e, False, False)
        assert compare_complexity(splitting_complexity(out),
                                  splitting_complexity(base)) == LESS


# ---------------------------------------------------------------------------
# Underlying splitting
# ---------------------------------------------------------------------------

def test_underlying_merges_product_regions():
    splitting = AbstractSplitting.of(
        EMPTY_SURFACE,
        AbstractSurface.of(TORUS, SPHERE),
        AbstractSurface.of(TORUS),
        AbstractSurface.of(TORUS, SPHERE),
        EMPTY_SURFACE)
    out = underlying_splitting(splitting)
    assert [lvl.multiset() for lvl in out.levels] == \
        [(), ((0, 0),), ()]


def test_underlying_all_spheres_degenerate():
    splitting = AbstractSplitting.of(
        EMPTY_SURFACE, AbstractSurface.of(Component(2, 4)), EMPTY_SURFACE)
    out = underlying_splitting(splitting)
    assert len(out.levels) == 1
    assert out.is_degenerate


def test_underlying_identity_when_clean():
    splitting = AbstractSplitting.of(
        EMPTY_SURFACE, AbstractSurface.of(TORUS),
        AbstractSurface.of(genus(2)), AbstractSurface.of(genus(3)),
        EMPTY_SURFACE)
    out = underlying_splitting(splitting)
    assert [lvl.multiset() for lvl in out.levels] == \
        [lvl.multiset() for lvl in splitting.levels]


def test_underlying_idempotent_random():
    rng = random.Random(11)
    for _ in range(100):
        splitting = random_splitting(rng)
        once = underlying_splitting(splitting)
        twice = underlying_splitting(once)
        assert [l.multiset() for l in once.levels] == \
            [l.multiset() for l in twice.levels]


def test_underlying_strips_punctures():
    splitting = AbstractSplitting.of(
        EMPTY_SURFACE, AbstractSurface.of(Component(0, 4)), EMPTY_SURFACE)
    out = underlying_splitting(splitting)
    assert out.levels[1].components == (Component(0, 0),)


# ---------------------------------------------------------------------------
# Searches and termination
# ---------------------------------------------------------------------------

def test_minimal_reachable_torus():
    base = AbstractSplitting.of(EMPTY_SURFACE, AbstractSurface.of(TORUS),
                                EMPTY_SURFACE)
    result = is_minimal_reachable(base)
    assert result.minimum.entries == (0,)
    assert result.certified
    assert len(result.trace) == 1


def test_minimal_reachable_fixed_point():
    base = AbstractSplitting.of(EMPTY_SURFACE, AbstractSurface.of(SPHERE),
                                EMPTY_SURFACE)
    result = is_minimal_reachable(base)
    assert result.minimum.entries == (0,)
    assert result.trace == ()
    assert result.states_explored == 1


def test_minimal_reachable_budget_exhausted():
    base = AbstractSplitting.of(EMPTY_SURFACE, AbstractSurface.of(genus(2)),
                                EMPTY_SURFACE)
    result = is_minimal_reachable(base, budget=0)
    assert not result.certified


def test_every_rewrite_decreases():
    rng = random.Random(3)
    for _ in range(20):
        splitting = random_splitting(rng, chi_range=(-4, 0), max_punctures=2)
        before = splitting_complexity(splitting, True)
        for _move, successor in legal_rewrites(splitting):
            after = splitting_complexity(successor, True)
            assert compare_complexity(after, before) == LESS


def test_random_descent_terminates():
    rng = random.Random(5)
    for _ in range(200):
        splitting = random_splitting(rng)
        steps, final = random_descent(splitting, rng)
        assert not legal_rewrites(final) or steps >= 0
        assert compare_complexity(
            splitting_complexity(final, True),
            splitting_complexity(splitting, True)) != GREATER


def test_json_round_trip():
    splitting = AbstractSplitting.of(
        EMPTY_SURFACE, AbstractSurface.of(Component(-2, 3), TORUS),
        EMPTY_SURFACE)
    data = splitting_to_json(splitting)
    assert data == [[], [[-2, 3], [0, 0]], []]
    back = splitting_from_json(data)
    assert [l.multiset() for l in back.levels] == \
        [l.multiset() for l in splitting.levels]
