import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normalhst import model
from normalhst.curve_patterns import (CurvePattern, PatternError,
                                      canonical_word, check_348,
                                      decompose_pattern,
                                      enumerate_normal_loops, loop_pattern,
                                      word_image)
from normalhst.enumeration import ResourceCeilingError

TRIANGLE_WORDS = [canonical_word([e for e in range(6) if v in model.EDGES[e]])
                  for v in range(4)]
QUAD_WORDS = [canonical_word([s[3][0] for s in model.QUAD_CYCLES[q]])
              for q in range(3)]
OCT_BLOCKS = [((0, 0, 0, 0), (0, 0, 0), tuple(1 if i == q else 0
                                              for i in range(3)))
              for q in range(3)]


def test_single_triangle_loop():
    dec = decompose_pattern(loop_pattern(TRIANGLE_WORDS[0]))
    assert dec.lengths == (3,)


def test_single_quad_loop():
    for w in QUAD_WORDS:
        dec = decompose_pattern(loop_pattern(w))
        assert dec.lengths == (4,)


def test_parallel_quads():
    for k in (2, 3, 5):
        p = loop_pattern(QUAD_WORDS[0])
        total = p
        for _ in range(k - 1):
            total = total.add(p)
        dec = decompose_pattern(total)
        assert dec.lengths == (4,) * k


def test_two_quad_types_merge_to_octagon():
    p = loop_pattern(QUAD_WORDS[0]).add(loop_pattern(QUAD_WORDS[1]))
    assert decompose_pattern(p).lengths == (8,)


def test_edge_balance_violation():
    counts = [0] * 12
    counts[0] = 1
    with pytest.raises(PatternError, match="balance"):
        decompose_pattern(CurvePattern(tuple(counts)))


def test_degenerate_words_rejected():
    with pytest.raises(PatternError):
        loop_pattern((0, 0, 1))
    with pytest.raises(PatternError):
        loop_pattern((0, 5, 1))      # opposite edges share no face
    with pytest.raises(PatternError):
        loop_pattern((0, 1))


def test_check_348_examples():
    oct_pattern = CurvePattern.from_block(OCT_BLOCKS[0])
    p = oct_pattern.add(loop_pattern(TRIANGLE_WORDS[2])) \
                   .add(loop_pattern(TRIANGLE_WORDS[3]))
    result = check_348(p)
    assert result.passed and result.octagons == 1

    assert check_348(CurvePattern((0,) * 12)).passed

    twelve = next(c for c in enumerate_normal_loops(12) if c.length == 12)
    bad = check_348(loop_pattern(twelve.representative))
    assert not bad.passed
    assert len(bad.witness) == 12


def test_check_348_two_octagons():
    double = CurvePattern.from_block(
        ((0, 0, 0, 0), (0, 0, 0), (2, 0, 0)))
    result = check_348(double)
    assert not result.passed and len(result.witness) == 8


def test_length_law_up_to_20():
    classes = enumerate_normal_loops(20)
    lengths = {c.length for c in classes}
    assert lengths <= {3, 4, 8, 12, 16, 20}
    assert all(c.length == 3 or c.length % 4 == 0 for c in classes)


def test_class_counts_3_4_8():
    classes = enumerate_normal_loops(8)
    by_length = {}
    for c in classes:
        by_length.setdefault(c.length, []).append(c)
    assert len(by_length[3]) == 1 and by_length[3][0].size == 4
    assert len(by_length[4]) == 1 and by_length[4][0].size == 3
    assert len(by_length[8]) == 1 and by_length[8][0].size == 3


def test_octagon_loops_match_octagon_coordinates():
    classes = enumerate_normal_loops(8)
    eights = next(c for c in classes if c.length == 8)
    loop_counts = {decompose_pattern(loop_pattern(w)).loops[0]
                   for w in eights.members}
    oct_counts = set()
    for block in OCT_BLOCKS:
        dec = decompose_pattern(CurvePattern.from_block(block))
        assert dec.lengths == (8,)
        oct_counts.add(dec.loops[0])
    assert loop_counts == oct_counts


def test_loop_words_round_trip():
    # a loop's own counts decompose back to exactly that loop
    for cls in enumerate_normal_loops(12):
        for word in cls.members:
            dec = decompose_pattern(loop_pattern(word))
            assert dec.loops == (canonical_word(word),)


def test_symmetry_action_closes():
    classes = enumerate_normal_loops(8)
    all_words = {w for c in classes for w in c.members}
    for w in all_words:
        for p in model.S4:
            assert word_image(w, p) in all_words


def test_ceiling():
    with pytest.raises(ResourceCeilingError):
        enumerate_normal_loops(24)


@st.composite
def compatible_loop_multiset(draw):
    """Triangles, parallel quads of one type, at most one octagon."""
    tri_counts = draw(st.lists(st.integers(0, 2), min_size=4, max_size=4))
    quad_type = draw(st.integers(0, 2))
    quad_count = draw(st.integers(0, 3))
    use_oct = draw(st.booleans()) and quad_count == 0
    return tri_counts, quad_type, quad_count, use_oct


@given(compatible_loop_multiset())
@settings(max_examples=60, deadline=None)
def test_round_trip_compatible_families(spec):
    tri_counts, quad_type, quad_count, use_oct = spec
    pattern = CurvePattern((0,) * 12)
    expected = []
    for v, k in enumerate(tri_counts):
        for _ in range(k):
            pattern = pattern.add(loop_pattern(TRIANGLE_WORDS[v]))
            expected.append(3)
    for _ in range(quad_count):
        pattern = pattern.add(loop_pattern(QUAD_WORDS[quad_type]))
        expected.append(4)
    if use_oct:
        pattern = pattern.add(CurvePattern.from_block(OCT_BLOCKS[quad_type]))
        expected.append(8)
    dec = decompose_pattern(pattern)
    assert dec.lengths == tuple(sorted(expected))
