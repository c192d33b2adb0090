import pytest

from normalhst.thin_position import (Event, MorsePresentation,
                                     PresentationError, all_presentations,
                                     exchange_move, format_presentation,
                                     induced_splitting, legal_exchanges,
                                     parse_presentation,
                                     thin_position_search, width)


def levels_of(splitting):
    return [[(c.closed_chi, c.punctures) for c in lvl.components]
            for lvl in splitting.levels]


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------

def test_validation():
    with pytest.raises(PresentationError, match="death"):
        MorsePresentation.of("D")
    with pytest.raises(PresentationError, match="zero"):
        MorsePresentation.of("B")
    with pytest.raises(PresentationError, match="slot"):
        MorsePresentation.of(("B", 1), ("D", 0))
    with pytest.raises(PresentationError, match="slot"):
        MorsePresentation.of(("B", 0), ("D", 1))


def test_parse_and_format():
    text = "B 0\nB 2\nD 1\nD 0\n"
    pres = parse_presentation(text)
    assert pres.events == (Event("B", 0), Event("B", 2),
                           Event("D", 1), Event("D", 0))
    assert format_presentation(pres) == text
    with pytest.raises(PresentationError, match="line 1"):
        parse_presentation("X 0\n")
    with pytest.raises(PresentationError, match="empty"):
        parse_presentation("# nothing\n")


# ---------------------------------------------------------------------------
# Width
# ---------------------------------------------------------------------------

def test_width_unknot():
    prof = width(MorsePresentation.of("B", "D"))
    assert prof.profile == (2,)
    assert prof.width == 2
    assert prof.thick_indices == (0,)
    assert prof.thin_indices == ()


def test_width_bridge_shape():
    prof = width(MorsePresentation.of("B", "B", "D", "D"))
    assert prof.profile == (2, 4, 2)
    assert prof.width == 8
    assert prof.thick_indices == (1,)


def test_width_stacked_flagged():
    prof = width(MorsePresentation.of("B", "D", "B", "D"))
    assert prof.profile == (2, 0, 2)
    assert prof.width == 4
    assert prof.hits_zero_interior
    assert prof.thick_indices == (0, 2)
    assert prof.thin_indices == (1,)


def test_profile_steps_by_two():
    for pres in all_presentations(6):
        prof = width(pres)
        assert prof.width == sum(prof.profile)
        padded = (0,) + prof.profile + (0,)
        assert all(abs(padded[i + 1] - padded[i]) == 2
                   for i in range(len(padded) - 1))


def test_thick_thin_strict_inequalities():
    for pres in all_presentations(6):
        prof = width(pres)
        padded = (0,) + prof.profile + (0,)
        for j in prof.thick_indices:
            assert padded[j] < padded[j + 1] > padded[j + 2]
        for j in prof.thin_indices:
            assert prof.profile[j - 1] > prof.profile[j] < prof.profile[j + 1]
        # thick and thin alternate, starting and ending thick
        marks = sorted([(j, "T") for j in prof.thick_indices]
                       + [(j, "t") for j in prof.thin_indices])
        assert "".join(m for _, m in marks) == \
            "T" + "tT" * (len(prof.thick_indices) - 1)


# ---------------------------------------------------------------------------
# Induced splittings
# ---------------------------------------------------------------------------

def test_induced_unknot():
    s = induced_splitting(MorsePresentation.of("B", "D"))
    assert levels_of(s) == [[], [(2, 2)], []]


def test_induced_three_thick():
    pres = MorsePresentation.of("B", "B", "D", "B", "D", "D")
    assert width(pres).profile == (2, 4, 2, 4, 2)
    s = induced_splitting(pres)
    assert levels_of(s) == [[], [(2, 4)], [(2, 2)], [(2, 4)], []]


def test_induced_bridge_position():
    s = induced_splitting(MorsePresentation.of("B", "B", "D", "D"))
    assert levels_of(s) == [[], [(2, 4)], []]


def test_induced_matches_profile_maxima():
    for pres in all_presentations(6):
        prof = width(pres)
        splitting = induced_splitting(pres)
        thick_punctures = [splitting.levels[i].components[0].punctures
                           for i in splitting.thick_indices()]
        assert thick_punctures == [prof.profile[j]
                                   for j in prof.thick_indices]
        for lvl in splitting.levels[1:-1]:
            assert all(c.closed_chi == 2 for c in lvl.components)


# ---------------------------------------------------------------------------
# Exchange moves
# ---------------------------------------------------------------------------

def test_exchange_requires_birth_then_death():
    pres = MorsePresentation.of("B", "D")
    with pytest.raises(PresentationError, match="independent"):
        exchange_move(pres, 1, 0)
    with pytest.raises(PresentationError, match="birth immediately"):
        exchange_move(MorsePresentation.of("B", "B", "D", "D"), 1, 0)


def test_exchange_legal_case():
    # [B0, B0, B0, D2, D0, D0]: the birth at index 2 inserts strands
    # 0,1; the death at index 3 joins strands 2,3 (old ones): legal.
    pres = MorsePresentation.of(("B", 0), ("B", 0), ("B", 0), ("D", 2),
                                ("D", 0), ("D", 0))
    before = width(pres).width
    result = exchange_move(pres, 3, 2)
    assert result.width_decrease == 4
    assert width(result.presentation).width == before - 4
    # the swapped events: death first (reindexed), then birth
    kinds = result.presentation.kinds()
    assert kinds == "BBDBDD"


def test_exchange_interleaved_rejected():
    # death joins exactly the newborn strands
    pres = MorsePresentation.of(("B", 0), ("B", 0), ("D", 0), ("D", 0))
    with pytest.raises(PresentationError, match="independent"):
        exchange_move(pres, 2, 1)


def test_all_legal_exchanges_drop_width_by_four():
    checked = 0
    for count in range(2, 7):
        for pres in all_presentations(count):
            w0 = width(pres).width
            for d, b in legal_exchanges(pres):
                result = exchange_move(pres, d, b)
                assert width(result.presentation).width == w0 - 4
                checked += 1
    assert checked > 0


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------

def test_search_all_two_births_two_deaths():
    pres = MorsePresentation.of("B", "B", "D", "D")
    free = thin_position_search(pres, mode="all")
    assert free.minimum_width == 4
    assert free.witness.kinds() == "BDBD"
    assert free.certified
    tied = thin_position_search(pres, mode="all", single_component=True)
    assert tied.minimum_width == 8


def test_search_one_birth_one_death():
    res = thin_position_search(MorsePresentation.of("B", "D"), mode="all")
    assert res.minimum_width == 2


def test_search_stacks():
    for k in (2, 3):
        pres = MorsePresentation.of(*(["B", "D"] * k))
        res = thin_position_search(pres, mode="all")
        assert res.minimum_width == 2 * k


def test_search_exchange_mode():
    pres = MorsePresentation.of(("B", 0), ("B", 0), ("B", 0), ("D", 2),
                                ("D", 0), ("D", 0))
    res = thin_position_search(pres, mode="exchange")
    assert res.minimum_width == width(pres).width - 4
    assert res.certified


def test_search_budget_exhausted():
    pres = MorsePresentation.of("B", "B", "D", "D")
    res = thin_position_search(pres, mode="all", budget=1)
    assert not res.certified


def test_induced_splitting_feeds_complexity_calculus():
    # the splitting induced by a presentation is a valid input to the
    # complexity side: thick level spheres with p punctures weigh
    # (2 - (2 - p))^2 = p^2 relatively
    from normalhst.hst import splitting_complexity
    pres = MorsePresentation.of("B", "B", "D", "B", "D", "D")
    splitting = induced_splitting(pres)
    relative = splitting_complexity(splitting, relative=True)
    assert relative.entries == (16, 16)
    absolute = splitting_complexity(splitting)
    assert absolute.entries == (0, 0)
