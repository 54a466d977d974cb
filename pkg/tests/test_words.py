import pytest

from ebugs import (Colouring, CyclicWord, InvalidColouring, NotAWalk,
                   NotFound, Overflow, build_decoder, debruijn_count, decode,
                   field_cycle_to_word, is_optimal_partition, is_valid,
                   is_valid_identification, lll_lower_bound, moreau,
                   necklace_count, upper_bound)

# a 5-valid optimal partition of dB(2,5) into four 8-cycles
FOUR_EBUGS = ["10111110", "01000001", "00110110", "00111001"]


def four_ebug_colouring():
    return Colouring(2, 8, 5, [CyclicWord(w) for w in FOUR_EBUGS])


def test_cyclic_word_basics():
    w = CyclicWord("0102")
    assert len(w) == 4
    assert str(w) == "0102"
    assert w.symbols == (0, 1, 0, 2)
    assert str(w.rotate(1)) == "1020"
    assert w.rotate(4) == w
    assert list(w) == [0, 1, 0, 2]
    assert w[2] == 0


def test_cyclic_word_equality_up_to_rotation():
    a = CyclicWord("00101")
    b = CyclicWord("01010")
    assert a == b
    assert hash(a) == hash(b)
    assert a != CyclicWord("00110")


def test_canonical_is_least_rotation():
    w = CyclicWord("2100")
    assert str(w.canonical()) == "0021"
    assert str(CyclicWord("1111").canonical()) == "1111"


def test_windows():
    w = CyclicWord("0112")
    assert w.window(0, 2) == (0, 1)
    assert w.window(3, 2) == (2, 0)  # wraps around
    assert w.windows(3) == [(0, 1, 1), (1, 1, 2), (1, 2, 0), (2, 0, 1)]


def test_necklace_size_and_aperiodicity():
    assert CyclicWord("0101").size() == 2
    assert not CyclicWord("0101").is_aperiodic()
    assert CyclicWord("0011").size() == 4
    assert CyclicWord("0011").is_aperiodic()
    assert CyclicWord("0").size() == 1


def test_word_from_symbol_list_and_letters():
    assert CyclicWord([10, 0]) == CyclicWord("a0")
    with pytest.raises(ValueError):
        CyclicWord("0@1")


def test_colouring_validation():
    with pytest.raises(ValueError):
        Colouring(2, 4, 3, [CyclicWord("012")])  # symbol out of range
    with pytest.raises(ValueError):
        Colouring(2, 4, 3, [CyclicWord("01")])  # wrong length
    with pytest.raises(ValueError):
        Colouring(2, 2, 3, [CyclicWord("01")])  # l > k


def test_is_valid_accepts_partition():
    c = four_ebug_colouring()
    report = is_valid(c)
    assert report.valid
    assert report.window_count == 32
    assert report.first_conflict is None
    assert is_optimal_partition(c)


def test_is_valid_finds_conflict():
    c = Colouring(2, 4, 2, [CyclicWord("0011"), CyclicWord("0110")])
    report = is_valid(c)
    assert not report.valid
    win, a, b = report.first_conflict
    assert a != b
    # the reported window really does occur at both places
    ia, ra = a
    ib, rb = b
    assert c.words[ia].window(ra, 2) == win
    assert c.words[ib].window(rb, 2) == win


def test_within_word_conflict():
    c = Colouring(2, 4, 2, [CyclicWord("0101")])
    assert not is_valid(c).valid


def test_identification_only_validity():
    # repeated windows inside one word are fine, across words are not
    c = Colouring(2, 4, 2, [CyclicWord("0101"), CyclicWord("0011")])
    assert not is_valid_identification(c).valid
    c = Colouring(2, 4, 2, [CyclicWord("0101"), CyclicWord("1111")])
    assert is_valid_identification(c).valid
    assert not is_valid(c).valid


def test_canonicalized():
    c = Colouring(2, 4, 2, [CyclicWord("1100")])
    assert str(c.canonicalized().words[0]) == "0011"


def test_bounds():
    assert upper_bound(2, 8, 5) == 4
    assert upper_bound(4, 16, 6) == 256
    assert lll_lower_bound(4, 16, 6) == 8
    assert lll_lower_bound(2, 8, 5) == 0


def test_counting():
    assert necklace_count(2, 4) == 6
    assert necklace_count(3, 3) == 11
    assert moreau(2, 4) == 3
    assert moreau(3, 3) == 8
    assert moreau(2, 1) == 2


def test_debruijn_count():
    assert debruijn_count(2, 3) == 2
    assert debruijn_count(2, 4) == 16
    assert debruijn_count(2, 5) == 2048
    with pytest.raises(Overflow):
        debruijn_count(4, 4)


def test_field_cycle_to_word():
    states = [(0, 0), (0, 1), (1, 1), (1, 0)]
    assert str(field_cycle_to_word(states)) == "0011"
    with pytest.raises(NotAWalk):
        field_cycle_to_word([(0, 0), (1, 1)])
    with pytest.raises(NotAWalk):
        field_cycle_to_word([])


def test_decoder_round_trip():
    c = four_ebug_colouring()
    table = build_decoder(c)
    assert decode(table, "00101") == (1, 5)
    for i, w in enumerate(c.words):
        for r in range(c.k):
            assert decode(table, w.window(r, c.l)) == (i, r)


def test_decoder_rejects_bad_windows():
    table = build_decoder(four_ebug_colouring())
    with pytest.raises(NotFound):
        decode(table, "001")  # wrong length
    with pytest.raises(NotFound):
        decode(table, "0010@")  # malformed
    # a colouring that misses some windows
    c = Colouring(2, 4, 3, [CyclicWord("0001")])
    t2 = build_decoder(c)
    with pytest.raises(NotFound):
        decode(t2, "111")


def test_decoder_requires_valid_colouring():
    c = Colouring(2, 4, 2, [CyclicWord("0101")])
    with pytest.raises(InvalidColouring):
        build_decoder(c)
