import pytest

from ebugs import (BudgetExceeded, TooLarge, debruijn_cycles,
                   enumerate_debruijn, is_optimal_partition, is_valid,
                   max_k_cycles, verify_conjecture)


def test_max_k_cycles_partition():
    res = max_k_cycles(2, 4, 3)
    assert res.best_count == 2
    assert res.exhausted
    assert is_optimal_partition(res.witness)


def test_max_k_cycles_no_partition():
    # the two 3-cycles of dB(2,2) overlap, so only one fits
    res = max_k_cycles(2, 3, 2)
    assert res.best_count == 1
    assert res.exhausted
    assert is_valid(res.witness).valid


def test_max_k_cycles_budget():
    with pytest.raises(BudgetExceeded) as exc:
        max_k_cycles(2, 14, 7, budget=0.002)
    res = exc.value.result
    assert not res.exhausted
    assert is_valid(res.witness).valid
    assert res.nodes_expanded > 0


def test_max_k_cycles_size_cap():
    with pytest.raises(TooLarge):
        max_k_cycles(2, 4, 21)


def test_debruijn_cycles():
    cycles = debruijn_cycles(2, 3)
    assert len(cycles) == 2
    for w in cycles:
        assert len(set(w.windows(3))) == 8
    assert enumerate_debruijn(2, 4) == 16
    assert enumerate_debruijn(3, 2) == 24
    with pytest.raises(TooLarge):
        debruijn_cycles(2, 5)


def test_verify_conjecture_small():
    report = verify_conjecture(16)
    assert report.all_optimal
    assert report.failures == []
    # (2,4,3) is the first nontrivial case in the sweep
    assert any((c.q, c.k, c.l) == (2, 4, 3) for c in report.cases)
