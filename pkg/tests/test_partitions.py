from itertools import product

import pytest

from hilbfock.partitions import (MismatchedWeight, Partition, PartitionTuple,
                                 count_with_length, multiplicity_factorial,
                                 partitions_of, refines, splittings,
                                 splittings_merging_to, splittings_with_drop)


# independent oracle: count partitions by the coefficient recursion
# p(n, max) = p(n-max, max) + p(n, max-1)
def oracle_count(n, mx=None):
    if mx is None:
        mx = n
    if n == 0:
        return 1
    if mx == 0:
        return 0
    return oracle_count(n - mx, mx) + oracle_count(n, mx - 1) if mx <= n \
        else oracle_count(n, n)


def test_enumerate_small():
    assert partitions_of(0) == (Partition(()),)
    assert [p.nu for p in partitions_of(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_of(6)) == 11


def test_enumerate_counts_match_oracle():
    for n in range(13):
        assert len(partitions_of(n)) == oracle_count(n)


def test_enumerate_order_is_descending_lex():
    for n in range(9):
        raw = [p.nu for p in partitions_of(n)]
        assert raw == sorted(raw, reverse=True)


def test_partition_invariants():
    p = Partition((3, 2, 2, 1))
    assert p.n == 8
    assert p.length == 4
    assert p.drop == 4
    assert p.multiplicities == (1, 2, 1, 0, 0, 0, 0, 0)
    assert sum((i + 1) * a for i, a in enumerate(p.multiplicities)) == p.n
    assert sum(p.multiplicities) == p.length
    assert Partition.from_multiplicities(p.multiplicities) == p


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_multiplicity_factorial():
    assert multiplicity_factorial(Partition((1, 1, 1))) == 6
    assert multiplicity_factorial(Partition((2, 1))) == 1
    assert multiplicity_factorial(Partition((2, 2, 1, 1, 1))) == 12


def test_refines_known_incomparable_pairs():
    pairs = [((3, 1, 1, 1), (2, 2, 2)), ((4, 1, 1), (3, 3)),
             ((2, 2, 2), (5, 1)), ((2, 2, 2), (3, 3))]
    for a, b in pairs:
        pa, pb = Partition(a), Partition(b)
        assert not refines(pa, pb)
        assert not refines(pb, pa)


def test_refines_basic():
    ones = Partition((1,) * 6)
    assert refines(ones, Partition((2, 2, 2)))
    assert refines(Partition((2, 2, 1, 1)), Partition((3, 3)))
    assert not refines(Partition((3, 3)), Partition((2, 2, 1, 1)))


def test_refines_weight_mismatch():
    with pytest.raises(MismatchedWeight):
        refines(Partition((2,)), Partition((3,)))


@pytest.mark.parametrize("n", range(1, 9))
def test_refines_partial_order(n):
    ps = partitions_of(n)
    geq = {(a, b): refines(a, b) for a in ps for b in ps}
    for a in ps:
        assert geq[(a, a)]
    for a in ps:
        for b in ps:
            if a != b:
                assert not (geq[(a, b)] and geq[(b, a)])
    for a in ps:
        for b in ps:
            if not geq[(a, b)]:
                continue
            for c in ps:
                if geq[(b, c)]:
                    assert geq[(a, c)]


@pytest.mark.parametrize("n", range(1, 9))
def test_refines_extremes(n):
    ones = Partition((1,) * n)
    single = Partition((n,))
    for p in partitions_of(n):
        assert refines(ones, p)
        assert refines(p, single)
        if p != ones:
            assert not refines(p, ones)
        if p != single:
            assert not refines(single, p)


def test_merged_examples():
    host = Partition((2, 1))
    beta = PartitionTuple(host, (Partition((2,)), Partition((1,))))
    assert beta.merged() == Partition((2, 1))
    beta = PartitionTuple(host, (Partition((1, 1)), Partition((1,))))
    assert beta.merged() == Partition((1, 1, 1))
    host = Partition((5,))
    beta = PartitionTuple(host, (Partition((5,)),))
    assert beta.merged() == Partition((5,))


def test_merged_refines_host():
    for n in range(1, 8):
        for host in partitions_of(n):
            for beta in splittings(host):
                assert refines(beta.merged(), host)


def test_splittings_merging_to_examples():
    host = Partition((2, 1))
    got = splittings_merging_to(Partition((2, 1)), host)
    assert got == [PartitionTuple(host, (Partition((2,)), Partition((1,))))]
    host = Partition((3,))
    got = splittings_merging_to(Partition((1, 1, 1)), host)
    assert got == [PartitionTuple(host, (Partition((1, 1, 1)),))]
    got = splittings_merging_to(Partition((3,)), Partition((1, 1, 1)))
    assert got == []


def test_splittings_merging_to_weight_mismatch():
    with pytest.raises(MismatchedWeight):
        splittings_merging_to(Partition((2,)), Partition((2, 1)))


def test_splittings_merging_to_nonempty_iff_refines():
    for n in range(1, 8):
        for host in partitions_of(n):
            for target in partitions_of(n):
                got = splittings_merging_to(target, host)
                assert bool(got) == refines(target, host)


def test_splittings_with_drop_examples():
    host = Partition((2, 1))
    assert splittings_with_drop(0, host) == [
        PartitionTuple(host, (Partition((1, 1)), Partition((1,))))]
    assert splittings_with_drop(1, host) == [
        PartitionTuple(host, (Partition((2,)), Partition((1,))))]
    assert splittings_with_drop(2, host) == []


@pytest.mark.parametrize("n", range(1, 11))
def test_drop_fibers_partition_the_merge_fibers(n):
    # the drop-h tuples are exactly the union of the merge fibers over
    # targets of length n-h
    for host in partitions_of(n):
        for h in range(n + 1):
            by_drop = splittings_with_drop(h, host)
            by_target = []
            for target in partitions_of(n):
                if target.length == n - h:
                    by_target.extend(splittings_merging_to(target, host))
            assert sorted(by_drop, key=repr) == sorted(by_target, key=repr)


def test_count_with_length():
    assert count_with_length(4, 2) == 2
    assert count_with_length(7, 7) == 1
    assert count_with_length(4, 5) == 0
    for n in range(9):
        assert sum(count_with_length(n, l) for l in range(n + 1)) == \
            len(partitions_of(n))


def test_partition_tuple_validation():
    host = Partition((2, 1))
    with pytest.raises(ValueError):
        PartitionTuple(host, (Partition((2,)),))
    with pytest.raises(MismatchedWeight):
        PartitionTuple(host, (Partition((1,)), Partition((1,))))
