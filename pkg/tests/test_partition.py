import pytest

from abacus_partitions.enumeration import partitions_of
from abacus_partitions.errors import MalformedInput, NotWeaklyDecreasing
from abacus_partitions.partitions.partition import (
    EMPTY,
    Partition,
    conjugate,
    parse_partition,
    staircase,
)


@pytest.mark.parametrize("text, parts", [
    ("6,3,3,1", (6, 3, 3, 1)),
    (" 4 , 4 ", (4, 4)),
    ("1", (1,)),
    ("", ()),
    ("   ", ()),
])
def test_parse_partition(text, parts):
    assert parse_partition(text).parts == parts


@pytest.mark.parametrize("text", ["a,1", "3,,1", "2,0", "3,-1", "1.5"])
def test_parse_partition_rejects_malformed_text(text):
    with pytest.raises(MalformedInput):
        parse_partition(text)


def test_parse_partition_rejects_increasing_parts():
    with pytest.raises(NotWeaklyDecreasing):
        parse_partition("1,3")


def test_partition_validates_parts():
    with pytest.raises(MalformedInput):
        Partition((2, 0))
    with pytest.raises(NotWeaklyDecreasing):
        Partition.of(2, 3)


def test_partition_basics():
    partition = Partition.of(6, 3, 3, 1)
    assert partition.size == 13
    assert partition.largest == 6
    assert len(partition) == 4
    assert str(partition) == "6,3,3,1"
    assert partition.young_diagram().splitlines() == ["######", "###", "###", "#"]
    assert not partition.has_distinct_parts()
    assert Partition.of(5, 2, 1).has_distinct_parts()


def test_empty_partition():
    assert EMPTY.size == 0
    assert not EMPTY
    assert str(EMPTY) == ""
    assert conjugate(EMPTY) == EMPTY


def test_from_unsorted_drops_zeros():
    assert Partition.from_unsorted([1, 0, 3, 2, 0]) == Partition.of(3, 2, 1)


def test_staircase():
    assert staircase(0) == EMPTY
    assert staircase(3) == Partition.of(3, 2, 1)


def test_conjugate_examples():
    assert conjugate(Partition.of(6, 3, 3, 1)) == Partition.of(4, 3, 3, 1, 1, 1)
    assert conjugate(Partition.of(3, 1)) == Partition.of(2, 1, 1)


@pytest.mark.parametrize("n", range(0, 13))
def test_conjugate_is_an_involution(n):
    for partition in partitions_of(n):
        assert conjugate(partition).size == n
        assert conjugate(conjugate(partition)) == partition


def test_partitions_of_lexicographic_order():
    assert [p.parts for p in partitions_of(4)] == [
        (1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,),
    ]
    assert partitions_of(0) == [EMPTY]
