import itertools

import pytest
from hypothesis import given, strategies as st

from aztecdiamond.errors import InvalidSpanError
from aztecdiamond.schroeder import (
    SchroederPath,
    Step,
    count_paths,
    count_paths_between,
    enumerate_paths,
    large_schroeder,
    small_schroeder,
)

LISTED_LARGE = [1, 2, 6, 22, 90, 394, 1806]
LISTED_SMALL = [1, 1, 3, 11, 45, 197, 903]


def brute_force_words(width, small_only=False):
    """Every U/L/D word of the given width that stays weakly above the axis."""
    found = set()
    for length in range(width // 2, width + 1):
        for word in itertools.product("ULD", repeat=length):
            if sum(2 if s == "L" else 1 for s in word) != width:
                continue
            h, ok = 0, True
            for s in word:
                if small_only and s == "L" and h == 0:
                    ok = False
                h += {"U": 1, "L": 0, "D": -1}[s]
                if h < 0:
                    ok = False
            if ok and h == 0:
                found.add("".join(word))
    return found


def test_listed_values():
    assert [large_schroeder(n) for n in range(7)] == LISTED_LARGE
    assert [small_schroeder(n) for n in range(7)] == LISTED_SMALL


@pytest.mark.parametrize("n,expected", [(0, 1), (3, 22), (6, 1806)])
def test_large_examples(n, expected):
    assert large_schroeder(n) == expected


@pytest.mark.parametrize("n,expected", [(0, 1), (2, 3), (5, 197)])
def test_small_examples(n, expected):
    assert small_schroeder(n) == expected


def test_large_is_twice_small():
    for n in range(1, 11):
        assert large_schroeder(n) == 2 * small_schroeder(n)


def test_big_values_stay_exact():
    # r_40 exceeds 2**64; the DP route shares no code with the recurrence
    assert large_schroeder(40) > 2 ** 64
    assert large_schroeder(40) == count_paths(80)


def test_step_displacements():
    assert [(s.dx, s.dy) for s in Step] == [(1, 1), (2, 0), (1, -1)]


def test_enumerate_examples():
    assert [p.steps for p in enumerate_paths(-1, 1)] == ["UD", "L"]
    assert [p.steps for p in enumerate_paths(0, 4, small_only=True)] == ["UUDD", "ULD", "UDUD"]
    empty = enumerate_paths(0, 0)
    assert len(empty) == 1 and empty[0].steps == "" and empty[0].vertices() == ((0, 0),)


@pytest.mark.parametrize("m", range(0, 6))
@pytest.mark.parametrize("small", [False, True])
def test_enumeration_matches_brute_force(m, small):
    got = [p.steps for p in enumerate_paths(3, 3 + 2 * m, small)]
    assert set(got) == brute_force_words(2 * m, small)
    assert len(got) == len(set(got))
    rank = {"U": 0, "L": 1, "D": 2}
    assert got == sorted(got, key=lambda w: [rank[c] for c in w])


@pytest.mark.parametrize("n", range(0, 11))
def test_enumeration_counts(n):
    assert len(enumerate_paths(0, 2 * n)) == large_schroeder(n)
    assert len(enumerate_paths(0, 2 * n, True)) == small_schroeder(n)


def test_enumerated_paths_are_valid():
    for p in enumerate_paths(-5, 7):
        ys = [y for _, y in p.vertices()]
        assert min(ys) == 0 and ys[0] == ys[-1] == 0
        assert p.start_x == -5 and p.end_x == 7


@pytest.mark.parametrize("start,end", [(0, 3), (2, 0), (1, -1)])
def test_bad_span(start, end):
    with pytest.raises(InvalidSpanError):
        enumerate_paths(start, end)


@pytest.mark.parametrize("i,j,expected", [(1, 1, 2), (1, 2, 6), (2, 3, 90)])
def test_count_between_examples(i, j, expected):
    assert count_paths_between(i, j) == expected


def test_count_between_is_shifted_large_number():
    for i in range(1, 6):
        for j in range(1, 6):
            assert count_paths_between(i, j) == large_schroeder(i + j - 1)


def test_path_rejects_dips_and_open_ends():
    with pytest.raises(ValueError):
        SchroederPath(0, "DU")
    with pytest.raises(ValueError):
        SchroederPath(0, "UU")
    with pytest.raises(ValueError):
        SchroederPath(0, "UXD")


def test_is_small():
    assert SchroederPath(0, "ULD").is_small
    assert not SchroederPath(0, "LUD").is_small
    assert SchroederPath(0, "").is_small


@given(st.lists(st.sampled_from("ULD"), max_size=12))
def test_json_round_trip(word):
    h = 0
    for s in word:
        h += {"U": 1, "L": 0, "D": -1}[s]
        if h < 0:
            return
    if h != 0:
        return
    p = SchroederPath(-7, "".join(word))
    assert SchroederPath.from_json(p.to_json()) == p
    assert len(p.vertices()) == len(word) + 1
