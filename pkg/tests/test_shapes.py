import math
from fractions import Fraction

import pytest

from brauer.coeffs import NPoly, n_minus_1_half
from brauer.shapes import (
    b_list,
    branch,
    contents,
    content_of_difference,
    enumerate_O,
    enumerate_paths,
    in_O,
    parse_partition,
    path_counts,
    path_from_json,
    path_to_json,
)


def test_in_O():
    assert not in_O((1, 1, 1), 3, 2)  # first column too long
    assert in_O((), 2, 5)
    assert not in_O((2, 1), 4, 3)  # parity
    # the column bound counts both of the first two columns
    assert not in_O((2, 1), 3, 2)
    assert in_O((2, 1), 3, 3)


def test_enumerate_O():
    assert enumerate_O(2, 5) == ((), (1, 1), (2,))
    assert enumerate_O(1, 1) == ((1,),)
    # (2,1) has three boxes in its first two columns, so it is out at N=2
    assert enumerate_O(3, 2) == ((1,), (3,))
    assert enumerate_O(3, 6) == ((1,), (1, 1, 1), (2, 1), (3,))


def test_branch():
    assert branch((), 1, 5) == ((1,),)
    assert branch((1,), 2, 5) == ((), (1, 1), (2,))
    # at N=1 a second column is forbidden, so only the empty diagram remains
    assert branch((1,), 2, 1) == ((),)


def test_enumerate_paths():
    assert len(enumerate_paths((1,), 1, 3)) == 1
    paths = enumerate_paths((1,), 3, 3)
    assert len(paths) == 3
    middles = {p[2] for p in paths}
    assert middles == {(), (1, 1), (2,)}
    assert len(enumerate_paths((1,), 3, 1)) == 1
    with pytest.raises(ValueError):
        enumerate_paths((2, 1), 3, 2)


def test_every_path_step_in_O():
    for n, Nv in [(4, 3), (5, 2), (4, 7)]:
        for lam in enumerate_O(n, Nv):
            for path in enumerate_paths(lam, n, Nv):
                for k, step in enumerate(path):
                    assert in_O(step, k, Nv)


def test_path_count_recurrence_matches_enumeration():
    for n in range(7):
        for Nv in (1, 2, 3, 5, 10):
            counts = path_counts(n, Nv)
            for lam in enumerate_O(n, Nv):
                assert counts.get(lam, 0) == len(enumerate_paths(lam, n, Nv))


def test_sum_of_squares_is_double_factorial():
    # at N >= 2n the column bound never binds
    for n in range(1, 6):
        total = sum(c * c for c in path_counts(n, 2 * n).values())
        assert total == math.prod(range(1, 2 * n, 2))


def test_contents():
    assert sorted(contents((3, 1))) == [-1, 0, 1, 2]
    assert content_of_difference((2,), (1,)) == 1
    assert content_of_difference((1, 1), (1,)) == -1
    assert content_of_difference((1,), (1, 1)) == -1
    with pytest.raises(ValueError):
        content_of_difference((2,), (1, 1))


def test_b_list():
    # empty diagram: single value (N-1)/2
    assert b_list((), Fraction(3)) == [Fraction(1)]
    assert b_list((), NPoly.N()) == [n_minus_1_half()]
    # mu = (1), N = 3: addable contents {1, -1}, removable {0}
    assert b_list((1,), Fraction(3)) == [Fraction(-1), Fraction(0), Fraction(2)]
    # 2l+1 entries with l the number of distinct rows
    assert len(b_list((2, 1), Fraction(4))) == 5
    assert len(b_list((2, 2), Fraction(4))) == 3
    for mu in [(), (1,), (3, 2), (2, 2, 1)]:
        assert len(b_list(mu, Fraction(7))) % 2 == 1


def test_parse_partition_and_json():
    assert parse_partition("") == ()
    assert parse_partition("0") == ()
    assert parse_partition("2,1") == (2, 1)
    with pytest.raises(ValueError):
        parse_partition("1,2")
    p = enumerate_paths((1,), 3, 3)[0]
    assert path_from_json(path_to_json(p)) == p
