"""Magic squares and rectangles, with brute-force oracles for the small
existence and impossibility claims."""

from itertools import permutations

import pytest

from antimagic import MagicRectangle, magic_rectangle, magic_square, offset_block
from antimagic.errors import InvalidParameterError, NoSuchObjectError
from antimagic.fixtures import rectangle_8x6


def assert_magic(r, m, n):
    assert r.rows == m and r.cols == n
    assert r.is_baseline()
    assert r.row_sum == n * (m * n + 1) // 2
    assert r.col_sum == m * (m * n + 1) // 2


def test_magic_squares():
    for n in (1, 3, 4, 5, 6, 7, 8, 9):
        sq = magic_square(n)
        assert_magic(sq, n, n)
        assert sq.row_sum == sq.col_sum == n * (n * n + 1) // 2


def test_order_two_square_impossible():
    # oracle: exhaust all arrangements of 1..4
    for perm in permutations(range(1, 5)):
        rows = (perm[:2], perm[2:])
        sums = {sum(r) for r in rows} | {perm[0] + perm[2], perm[1] + perm[3]}
        assert len(sums) > 1  # never constant
    with pytest.raises(NoSuchObjectError):
        magic_square(2)


def test_rectangle_existence_guards():
    with pytest.raises(NoSuchObjectError):
        magic_rectangle(2, 2)
    with pytest.raises(NoSuchObjectError):
        magic_rectangle(2, 3)  # mixed parity
    with pytest.raises(NoSuchObjectError):
        magic_rectangle(1, 3)  # a single row cannot have constant columns
    assert magic_rectangle(1, 1).entries == ((1,),)


def brute_force_rectangle(m, n):
    """Tiny independent solver: fill column by column."""
    total = m * n
    col_target = m * (total + 1) // 2
    row_target = n * (total + 1) // 2
    used = [False] * (total + 1)
    rowsum = [0] * m
    grid = [[0] * n for _ in range(m)]

    def place(col, row, csum):
        if col == n:
            return True
        if row == m:
            return csum == col_target and place(col + 1, 0, 0)
        left = n - col - 1
        for v in range(1, total + 1):
            if used[v] or csum + v > col_target:
                continue
            rs = rowsum[row] + v
            if rs > row_target - left or rs + left * total < row_target:
                continue
            used[v], rowsum[row], grid[row][col] = True, rs, v
            if place(col, row + 1, csum + v):
                return True
            used[v], rowsum[row] = False, rs - v
        return False

    return grid if place(0, 0, 0) else None


def test_3x5_exists_by_brute_force():
    grid = brute_force_rectangle(3, 5)
    assert grid is not None
    oracle = MagicRectangle.from_entries(grid)
    assert oracle.row_sum == 40 and oracle.col_sum == 24
    constructed = magic_rectangle(3, 5)
    assert_magic(constructed, 3, 5)
    assert constructed.row_sum == 40 and constructed.col_sum == 24


def test_all_supported_rectangles():
    for m in range(2, 13):
        for n in range(2, 13):
            if (m - n) % 2 or (m, n) == (2, 2):
                continue
            assert_magic(magic_rectangle(m, n), m, n)


def test_transpose_swaps_sums():
    r = magic_rectangle(4, 6)
    t = r.transpose()
    assert t.rows == 6 and t.cols == 4
    assert t.row_sum == r.col_sum and t.col_sum == r.row_sum


def test_8x6_fixture():
    omega = rectangle_8x6()
    assert_magic(omega, 8, 6)
    assert omega.row_sum == 147 and omega.col_sum == 196


def test_from_entries_rejects_bad_matrices():
    with pytest.raises(InvalidParameterError):
        MagicRectangle.from_entries([[1, 2], [2, 1]])  # repeated entry
    with pytest.raises(InvalidParameterError):
        MagicRectangle.from_entries([[1, 2], [3, 4]])  # sums not constant


def test_offset_block():
    omega = magic_square(3)
    shifted = offset_block(omega, 3, 9)
    assert shifted.entries[0][0] == omega.entries[0][0] + 18
    assert shifted.row_sum == omega.row_sum + 3 * 18
    assert offset_block(omega, 1, 9).entries == omega.entries
    with pytest.raises(InvalidParameterError):
        offset_block(omega, 0, 9)
