"""Magic squares and magic rectangles, plus the offset blocks used to
label products with null fibers.

Squares: Siamese method (odd order), complement pattern (order 4k),
LUX method (order 4k+2).  Rectangles exist exactly for m = n (mod 2),
m, n >= 2 and (m, n) != (2, 2); both-even sizes pair complementary
length-(m/2) runs in each column, both-odd sizes fix per-row value sets
with balanced permutations and then arrange them column by column.
"""

from dataclasses import dataclass

from . import intervals
from .errors import InvalidParameterError, NoSuchObjectError


@dataclass(frozen=True)
class MagicRectangle:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples
    row_sum: int
    col_sum: int

    @classmethod
    def from_entries(cls, entries):
        entries = tuple(tuple(row) for row in entries)
        m = len(entries)
        n = len(entries[0])
        if any(len(row) != n for row in entries):
            raise InvalidParameterError("ragged matrix")
        flat = [x for row in entries for x in row]
        if len(set(flat)) != len(flat):
            raise InvalidParameterError("entries are not pairwise distinct")
        row_sums = {sum(row) for row in entries}
        col_sums = {sum(row[j] for row in entries) for j in range(n)}
        if len(row_sums) != 1 or len(col_sums) != 1:
            raise InvalidParameterError(
                f"sums not constant: rows {sorted(row_sums)}, cols {sorted(col_sums)}"
            )
        return cls(m, n, entries, row_sums.pop(), col_sums.pop())

    def transpose(self):
        return MagicRectangle.from_entries(list(zip(*self.entries)))

    def is_baseline(self):
        """True when the entries are exactly 1..mn."""
        flat = sorted(x for row in self.entries for x in row)
        return flat == list(range(1, self.rows * self.cols + 1))


def format_matrix(entries):
    return "\n".join(" ".join(str(x) for x in row) for row in entries) + "\n"


# ---------------------------------------------------------------------------
# magic squares

def _siamese(n):
    sq = [[0] * n for _ in range(n)]
    i, j = 0, n // 2
    for k in range(1, n * n + 1):
        sq[i][j] = k
        i2, j2 = (i - 1) % n, (j + 1) % n
        if sq[i2][j2]:
            i2, j2 = (i + 1) % n, j
        i, j = i2, j2
    return sq


def _doubly_even(n):
    sq = [[i * n + j + 1 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            # complement on the two main 4x4 sub-diagonal patterns
            if (i % 4 == j % 4) or ((i % 4) + (j % 4) == 3):
                sq[i][j] = n * n + 1 - sq[i][j]
    return sq


_LUX_OFFSETS = {
    "L": ((3, 0), (1, 2)),
    "U": ((0, 3), (1, 2)),
    "X": ((0, 3), (2, 1)),
}


def _lux(n):
    # n = 4k+2; build from an odd square of order 2k+1 via Conway's LUX pattern
    k = (n - 2) // 4
    half = 2 * k + 1
    base = _siamese(half)
    pattern = [["L"] * half for _ in range(k + 1)]
    pattern += [["U"] * half]
    pattern += [["X"] * half for _ in range(k - 1)]
    pattern[k][k] = "U"
    pattern[k + 1][k] = "L"
    sq = [[0] * n for _ in range(n)]
    for i in range(half):
        for j in range(half):
            v = 4 * (base[i][j] - 1)
            (a, b), (c, d) = _LUX_OFFSETS[pattern[i][j]]
            sq[2 * i][2 * j] = v + a
            sq[2 * i][2 * j + 1] = v + b
            sq[2 * i + 1][2 * j] = v + c
            sq[2 * i + 1][2 * j + 1] = v + d
    for i in range(n):
        for j in range(n):
            sq[i][j] += 1
    return sq


def magic_square(n):
    """n x n square over 1..n^2 with all row, column sums n(n^2+1)/2."""
    if n < 1:
        raise InvalidParameterError("order must be positive")
    if n == 2:
        raise NoSuchObjectError("no 2x2 magic square exists")
    if n == 1:
        return MagicRectangle.from_entries([[1]])
    if n % 2 == 1:
        sq = _siamese(n)
    elif n % 4 == 0:
        sq = _doubly_even(n)
    else:
        sq = _lux(n)
    return MagicRectangle.from_entries(sq)


# ---------------------------------------------------------------------------
# magic rectangles

def _select_pair_sides(n_pairs, option, target):
    """Pick one value from each pair {k, option(k)} so the picks sum to target.

    Deterministic bitmask scan; fine for the supported sizes.
    """
    if n_pairs > 22:
        raise InvalidParameterError("rectangle side too large for pair selection")
    for mask in range(1 << n_pairs):
        total = 0
        for k in range(1, n_pairs + 1):
            total += k if mask & (1 << (k - 1)) else option(k)
        if total == target:
            return [k if mask & (1 << (k - 1)) else option(k) for k in range(1, n_pairs + 1)]
    raise NoSuchObjectError("no balanced pair selection found")


def _even_rectangle(m, n):
    # columns pair the complementary length-h runs S_h(t) and S_h(2n+1-t)
    h = m // 2
    tops = _select_pair_sides(n, lambda k: 2 * n + 1 - k, n * (2 * n + 1) // 2)
    entries = [[0] * n for _ in range(m)]
    for j, t in enumerate(tops):
        direction = intervals.ASCENDING if j % 2 == 0 else intervals.DESCENDING
        b = 2 * n + 1 - t
        for i in range(1, h + 1):
            entries[i - 1][j] = intervals.term(h, t, direction, i)
            entries[h + i - 1][j] = intervals.term(h, b, direction, i)
    return entries


def _perm_family(m, n):
    """n permutations of 0..m-1 whose pointwise sums are all n(m-1)/2.

    Needs m, n odd: three staggered permutations share a constant pointwise
    sum, and the rest come in complementary pairs.
    """
    h = (m - 1) // 2
    fam = [
        list(range(m)),
        [(i + h) % m for i in range(m)],
        [m - 1 - 2 * i if i <= h else 2 * m - 1 - 2 * i for i in range(m)],
    ]
    for _ in range((n - 3) // 2):
        fam.append(list(range(m)))
        fam.append([m - 1 - i for i in range(m)])
    return fam

_ODD_NODE_LIMIT = 5_000_000


def _odd_rectangle(m, n):
    """Both-odd rectangle, m >= 5 rows: row i draws one value from each
    block {jm+1..jm+m} picked by a balanced permutation family (so row sums
    are forced), then columns are arranged by backtracking."""
    total = m * n
    col_target = m * (total + 1) // 2
    fam = _perm_family(m, n)
    avail = [sorted(j * m + 1 + fam[j][i] for j in range(n)) for i in range(m)]
    avail = [set(r) for r in avail]
    grid = [[0] * n for _ in range(m)]
    nodes = [0]

    def fill(col, row, csum):
        if col == n:
            return True
        if row == m:
            return csum == col_target and fill(col + 1, 0, 0)
        nodes[0] += 1
        if nodes[0] > _ODD_NODE_LIMIT:
            raise NoSuchObjectError(
                f"column arrangement for {m}x{n} not found within node limit")
        lo = hi = csum
        for r in range(row, m):
            lo += min(avail[r])
            hi += max(avail[r])
        if lo > col_target or hi < col_target:
            return False
        for v in sorted(avail[row]):
            if csum + v > col_target:
                break
            avail[row].discard(v)
            grid[row][col] = v
            if fill(col, row + 1, csum + v):
                return True
            avail[row].add(v)
        return False

    if not fill(0, 0, 0):
        raise NoSuchObjectError(f"no column arrangement found for {m}x{n}")
    return grid


def magic_rectangle(m, n):
    """m x n matrix over 1..mn with constant row sums and column sums."""
    if m == 1 and n == 1:
        return magic_square(1)
    if m < 2 or n < 2:
        raise NoSuchObjectError(f"no {m}x{n} magic rectangle exists")
    if (m - n) % 2 != 0:
        raise NoSuchObjectError("row and column counts must have the same parity")
    if m == 2 and n == 2:
        raise NoSuchObjectError("no 2x2 magic rectangle exists")
    if m == n:
        return magic_square(m)
    if m % 2 == 0:
        if n == 2:
            return magic_rectangle(n, m).transpose()
        return MagicRectangle.from_entries(_even_rectangle(m, n))
    # both odd: the balanced-permutation arrangement needs at least 5 rows,
    # so orient 3-row requests the tall way and transpose back
    if m == 3:
        return magic_rectangle(n, m).transpose()
    return MagicRectangle.from_entries(_odd_rectangle(m, n))


def offset_block(omega, i, step):
    """omega with (i-1)*step added to every entry."""
    if i < 1:
        raise InvalidParameterError("block index must be >= 1")
    shift = (i - 1) * step
    return MagicRectangle.from_entries(
        [[x + shift for x in row] for row in omega.entries]
    )
