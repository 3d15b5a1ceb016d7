"""Small exact integer matrices (row-major, nonnegative entries)."""

from dataclasses import dataclass

from .errors import InputError


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InputError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise InputError("entries length does not match dimensions")

    @classmethod
    def from_rows(cls, rows):
        rows = [tuple(int(x) for x in r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise InputError("ragged or empty matrix")
        return cls(len(rows), len(rows[0]), tuple(x for r in rows for x in r))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self):
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self):
        return IntegerMatrix(self.cols, self.rows,
                             tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise InputError("dimension mismatch in matrix product")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                out.append(sum(self[i, t] * other[t, j] for t in range(self.cols)))
        return IntegerMatrix(self.rows, other.cols, tuple(out))

    def column_sums(self):
        return [sum(self[i, j] for i in range(self.rows)) for j in range(self.cols)]

    def row_sums(self):
        return [sum(self[i, j] for j in range(self.cols)) for i in range(self.rows)]


def integer_rank(m):
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    a = m.to_rows()
    nrows, ncols = m.rows, m.cols
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            f = a[r][col]
            row = a[r]
            top = a[rank]
            for c in range(col + 1, ncols):
                # exact division: every entry is a minor of the original matrix
                row[c] = (row[c] * p - f * top[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def boolean_power_positive(m, max_power):
    """Least n <= max_power with M^n entrywise positive, computed over the boolean semiring."""
    size = m.rows
    base = [[m[i, j] > 0 for j in range(size)] for i in range(size)]
    cur = [row[:] for row in base]
    for n in range(1, max_power + 1):
        if all(all(row) for row in cur):
            return n
        cur = [[any(cur[i][t] and base[t][j] for t in range(size)) for j in range(size)]
               for i in range(size)]
    return None
