"""Young diagrams and the integer statistics the vertex formulas consume.

Parts index rows: parts[i] is the length of row i (1-based rows in the
cell coordinates below).  Conjugation flips rows and columns, so callers
that think in column heights just conjugate at the boundary.
"""

from functools import cache


class Partition:
    """A weakly decreasing tuple of positive integers; () is the empty diagram."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative, got {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def part(self, i):
        """Row length at 1-based index i; 0 beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self):
        return sum(self.parts)

    @property
    def norm_sq(self):
        return sum(p * p for p in self.parts)

    @property
    def kappa(self):
        """Framing statistic: sum of p_i (p_i - 2i + 1) = 2 sum over cells of (j - i)."""
        return sum(p * (p - 2 * i - 1) for i, p in enumerate(self.parts))

    def conjugate(self):
        if not self.parts:
            return Partition()
        w = self.parts[0]
        cols = [0] * w
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other):
        """True when other fits inside self row by row."""
        return all(other.part(i) <= self.part(i) for i in range(1, len(other) + 1))

    def cells(self):
        """All (row, col) cells, 1-based, row-major order."""
        return [(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def arm(self, i, j):
        """Cells strictly to the right of (i, j) in its row."""
        return self.part(i) - j

    def leg(self, i, j):
        """Cells strictly below (i, j) in its column (the transposed arm)."""
        return sum(1 for p in self.parts[i:] if p >= j)

    def hook(self, i, j):
        return self.arm(i, j) + self.leg(i, j) + 1

    def cell_stats(self):
        """Map cell -> (arm, leg, hook) over the whole diagram."""
        return {
            (i, j): (self.arm(i, j), self.leg(i, j), self.hook(i, j))
            for (i, j) in self.cells()
        }


EMPTY = Partition()


def statistics(nu):
    """Bundle of {size, norm_sq, kappa} for a partition."""
    return {"size": nu.size, "norm_sq": nu.norm_sq, "kappa": nu.kappa}


@cache
def partitions_of(n):
    """All partitions of n, graded-lexicographically (largest first part first)."""
    if n < 0:
        raise ValueError("partition size must be nonnegative")
    if n == 0:
        return (EMPTY,)
    result = []

    def build(remaining, maxpart, prefix):
        if remaining == 0:
            result.append(Partition(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            build(remaining - p, p, prefix + (p,))

    build(n, n, ())
    return tuple(result)


def enumerate_up_to(n):
    """All partitions of every size 0..n, each size block complete and ordered."""
    out = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    return out


def count_partitions(n):
    """p(n) by Euler's pentagonal-number recurrence (independent of the enumerator)."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= m:
                total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def subpartitions_within(*bounds):
    """All eta contained in every bound partition (for skew/vertex inner sums)."""
    if not bounds:
        return [EMPTY]
    cap = [min(b.part(i) for b in bounds) for i in range(1, min(len(b) for b in bounds) + 1)]
    while cap and cap[-1] == 0:
        cap.pop()
    out = []

    # depth-first over row lengths, each row bounded by cap and the row above
    def walk(row, prev, prefix):
        out.append(Partition(prefix))
        if row >= len(cap):
            return
        for p in range(1, min(cap[row], prev) + 1):
            walk(row + 1, p, prefix + (p,))

    walk(0, 10 ** 9, ())
    return out


def parse_partition(text):
    """Parse the bracket format: "[2,1]" or "[]" for the empty diagram."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"partition must look like [2,1], got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return EMPTY
    try:
        parts = [int(x) for x in body.split(",")]
    except ValueError:
        raise ValueError(f"partition entries must be integers, got {text!r}") from None
    return Partition(parts)
