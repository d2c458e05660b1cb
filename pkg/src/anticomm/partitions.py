"""Young diagrams confined to a rows x cols rectangle."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of non-negative integers, trailing zeros trimmed.

    The empty partition has ``parts == ()`` and prints as ``()``.  Ordering is
    lexicographic on the parts tuple.
    """

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts):
        return cls(tuple(parts))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        """Part ``i`` (0-based), zero beyond the length."""
        return self.parts[i] if i < len(self.parts) else 0

    @property
    def size(self):
        return sum(self.parts)

    def padded(self, rows):
        if len(self.parts) > rows:
            raise ValueError(f"{self} has more than {rows} parts")
        return self.parts + (0,) * (rows - len(self.parts))

    def fits(self, rows, cols):
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= cols)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    __repr__ = __str__

    def to_json(self):
        return list(self.parts)

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data))


EMPTY = Partition()


def iterate_box(rows, cols):
    """Yield every partition in the rows x cols rectangle once, in lexicographic order.

    The count is C(rows + cols, rows).
    """
    if rows < 0 or cols < 0:
        raise ValueError("negative rectangle")
    yield from _box(rows, cols)


@lru_cache(maxsize=None)
def _box(rows, cols):
    out = []

    def rec(prefix, remaining, bound):
        out.append(Partition(tuple(prefix)))
        if remaining == 0:
            return
        for first in range(1, bound + 1):
            prefix.append(first)
            rec(prefix, remaining - 1, first)
            prefix.pop()

    rec([], rows, cols)
    return tuple(sorted(out))


def conjugate(p):
    parts = p.parts
    if not parts:
        return EMPTY
    return Partition(tuple(sum(1 for x in parts if x > j) for j in range(parts[0])))


def complement(p, rows, cols):
    """(cols - p[rows-1], ..., cols - p[0]): the diagram filling the rest of the box, rotated."""
    if not p.fits(rows, cols):
        raise ValueError(f"{p} does not fit in a {rows}x{cols} box")
    padded = p.padded(rows)
    return Partition(tuple(cols - x for x in reversed(padded)))


def contains(lam, mu):
    """True iff mu_i <= lam_i for all i."""
    return len(mu) <= len(lam) and all(m <= lam[i] for i, m in enumerate(mu.parts))


def add_box(p, rows, cols):
    """Partitions obtained from ``p`` by adding one box, staying inside the rectangle."""
    padded = list(p.padded(rows))
    out = []
    for i in range(rows):
        limit = cols if i == 0 else padded[i - 1]
        if padded[i] < limit:
            padded[i] += 1
            out.append(Partition(tuple(padded)))
            padded[i] -= 1
    return out
