"""Integer partitions: the index set for symmetric-group irreducibles and
for nilpotent Jordan types.

Partitions are kept in normal form (weakly decreasing positive parts, no
trailing zeros); the empty partition is allowed and indexes the degenerate
n = 0 cases throughout the package.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, Iterator


class Partition:
    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        self.parts = parts

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram (column lengths)."""
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for p in self.parts:
            for c in range(p):
                cols[c] += 1
        return Partition(cols)

    def dominates(self, other: "Partition") -> bool:
        """Dominance order: every partial sum of self >= that of other.

        Only defined between partitions of the same size.
        """
        if self.size != other.size:
            raise ValueError(
                f"dominance needs equal sizes: |{self}| != |{other}|"
            )
        a = b = 0
        for i in range(max(len(self.parts), len(other.parts))):
            a += self.parts[i] if i < len(self.parts) else 0
            b += other.parts[i] if i < len(other.parts) else 0
            if a < b:
                return False
        return True

    def n_stat(self) -> int:
        """The partition statistic sum_i (i-1) * parts[i] (1-indexed)."""
        return sum(i * p for i, p in enumerate(self.parts))

    def hooks(self) -> list[int]:
        """Hook lengths of all cells, in row-major order."""
        conj = self.conjugate().parts
        return [
            (self.parts[r] - c) + (conj[c] - r) - 1
            for r in range(len(self.parts))
            for c in range(self.parts[r])
        ]

    def num_standard_tableaux(self) -> int:
        """Count of standard Young tableaux, by the hook-length formula."""
        count = factorial(self.size)
        for h in self.hooks():
            count //= h
        return count


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, in reverse lexicographic order: (n) first,
    (1,...,1) last."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    out: list[Partition] = []

    def extend(remaining: int, cap: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(cap, remaining), 0, -1):
            extend(remaining - p, p, prefix + (p,))

    extend(n, n, ())
    return out
