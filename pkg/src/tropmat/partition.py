"""Set partitions of ``range(n)`` and the partition subspaces they cut out."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, TropmatError


@dataclass(frozen=True)
class Partition:
    """Blocks are sorted tuples, ordered by least element."""

    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        seen = [i for b in blocks for i in b]
        if sorted(seen) != list(range(self.n)) or any(not b for b in blocks):
            raise TropmatError(f"blocks {blocks} do not partition range({self.n})")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(n, tuple((i,) for i in range(n)))

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        groups: dict = {}
        for i, lab in enumerate(labels):
            groups.setdefault(lab, []).append(i)
        return cls(len(labels), tuple(groups.values()))

    def labels(self) -> tuple:
        lab = [0] * self.n
        for b, block in enumerate(self.blocks):
            for i in block:
                lab[i] = b
        return tuple(lab)

    def __len__(self):
        return len(self.blocks)

    def refines(self, other: "Partition") -> bool:
        lab = other.labels()
        return all(len({lab[i] for i in b}) == 1 for b in self.blocks)

    def meet(self, other: "Partition") -> "Partition":
        a, b = self.labels(), other.labels()
        return Partition.from_labels(list(zip(a, b)))

    def to_json(self) -> list:
        return [[i + 1 for i in b] for b in self.blocks]


def set_partitions(n: int) -> Iterator[Partition]:
    """All set partitions of ``range(n)`` via restricted growth strings."""
    if n == 0:
        yield Partition(0, ())
        return
    rgs = [0] * n

    def rec(i, m):
        if i == n:
            yield Partition.from_labels(rgs)
            return
        for v in range(m + 2):
            rgs[i] = v
            yield from rec(i + 1, max(m, v))

    rgs[0] = 0
    yield from rec(1, 0)


@dataclass(frozen=True)
class PartitionSubspace:
    """``{x : x_i = x_j whenever i ~ j}``, with class indicators as basis."""

    partition: Partition

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def dim(self) -> int:
        return len(self.partition)

    @property
    def kernel_basis(self) -> tuple:
        basis = []
        for block in self.partition.blocks:
            v = [Fraction(0)] * self.n
            for i in block:
                v[i] = Fraction(1)
            basis.append(tuple(v))
        return tuple(basis)

    def __contains__(self, x) -> bool:
        if len(x) != self.n:
            raise DimensionMismatch(f"vector of length {len(x)} in a subspace of R^{self.n}")
        return all(len({x[i] for i in b}) == 1 for b in self.partition.blocks)

    def coordinates(self, x) -> tuple:
        """Class values of a vector known to lie in the subspace."""
        return tuple(x[b[0]] for b in self.partition.blocks)

    def vector(self, coords: Sequence) -> tuple:
        lab = self.partition.labels()
        return tuple(Fraction(coords[lab[i]]) for i in range(self.n))

    def is_permutation_invariant(self, perms: Iterable) -> bool:
        blocks = {frozenset(b) for b in self.partition.blocks}
        return all(frozenset(p[i] for i in b) in blocks for p in perms for b in blocks)

    def to_json(self) -> dict:
        return {"partition": self.partition.to_json(), "dimension": self.dim}


def partition_from_kernel(n: int, basis: Sequence[Sequence]) -> Partition:
    """``i ~ j`` iff every basis vector has equal ``i`` and ``j`` coordinates."""
    return Partition.from_labels([tuple(v[i] for v in basis) for i in range(n)])
