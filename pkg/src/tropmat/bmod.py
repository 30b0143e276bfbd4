"""Finitely generated Boolean modules, realized as finite join-semilattices.

A presentation on ``n`` generators is a list of relations between subsets
(Boolean sums of generators).  Its quotient is computed on all ``2^n``
subsets with a union-find; each class is named by its least bitmask.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Sequence

from .errors import CapExceeded, DimensionMismatch
from .matroid import elements, mask_json, to_mask
from .perm import apply_mask
from .scalar import is_bottom
from .valuated import ValuatedMatroid

MAX_GENERATORS = 20


@dataclass(frozen=True)
class BPresentation:
    n: int
    relations: tuple  # pairs of bitmasks

    @classmethod
    def from_lists(cls, n: int, relations) -> "BPresentation":
        """Relations as pairs of 1-based generator lists."""
        rels = []
        for lhs, rhs in relations:
            for side in (lhs, rhs):
                if any(not isinstance(e, int) or not 1 <= e <= n for e in side):
                    raise DimensionMismatch(f"relation side {list(side)} has generators outside 1..{n}")
            rels.append((to_mask(e - 1 for e in lhs), to_mask(e - 1 for e in rhs)))
        return cls(n, tuple(rels))

    def to_json(self) -> dict:
        return {"n": self.n, "relations": [[mask_json(a), mask_json(b)] for a, b in self.relations]}


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True


@dataclass(frozen=True)
class FiniteBModule:
    n: int
    class_of: tuple = field(repr=False)  # subset mask -> least mask of its class
    elements: tuple  # sorted class representatives

    def join(self, a: int, b: int) -> int:
        return self.class_of[a | b]

    def leq(self, a: int, b: int) -> bool:
        return self.join(a, b) == self.class_of[b]

    @property
    def bottom(self) -> int:
        return self.class_of[0]

    def generator(self, i: int) -> int:
        return self.class_of[1 << i]

    def __len__(self):
        return len(self.elements)

    def join_table(self) -> dict:
        return {(a, b): self.join(a, b) for a in self.elements for b in self.elements}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "classes": len(self.elements),
            "elements": [mask_json(e) for e in self.elements],
            "generator_classes": [mask_json(self.generator(i)) for i in range(self.n)],
            "join_irreducibles": [mask_json(j) for j in join_irreducibles(self)],
            "atoms": [mask_json(a) for a in atoms(self)],
            "quasi_free": is_quasi_free(self),
        }


def congruence_closure(p: BPresentation) -> FiniteBModule:
    """Least congruence of ``(B^n, or)`` containing the relations.

    A congruence here is an equivalence with ``x ~ y => x|z ~ y|z``.  Each
    round merges ``x|z`` with ``y|z`` for every pair of class-mates and
    every ``z``; rounds repeat until nothing merges.
    """
    n = p.n
    if n > MAX_GENERATORS:
        raise CapExceeded(f"at most {MAX_GENERATORS} generators (2^n classes are materialized)")
    size = 1 << n
    uf = _UnionFind(size)
    for a, b in p.relations:
        if a >= size or b >= size:
            raise DimensionMismatch("relation mentions a generator beyond n")
        uf.union(a, b)
    changed = True
    while changed:
        changed = False
        # every element merges with its root under each single-generator join
        for x in range(size):
            r = uf.find(x)
            if r == x:
                continue
            for i in range(n):
                bit = 1 << i
                if uf.union(x | bit, r | bit):
                    changed = True
    class_of = tuple(uf.find(x) for x in range(size))
    return FiniteBModule(n, class_of, tuple(sorted(set(class_of))))


def join_irreducibles(L: FiniteBModule) -> list:
    """Nonzero ``y`` with ``y = a | b`` only when ``y`` is ``a`` or ``b``.

    Equivalently the join of everything strictly below ``y`` is not ``y``:
    folding that join, the first step reaching ``y`` exhibits a two-term
    decomposition into smaller elements.
    """
    out = []
    for y in L.elements:
        if y == L.bottom:
            continue
        acc = L.bottom
        for a in L.elements:
            if a != y and L.leq(a, y):
                acc = L.join(acc, a)
        if acc != y:
            out.append(y)
    return out


def atoms(L: FiniteBModule) -> list:
    return [
        y
        for y in L.elements
        if y != L.bottom and not any(a != y and a != L.bottom and L.leq(a, y) for a in L.elements)
    ]


def is_quasi_free(L: FiniteBModule) -> bool:
    """Atomicity: every join-irreducible is an atom."""
    at = set(atoms(L))
    return all(j in at for j in join_irreducibles(L))


def is_quasi_basis(L: FiniteBModule, indices: Sequence[int] | None = None) -> bool:
    """No generator class equals a join of the other generators' classes."""
    idx = list(range(L.n)) if indices is None else list(indices)
    for i in idx:
        gi = L.generator(i)
        others = [j for j in idx if j != i]
        for r in range(len(others) + 1):
            for T in combinations(others, r):
                if L.class_of[to_mask(T)] == gi:
                    return False
    return True


def generated_by(L: FiniteBModule, gens: Sequence[int]) -> set:
    span = {L.bottom}
    frontier = [L.bottom]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = L.join(x, g)
                if y not in span:
                    span.add(y)
                    nxt.append(y)
        frontier = nxt
    return span


def qm_presentation(VM: ValuatedMatroid) -> BPresentation:
    """Boolean shadow of the bend relations of ``V_M``'s defining hyperplanes.

    For each (d+1)-set ``S`` let ``T`` be the ``j`` with ``w(S - j)`` finite;
    the relations are ``T ~ T - k`` for ``k`` in ``T``.
    """
    rels = []
    for S in combinations(range(VM.n), VM.rank + 1):
        mask = to_mask(S)
        T = to_mask(j for j in S if not is_bottom(VM.w(mask & ~(1 << j))))
        for k in elements(T):
            rels.append((T, T & ~(1 << k)))
    return BPresentation(VM.n, tuple(rels))


def qm_boolean(VM: ValuatedMatroid) -> FiniteBModule:
    return congruence_closure(qm_presentation(VM))


def shadow_automorphisms(L: FiniteBModule, max_n: int = 7) -> list | None:
    """Generator permutations inducing a well-defined lattice map; ``None`` above ``max_n``."""
    if L.n > max_n:
        return None
    out = []
    for p in permutations(range(L.n)):
        if all(L.class_of[apply_mask(p, x)] == L.class_of[apply_mask(p, L.class_of[x])] for x in range(1 << L.n)):
            out.append(p)
    return out


__all__ = [
    "BPresentation",
    "FiniteBModule",
    "congruence_closure",
    "join_irreducibles",
    "atoms",
    "is_quasi_free",
    "is_quasi_basis",
    "generated_by",
    "qm_presentation",
    "qm_boolean",
    "shadow_automorphisms",
]
