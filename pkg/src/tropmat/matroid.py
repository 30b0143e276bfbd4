"""Matroids on ``range(n)`` given by their bases.

Subsets are bit masks internally; JSON and error payloads use sorted
1-based element lists.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import ExchangeFailure, MatroidSyntaxError
from .perm import PermGroup, apply_mask


def to_mask(elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def elements(mask: int) -> list:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_json(mask: int) -> list:
    return [e + 1 for e in elements(mask)]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Matroid:
    """A matroid on ``range(n)``; derived structure is computed lazily and cached."""

    def __init__(self, n: int, rank: int, bases: Iterable[int]):
        self.n = n
        self.rank = rank
        self.bases = frozenset(bases)

    def __repr__(self):
        return f"Matroid(n={self.n}, rank={self.rank}, |bases|={len(self.bases)})"

    def __eq__(self, other):
        return isinstance(other, Matroid) and (self.n, self.rank, self.bases) == (other.n, other.rank, other.bases)

    def __hash__(self):
        return hash((self.n, self.rank, self.bases))

    @cached_property
    def basis_list(self) -> tuple:
        """Bases in lexicographic order of their sorted element tuples."""
        return tuple(sorted(self.bases, key=elements))

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    def rank_of(self, mask: int) -> int:
        return max(popcount(mask & b) for b in self.bases)

    def is_independent(self, mask: int) -> bool:
        return any(mask & b == mask for b in self.bases)

    def closure(self, mask: int) -> int:
        r = self.rank_of(mask)
        out = mask
        for e in range(self.n):
            if not mask >> e & 1 and self.rank_of(mask | 1 << e) == r:
                out |= 1 << e
        return out

    @cached_property
    def corank_one_independent(self) -> tuple:
        """Independent sets of size rank-1, lexicographically ordered."""
        out = []
        if self.rank == 0:
            return ()
        for I in combinations(range(self.n), self.rank - 1):
            m = to_mask(I)
            if self.is_independent(m):
                out.append(m)
        return tuple(out)

    @cached_property
    def hyperplanes(self) -> tuple:
        seen = {}
        for I in self.corank_one_independent:
            seen.setdefault(self.closure(I), I)
        return tuple(sorted(seen, key=elements))

    @cached_property
    def hyperplane_representatives(self) -> dict:
        """Hyperplane -> lexicographically least corank-1 independent set spanning it."""
        reps = {}
        for I in self.corank_one_independent:
            reps.setdefault(self.closure(I), I)
        return reps

    @cached_property
    def circuits(self) -> tuple:
        found = []
        for size in range(1, self.rank + 2):
            for S in combinations(range(self.n), size):
                m = to_mask(S)
                if any(c & m == c for c in found):
                    continue
                if not self.is_independent(m):
                    found.append(m)
        return tuple(sorted(found, key=lambda c: (popcount(c), elements(c))))

    def is_simple(self) -> bool:
        for e in range(self.n):
            if self.rank_of(1 << e) < 1:
                return False
        for e, f in combinations(range(self.n), 2):
            if self.rank_of(1 << e | 1 << f) < 2:
                return False
        return True

    def is_automorphism(self, p) -> bool:
        return all(apply_mask(p, b) in self.bases for b in self.bases)

    def to_json(self) -> dict:
        return {"n": self.n, "rank": self.rank, "bases": [mask_json(b) for b in self.basis_list]}


def validate_matroid(n: int, rank: int, bases: Iterable[Iterable[int]]) -> Matroid:
    """Build a matroid from 1-based basis lists, checking the exchange axiom.

    Raises :class:`ExchangeFailure` naming ``(B, B', u)`` when some ``u`` in
    ``B - B'`` has no exchange partner in ``B' - B``.
    """
    if not isinstance(n, int) or not isinstance(rank, int) or n < 0 or not 0 <= rank <= n:
        raise MatroidSyntaxError(f"bad ground size/rank n={n!r} rank={rank!r}")
    masks = []
    for B in bases:
        B = list(B)
        if any(not isinstance(e, int) or not 1 <= e <= n for e in B):
            raise MatroidSyntaxError(f"basis {B} has elements outside 1..{n}")
        if len(set(B)) != len(B) or len(B) != rank:
            raise MatroidSyntaxError(f"basis {B} does not have {rank} distinct elements")
        masks.append(to_mask(e - 1 for e in B))
    if not masks:
        raise MatroidSyntaxError("a matroid needs at least one basis")
    if len(set(masks)) != len(masks):
        raise MatroidSyntaxError("duplicate basis")
    M = Matroid(n, rank, masks)
    for B in M.basis_list:
        for B2 in M.basis_list:
            for u in elements(B & ~B2):
                base = B & ~(1 << u)
                if not any(base | 1 << v in M.bases for v in elements(B2 & ~B)):
                    raise ExchangeFailure(
                        f"no exchange partner for u={u + 1} from {mask_json(B)} into {mask_json(B2)}",
                        counterexample={"B": mask_json(B), "B_prime": mask_json(B2), "u": u + 1},
                    )
    return M


def uniform(rank: int, n: int) -> Matroid:
    return Matroid(n, rank, (to_mask(S) for S in combinations(range(n), rank)))


def free(n: int) -> Matroid:
    return Matroid(n, n, [(1 << n) - 1])


def matroid_automorphisms(M: Matroid) -> PermGroup:
    """All permutations mapping bases onto bases.

    Backtracking assigns images element by element; a partial map is pruned
    as soon as the assigned part of some hyperplane (or of some hyperplane's
    preimage) fails to fit inside a hyperplane.
    """
    n = M.n
    hyps = M.hyperplanes
    by_elem = [[h for h in hyps if h >> e & 1] for e in range(n)]
    found = []
    img = [None] * n
    pre = [None] * n

    def fits(mask):
        return not hyps or any(mask & ~h == 0 for h in hyps)

    def ok(e):
        done = (1 << (e + 1)) - 1
        for h in by_elem[e]:
            m = 0
            for x in elements(h & done):
                m |= 1 << img[x]
            if not fits(m):
                return False
        t = img[e]
        for h in by_elem[t]:
            m = 0
            for y in elements(h):
                if pre[y] is not None:
                    m |= 1 << pre[y]
            if not fits(m):
                return False
        return True

    def extend(e):
        if e == n:
            p = tuple(img)
            if M.is_automorphism(p):
                found.append(p)
            return
        for t in range(n):
            if pre[t] is None:
                img[e], pre[t] = t, e
                if ok(e):
                    extend(e + 1)
                img[e], pre[t] = None, None

    extend(0)
    return PermGroup(n, found)
