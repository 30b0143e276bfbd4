"""Subgroups of the tropical torus cut out by tropical linear equations.

An equation ``(a, b)`` reads ``max_i(a_i + x_i) = max_i(b_i + x_i)``.  The
group it defines is ``{x : x and -x both satisfy every equation}``, and
such a group is always a partition subspace.

Why the class-max criterion works: on a partition subspace ``V_p`` set the
class values ``t_c``; then ``max(a + x) = max_c (A_c + t_c)`` with ``A_c``
the largest ``a_i`` in class ``c``.  Sending one ``t_c`` far above the others
shows ``V_p`` lies in the group only if ``A_c = B_c`` for every class, and
the converse is immediate.  Coarsening a passing partition keeps it
passing, so the group's partition is the meet of all passing ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceeded, DimensionMismatch, MeetAssertionFailure, NotAGroup
from .partition import Partition, set_partitions
from .scalar import BOTTOM, trop_mul


@dataclass(frozen=True)
class TropLinearEquation:
    a: tuple
    b: tuple

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise DimensionMismatch("equation sides have different lengths")
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))

    @property
    def n(self) -> int:
        return len(self.a)

    def holds(self, x: Sequence) -> bool:
        if len(x) != self.n:
            raise DimensionMismatch(f"point of length {len(x)} for an equation in {self.n} variables")
        lhs = max((trop_mul(ai, xi) for ai, xi in zip(self.a, x)), default=BOTTOM)
        rhs = max((trop_mul(bi, xi) for bi, xi in zip(self.b, x)), default=BOTTOM)
        return lhs == rhs

    def class_max_ok(self, p: Partition) -> bool:
        return all(max(self.a[i] for i in blk) == max(self.b[i] for i in blk) for blk in p.blocks)


def _as_equations(eqs) -> list:
    return [e if isinstance(e, TropLinearEquation) else TropLinearEquation(*e) for e in eqs]


def member(eqs, x: Sequence) -> bool:
    eqs = _as_equations(eqs)
    neg = tuple(-v for v in x)
    return all(e.holds(x) and e.holds(neg) for e in eqs)


def partition_of_group(eqs, n: int | None = None, max_n: int = 10) -> Partition:
    eqs = _as_equations(eqs)
    if n is None:
        if not eqs:
            raise DimensionMismatch("ambient dimension needed when there are no equations")
        n = eqs[0].n
    if any(e.n != n for e in eqs):
        raise DimensionMismatch("equations have inconsistent lengths")
    if n > max_n:
        raise CapExceeded(f"partition search is capped at n <= {max_n}")
    if not member(eqs, (0,) * n):
        raise NotAGroup("the zero vector does not satisfy the equations")
    meet = Partition(n, (tuple(range(n)),)) if n else Partition(0, ())
    for p in set_partitions(n):
        if not all(e.class_max_ok(p) for e in eqs):
            continue
        nxt = meet.meet(p)
        if not all(e.class_max_ok(nxt) for e in eqs):
            # a group containing both partition subspaces would contain their
            # meet's subspace too, so look for a sum leaving the set
            x, y = _sum_witness(eqs, meet, p)
            if x is None:
                raise MeetAssertionFailure(
                    "meet of passing partitions fails the criterion",
                    counterexample={"partitions": [meet.to_json(), p.to_json()]},
                )
            raise NotAGroup(
                "the solution set is not closed under addition",
                counterexample={"x": [str(v) for v in x], "y": [str(v) for v in y]},
            )
        meet = nxt
    return meet


def _sum_witness(eqs, p: Partition, q: Partition):
    """Scaled class indicators ``x`` in ``V_p``, ``y`` in ``V_q`` with ``x + y`` outside the set."""
    finite = [abs(v) for e in eqs for v in e.a + e.b if v is not BOTTOM]
    T = 1 + 2 * max(finite, default=0)
    n = p.n

    def scaled(block, t):
        return tuple(t if i in block else 0 for i in range(n))

    for B in p.blocks:
        for C in q.blocks:
            for s, t in ((T, T), (T, -T), (-T, T), (-T, -T)):
                x, y = scaled(B, s), scaled(C, t)
                if not member(eqs, tuple(a + b for a, b in zip(x, y))):
                    return x, y
    return None, None


__all__ = ["TropLinearEquation", "member", "partition_of_group"]
