"""Pointed polyhedral cones given by their extreme rays.

Symmetries are studied multiplicatively: a permutation ``sigma`` of the
rays is realizable when some invertible linear ``T`` on their span has
``T(r_i) = lambda_i r_sigma(i)`` with every ``lambda_i > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .errors import CapExceeded, ContainsLine, DimensionMismatch, NonExtremeRay, PartitionAssertionFailure, TheoryViolation
from .linalg import determinant, feasible_strict, rank, solve_affine
from .partition import PartitionSubspace, partition_from_kernel
from .perm import PermGroup

MAX_RAYS = 10


@dataclass(frozen=True)
class Cone:
    dim: int
    rays: tuple

    @property
    def n(self) -> int:
        return len(self.rays)

    def to_json(self) -> dict:
        return {"dim": self.dim, "rays": [[str(v) for v in r] for r in self.rays]}


def _unit(n, i):
    return [1 if j == i else 0 for j in range(n)]


def _in_cone(target, gens) -> bool:
    """Is ``target`` a nonnegative combination of ``gens``?"""
    k = len(gens)
    if k == 0:
        return not any(target)
    m = len(target)
    eqs = [([g[c] for g in gens], target[c]) for c in range(m)]
    return feasible_strict(eqs, [], [_unit(k, j) for j in range(k)], nvars=k) is not None


def validate_cone(rays: Sequence[Sequence], dim: int | None = None) -> Cone:
    rays = tuple(tuple(Fraction(v) for v in r) for r in rays)
    if dim is None:
        dim = len(rays[0]) if rays else 0
    if any(len(r) != dim for r in rays):
        raise DimensionMismatch(f"every ray must have {dim} coordinates")
    for i, r in enumerate(rays):
        if not any(r):
            raise NonExtremeRay(f"ray {i + 1} is zero", counterexample={"ray": i + 1})
    n = len(rays)
    if n:
        # a line exists iff some nonzero nonnegative combination vanishes
        eqs = [([r[c] for r in rays], 0) for c in range(dim)] + [([1] * n, 1)]
        mu = feasible_strict(eqs, [], [_unit(n, j) for j in range(n)], nvars=n)
        if mu is not None:
            raise ContainsLine(
                "cone is not pointed",
                counterexample={"combination": [str(v) for v in mu]},
            )
    for i in range(n):
        if _in_cone(rays[i], [r for j, r in enumerate(rays) if j != i]):
            raise NonExtremeRay(
                f"ray {i + 1} is a nonnegative combination of the others", counterexample={"ray": i + 1}
            )
    return Cone(dim, rays)


@dataclass(frozen=True)
class _Frame:
    basis: tuple  # indices of the first independent rays
    coords: tuple  # coordinates of every ray in that basis


def _frame(C: Cone) -> _Frame:
    basis = []
    for i, r in enumerate(C.rays):
        if rank([C.rays[j] for j in basis] + [r]) > len(basis):
            basis.append(i)
    cols = [C.rays[b] for b in basis]
    coords = []
    for r in C.rays:
        A = [[col[c] for col in cols] for c in range(C.dim)]
        sol = solve_affine(A, r, ncols=len(basis))
        if sol is None or sol.kernel_basis:
            raise TheoryViolation("ray coordinates in the spanning subset are not unique")
        coords.append(sol.particular)
    return _Frame(tuple(basis), tuple(coords))


def _realizing_equations(C: Cone, F: _Frame, sigma) -> list:
    """Linear equations on ``lambda`` (length n) for ``T(r_i) = lambda_i r_sigma(i)``.

    ``T`` is fixed on the spanning subset by ``T(r_b) = lambda_b r_sigma(b)``;
    every other ray then has a forced image that must match.
    """
    n = C.n
    eqs = []
    for i in range(n):
        if i in F.basis:
            continue
        for c in range(C.dim):
            row = [Fraction(0)] * n
            for t, b in enumerate(F.basis):
                row[b] += F.coords[i][t] * C.rays[sigma[b]][c]
            row[i] -= C.rays[sigma[i]][c]
            if any(row):
                eqs.append((row, 0))
    return eqs


@dataclass(frozen=True)
class RealizationWitness:
    sigma: tuple
    lam: tuple
    matrix: tuple  # T in the coordinates of the spanning subset, column per basis ray


def realize(C: Cone, sigma, frame: _Frame | None = None) -> RealizationWitness | None:
    F = frame or _frame(C)
    n = C.n
    lam = feasible_strict(_realizing_equations(C, F, sigma), [_unit(n, i) for i in range(n)], nvars=n)
    if lam is None:
        return None
    cols = [[lam[b] * x for x in F.coords[sigma[b]]] for b in F.basis]
    T = tuple(tuple(cols[j][i] for j in range(len(cols))) for i in range(len(cols)))
    if F.basis and determinant(T) == 0:
        raise TheoryViolation("realizing map is singular on the span")
    for i in range(n):
        image = [sum((T[r][t] * F.coords[i][t] for t in range(len(F.basis))), Fraction(0)) for r in range(len(F.basis))]
        if image != [lam[i] * x for x in F.coords[sigma[i]]] or lam[i] <= 0:
            raise TheoryViolation("realization witness fails re-verification")
    return RealizationWitness(tuple(sigma), tuple(lam), T)


def realizable_permutations(C: Cone, max_n: int = MAX_RAYS) -> PermGroup:
    if C.n > max_n:
        raise CapExceeded(f"permutation search is capped at {max_n} rays")
    F = _frame(C)
    found = [s for s in permutations(range(C.n)) if realize(C, s, F) is not None]
    G = PermGroup(C.n, found)
    if not G.is_group():
        raise TheoryViolation("realizable permutations are not closed under composition")
    return G


def cone_diagonal_stabilizer(C: Cone) -> PartitionSubspace:
    """Rescalings ``lambda`` realizable with ``sigma = id``, in logarithmic coordinates.

    The identity system forces ``lambda_i = lambda_b`` whenever ray ``i``
    uses basis ray ``b``, so its solution space is already a partition
    subspace; taking logs of its positive part keeps the same partition.
    """
    F = _frame(C)
    n = C.n
    eqs = _realizing_equations(C, F, tuple(range(n)))
    sol = solve_affine([e[0] for e in eqs], [0] * len(eqs), ncols=n)
    basis = sol.kernel_basis
    V = PartitionSubspace(partition_from_kernel(n, basis))
    if len(basis) != V.dim:
        raise PartitionAssertionFailure(
            f"solution dimension {len(basis)} differs from class count {V.dim}",
            counterexample={"partition": V.partition.to_json()},
        )
    return V


__all__ = [
    "Cone",
    "validate_cone",
    "realize",
    "RealizationWitness",
    "realizable_permutations",
    "cone_diagonal_stabilizer",
]
