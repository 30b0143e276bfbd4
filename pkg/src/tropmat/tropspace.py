"""The tropical linear space of a valuated matroid.

``V_M`` is cut out by one tropical hyperplane per (d+1)-subset ``S``:
``max_{j in S} w(S - j) + x_j`` must be attained twice (or be bottom).
It is generated by one vector per hyperplane of the underlying matroid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import DimensionMismatch, NotSimple, PartitionAssertionFailure, TheoryViolation
from .groups import splitting_section
from .linalg import solve_sparse
from .matroid import elements, mask_json, to_mask
from .partition import PartitionSubspace, partition_from_kernel
from .perm import MonomialMap, PermGroup, monomial_apply
from .scalar import BOTTOM, is_bottom, trop_mul
from .valuated import ValuatedMatroid, weak_automorphism_witnesses


@dataclass(frozen=True)
class Generator:
    independent: int  # mask of the corank-1 independent set I
    hyperplane: int
    vector: tuple


@dataclass(frozen=True)
class GeneratorSet:
    n: int
    items: tuple

    @property
    def vectors(self) -> list:
        return [g.vector for g in self.items]

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


def _require_simple(VM: ValuatedMatroid) -> None:
    if not VM.matroid.is_simple():
        raise NotSimple("operation requires a simple underlying matroid")


def generators(VM: ValuatedMatroid) -> GeneratorSet:
    """One ``v_I`` per hyperplane, with ``(v_I)_i = w(I + i)``."""
    _require_simple(VM)
    M = VM.matroid
    reps = M.hyperplane_representatives
    items = []
    for H in M.hyperplanes:
        I = reps[H]
        v = tuple(BOTTOM if I >> i & 1 else VM.w(I | 1 << i) for i in range(VM.n))
        support = to_mask(i for i in range(VM.n) if not is_bottom(v[i]))
        if support != M.ground & ~H:
            raise TheoryViolation(f"generator for I={mask_json(I)} has support outside the hyperplane complement")
        items.append(Generator(I, H, v))
    return GeneratorSet(VM.n, tuple(items))


def _check_len(VM, x):
    if len(x) != VM.n:
        raise DimensionMismatch(f"vector of length {len(x)} for a matroid on {VM.n} elements")


def contains(VM: ValuatedMatroid, x: Sequence) -> bool:
    _check_len(VM, x)
    for S in combinations(range(VM.n), VM.rank + 1):
        mask = to_mask(S)
        terms = [trop_mul(VM.w(mask & ~(1 << j)), x[j]) for j in S]
        top = max(terms)
        if top is not BOTTOM and terms.count(top) < 2:
            return False
    return True


def in_span(x: Sequence, gens: Sequence[Sequence]) -> tuple | None:
    """Residuation: the largest coefficients with ``sum lambda_r v_r <= x``, if they reach ``x``."""
    n = len(x)
    lams = []
    for v in gens:
        if len(v) != n:
            raise DimensionMismatch("generator and vector lengths differ")
        lam = None
        for xi, vi in zip(x, v):
            if is_bottom(vi):
                continue
            d = BOTTOM if is_bottom(xi) else xi - vi
            lam = d if lam is None or d < lam else lam
        lams.append(BOTTOM if lam is None else lam)
    combo = [BOTTOM] * n
    for lam, v in zip(lams, gens):
        for i in range(n):
            combo[i] = max(combo[i], trop_mul(lam, v[i]))
    return tuple(lams) if tuple(combo) == tuple(x) else None


def diagonal_stabilizer(VM: ValuatedMatroid) -> PartitionSubspace:
    """Diagonal rescalings ``c`` with ``sum_{k in B} c_k`` independent of the basis ``B``."""
    bases = VM.matroid.basis_list
    B0 = set(elements(bases[0]))
    rows = []
    for B in bases[1:]:
        row = {i: 1 for i in elements(B)}
        for i in B0:
            row[i] = row.get(i, 0) - 1
        rows.append(({i: v for i, v in row.items() if v}, 0))
    sol = solve_sparse(rows, VM.n)
    basis = sol.kernel_basis
    V = PartitionSubspace(partition_from_kernel(VM.n, basis))
    if len(basis) != V.dim:
        raise PartitionAssertionFailure(
            f"kernel dimension {len(basis)} differs from class count {V.dim}",
            counterexample={"partition": V.partition.to_json()},
        )
    return V


@dataclass(frozen=True)
class AutStructure:
    H: PermGroup
    V: PartitionSubspace
    section: dict
    witnesses: dict


def witness_lift(witnesses: dict) -> dict:
    """``sigma -> (sigma, tau)``: the monomial map sending each generator to a rescaled generator."""
    return {s: MonomialMap(s, w.tau) for s, w in witnesses.items()}


def aut_structure(VM: ValuatedMatroid) -> AutStructure:
    wits = weak_automorphism_witnesses(VM)
    H = PermGroup(VM.n, wits)
    if not H.is_group():
        raise TheoryViolation("weak automorphisms do not form a group")
    V = diagonal_stabilizer(VM)
    section = splitting_section(H, V, witness_lift(wits))
    for s, m in section.items():
        if m.sigma != s or any(is_bottom(c) for c in m.c):
            raise TheoryViolation("section value does not lift its permutation")
    return AutStructure(H, V, section, wits)


def preserves_space(VM: ValuatedMatroid, m: MonomialMap, gens: GeneratorSet | None = None) -> bool:
    """Does ``m`` send every generator of ``V_M`` into ``V_M``?"""
    gens = gens or generators(VM)
    return all(contains(VM, monomial_apply(m, g.vector)) for g in gens)


def diagonal_aut_equations(VM: ValuatedMatroid, gens: GeneratorSet | None = None) -> list:
    """Tropical linear equations in ``c`` saying ``diag(c)`` keeps each generator in ``V_M``.

    For a (d+1)-set ``S``, ``k`` in ``S`` and generator ``g``, the terms
    ``w(S - j) + g_j + c_j`` must not have ``k`` as a unique maximum.  The
    pair ``a = (w(S - j) + g_j)_{j in S}``, ``b = a`` with ``b_k`` removed
    encodes that as ``max(a + c) = max(b + c)``.
    """
    gens = gens or generators(VM)
    n = VM.n
    eqs = []
    seen = set()
    for S in combinations(range(n), VM.rank + 1):
        mask = to_mask(S)
        for g in gens:
            a = [BOTTOM] * n
            for j in S:
                a[j] = trop_mul(VM.w(mask & ~(1 << j)), g.vector[j])
            for k in S:
                if is_bottom(a[k]):
                    continue
                b = list(a)
                b[k] = BOTTOM
                key = (tuple(a), tuple(b))
                if key not in seen:
                    seen.add(key)
                    eqs.append(key)
    return eqs


__all__ = [
    "Generator",
    "GeneratorSet",
    "generators",
    "contains",
    "in_span",
    "diagonal_stabilizer",
    "AutStructure",
    "aut_structure",
    "monomial_apply",
    "preserves_space",
    "diagonal_aut_equations",
    "witness_lift",
    "Fraction",
]
