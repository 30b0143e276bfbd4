"""Valuated matroids, weak automorphisms and projective equivalence.

A valuation assigns a rational weight to every basis; non-bases weigh
BOTTOM.  A weak automorphism is a permutation ``sigma`` for which some
rational vector ``tau`` satisfies ``w(sigma(B)) = w(B) + sum(tau[i] for i in B)``
on every basis ``B``.  No global scalar enters that system.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import ExchangeValueFailure, NotSimple, SupportMismatch, TheoryViolation
from .linalg import solve_sparse
from .matroid import Matroid, elements, mask_json, matroid_automorphisms, to_mask
from .perm import PermGroup, apply_mask, check_perm, identity, inverse
from .scalar import BOTTOM, TropScalar, bool_project


@dataclass(frozen=True, eq=False)
class ValuatedMatroid:
    matroid: Matroid
    weights: Mapping[int, Fraction] = field(repr=False)

    @property
    def n(self) -> int:
        return self.matroid.n

    @property
    def rank(self) -> int:
        return self.matroid.rank

    def w(self, mask: int) -> TropScalar:
        return self.weights.get(mask, BOTTOM)

    def weight_list(self) -> list:
        return [self.weights[b] for b in self.matroid.basis_list]

    def support(self) -> frozenset:
        return frozenset(m for m, v in self.weights.items() if bool_project(v))

    def rescaled(self, t: Sequence, alpha=0) -> "ValuatedMatroid":
        """``w'(B) = alpha + w(B) + sum(t[i] for i in B)``."""
        return ValuatedMatroid(
            self.matroid,
            {b: v + alpha + sum((Fraction(t[i]) for i in elements(b)), Fraction(0)) for b, v in self.weights.items()},
        )

    def permuted(self, sigma) -> "ValuatedMatroid":
        """The valuation ``w o sigma``, i.e. ``B -> w(sigma(B))``."""
        return ValuatedMatroid(self.matroid, {b: self.w(apply_mask(sigma, b)) for b in self.matroid.bases})

    def to_json(self) -> dict:
        from .scalar import format_scalar

        out = self.matroid.to_json()
        out["weights"] = [format_scalar(v) for v in self.weight_list()]
        return out


def validate_valuation(M: Matroid, weights: Mapping, check_exchange: bool = True) -> ValuatedMatroid:
    """Attach weights (keyed by basis mask) to ``M`` and check Dress-Wenzel exchange.

    For all bases ``B, B'`` and ``u`` in ``B - B'`` some ``v`` in ``B' - B``
    must give ``w(B) + w(B') <= w(B-u+v) + w(B'-v+u)``.
    """
    keys = set(weights)
    if keys != set(M.bases):
        extra = sorted(mask_json(k) for k in keys - M.bases)
        missing = sorted(mask_json(k) for k in M.bases - keys)
        raise SupportMismatch(
            "weights must be given on exactly the bases",
            counterexample={"off_basis": extra, "missing": missing},
        )
    clean = {}
    for b, v in weights.items():
        if v is BOTTOM:
            raise SupportMismatch(f"basis {mask_json(b)} has weight -inf", counterexample={"basis": mask_json(b)})
        clean[b] = Fraction(v)
    VM = ValuatedMatroid(M, clean)
    if check_exchange:
        _check_dress_wenzel(VM)
    return VM


def _check_dress_wenzel(VM: ValuatedMatroid) -> None:
    M = VM.matroid
    for B in M.basis_list:
        for B2 in M.basis_list:
            lhs = VM.weights[B] + VM.weights[B2]
            for u in elements(B & ~B2):
                ok = False
                for v in elements(B2 & ~B):
                    x = VM.w(B & ~(1 << u) | 1 << v)
                    y = VM.w(B2 & ~(1 << v) | 1 << u)
                    if x is not BOTTOM and y is not BOTTOM and lhs <= x + y:
                        ok = True
                        break
                if not ok:
                    raise ExchangeValueFailure(
                        f"valuated exchange fails for B={mask_json(B)}, B'={mask_json(B2)}, u={u + 1}",
                        counterexample={"B": mask_json(B), "B_prime": mask_json(B2), "u": u + 1},
                    )


def valuated_from_lists(n: int, rank: int, bases, weights, check_exchange: bool = True) -> ValuatedMatroid:
    """Build from 1-based basis lists and weights aligned index by index."""
    from .matroid import validate_matroid

    bases = [list(b) for b in bases]
    if len(weights) != len(bases):
        raise SupportMismatch(f"{len(weights)} weights for {len(bases)} bases")
    M = validate_matroid(n, rank, bases)
    return validate_valuation(M, {to_mask(e - 1 for e in b): w for b, w in zip(bases, weights)}, check_exchange)


def trivial_valuation(M: Matroid) -> ValuatedMatroid:
    return ValuatedMatroid(M, {b: Fraction(0) for b in M.bases})


def underlying_matroid(VM: ValuatedMatroid) -> Matroid:
    if VM.support() != VM.matroid.bases:
        raise TheoryViolation("support of the valuation differs from the basis set")
    return VM.matroid


@dataclass(frozen=True)
class WeakAutWitness:
    sigma: tuple
    tau: tuple

    def check(self, VM: ValuatedMatroid) -> bool:
        return all(
            VM.w(apply_mask(self.sigma, b)) == VM.weights[b] + sum((self.tau[i] for i in elements(b)), Fraction(0))
            for b in VM.matroid.bases
        )


def is_weak_automorphism(VM: ValuatedMatroid, sigma) -> WeakAutWitness | None:
    sigma = check_perm(sigma, VM.n)
    M = VM.matroid
    if not M.is_automorphism(sigma):
        return None
    rows = []
    for b in M.basis_list:
        rows.append(({i: 1 for i in elements(b)}, VM.w(apply_mask(sigma, b)) - VM.weights[b]))
    sol = solve_sparse(rows, VM.n)
    if sol is None:
        return None
    wit = WeakAutWitness(sigma, sol.particular)
    if not wit.check(VM):
        raise TheoryViolation("weak automorphism witness fails re-verification")
    return wit


def weak_automorphism_witnesses(VM: ValuatedMatroid) -> dict:
    """Map every weak automorphism to its canonical witness."""
    if not VM.matroid.is_simple():
        raise NotSimple("the weak automorphism group is only computed for simple matroids")
    out = {}
    for sigma in matroid_automorphisms(VM.matroid):
        wit = is_weak_automorphism(VM, sigma)
        if wit is not None:
            out[sigma] = wit
    return out


def weak_automorphism_group(VM: ValuatedMatroid) -> PermGroup:
    H = PermGroup(VM.n, weak_automorphism_witnesses(VM))
    if not H.is_group() or identity(VM.n) not in H:
        raise TheoryViolation("weak automorphisms are not closed under composition and inverse")
    return H


@dataclass(frozen=True)
class ProjectiveWitness:
    alpha: Fraction
    tau: tuple
    kernel_basis: tuple


def projectively_equivalent(VM: ValuatedMatroid, VM2: ValuatedMatroid) -> ProjectiveWitness | None:
    """Solve ``alpha + sum(tau[i] for i in B) = w2(B) - w(B)`` over all bases.

    Unknown 0 is ``alpha``; unknowns ``1..n`` are ``tau``.  The reported
    kernel describes every other solution.
    """
    if VM.matroid != VM2.matroid:
        return None
    rows = []
    for b in VM.matroid.basis_list:
        row = {0: 1}
        row.update({i + 1: 1 for i in elements(b)})
        rows.append((row, VM2.weights[b] - VM.weights[b]))
    sol = solve_sparse(rows, VM.n + 1)
    if sol is None:
        return None
    p = sol.particular
    return ProjectiveWitness(p[0], tuple(p[1:]), sol.kernel_basis)


def inverse_witness(VM: ValuatedMatroid, wit: WeakAutWitness) -> WeakAutWitness:
    """Witness for ``sigma^-1`` obtained by negating and permuting ``tau``."""
    inv = inverse(wit.sigma)
    return WeakAutWitness(inv, tuple(-wit.tau[inv[k]] for k in range(VM.n)))
