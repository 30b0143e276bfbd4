"""Finite groups, homomorphism enumeration and the cohomological solvers.

Groups are Cayley tables over ``range(order)`` with element 0 the identity
not assumed; the identity is located at load time.  Homomorphisms into a
permutation group are stored as the tuple of images of every source
element, so comparing two homomorphisms is comparing tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import CapExceeded, CocycleOutsideV, GroupTableError, ImageMismatch, NotTorsion, TheoryViolation, Unsolvable
from .linalg import solve_sparse
from .partition import PartitionSubspace
from .perm import MonomialMap, PermGroup, closure, compose, identity, inverse, monomial_closure

ORDER_CAP = 200


class FiniteGroup:
    def __init__(self, table: Sequence[Sequence[int]], generators: Sequence[int] | None = None, names=None):
        k = len(table)
        if k == 0 or k > ORDER_CAP:
            raise (CapExceeded if k else GroupTableError)(f"group order {k} outside 1..{ORDER_CAP}")
        table = tuple(tuple(row) for row in table)
        if any(len(row) != k or any(not isinstance(x, int) or not 0 <= x < k for x in row) for row in table):
            raise GroupTableError("Cayley table must be a square array of element indices")
        e = next((i for i in range(k) if all(table[i][j] == j and table[j][i] == j for j in range(k))), None)
        if e is None:
            raise GroupTableError("no identity element")
        inv = [None] * k
        for a in range(k):
            inv[a] = next((b for b in range(k) if table[a][b] == e), None)
            if inv[a] is None or table[inv[a]][a] != e:
                raise GroupTableError(f"element {a} has no two-sided inverse")
        for a, b, c in product(range(k), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise GroupTableError(f"associativity fails at ({a}, {b}, {c})")
        self.table = table
        self.order = k
        self.identity = e
        self.inverses = tuple(inv)
        self.names = names
        if generators is None:
            generators = self._greedy_generators()
        self.generators = tuple(generators)
        if self._span(self.generators) != set(range(k)):
            raise GroupTableError("designated generators do not generate the group")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def _span(self, gens):
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for g in frontier:
                for s in gens:
                    h = self.table[g][s]
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return seen

    def _greedy_generators(self):
        gens, span = [], {self.identity}
        for g in range(self.order):
            if g not in span:
                gens.append(g)
                span = self._span(gens)
        return gens

    @classmethod
    def from_perm_generators(cls, gens: Sequence[tuple], degree: int) -> "FiniteGroup":
        elems = closure(gens, degree, cap=ORDER_CAP)
        index = {p: i for i, p in enumerate(elems)}
        table = [[index[compose(p, q)] for q in elems] for p in elems]
        gen_idx = [index[tuple(g)] for g in gens if tuple(g) != identity(degree)]
        return cls(table, gen_idx or None, names=elems)

    @classmethod
    def cyclic(cls, k: int) -> "FiniteGroup":
        return cls([[(a + b) % k for b in range(k)] for a in range(k)], [1] if k > 1 else None)

    @classmethod
    def product(cls, G: "FiniteGroup", H: "FiniteGroup") -> "FiniteGroup":
        pairs = [(a, b) for a in range(G.order) for b in range(H.order)]
        index = {p: i for i, p in enumerate(pairs)}
        table = [[index[(G.mul(a, c), H.mul(b, d))] for (c, d) in pairs] for (a, b) in pairs]
        return cls(table)


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    images: tuple

    def __call__(self, g: int):
        return self.images[g]


def _perm_table(H: PermGroup):
    elems = H.elements
    index = {p: i for i, p in enumerate(elems)}
    return elems, index


def enumerate_homs(G: FiniteGroup, H: PermGroup) -> list:
    """All homomorphisms ``G -> H``, in lexicographic order of generator images.

    Generator images are chosen by backtracking; each partial choice is
    propagated along words in the generators, and a clash kills the branch.
    Survivors are checked against the full Cayley table.
    """
    elems = H.elements
    gens = G.generators
    n = H.degree
    out = []
    # BFS spanning tree: each element reached as parent * generator
    order = [G.identity]
    via = {G.identity: None}
    for g in order:
        for s_idx, s in enumerate(gens):
            h = G.mul(g, s)
            if h not in via:
                via[h] = (g, s_idx)
                order.append(h)

    def extend(i, choice):
        if i == len(gens):
            img = [None] * G.order
            img[G.identity] = identity(n)
            for g in order[1:]:
                parent, s_idx = via[g]
                img[g] = compose(img[parent], choice[s_idx])
            if all(img[G.mul(a, b)] == compose(img[a], img[b]) for a in range(G.order) for b in range(G.order)):
                out.append(GroupHom(G, tuple(img)))
            return
        for t in elems:
            choice.append(t)
            if _partial_ok(G, gens, choice, n):
                extend(i + 1, choice)
            choice.pop()

    extend(0, [])
    return out


def _partial_ok(G, gens, choice, n):
    """Cheap necessary condition: image order divides generator order."""
    s = gens[len(choice) - 1]
    t = choice[-1]
    k, g = 1, s
    while g != G.identity:
        g = G.mul(g, s)
        k += 1
    q = t
    for _ in range(k - 1):
        q = compose(t, q)
    return q == identity(n)


def conjugate_hom(hom: GroupHom, phi) -> GroupHom:
    pinv = inverse(phi)
    return GroupHom(hom.source, tuple(compose(compose(phi, a), pinv) for a in hom.images))


def classify_weak_isomorphism(homs: Sequence[GroupHom], H: PermGroup) -> list:
    """Orbit representatives (least image tuple) under conjugation by ``H``.

    Returns ``[(representative, orbit_size), ...]`` ordered by representative.
    """
    remaining = {h.images: h for h in homs}
    reps = []
    while remaining:
        key = min(remaining)
        hom = remaining[key]
        orbit = {conjugate_hom(hom, phi).images for phi in H}
        if not orbit <= set(remaining) | {key}:
            raise TheoryViolation("conjugate of a homomorphism is missing from the enumeration")
        for o in orbit:
            remaining.pop(o, None)
        reps.append((hom, len(orbit)))
    return reps


def count_orbits_burnside(homs: Sequence[GroupHom], H: PermGroup) -> int:
    """Number of conjugation orbits via the orbit-counting lemma."""
    total = 0
    for phi in H:
        total += sum(1 for h in homs if conjugate_hom(h, phi).images == h.images)
    q, r = divmod(total, H.order)
    if r:
        raise TheoryViolation("fixed-point count not divisible by group order")
    return q


def cocycle(lift: dict, sigma, rho) -> tuple:
    """Diagonal part of ``lift(sigma) lift(rho) lift(sigma rho)^-1``."""
    m = lift[sigma] @ lift[rho] @ lift[compose(sigma, rho)].inverse()
    if any(i != j for i, j in enumerate(m.sigma)):
        raise TheoryViolation("lift is not a set-theoretic section of the projection")
    return m.c


def splitting_section(H: PermGroup, V: PartitionSubspace, lift: dict) -> dict:
    """Correct a set-theoretic lift of ``H`` into a homomorphic section.

    Solves ``b(sigma) + sigma.b(rho) - b(sigma rho) = c(sigma, rho)`` with
    ``b(id) = 0`` and ``b`` valued in ``V`` as one exact linear system, where
    ``(sigma.v)_k = v_{sigma^-1(k)}``, then returns
    ``sigma -> diag(-b(sigma)) lift(sigma)``.

    Only ``rho`` among the generators of ``H`` enters the system: if
    ``s(sigma) s(g) = s(sigma g)`` for all ``sigma`` and generators ``g``,
    induction on word length gives it for all pairs.  The result is still
    checked on every pair.
    """
    elems = H.elements
    n = H.degree
    for s in elems:
        if lift[s].sigma != s:
            raise TheoryViolation("lift does not project to its permutation")
    index = {s: i for i, s in enumerate(elems)}
    dim = V.dim
    lab = V.partition.labels()
    # unknown (sigma, class t) -> index(sigma) * dim + t
    rows = []
    e = identity(n)
    for t in range(dim):
        rows.append(({index[e] * dim + t: 1}, 0))
    for s in elems:
        sinv = inverse(s)
        for r in H.generators:
            c = cocycle(lift, s, r)
            if c not in V:
                raise CocycleOutsideV(
                    "2-cocycle leaves the diagonal stabilizer",
                    counterexample={"sigma": list(s), "rho": list(r)},
                )
            sr = compose(s, r)
            for m in range(n):
                row: dict = {}
                for key, coef in (
                    (index[s] * dim + lab[m], 1),
                    (index[r] * dim + lab[sinv[m]], 1),
                    (index[sr] * dim + lab[m], -1),
                ):
                    row[key] = row.get(key, 0) + coef
                rows.append((row, c[m]))
    sol = solve_sparse(rows, len(elems) * dim)
    if sol is None:
        raise Unsolvable("coboundary equation has no solution; second cohomology should vanish")
    b = {s: V.vector(sol.particular[index[s] * dim:(index[s] + 1) * dim]) for s in elems}
    section = {s: MonomialMap.diagonal([-x for x in b[s]]) @ lift[s] for s in elems}
    for s in elems:
        for r in elems:
            if section[s] @ section[r] != section[compose(s, r)]:
                raise TheoryViolation("corrected section is not multiplicative")
    return section


@dataclass(frozen=True)
class Conjugator:
    d: tuple
    kernel_basis: tuple


def diagonal_conjugator(alpha: Sequence[MonomialMap], beta: Sequence[MonomialMap], V: PartitionSubspace) -> Conjugator | None:
    """Find ``d`` in ``V`` with ``alpha(g) = D beta(g) D^-1`` for every ``g``, ``D = diag(d)``.

    Coordinatewise: ``a_{g,k} = b_{g,k} + d_{sigma_g(k)} - d_k``.  ``alpha``
    and ``beta`` list the images of the same group elements in the same
    order.  The particular solution is normalized with its free class
    coordinates at zero; ``kernel_basis`` spans the ambiguity.
    """
    if len(alpha) != len(beta):
        raise ImageMismatch("alpha and beta have different numbers of images")
    for a, b in zip(alpha, beta):
        if a.sigma != b.sigma:
            raise ImageMismatch("alpha and beta project to different permutations")
    dim = V.dim
    lab = V.partition.labels()
    rows = []
    for a, b in zip(alpha, beta):
        for k in range(V.n):
            row: dict = {}
            row[lab[a.sigma[k]]] = row.get(lab[a.sigma[k]], 0) + 1
            row[lab[k]] = row.get(lab[k], 0) - 1
            rows.append((row, a.c[k] - b.c[k]))
    sol = solve_sparse(rows, dim)
    if sol is None:
        return None
    d = V.vector(sol.particular)
    D = MonomialMap.diagonal(d)
    for a, b in zip(alpha, beta):
        if D @ b @ D.inverse() != a:
            raise TheoryViolation("conjugator fails re-verification")
    return Conjugator(d, tuple(V.vector(k) for k in sol.kernel_basis))


def monomialize_torsion(gens: Sequence[MonomialMap], cap: int = 1000) -> tuple:
    """Diagonal ``L`` with ``L^-1 g L`` a pure permutation for every generated ``g``.

    Solves ``l_{sigma_g(k)} - l_k = c_{g,k}`` over the generators; the
    all-ones direction is always free, so the answer is shifted to ``l_0 = 0``.
    """
    if not gens:
        return ()
    elems = monomial_closure(gens, cap=cap)
    n = gens[0].degree
    rows = []
    for g in gens:
        for k in range(n):
            row: dict = {g.sigma[k]: 1}
            row[k] = row.get(k, 0) - 1
            rows.append(({j: v for j, v in row.items() if v}, g.c[k]))
    sol = solve_sparse(rows, n)
    if sol is None:
        raise TheoryViolation("finite monomial group is not diagonally conjugate to a permutation group")
    lam = sol.particular
    lam = tuple(x - lam[0] for x in lam)
    L = MonomialMap.diagonal(lam)
    for g in elems:
        if not (L.inverse() @ g @ L).is_permutation():
            raise TheoryViolation("conjugated element keeps a nonzero diagonal part")
    return lam


__all__ = [
    "FiniteGroup",
    "GroupHom",
    "MonomialMap",
    "NotTorsion",
    "enumerate_homs",
    "classify_weak_isomorphism",
    "count_orbits_burnside",
    "conjugate_hom",
    "splitting_section",
    "diagonal_conjugator",
    "Conjugator",
    "monomialize_torsion",
    "cocycle",
    "Fraction",
]
