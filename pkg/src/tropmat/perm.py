"""Permutations of ``range(n)``, explicit permutation groups, monomial maps.

Permutations are tuples in one-line form: ``p[i]`` is the image of ``i``.
Composition follows function notation, ``compose(p, q)(i) == p[q[i]]``.
Everything user-facing is 1-based; everything internal is 0-based.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadPermutation, DimensionMismatch, NotTorsion
from .scalar import BOTTOM, trop_mul

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def check_perm(p: Sequence[int], n: int | None = None) -> Perm:
    p = tuple(p)
    if n is not None and len(p) != n:
        raise BadPermutation(f"permutation of length {len(p)} on a ground set of size {n}")
    if sorted(p) != list(range(len(p))):
        raise BadPermutation(f"{[i + 1 for i in p]} is not a permutation")
    return p


def apply_mask(p: Perm, mask: int) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << p[i]
        mask >>= 1
        i += 1
    return out


def perm_order(p: Perm) -> int:
    k, q, e = 1, p, identity(len(p))
    while q != e:
        q = compose(p, q)
        k += 1
    return k


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, n: int) -> Perm:
    """Parse cycle notation ``"(1 3)(2 4)"`` or a one-line JSON array ``"[2,3,4,1]"``."""
    s = text.strip()
    if s.startswith("["):
        try:
            images = json.loads(s)
        except json.JSONDecodeError as exc:
            raise BadPermutation(f"unreadable permutation {text!r}") from exc
        if not all(isinstance(i, int) for i in images):
            raise BadPermutation(f"unreadable permutation {text!r}")
        return check_perm([i - 1 for i in images], n)
    if _CYCLE.sub("", s).strip():
        raise BadPermutation(f"unreadable permutation {text!r}")
    p = list(range(n))
    seen = set()
    for body in _CYCLE.findall(s):
        try:
            cyc = [int(t) - 1 for t in body.replace(",", " ").split()]
        except ValueError as exc:
            raise BadPermutation(f"unreadable cycle ({body})") from exc
        if any(not 0 <= c < n for c in cyc) or seen.intersection(cyc) or len(set(cyc)) != len(cyc):
            raise BadPermutation(f"bad cycle ({body}) for degree {n}")
        seen.update(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a] = b
    return tuple(p)


def format_cycles(p: Perm) -> str:
    seen = set()
    parts = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = p[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        parts.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "()"


def closure(gens: Iterable[Perm], n: int, cap: int | None = None) -> list:
    e = identity(n)
    elems = {e}
    frontier = [e]
    gens = list(gens)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(s, g)
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
                    if cap is not None and len(elems) > cap:
                        raise NotTorsion(f"generated group exceeds {cap} elements")
        frontier = nxt
    return sorted(elems)


class PermGroup:
    """A finite permutation group held as an explicit sorted element list."""

    def __init__(self, degree: int, elements: Iterable[Perm], generators: Iterable[Perm] | None = None):
        self.degree = degree
        self.elements = tuple(sorted(set(tuple(p) for p in elements)))
        self._set = frozenset(self.elements)
        if generators is None:
            generators = _greedy_generators(self.elements, degree)
        self.generators = tuple(generators)

    @classmethod
    def generate(cls, degree: int, gens: Iterable[Perm]) -> "PermGroup":
        gens = [g for g in gens if g != identity(degree)]
        return cls(degree, closure(gens, degree), gens)

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        from itertools import permutations

        return cls(n, permutations(range(n)))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, PermGroup) and self.degree == other.degree and self._set == other._set

    def __hash__(self):
        return hash((self.degree, self._set))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def is_group(self) -> bool:
        if identity(self.degree) not in self._set:
            return False
        if any(inverse(p) not in self._set for p in self.elements):
            return False
        return all(compose(p, q) in self._set for p in self.elements for q in self.elements)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self._set <= other._set


def _greedy_generators(elements, degree):
    gens = []
    span = {identity(degree)}
    for p in elements:
        if p not in span:
            gens.append(p)
            span = set(closure(gens, degree))
    return gens


@dataclass(frozen=True)
class MonomialMap:
    """An element of GL_n over the tropical semifield: ``e_k -> c_k e_sigma(k)``."""

    sigma: Perm
    c: tuple

    def __post_init__(self):
        if len(self.sigma) != len(self.c):
            raise DimensionMismatch("permutation and diagonal part differ in length")
        object.__setattr__(self, "c", tuple(Fraction(v) for v in self.c))

    @classmethod
    def identity(cls, n: int) -> "MonomialMap":
        return cls(identity(n), (Fraction(0),) * n)

    @classmethod
    def diagonal(cls, c: Sequence) -> "MonomialMap":
        return cls(identity(len(c)), tuple(c))

    @property
    def degree(self) -> int:
        return len(self.sigma)

    def __matmul__(self, other: "MonomialMap") -> "MonomialMap":
        # (sigma, c) o (rho, d) = (sigma rho, k -> c[rho(k)] + d[k])
        return MonomialMap(
            compose(self.sigma, other.sigma),
            tuple(self.c[other.sigma[k]] + other.c[k] for k in range(self.degree)),
        )

    def inverse(self) -> "MonomialMap":
        inv = inverse(self.sigma)
        return MonomialMap(inv, tuple(-self.c[inv[k]] for k in range(self.degree)))

    def is_permutation(self) -> bool:
        return not any(self.c)

    def apply(self, x: Sequence) -> tuple:
        return monomial_apply(self, x)


def monomial_apply(m: MonomialMap, x: Sequence) -> tuple:
    if len(x) != m.degree:
        raise DimensionMismatch(f"vector of length {len(x)} for a map of degree {m.degree}")
    out = [BOTTOM] * m.degree
    for k, xk in enumerate(x):
        out[m.sigma[k]] = trop_mul(m.c[k], xk)
    return tuple(out)


def monomial_closure(gens: Iterable[MonomialMap], cap: int = 1000) -> list:
    gens = list(gens)
    if not gens:
        return []
    e = MonomialMap.identity(gens[0].degree)
    elems = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s @ g
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
                    if len(elems) > cap:
                        raise NotTorsion(f"generated group exceeds {cap} elements; not a finite subgroup")
        frontier = nxt
    return sorted(elems, key=lambda m: (m.sigma, m.c))
