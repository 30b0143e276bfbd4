from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import pytest

from tropmat.cone import cone_diagonal_stabilizer, realizable_permutations, realize, validate_cone
from tropmat.errors import ContainsLine, NonExtremeRay
from tropmat.groups import FiniteGroup, enumerate_homs
from tropmat.linalg import determinant
from tropmat.perm import format_cycles, parse_perm

SQUARE = [(1, 1, 1), (-1, 1, 1), (-1, -1, 1), (1, -1, 1)]
PRISM = [(x, y, h, 1) for h in (0, 1) for (x, y) in ((0, 0), (1, 0), (0, 1))]


def simplex(n):
    return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]


def test_validation():
    assert validate_cone([(1, 0), (0, 1)]).n == 2
    with pytest.raises(ContainsLine):
        validate_cone([(1, 0), (-1, 0)])
    with pytest.raises(NonExtremeRay) as err:
        validate_cone([(1, 0), (0, 1), (1, 1)])
    assert err.value.counterexample == {"ray": 3}


def test_square_cone():
    C = validate_cone(SQUARE)
    G = realizable_permutations(C)
    assert G.order == 8 and G.is_group()
    assert realize(C, parse_perm("(1 2)", 4)) is None
    assert realize(C, parse_perm("(1 2 3 4)", 4)) is not None
    assert cone_diagonal_stabilizer(C).partition.to_json() == [[1, 2, 3, 4]]


def test_square_cone_by_exhaustion():
    # the adjacency relation r1+r3 = r2+r4 must be kept: diagonals go to diagonals
    C = validate_cone(SQUARE)
    diag = {frozenset({0, 2}), frozenset({1, 3})}
    expected = sorted(p for p in permutations(range(4)) if {frozenset(p[i] for i in d) for d in diag} == diag)
    assert sorted(realizable_permutations(C)) == expected


@pytest.mark.parametrize("n", [2, 3, 4])
def test_simplicial_cone(n):
    C = validate_cone(simplex(n))
    assert realizable_permutations(C).order == len(list(permutations(range(n))))
    assert cone_diagonal_stabilizer(C).partition.to_json() == [[i + 1] for i in range(n)]


def test_witnesses_reverify():
    C = validate_cone(PRISM)
    for s in realizable_permutations(C):
        w = realize(C, s)
        assert all(v > 0 for v in w.lam)
        assert determinant(w.matrix) != 0


def test_prism_cone_pinned():
    C = validate_cone(PRISM)
    G = realizable_permutations(C)
    assert G.order == 12
    assert [format_cycles(g) for g in G.generators] == ["(2 3)(5 6)", "(1 2)(4 5)", "(1 4)(2 5)(3 6)"]
    V = cone_diagonal_stabilizer(C)
    assert V.partition.to_json() == [[1, 2, 3, 4, 5, 6]] and V.dim == 1


def test_cone_group_feeds_hom_enumeration():
    G = realizable_permutations(validate_cone(SQUARE))
    assert len(enumerate_homs(FiniteGroup.cyclic(2), G)) == 6


def test_rational_rays():
    C = validate_cone([(Fraction(1, 2), 0), (0, Fraction(3))])
    assert realizable_permutations(C).order == 2
