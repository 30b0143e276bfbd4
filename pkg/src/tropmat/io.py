"""JSON readers and writers for every file format the CLI accepts.

Readers take already-decoded JSON values and raise :class:`ParseError` on
shape problems; validation errors come from the constructors they call.
"""

from __future__ import annotations

from fractions import Fraction

from .bmod import BPresentation
from .cone import Cone, validate_cone
from .errors import ParseError
from .groups import FiniteGroup
from .linsub import TropLinearEquation
from .matroid import Matroid, to_mask, validate_matroid
from .partition import Partition, PartitionSubspace
from .perm import MonomialMap, check_perm, format_cycles, parse_perm
from .scalar import format_scalar, parse_rational, parse_scalar
from .valuated import ValuatedMatroid, validate_valuation


def _need(obj, key, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing field {key!r}")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise ParseError(f"field {key!r} has the wrong type")
    return val


def _int(obj, key) -> int:
    v = _need(obj, key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"field {key!r} must be an integer")
    return v


def load_matroid(obj) -> Matroid:
    bases = _need(obj, "bases", list)
    if not all(isinstance(b, list) for b in bases):
        raise ParseError("bases must be lists of element indices")
    return validate_matroid(_int(obj, "n"), _int(obj, "rank"), bases)


def load_valuated(obj, check_exchange: bool = True) -> ValuatedMatroid:
    M = load_matroid(obj)
    bases = obj["bases"]
    weights = _need(obj, "weights", list)
    if len(weights) != len(bases):
        raise ParseError(f"{len(weights)} weights for {len(bases)} bases")
    parsed = {to_mask(e - 1 for e in b): parse_scalar(w) for b, w in zip(bases, weights)}
    return validate_valuation(M, parsed, check_exchange)


def load_vector(obj) -> tuple:
    if not isinstance(obj, list):
        raise ParseError("a vector is a JSON array of rational strings or \"-inf\"")
    return tuple(parse_scalar(v) for v in obj)


def load_rational_vector(obj) -> tuple:
    if not isinstance(obj, list):
        raise ParseError("expected a JSON array of rationals")
    return tuple(parse_rational(v) for v in obj)


def load_equations(obj) -> list:
    if not isinstance(obj, list):
        raise ParseError("equations file must be a JSON array of {\"a\", \"b\"} objects")
    return [TropLinearEquation(load_vector(_need(e, "a")), load_vector(_need(e, "b"))) for e in obj]


def load_presentation(obj) -> BPresentation:
    rels = _need(obj, "relations", list)
    for r in rels:
        if not (isinstance(r, list) and len(r) == 2 and all(isinstance(s, list) for s in r)):
            raise ParseError("each relation is a pair of generator lists")
    return BPresentation.from_lists(_int(obj, "n"), rels)


def load_group(obj) -> FiniteGroup:
    if isinstance(obj, dict) and "perm_generators" in obj:
        gens = obj["perm_generators"]
        if not gens or not all(isinstance(g, list) for g in gens):
            raise ParseError("perm_generators must be a nonempty list of image arrays")
        n = len(gens[0])
        perms = [check_perm([i - 1 for i in g], n) for g in gens]
        return FiniteGroup.from_perm_generators(perms, n)
    table = _need(obj, "table", list)
    if "order" in obj and _int(obj, "order") != len(table):
        raise ParseError("order does not match the table size")
    gens = obj.get("generators")
    return FiniteGroup(table, gens)


def load_perm(value, n: int) -> tuple:
    if isinstance(value, list):
        if not all(isinstance(i, int) and not isinstance(i, bool) for i in value):
            raise ParseError("permutation arrays hold integers")
        return check_perm([i - 1 for i in value], n)
    if isinstance(value, str):
        return parse_perm(value, n)
    raise ParseError("a permutation is a cycle string or a 1-based image array")


def load_monomial_map(obj) -> MonomialMap:
    c = load_rational_vector(_need(obj, "c"))
    return MonomialMap(load_perm(_need(obj, "sigma"), len(c)), c)


def load_monomial_maps(obj) -> list:
    if isinstance(obj, dict):
        obj = _need(obj, "maps", list)
    if not isinstance(obj, list) or not obj:
        raise ParseError("expected a nonempty array of {\"sigma\", \"c\"} objects")
    maps = [load_monomial_map(m) for m in obj]
    if len({m.degree for m in maps}) != 1:
        raise ParseError("monomial maps of different degrees")
    return maps


def load_partition_subspace(obj, n: int) -> PartitionSubspace:
    if obj is None:
        return PartitionSubspace(Partition.discrete(n))
    if not isinstance(obj, list) or not all(isinstance(b, list) for b in obj):
        raise ParseError("partition must be a list of 1-based blocks")
    return PartitionSubspace(Partition(n, tuple(tuple(i - 1 for i in b) for b in obj)))


def load_cone(obj) -> Cone:
    rays = _need(obj, "rays", list)
    dim = _int(obj, "dim")
    return validate_cone([load_rational_vector(r) for r in rays], dim)


# writers

def vec_json(x) -> list:
    return [format_scalar(v) for v in x]


def rat_json(q) -> str:
    return str(Fraction(q))


def monomial_json(m: MonomialMap) -> dict:
    return {"sigma": format_cycles(m.sigma), "c": vec_json(m.c)}


def perm_json(p) -> str:
    return format_cycles(p)
