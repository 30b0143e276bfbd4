"""Command-line front end.

Every successful command prints one JSON report
``{"command", "input_digest", "result", "exact", "version"}``.  Exit codes:
0 success, 2 invalid input (structured error object on stdout), 64 usage,
66 unreadable input file.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys

from . import __version__
from .bmod import congruence_closure, is_quasi_free, join_irreducibles, atoms, qm_boolean, shadow_automorphisms
from .cone import cone_diagonal_stabilizer, realizable_permutations
from .errors import ParseError, TheoryViolation, TropmatError
from .groups import (
    classify_weak_isomorphism,
    count_orbits_burnside,
    diagonal_conjugator,
    enumerate_homs,
    monomialize_torsion,
)
from .io import (
    load_cone,
    load_equations,
    load_group,
    load_matroid,
    load_monomial_maps,
    load_partition_subspace,
    load_perm,
    load_presentation,
    load_valuated,
    load_vector,
    monomial_json,
    perm_json,
    rat_json,
    vec_json,
)
from .linsub import partition_of_group
from .matroid import mask_json, matroid_automorphisms
from .perm import PermGroup, monomial_closure
from .tropspace import aut_structure, contains, diagonal_stabilizer, generators, in_span
from .valuated import is_weak_automorphism, projectively_equivalent, weak_automorphism_group, weak_automorphism_witnesses

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_IO = 0, 2, 64, 66
FULL_LISTING_MAX_N = 8


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class _Inputs:
    """Reads input files once, in order, and hashes their bytes."""

    def __init__(self):
        self._hash = hashlib.sha256()

    def read(self, path: str):
        with open(path, "rb") as fh:
            data = fh.read()
        self._hash.update(data)
        try:
            return json.loads(data.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise ParseError(f"{path}: not valid JSON ({exc})") from exc

    @property
    def digest(self) -> str:
        return self._hash.hexdigest()


def _group_json(G: PermGroup, full: bool = True) -> dict:
    out = {"order": G.order, "generators": [perm_json(g) for g in G.generators]}
    if full:
        out["elements"] = [perm_json(p) for p in G]
    return out


def _require(args, name, flag):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"this command needs {flag}")
    return value


# handlers: (args, inputs) -> result payload

def _matroid(args, inp):
    M = load_matroid(inp.read(_require(args, "input", "-i")))
    if args.action == "validate":
        return {"valid": True, "n": M.n, "rank": M.rank, "bases": len(M.bases), "simple": M.is_simple()}
    if args.action == "aut":
        return _group_json(matroid_automorphisms(M), full=M.n <= FULL_LISTING_MAX_N)
    if args.action == "hyperplanes":
        return {"hyperplanes": [mask_json(h) for h in M.hyperplanes]}
    return {"circuits": [mask_json(c) for c in M.circuits]}


def _vm(args, inp):
    VM = load_valuated(inp.read(_require(args, "input", "-i")), not args.skip_dw)
    if args.action == "validate":
        return {"valid": True, "n": VM.n, "rank": VM.rank, "exchange_checked": not args.skip_dw}
    if args.action == "waut":
        sigma = load_perm(_parse_sigma(_require(args, "sigma", "--sigma")), VM.n)
        wit = is_weak_automorphism(VM, sigma)
        if wit is None:
            return {"weak_automorphism": False}
        return {"weak_automorphism": True, "tau": vec_json(wit.tau)}
    if args.action == "wautgroup":
        wits = weak_automorphism_witnesses(VM)
        out = _group_json(PermGroup(VM.n, wits))
        out["witnesses"] = [{"sigma": perm_json(s), "tau": vec_json(w.tau)} for s, w in sorted(wits.items())]
        return out
    other = load_valuated(inp.read(_require(args, "other", "-j")), not args.skip_dw)
    wit = projectively_equivalent(VM, other)
    if wit is None:
        return {"projectively_equivalent": False}
    return {
        "projectively_equivalent": True,
        "alpha": rat_json(wit.alpha),
        "tau": vec_json(wit.tau),
        "kernel": [{"alpha": rat_json(k[0]), "tau": vec_json(k[1:])} for k in wit.kernel_basis],
    }


def _parse_sigma(text):
    s = text.strip()
    if s.startswith("["):
        try:
            return json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"unreadable permutation {text!r}") from exc
    return s


def _space(args, inp):
    VM = load_valuated(inp.read(_require(args, "input", "-i")), not args.skip_dw)
    if args.action == "gens":
        return {
            "generators": [
                {"I": mask_json(g.independent), "hyperplane": mask_json(g.hyperplane), "vector": vec_json(g.vector)}
                for g in generators(VM)
            ]
        }
    if args.action == "member":
        x = load_vector(inp.read(_require(args, "vector", "-x")))
        gens = generators(VM)
        lam = in_span(x, gens.vectors)
        return {
            "member": contains(VM, x),
            "in_span": lam is not None,
            "coefficients": None if lam is None else vec_json(lam),
        }
    if args.action == "stab":
        return diagonal_stabilizer(VM).to_json()
    A = aut_structure(VM)
    return {
        "H": _group_json(A.H),
        "V": A.V.to_json(),
        "section": [monomial_json(A.section[s]) for s in A.H],
    }


def _linsub(args, inp):
    eqs = load_equations(inp.read(_require(args, "input", "-i")))
    n = args.n
    if n is None and not eqs:
        raise UsageError("an empty equation list needs --n")
    p = partition_of_group(eqs, n, max_n=args.max_n)
    return {"partition": p.to_json(), "dimension": len(p)}


def _bmod(args, inp):
    obj = inp.read(_require(args, "input", "-i"))
    if args.action == "qm":
        VM = load_valuated(obj, not args.skip_dw)
        L = qm_boolean(VM)
        out = L.to_json()
        # both groups are reported side by side; the shadow may be larger
        shadow = shadow_automorphisms(L)
        out["shadow_automorphisms"] = None if shadow is None else _group_json(PermGroup(L.n, shadow))
        out["weak_automorphisms"] = _group_json(weak_automorphism_group(VM)) if VM.matroid.is_simple() else None
        return out
    L = congruence_closure(load_presentation(obj))
    if args.action == "closure":
        return L.to_json()
    return {
        "quasi_free": is_quasi_free(L),
        "join_irreducibles": [mask_json(j) for j in join_irreducibles(L)],
        "atoms": [mask_json(a) for a in atoms(L)],
    }


def _group(args, inp):
    if args.action == "subreps":
        G = load_group(inp.read(_require(args, "group", "-g")))
        VM = load_valuated(inp.read(_require(args, "vm", "-m")), not args.skip_dw)
        A = aut_structure(VM)
        homs = enumerate_homs(G, A.H)
        classes = classify_weak_isomorphism(homs, A.H)
        burnside = count_orbits_burnside(homs, A.H)
        if burnside != len(classes):
            raise TheoryViolation("orbit enumeration and orbit counting disagree")
        return {
            "group_order": G.order,
            "H": _group_json(A.H),
            "V": A.V.to_json(),
            "homomorphisms": len(homs),
            "class_count": len(classes),
            "classes": [
                {
                    "images": [perm_json(p) for p in hom.images],
                    "orbit_size": size,
                    "action": [monomial_json(A.section[p]) for p in hom.images],
                }
                for hom, size in classes
            ],
        }
    obj = inp.read(_require(args, "input", "-i"))
    if args.action == "monomialize":
        maps = load_monomial_maps(obj)
        lam = monomialize_torsion(maps)
        return {"lambda": vec_json(lam), "group_order": len(monomial_closure(maps))}
    if not isinstance(obj, dict):
        raise ParseError("conjugator input is an object with \"alpha\", \"beta\" and optional \"partition\"")
    alpha = load_monomial_maps(obj.get("alpha"))
    beta = load_monomial_maps(obj.get("beta"))
    V = load_partition_subspace(obj.get("partition"), alpha[0].degree)
    conj = diagonal_conjugator(alpha, beta, V)
    if conj is None:
        return {"conjugate": False}
    return {"conjugate": True, "d": vec_json(conj.d), "kernel": [vec_json(k) for k in conj.kernel_basis]}


def _cone(args, inp):
    C = load_cone(inp.read(_require(args, "input", "-i")))
    if args.action == "perms":
        return _group_json(realizable_permutations(C, max_n=args.max_n))
    return cone_diagonal_stabilizer(C).to_json()


def _selftest(args, inp):
    from .selftest import run_selftest

    seed = int(os.environ.get("TROPMAT_SEED", "0"))
    return run_selftest(random.Random(seed), rounds=args.rounds) | {"seed": seed}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tropmat", description="Exact tropical matroid and module computations.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, actions, handler, **flags):
        sp = sub.add_parser(name)
        sp.add_argument("action", choices=actions)
        sp.add_argument("--format", choices=["json", "text"], default="json")
        if flags.get("input", True):
            sp.add_argument("-i", "--input")
        if flags.get("skip_dw"):
            sp.add_argument("--skip-dw", action="store_true", help="skip the valuated exchange check")
        sp.set_defaults(handler=handler)
        return sp

    add("matroid", ["validate", "aut", "hyperplanes", "circuits"], _matroid)
    sp = add("vm", ["validate", "waut", "wautgroup", "projeq"], _vm, skip_dw=True)
    sp.add_argument("--sigma")
    sp.add_argument("-j", "--other", help="second valuated matroid for projeq")
    sp = add("space", ["gens", "member", "stab", "autstructure"], _space, skip_dw=True)
    sp.add_argument("-x", "--vector")
    sp = add("linsub", ["partition"], _linsub)
    sp.add_argument("--max-n", type=int, default=10)
    sp.add_argument("--n", type=int, help="ambient dimension (needed only with no equations)")
    add("bmod", ["closure", "qm", "quasifree"], _bmod, skip_dw=True)
    sp = add("group", ["subreps", "monomialize", "conjugator"], _group, skip_dw=True)
    sp.add_argument("-g", "--group")
    sp.add_argument("-m", "--vm")
    sp = add("cone", ["perms", "stab"], _cone)
    sp.add_argument("--max-n", type=int, default=10)
    sp = sub.add_parser("selftest")
    sp.add_argument("--format", choices=["json", "text"], default="json")
    sp.add_argument("--rounds", type=int, default=20)
    sp.set_defaults(handler=_selftest, action=None)
    return p


def _render_text(report: dict) -> str:
    lines = [f"{report['command']}  (tropmat {report['version']})"]
    result = report["result"]
    if isinstance(result, dict):
        width = max((len(k) for k in result), default=0)
        for k, v in result.items():
            lines.append(f"{k.ljust(width)}  {json.dumps(v)}")
    else:
        lines.append(json.dumps(result))
    return "\n".join(lines)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"tropmat: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return exc.code or 0
    inp = _Inputs()
    try:
        result = args.handler(args, inp)
    except UsageError as exc:
        print(f"tropmat: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"tropmat: cannot read input: {exc}", file=sys.stderr)
        return EXIT_IO
    except TropmatError as exc:
        print(json.dumps({"error": exc.to_json()}, indent=2), file=out)
        return EXIT_INVALID
    command = args.command if args.action is None else f"{args.command} {args.action}"
    report = {
        "command": command,
        "input_digest": inp.digest,
        "result": result,
        "exact": True,
        "version": __version__,
    }
    print(_render_text(report) if args.format == "text" else json.dumps(report, indent=2), file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
