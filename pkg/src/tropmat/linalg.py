"""Exact rational linear algebra.

Gauss-Jordan elimination over :class:`~fractions.Fraction` on sparse rows,
and Fourier-Motzkin elimination for systems mixing equalities with strict
and non-strict homogeneous inequalities.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, TheoryViolation

Vector = tuple  # of Fraction


@dataclass(frozen=True)
class AffineSolution:
    particular: tuple
    kernel_basis: tuple

    @property
    def dimension(self) -> int:
        return len(self.kernel_basis)


class _Echelon:
    """Incremental reduced row echelon form on sparse rows.

    Pivot rows are kept fully reduced: a pivot row never carries a nonzero
    entry in another pivot column, so reducing a new row is a single pass.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, list] = {}
        self.consistent = True

    def add(self, row: Mapping[int, Fraction], rhs=0) -> None:
        row = {j: Fraction(v) for j, v in row.items() if v}
        rhs = Fraction(rhs)
        for col in [c for c in row if c in self.pivots]:
            f = row[col]
            prow, prhs = self.pivots[col]
            for j, v in prow.items():
                nv = row.get(j, 0) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
            rhs -= f * prhs
        if not row:
            if rhs:
                self.consistent = False
            return
        col = min(row)
        piv = row[col]
        if piv != 1:
            row = {j: v / piv for j, v in row.items()}
            rhs /= piv
        for entry in self.pivots.values():
            prow = entry[0]
            f = prow.get(col)
            if f:
                for j, v in row.items():
                    nv = prow.get(j, 0) - f * v
                    if nv:
                        prow[j] = nv
                    else:
                        prow.pop(j, None)
                entry[1] -= f * rhs
        self.pivots[col] = [row, rhs]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solution(self) -> AffineSolution | None:
        if not self.consistent:
            return None
        x = [Fraction(0)] * self.ncols
        for col, (_, rhs) in self.pivots.items():
            x[col] = rhs
        return AffineSolution(tuple(x), tuple(self.kernel()))

    def kernel(self) -> list:
        basis = []
        for f in range(self.ncols):
            if f in self.pivots:
                continue
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for col, (prow, _) in self.pivots.items():
                c = prow.get(f)
                if c:
                    v[col] = -c
            basis.append(tuple(v))
        return basis


def _dense_rows(A, ncols):
    for row in A:
        if len(row) != ncols:
            raise DimensionMismatch(f"row of length {len(row)} in a system with {ncols} unknowns")
        yield {j: v for j, v in enumerate(row) if v}


def _infer_ncols(A, ncols):
    if ncols is not None:
        return ncols
    if not A:
        raise DimensionMismatch("cannot infer the number of unknowns of an empty system")
    return len(A[0])


def solve_affine(A: Sequence[Sequence], b: Sequence, ncols: int | None = None) -> AffineSolution | None:
    """Solve ``A x = b`` exactly; ``None`` when the system is inconsistent.

    ``ncols`` is only needed when ``A`` has no rows.
    """
    ncols = _infer_ncols(A, ncols)
    if len(A) != len(b):
        raise DimensionMismatch(f"{len(A)} rows but {len(b)} right-hand sides")
    ech = _Echelon(ncols)
    for row, r in zip(_dense_rows(A, ncols), b):
        ech.add(row, r)
        if not ech.consistent:
            return None
    return ech.solution()


def solve_sparse(rows: Iterable[tuple], ncols: int) -> AffineSolution | None:
    """Like :func:`solve_affine` for rows given as ``({col: coeff}, rhs)``."""
    ech = _Echelon(ncols)
    for row, r in rows:
        if any(not 0 <= j < ncols for j in row):
            raise DimensionMismatch(f"column index out of range for {ncols} unknowns")
        ech.add(row, r)
        if not ech.consistent:
            return None
    return ech.solution()


def kernel(A: Sequence[Sequence], ncols: int | None = None) -> list:
    ncols = _infer_ncols(A, ncols)
    ech = _Echelon(ncols)
    for row in _dense_rows(A, ncols):
        ech.add(row)
    return ech.kernel()


def rank(A: Sequence[Sequence], ncols: int | None = None) -> int:
    ncols = _infer_ncols(A, ncols)
    ech = _Echelon(ncols)
    for row in _dense_rows(A, ncols):
        ech.add(row)
    return ech.rank


def mat_vec(A, x) -> tuple:
    return tuple(sum((a * v for a, v in zip(row, x)), Fraction(0)) for row in A)


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def determinant(A) -> Fraction:
    n = len(A)
    M = [[Fraction(v) for v in row] for row in A]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            if f:
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return det


# --- Fourier-Motzkin -------------------------------------------------------

def _normalize(coeffs, const, strict):
    scale = next((abs(c) for c in coeffs if c), None)
    if scale is None:
        scale = abs(const) or Fraction(1)
    return (tuple(c / scale for c in coeffs), const / scale, strict)


def _trivial(con):
    coeffs, const, strict = con
    if any(coeffs):
        return None
    return const > 0 or (const == 0 and not strict)


def _eliminate(cons, var):
    pos, neg, rest = [], [], []
    for con in cons:
        c = con[0][var]
        (pos if c > 0 else neg if c < 0 else rest).append(con)
    out = set(rest)
    for pc, pk, ps in pos:
        for nc, nk, ns in neg:
            a, b = -nc[var], pc[var]
            coeffs = tuple(a * x + b * y for x, y in zip(pc, nc))
            out.add(_normalize(coeffs, a * pk + b * nk, ps or ns))
    return out


def _fm_solve(cons: list, nvars: int):
    """Find y with every ``coeffs . y + const`` > 0 (strict) or >= 0.

    Returns a rational point or ``None``.
    """
    stages = [None] * nvars
    current = set()
    for con in cons:
        t = _trivial(con)
        if t is False:
            return None
        if t is None:
            current.add(_normalize(*con))
    for var in reversed(range(nvars)):
        stages[var] = current
        nxt = set()
        for con in _eliminate(current, var):
            t = _trivial(con)
            if t is False:
                return None
            if t is None:
                nxt.add(con)
        current = nxt
    y = [Fraction(0)] * nvars
    for var in range(nvars):
        lows, highs = [], []
        for coeffs, const, strict in stages[var]:
            c = coeffs[var]
            if not c:
                continue
            rest = const + sum((coeffs[j] * y[j] for j in range(var)), Fraction(0))
            (lows if c > 0 else highs).append((-rest / c, strict))
        lo = max((b for b, _ in lows), default=None)
        hi = min((b for b, _ in highs), default=None)
        if lo is not None and hi is not None:
            if lo == hi:
                if any(s for b, s in lows + highs if b == lo):
                    raise TheoryViolation("Fourier-Motzkin back-substitution found an empty interval")
                val = lo
            else:
                val = (lo + hi) / 2
        elif lo is not None:
            val = Fraction(lo.__floor__() + 1)
        elif hi is not None:
            val = Fraction(hi.__ceil__() - 1)
        else:
            val = Fraction(0)
        y[var] = val
    return y


def feasible_strict(
    equalities: Sequence[tuple],
    strict_positive: Sequence[Sequence],
    nonnegative: Sequence[Sequence] = (),
    nvars: int | None = None,
) -> tuple | None:
    """Rational point with every equality holding and every listed form positive.

    ``equalities`` are ``(coeffs, rhs)`` pairs meaning ``coeffs . x = rhs``;
    ``strict_positive`` and ``nonnegative`` are coefficient vectors of
    homogeneous forms required to be ``> 0`` and ``>= 0`` respectively.
    """
    if nvars is None:
        sample = [e[0] for e in equalities] + list(strict_positive) + list(nonnegative)
        if not sample:
            raise DimensionMismatch("cannot infer the number of unknowns")
        nvars = len(sample[0])
    for coeffs in [e[0] for e in equalities] + list(strict_positive) + list(nonnegative):
        if len(coeffs) != nvars:
            raise DimensionMismatch(f"form of length {len(coeffs)} in a system with {nvars} unknowns")
    sol = solve_affine([e[0] for e in equalities], [e[1] for e in equalities], ncols=nvars)
    if sol is None:
        return None
    p, K = sol.particular, sol.kernel_basis
    cons = []
    for forms, strict in ((strict_positive, True), (nonnegative, False)):
        for f in forms:
            f = [Fraction(v) for v in f]
            cons.append((tuple(dot(f, k) for k in K), dot(f, p), strict))
    y = _fm_solve(cons, len(K))
    if y is None:
        return None
    x = list(p)
    for yj, k in zip(y, K):
        if yj:
            x = [a + yj * b for a, b in zip(x, k)]
    x = tuple(x)
    for coeffs, rhs in equalities:
        if dot(coeffs, x) != rhs:
            raise TheoryViolation("feasibility witness violates an equality")
    if any(dot(f, x) <= 0 for f in strict_positive) or any(dot(f, x) < 0 for f in nonnegative):
        raise TheoryViolation("feasibility witness violates an inequality")
    return x
