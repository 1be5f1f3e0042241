"""Exact linear programming over the rationals.

Everything in this module computes with `fractions.Fraction`; no floating
point value ever enters a tableau, so results are exact and bit-for-bit
reproducible. Variables are implicitly constrained to x >= 0. Inequality
rows have sense a_k . x >= b_k; equality rows hold exactly.

Pivoting uses the least-index (Bland) rule for both the entering and the
leaving variable, which makes every solve deterministic and cycle-free.

Programs with no equality rows and a componentwise-nonnegative objective are
solved through the LP dual: the slack basis of the dual is immediately
feasible, so no phase-one pass is needed, and the primal vertex is read off
the optimal tableau's reduced costs (the complementary basic solution).
Everything else goes through the textbook primal two-phase simplex.

`minimize_slope` is the bridge used by the rank computations: the infimum of
(cost . lam) / min_k (a_k . lam) over nonzero integer vectors lam >= 0 with
positive denominator equals the minimum of the linear program
min{cost . x : a_k . x >= 1, x >= 0}, because the slope is invariant under
scaling lam and clearing denominators of an optimal rational vertex produces
an integer witness with the same slope. The infimum is +infinity exactly
when some row is the zero vector (that row's pairing vanishes for every
lam), encoded as `math.inf`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError

__all__ = [
    "LinearProgram",
    "LpOutcome",
    "SlopeResult",
    "lp_minimize",
    "lp_feasible",
    "minimize_slope",
    "oracle_minimum_over_vertices",
]

Rational = Fraction


def _as_fraction(value, what: str) -> Fraction:
    if isinstance(value, float):
        raise InputError(f"{what}: floating point is not exact, pass int or Fraction")
    try:
        return Fraction(value)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{what}: not a rational value: {value!r}") from exc


def _fraction_vector(values, length: int | None, what: str) -> tuple[Fraction, ...]:
    vec = tuple(_as_fraction(v, what) for v in values)
    if length is not None and len(vec) != length:
        raise InputError(f"{what}: expected length {length}, got {len(vec)}")
    return vec


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class LinearProgram:
    """min objective . x  s.t.  constraint_rows . x >= rhs, equality_rows . x = equality_rhs, x >= 0."""

    objective: tuple[Fraction, ...]
    constraint_rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    equality_rows: tuple[tuple[Fraction, ...], ...] = ()
    equality_rhs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        obj = _fraction_vector(self.objective, None, "objective")
        if not obj:
            raise InputError("objective: at least one variable is required")
        n = len(obj)
        rows = tuple(
            _fraction_vector(row, n, "constraint row") for row in self.constraint_rows
        )
        rhs = _fraction_vector(self.rhs, len(rows), "rhs")
        eq_rows = tuple(
            _fraction_vector(row, n, "equality row") for row in self.equality_rows
        )
        eq_rhs = _fraction_vector(self.equality_rhs, len(eq_rows), "equality rhs")
        object.__setattr__(self, "objective", obj)
        object.__setattr__(self, "constraint_rows", rows)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "equality_rows", eq_rows)
        object.__setattr__(self, "equality_rhs", eq_rhs)

    @property
    def num_variables(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LpOutcome:
    """Solver verdict: status is "optimal", "infeasible" or "unbounded".

    For an optimal outcome, `vertex` is a basic feasible solution satisfying
    every constraint exactly and `value` equals objective . vertex.
    """

    status: str
    value: Fraction | None = None
    vertex: tuple[Fraction, ...] | None = None


@dataclass(frozen=True)
class SlopeResult:
    """Result of a fractional slope minimization.

    `value` is the exact infimum (`math.inf` when no integer vector has a
    positive denominator). A finite result carries an integer witness
    attaining the value exactly.
    """

    value: Fraction | float
    witness: tuple[int, ...] | None

    @property
    def is_finite(self) -> bool:
        return self.value != math.inf


def _pivot(tableau: list[list[Fraction]], obj: list[Fraction], basis: list[int], row: int, col: int) -> None:
    prow = tableau[row]
    piv = prow[col]
    if piv != 1:
        tableau[row] = prow = [v / piv for v in prow]
    for other in tableau:
        if other is prow:
            continue
        factor = other[col]
        if factor:
            for j, pv in enumerate(prow):
                if pv:
                    other[j] -= factor * pv
    factor = obj[col]
    if factor:
        for j, pv in enumerate(prow):
            if pv:
                obj[j] -= factor * pv
    basis[row] = col


def _bland(tableau: list[list[Fraction]], obj: list[Fraction], basis: list[int], ncols: int) -> str:
    """Minimize, entering at the least negative-reduced-cost index; ties in the
    ratio test break toward the least basic index. Returns "optimal" or "unbounded"."""
    while True:
        enter = -1
        for j in range(ncols):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return "optimal"
        best_row = -1
        best_ratio = None
        for i, line in enumerate(tableau):
            coeff = line[enter]
            if coeff > 0:
                ratio = line[-1] / coeff
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[best_row])
                ):
                    best_ratio = ratio
                    best_row = i
        if best_row < 0:
            return "unbounded"
        _pivot(tableau, obj, basis, best_row, enter)


def _primal_two_phase(
    objective: Sequence[Fraction],
    rows: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
    eq_rows: Sequence[Sequence[Fraction]],
    eq_rhs: Sequence[Fraction],
) -> LpOutcome:
    n = len(objective)
    nsurplus = len(rows)
    width = n + nsurplus

    tableau: list[list[Fraction]] = []
    for k, row in enumerate(rows):
        line = list(row) + [Fraction(0)] * nsurplus + [rhs[k]]
        line[n + k] = Fraction(-1)
        tableau.append(line)
    for k, row in enumerate(eq_rows):
        tableau.append(list(row) + [Fraction(0)] * nsurplus + [eq_rhs[k]])
    for line in tableau:
        if line[-1] < 0:
            for j in range(len(line)):
                line[j] = -line[j]

    m = len(tableau)
    for i, line in enumerate(tableau):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        line[-1:-1] = art
    ncols = width + m
    basis = list(range(width, ncols))

    # phase one: minimize the sum of artificials (priced out against the
    # artificial basis, so reduced costs start as the negated column sums)
    obj = [Fraction(0)] * (ncols + 1)
    for line in tableau:
        for j in range(width):
            if line[j]:
                obj[j] -= line[j]
        obj[-1] -= line[-1]
    status = _bland(tableau, obj, basis, ncols)
    if status != "optimal":
        raise RuntimeError("phase one cannot be unbounded")
    if obj[-1] != 0:
        return LpOutcome(status="infeasible")

    # pivot leftover artificials out of the basis; rows that resist are
    # redundant (identically zero) and get dropped
    for i in range(m):
        if basis[i] >= width:
            for j in range(width):
                if tableau[i][j] != 0:
                    _pivot(tableau, obj, basis, i, j)
                    break
    keep = [i for i in range(m) if basis[i] < width]
    tableau = [tableau[i][:width] + [tableau[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # phase two with the real objective
    cost = list(objective) + [Fraction(0)] * nsurplus
    obj = cost + [Fraction(0)]
    for i, line in enumerate(tableau):
        cb = cost[basis[i]]
        if cb:
            for j in range(width):
                if line[j]:
                    obj[j] -= cb * line[j]
            obj[-1] -= cb * line[-1]
    status = _bland(tableau, obj, basis, width)
    if status != "optimal":
        return LpOutcome(status="unbounded")

    x = [Fraction(0)] * n
    for i, line in enumerate(tableau):
        if basis[i] < n:
            x[basis[i]] = line[-1]
    return LpOutcome(status="optimal", value=-obj[-1], vertex=tuple(x))


def _via_dual(
    objective: Sequence[Fraction],
    rows: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
) -> LpOutcome:
    """Solve min{c.x : A x >= b, x >= 0} with c >= 0 through its dual
    max{b.y : A^T y <= c, y >= 0}. The dual slack basis is feasible at once,
    and the optimal tableau's reduced costs under the slack columns are the
    complementary primal vertex."""
    m = len(rows)
    n = len(objective)
    ncols = m + n
    tableau: list[list[Fraction]] = []
    for j in range(n):
        line = [rows[k][j] for k in range(m)] + [Fraction(0)] * n + [objective[j]]
        line[m + j] = Fraction(1)
        tableau.append(line)
    basis = [m + j for j in range(n)]
    obj = [-b for b in rhs] + [Fraction(0)] * (n + 1)
    status = _bland(tableau, obj, basis, ncols)
    if status != "optimal":
        return LpOutcome(status="infeasible")
    value = obj[-1]
    vertex = tuple(obj[m + j] for j in range(n))
    return LpOutcome(status="optimal", value=value, vertex=vertex)


def lp_minimize(program: LinearProgram) -> LpOutcome:
    """Exact minimum of a linear program; deterministic for identical input."""
    if not program.equality_rows and all(c >= 0 for c in program.objective):
        return _via_dual(program.objective, program.constraint_rows, program.rhs)
    return _primal_two_phase(
        program.objective,
        program.constraint_rows,
        program.rhs,
        program.equality_rows,
        program.equality_rhs,
    )


def lp_feasible(
    constraint_rows: Iterable[Iterable],
    rhs: Iterable,
    equality_rows: Iterable[Iterable] = (),
    equality_rhs: Iterable = (),
) -> tuple[bool, tuple[Fraction, ...] | None]:
    """Phase-one feasibility of {A x >= b, E x = e, x >= 0}.

    Returns (True, witness) with an exact rational witness, or (False, None)
    when the phase-one optimum is strictly positive (certified infeasibility).
    """
    rows = [tuple(_as_fraction(v, "constraint row") for v in row) for row in constraint_rows]
    rvec = [_as_fraction(v, "rhs") for v in rhs]
    eq_rows = [tuple(_as_fraction(v, "equality row") for v in row) for row in equality_rows]
    evec = [_as_fraction(v, "equality rhs") for v in equality_rhs]
    if len(rows) != len(rvec) or len(eq_rows) != len(evec):
        raise InputError("feasibility system: row/rhs length mismatch")
    widths = {len(r) for r in rows} | {len(r) for r in eq_rows}
    if len(widths) > 1:
        raise InputError("feasibility system: rows have inconsistent arity")
    if not widths:
        return True, ()
    n = widths.pop()
    if n == 0:
        raise InputError("feasibility system: zero-width rows")
    outcome = _primal_two_phase([Fraction(0)] * n, rows, rvec, eq_rows, evec)
    if outcome.status == "optimal":
        return True, outcome.vertex
    return False, None


def minimize_slope(cost: Iterable, rows: Iterable[Iterable]) -> SlopeResult:
    """Infimum of (cost . lam) / min_k (row_k . lam) over integer lam >= 0
    with positive denominator, as a single exact LP solve.

    Rows must be nonnegative integer vectors; cost entries must be positive
    rationals. The infimum is +infinity exactly when some row is the zero
    vector; an empty row collection is rejected (the rank of the zero object
    is undefined).
    """
    cvec = tuple(_as_fraction(c, "cost") for c in cost)
    if not cvec:
        raise InputError("cost vector is empty")
    if any(c <= 0 for c in cvec):
        raise InputError("cost entries must be positive")
    rmat = []
    for row in rows:
        entries = []
        for e in row:
            if isinstance(e, Fraction) and e.denominator == 1:
                e = e.numerator
            if isinstance(e, bool) or not isinstance(e, int):
                raise InputError(f"support rows must contain integers, got {e!r}")
            if e < 0:
                raise InputError(f"support rows must be nonnegative, got {e}")
            entries.append(e)
        if len(entries) != len(cvec):
            raise InputError(
                f"support row arity {len(entries)} does not match cost arity {len(cvec)}"
            )
        rmat.append(tuple(entries))
    if not rmat:
        raise InputError("rank of the zero object is undefined: no support rows")
    if any(not any(row) for row in rmat):
        return SlopeResult(value=math.inf, witness=None)

    program = LinearProgram(
        objective=cvec,
        constraint_rows=rmat,
        rhs=[Fraction(1)] * len(rmat),
    )
    out = lp_minimize(program)
    if out.status != "optimal":
        raise RuntimeError(f"slope program should be solvable, got {out.status}")
    scale = math.lcm(*(x.denominator for x in out.vertex))
    witness = tuple(int(x * scale) for x in out.vertex)
    return SlopeResult(value=out.value, witness=witness)


def _solve_square(matrix: list[Sequence[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Unique solution of a square rational system, or None when singular."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot_row = -1
        for i in range(col, n):
            if aug[i][col] != 0:
                pivot_row = i
                break
        if pivot_row < 0:
            return None
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        prow = aug[col]
        piv = prow[col]
        if piv != 1:
            aug[col] = prow = [v / piv for v in prow]
        for i in range(n):
            if i != col and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], prow)]
    return [aug[i][n] for i in range(n)]


def oracle_minimum_over_vertices(
    program: LinearProgram, max_candidates: int = 100_000
) -> LpOutcome:
    """Brute-force reference solver: enumerate every candidate basis.

    Tries each size-n subset of the constraint rows (equalities,
    inequalities, and the nonnegativity bounds all together), solves the
    square system exactly, keeps the feasible solutions and returns the
    least objective value. Equality rows are not forced into the subsets:
    a redundant equality (say, a zero row with zero right side) would make
    every forced system singular, while the feasibility filter below
    enforces equalities correctly either way. Intended as an independent
    check on `lp_minimize`; it assumes the objective is bounded below on
    the feasible region (x >= 0 keeps the region pointed, so a feasible
    bounded program attains its minimum at some enumerated vertex).
    Refuses instances whose candidate count exceeds `max_candidates`.
    """
    n = program.num_variables
    m = len(program.constraint_rows)
    p = len(program.equality_rows)
    total = math.comb(p + m + n, n)
    if total > max_candidates:
        raise InputError(
            f"vertex oracle: {total} basis candidates exceed the bound {max_candidates}"
        )

    all_rows = list(program.equality_rows) + list(program.constraint_rows)
    all_rhs = list(program.equality_rhs) + list(program.rhs)
    for j in range(n):
        row = [Fraction(0)] * n
        row[j] = Fraction(1)
        all_rows.append(tuple(row))
        all_rhs.append(Fraction(0))

    best_value: Fraction | None = None
    best_vertex: tuple[Fraction, ...] | None = None
    for combo in itertools.combinations(range(p + m + n), n):
        mat = [all_rows[idx] for idx in combo]
        rhs = [all_rhs[idx] for idx in combo]
        x = _solve_square(mat, rhs)
        if x is None:
            continue
        if any(xj < 0 for xj in x):
            continue
        if any(_dot(row, x) < b for row, b in zip(program.constraint_rows, program.rhs)):
            continue
        if any(_dot(row, x) != b for row, b in zip(program.equality_rows, program.equality_rhs)):
            continue
        value = _dot(program.objective, x)
        if best_value is None or value < best_value:
            best_value = value
            best_vertex = tuple(x)
    if best_value is None:
        return LpOutcome(status="infeasible")
    return LpOutcome(status="optimal", value=best_value, vertex=best_vertex)
