"""Torus-restricted stable ranks of tensors and symmetric tensors.

A tensor is given purely by its support: the set of basis tuples carrying a
nonzero coefficient (coefficient values are irrelevant to every quantity
computed here, which is why none are stored). Restricting the group to the
diagonal torus of the chosen basis turns each rank into the minimization of
an exact fractional linear program over the support, so every function below
reduces to `stablerank.exactlp.minimize_slope` or `lp_feasible`. Because
only diagonal one-parameter subgroups are searched, the returned ranks are
upper bounds on the full group-stable rank; they are exact whenever some
optimal subgroup is diagonal in the given basis (torus-optimal tensors).

Why semistability is equivalent to the rank hitting its ceiling: the rank
with unit weights never exceeds n (the assignment lam_1 = (1,...,1), other
factors zero, has slope exactly n). The tensor is torus-unstable exactly
when some integer assignment with every factor summing to zero pairs >= 1
with each support row. Given weights of slope < n, the shifted assignment
lam'_{i,j} = n*lam_{i,j} - sum_j lam_{i,j} is traceless and pairs
n*val - sum > 0 with every row, certifying instability; conversely a
traceless destabilizer shifted by c_i = -min_j lam_{i,j} per factor becomes
nonnegative with slope n*sum(c) / (val + sum(c)) < n. So semistable iff
rank = n, which the verification suites exercise on random supports. The
same shift argument with a single weight vector (and valuations scaled by
the degree) gives the symmetric statement with ceiling n.

Feasibility of the destabilizing system is checked as a rational linear
program; this loses nothing, since clearing denominators of a rational
solution yields an integer one (the >= 1 rows only improve under scaling by
a positive integer and tracelessness is preserved).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .exactlp import SlopeResult, lp_feasible, minimize_slope

__all__ = [
    "TensorSupport",
    "SymmetricSupport",
    "torus_valuation",
    "torus_rank",
    "symm_torus_rank",
    "expand_symmetric",
    "combine_one_ps",
    "is_torus_semistable",
    "is_symm_torus_semistable",
]


def _int_tuple(values, what: str) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, Fraction) and v.denominator == 1:
            v = v.numerator
        if isinstance(v, bool) or not isinstance(v, int):
            raise InputError(f"{what}: expected an integer, got {v!r}")
        out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class TensorSupport:
    """Support of an order-d tensor on (k^n)^{tensor d}: 1-based index tuples."""

    order: int
    dims: int
    tuples: frozenset[tuple[int, ...]]

    def __post_init__(self):
        if self.order < 1 or self.dims < 1:
            raise InputError("tensor support needs order >= 1 and dims >= 1")
        seen = set()
        for raw in self.tuples:
            t = _int_tuple(raw, "tensor support tuple")
            if len(t) != self.order:
                raise InputError(
                    f"support tuple {t} has arity {len(t)}, expected {self.order}"
                )
            if any(j < 1 or j > self.dims for j in t):
                raise InputError(f"support tuple {t} has an index outside 1..{self.dims}")
            seen.add(t)
        if not seen:
            raise InputError("tensor support must be nonempty")
        object.__setattr__(self, "tuples", frozenset(seen))

    @property
    def sorted_tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.tuples))


@dataclass(frozen=True)
class SymmetricSupport:
    """Support of a degree-d form in n variables: exponent vectors summing to d."""

    degree: int
    nvars: int
    exponents: frozenset[tuple[int, ...]]

    def __post_init__(self):
        if self.degree < 1 or self.nvars < 1:
            raise InputError("symmetric support needs degree >= 1 and nvars >= 1")
        seen = set()
        for raw in self.exponents:
            m = _int_tuple(raw, "exponent vector")
            if len(m) != self.nvars:
                raise InputError(
                    f"exponent vector {m} has arity {len(m)}, expected {self.nvars}"
                )
            if any(e < 0 for e in m):
                raise InputError(f"exponent vector {m} has a negative entry")
            if sum(m) != self.degree:
                raise InputError(
                    f"exponent vector {m} sums to {sum(m)}, expected degree {self.degree}"
                )
            seen.add(m)
        if not seen:
            raise InputError("symmetric support must be nonempty")
        object.__setattr__(self, "exponents", frozenset(seen))

    @property
    def sorted_exponents(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.exponents))


def _checked_weights(support: TensorSupport, weights) -> tuple[tuple[int, ...], ...]:
    rows = tuple(_int_tuple(w, "weight vector") for w in weights)
    if len(rows) != support.order:
        raise InputError(
            f"weight assignment has {len(rows)} vectors, expected {support.order}"
        )
    for row in rows:
        if len(row) != support.dims:
            raise InputError(
                f"weight vector {row} has arity {len(row)}, expected {support.dims}"
            )
        if any(e < 0 for e in row):
            raise InputError(f"weight vector {row} has a negative entry")
    return rows


def torus_valuation(support: TensorSupport, weights) -> int:
    """min over support tuples of sum_i weights[i][j_i] for a diagonal subgroup."""
    rows = _checked_weights(support, weights)
    return min(
        sum(rows[i][j - 1] for i, j in enumerate(t)) for t in support.sorted_tuples
    )


def _support_rows(support: TensorSupport) -> list[tuple[int, ...]]:
    n, d = support.dims, support.order
    rows = []
    for t in support.sorted_tuples:
        row = [0] * (n * d)
        for i, j in enumerate(t):
            row[i * n + (j - 1)] = 1
        rows.append(tuple(row))
    return rows


def torus_rank(support: TensorSupport, alpha: Sequence | None = None) -> SlopeResult:
    """Stable rank of the tensor restricted to the diagonal torus.

    Upper bound on rk^G; exact for torus-optimal tensors. With weights
    alpha = (a_1, ..., a_d) the slope of a weight assignment lam is
    (sum_i a_i * sum_j lam_i[j]) / (min over tuples of sum_i lam_i[j_i]),
    and the infimum over integer assignments is attained by the exact LP
    minimum. The default alpha is all ones; entries must be positive.
    """
    n, d = support.dims, support.order
    if alpha is None:
        avec = (Fraction(1),) * d
    else:
        entries = []
        for a in alpha:
            if isinstance(a, float):
                raise InputError("alpha: floating point is not exact, pass Fraction")
            try:
                entries.append(Fraction(a))
            except (TypeError, ValueError) as exc:
                raise InputError(f"alpha: not a rational value: {a!r}") from exc
        avec = tuple(entries)
        if len(avec) != d:
            raise InputError(f"alpha has {len(avec)} entries, expected {d}")
        if any(a <= 0 for a in avec):
            raise InputError("alpha entries must be positive")
    cost = [avec[i] for i in range(d) for _ in range(n)]
    return minimize_slope(cost, _support_rows(support))


def symm_torus_rank(support: SymmetricSupport) -> SlopeResult:
    """Symmetric stable rank at the diagonal torus: inf over single integer
    weight vectors lam >= 0 of d * sum(lam) / min_m <m, lam>.

    Upper bound on the symmetric rk^G; exact for torus-optimal forms. Equals
    the multilinear torus rank of `expand_symmetric(support)` with unit
    alpha (tested as an invariant, both directions of the slope comparison
    going through `combine_one_ps`).
    """
    d = support.degree
    cost = [Fraction(d)] * support.nvars
    return minimize_slope(cost, support.sorted_exponents)


def expand_symmetric(support: SymmetricSupport) -> TensorSupport:
    """Support of the form viewed as a symmetric tensor: every arrangement
    (each exponent vector's full permutation orbit of index tuples)."""
    tuples = set()
    for m in support.sorted_exponents:
        base = []
        for j, e in enumerate(m, start=1):
            base.extend([j] * e)
        tuples.update(itertools.permutations(base))
    return TensorSupport(order=support.degree, dims=support.nvars, tuples=tuples)


def combine_one_ps(weights) -> tuple[int, ...]:
    """Collapse a weight assignment to the single vector gamma_j = sum_i lam_i[j].

    For a degree-d symmetric support, gamma pairs with every exponent vector
    at least d times the valuation of lam on the expanded support (summing
    the arrangement over the d cyclic shifts covers each factor once).
    """
    rows = tuple(_int_tuple(w, "weight vector") for w in weights)
    if not rows:
        raise InputError("weight assignment must contain at least one vector")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise InputError("weight vectors have inconsistent arity")
    return tuple(sum(r[j] for r in rows) for j in range(width))


def is_torus_semistable(support: TensorSupport) -> bool:
    """True when no traceless integer weight assignment has valuation >= 1
    on every support row (torus semistability for the product of SL(n)'s).

    The search allows entries of either sign, encoded as lam = p - q with
    p, q >= 0; rational feasibility suffices because denominators clear.
    """
    n, d = support.dims, support.order
    nv = n * d
    rows = []
    for t in support.sorted_tuples:
        row = [Fraction(0)] * (2 * nv)
        for i, j in enumerate(t):
            row[i * n + (j - 1)] += Fraction(1)
            row[nv + i * n + (j - 1)] -= Fraction(1)
        rows.append(row)
    eq_rows = []
    for i in range(d):
        row = [Fraction(0)] * (2 * nv)
        for j in range(n):
            row[i * n + j] = Fraction(1)
            row[nv + i * n + j] = Fraction(-1)
        eq_rows.append(row)
    feasible, _ = lp_feasible(
        rows, [Fraction(1)] * len(rows), eq_rows, [Fraction(0)] * d
    )
    return not feasible


def is_symm_torus_semistable(support: SymmetricSupport) -> bool:
    """True when no traceless integer weight vector pairs >= 1 with every
    exponent vector of the support (degenerate n = 1 forms are semistable:
    the only traceless vector is zero)."""
    n = support.nvars
    rows = []
    for m in support.sorted_exponents:
        row = [Fraction(e) for e in m] + [Fraction(-e) for e in m]
        rows.append(row)
    eq = [[Fraction(1)] * n + [Fraction(-1)] * n]
    feasible, _ = lp_feasible(rows, [Fraction(1)] * len(rows), eq, [Fraction(0)])
    return not feasible
