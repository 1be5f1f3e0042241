"""T-stable ranks of polynomial ideals at the origin and monomial-ideal lct.

The T-stable rank of an ideal is the infimum over nonzero integer weight
vectors lam >= 0 of sum(lam) / ord_lam(ideal), where ord_lam takes the
minimum weighted degree over the support of the generators. That is exactly
the fractional program `stablerank.exactlp.minimize_slope` solves, with one
row per distinct exponent vector. A generator with a nonzero constant term
puts the zero row in the program and the rank is +infinity (the origin is
not in the zero locus).

Ranks computed in a fixed coordinate system bound the coordinate-free rank
from above; `apply_linear_change` re-expresses generators in another linear
system of parameters so callers can minimize over several systems. For
monomial ideals the standard coordinates are already optimal and the rank
coincides with the log canonical threshold at the origin; `lct_monomial`
computes it through the rank program while `newton_threshold` and
`newton_membership` provide the independent Newton-polyhedron route (the
largest nu with (1,...,1) in nu times the polyhedron), used by the
verification suites as a cross-check.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InputError
from .exactlp import SlopeResult, lp_feasible, lp_minimize, LinearProgram, minimize_slope

__all__ = [
    "SparsePolynomial",
    "PolyIdeal",
    "MonomialIdeal",
    "LinearChange",
    "weighted_order",
    "ideal_order",
    "t_stable_rank",
    "apply_linear_change",
    "lct_monomial",
    "newton_membership",
    "newton_threshold",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
]


def _coefficient(value, what: str) -> Fraction:
    if isinstance(value, float):
        raise InputError(f"{what}: floating point is not exact, pass int or Fraction")
    try:
        return Fraction(value)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{what}: not a rational value: {value!r}") from exc


def _exponent_tuple(values, nvars: int) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, Fraction) and v.denominator == 1:
            v = v.numerator
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise InputError(f"exponents must be nonnegative integers, got {v!r}")
        out.append(v)
    if len(out) != nvars:
        raise InputError(f"exponent vector {tuple(out)} has arity {len(out)}, expected {nvars}")
    return tuple(out)


def _weight_vector(values, nvars: int) -> tuple:
    vec = tuple(values)
    if len(vec) != nvars:
        raise InputError(f"weight vector has arity {len(vec)}, expected {nvars}")
    checked = []
    for v in vec:
        w = _coefficient(v, "weight entry")
        if w < 0:
            raise InputError(f"weight entries must be nonnegative, got {v!r}")
        checked.append(w.numerator if w.denominator == 1 else w)
    return tuple(checked)


class SparsePolynomial:
    """Polynomial stored as {exponent tuple: nonzero rational coefficient}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object]):
        if nvars < 1:
            raise InputError("a polynomial needs at least one variable")
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in terms.items():
            key = _exponent_tuple(exps, nvars)
            value = _coefficient(coeff, "coefficient")
            if value:
                clean[key] = clean.get(key, Fraction(0)) + value
                if not clean[key]:
                    del clean[key]
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, value) -> "SparsePolynomial":
        return cls(nvars, {(0,) * nvars: value})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items())

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if self.nvars != other.nvars:
            raise InputError("cannot add polynomials in different variable counts")
        acc = dict(self.terms)
        for exps, coeff in other.terms.items():
            total = acc.get(exps, Fraction(0)) + coeff
            if total:
                acc[exps] = total
            else:
                acc.pop(exps, None)
        return SparsePolynomial(self.nvars, acc)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if self.nvars != other.nvars:
            raise InputError("cannot multiply polynomials in different variable counts")
        acc: dict[tuple[int, ...], Fraction] = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                key = tuple(a + b for a, b in zip(u, v))
                total = acc.get(key, Fraction(0)) + cu * cv
                if total:
                    acc[key] = total
                else:
                    acc.pop(key, None)
        return SparsePolynomial(self.nvars, acc)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparsePolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if self.is_zero:
            return f"SparsePolynomial({self.nvars}, 0)"
        body = " + ".join(f"{c}*x^{e}" for e, c in self.sorted_terms())
        return f"SparsePolynomial({self.nvars}, {body})"


class PolyIdeal:
    """Ideal given by polynomial generators; at least one must be nonzero."""

    __slots__ = ("nvars", "generators")

    def __init__(self, nvars: int, generators: Iterable[SparsePolynomial]):
        gens = tuple(generators)
        if not gens:
            raise InputError("an ideal needs at least one generator")
        for g in gens:
            if not isinstance(g, SparsePolynomial):
                raise InputError("polynomial ideal generators must be SparsePolynomial")
            if g.nvars != nvars:
                raise InputError("generators live in different variable counts")
        if all(g.is_zero for g in gens):
            raise InputError("the zero ideal has no stable rank")
        self.nvars = nvars
        self.generators = gens

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyIdeal)
            and self.nvars == other.nvars
            and self.generators == other.generators
        )

    def __repr__(self) -> str:
        return f"PolyIdeal({self.nvars}, {list(self.generators)!r})"


class MonomialIdeal:
    """Monomial ideal, generators kept minimal under divisibility."""

    __slots__ = ("nvars", "generators")

    def __init__(self, nvars: int, generators: Iterable[Sequence[int]]):
        if nvars < 1:
            raise InputError("a monomial ideal needs at least one variable")
        raw = sorted({_exponent_tuple(g, nvars) for g in generators})
        if not raw:
            raise InputError("a monomial ideal needs at least one generator")
        minimal = [
            g
            for g in raw
            if not any(h != g and all(a <= b for a, b in zip(h, g)) for h in raw)
        ]
        self.nvars = nvars
        self.generators = tuple(minimal)

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.nvars,)

    def to_poly_ideal(self) -> PolyIdeal:
        return PolyIdeal(
            self.nvars,
            [SparsePolynomial(self.nvars, {g: Fraction(1)}) for g in self.generators],
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.nvars == other.nvars
            and self.generators == other.generators
        )

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.nvars}, {list(self.generators)!r})"


class LinearChange:
    """Invertible rational matrix M encoding x_i -> sum_j M[j][i] * y_j."""

    __slots__ = ("nvars", "matrix")

    def __init__(self, matrix: Iterable[Iterable]):
        rows = [tuple(_coefficient(v, "matrix entry") for v in row) for row in matrix]
        n = len(rows)
        if n < 1 or any(len(r) != n for r in rows):
            raise InputError("a linear change needs a square matrix")
        self.nvars = n
        self.matrix = tuple(rows)
        self._invert()  # singular matrices are rejected up front

    def _invert(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.nvars
        aug = [list(self.matrix[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((i for i in range(col, n) if aug[i][col] != 0), -1)
            if pivot < 0:
                raise InputError("linear change matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            prow = aug[col]
            piv = prow[col]
            if piv != 1:
                aug[col] = prow = [v / piv for v in prow]
            for i in range(n):
                if i != col and aug[i][col]:
                    f = aug[i][col]
                    aug[i] = [a - f * b for a, b in zip(aug[i], prow)]
        return tuple(tuple(row[n:]) for row in aug)

    def inverse(self) -> "LinearChange":
        return LinearChange(self._invert())

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearChange) and self.matrix == other.matrix

    def __repr__(self) -> str:
        return f"LinearChange({[list(r) for r in self.matrix]!r})"


def weighted_order(f: SparsePolynomial, lam) -> object:
    """min over the support of <exponent, lam>; +infinity for the zero polynomial."""
    weights = _weight_vector(lam, f.nvars)
    if f.is_zero:
        return math.inf
    return min(sum(e * w for e, w in zip(exps, weights)) for exps in f.terms)


def ideal_order(ideal, lam) -> object:
    """Minimum weighted order over the generators."""
    if isinstance(ideal, MonomialIdeal):
        weights = _weight_vector(lam, ideal.nvars)
        return min(
            sum(e * w for e, w in zip(g, weights)) for g in ideal.generators
        )
    if isinstance(ideal, PolyIdeal):
        return min(weighted_order(g, lam) for g in ideal.generators)
    raise InputError(f"not an ideal: {ideal!r}")


def _support_rows(ideal) -> list[tuple[int, ...]]:
    if isinstance(ideal, MonomialIdeal):
        return list(ideal.generators)
    if isinstance(ideal, PolyIdeal):
        return sorted({exps for g in ideal.generators for exps in g.terms})
    raise InputError(f"not an ideal: {ideal!r}")


def t_stable_rank(ideal) -> SlopeResult:
    """Stable rank of the ideal at the origin for the standard coordinates.

    Upper bound on the rank over all linear systems of parameters (exact for
    monomial ideals, where it equals the log canonical threshold). The value
    is +infinity exactly when some generator has a nonzero constant term.
    """
    rows = _support_rows(ideal)
    n = rows and len(rows[0]) or 1
    return minimize_slope([Fraction(1)] * n, rows)


def apply_linear_change(f: SparsePolynomial, change: LinearChange) -> SparsePolynomial:
    """Exact substitution x_i -> sum_j M[j][i] * y_j, fully expanded.

    Satisfies the composition law apply(f, M @ N) = apply(apply(f, N), M)
    and round-trips with `change.inverse()`.
    """
    n = f.nvars
    if change.nvars != n:
        raise InputError(
            f"linear change acts on {change.nvars} variables, polynomial has {n}"
        )
    forms = []
    for i in range(n):
        coeffs = {}
        for j in range(n):
            if change.matrix[j][i]:
                unit = tuple(1 if k == j else 0 for k in range(n))
                coeffs[unit] = change.matrix[j][i]
        forms.append(SparsePolynomial(n, coeffs))
    powers: dict[tuple[int, int], SparsePolynomial] = {}

    def form_power(i: int, e: int) -> SparsePolynomial:
        if e == 0:
            return SparsePolynomial.constant(n, 1)
        key = (i, e)
        if key not in powers:
            powers[key] = form_power(i, e - 1) * forms[i]
        return powers[key]

    result = SparsePolynomial(n, {})
    for exps, coeff in f.sorted_terms():
        part = SparsePolynomial.constant(n, coeff)
        for i, e in enumerate(exps):
            if e:
                part = part * form_power(i, e)
        result = result + part
    return result


def lct_monomial(ideal: MonomialIdeal) -> Fraction:
    """Log canonical threshold of a monomial ideal at the origin.

    Equals the T-stable rank in the standard coordinates; the Newton
    polyhedron route (`newton_threshold`) computes the same number by an
    independent feasibility argument.
    """
    if not isinstance(ideal, MonomialIdeal):
        raise InputError("lct_monomial expects a monomial ideal")
    if ideal.is_unit:
        raise InputError("lct undefined: the origin is not in the zero locus (unit ideal)")
    value = t_stable_rank(ideal).value
    if value == math.inf:
        raise InputError("lct undefined: the origin is not in the zero locus")
    return value


def newton_membership(ideal: MonomialIdeal, nu) -> bool:
    """Is (1,...,1) in nu times the Newton polyhedron of the ideal?

    The polyhedron is the convex hull of the generator exponents plus the
    nonnegative orthant, so membership asks for convex multipliers theta
    with sum(theta) = 1 and sum theta_i * l_i <= (1/nu, ..., 1/nu)
    componentwise; the slack makes it an exact feasibility program.
    """
    scale = _coefficient(nu, "nu")
    if scale <= 0:
        raise InputError("nu must be positive")
    gens = ideal.generators
    r, n = len(gens), ideal.nvars
    bound = Fraction(1) / scale
    eq_rows = []
    eq_rhs = []
    for j in range(n):
        row = [Fraction(gens[i][j]) for i in range(r)] + [
            Fraction(1) if k == j else Fraction(0) for k in range(n)
        ]
        eq_rows.append(row)
        eq_rhs.append(bound)
    eq_rows.append([Fraction(1)] * r + [Fraction(0)] * n)
    eq_rhs.append(Fraction(1))
    feasible, _ = lp_feasible([], [], eq_rows, eq_rhs)
    return feasible


def newton_threshold(ideal: MonomialIdeal) -> Fraction:
    """Largest nu with (1,...,1) in nu times the Newton polyhedron.

    Minimizes t = 1/nu subject to sum theta_i * l_i <= t * (1,...,1) over
    convex multipliers theta; a single exact LP solve.
    """
    if ideal.is_unit:
        raise InputError("threshold undefined for the unit ideal")
    gens = ideal.generators
    r, n = len(gens), ideal.nvars
    rows = []
    for j in range(n):
        rows.append([-Fraction(gens[i][j]) for i in range(r)] + [Fraction(1)])
    program = LinearProgram(
        objective=[Fraction(0)] * r + [Fraction(1)],
        constraint_rows=rows,
        rhs=[Fraction(0)] * n,
        equality_rows=[[Fraction(1)] * r + [Fraction(0)]],
        equality_rhs=[Fraction(1)],
    )
    out = lp_minimize(program)
    if out.status != "optimal" or out.value <= 0:
        raise RuntimeError(f"threshold program should be solvable, got {out.status}")
    return Fraction(1) / out.value


def _power_check(exponent) -> int:
    if isinstance(exponent, bool) or not isinstance(exponent, int) or exponent < 1:
        raise InputError(f"ideal power expects an integer exponent >= 1, got {exponent!r}")
    return exponent


def ideal_power(ideal, exponent: int):
    """All products of `exponent` generators (with repetition)."""
    r = _power_check(exponent)
    if isinstance(ideal, MonomialIdeal):
        gens = [
            tuple(sum(es) for es in zip(*combo))
            for combo in itertools.combinations_with_replacement(ideal.generators, r)
        ]
        return MonomialIdeal(ideal.nvars, gens)
    if isinstance(ideal, PolyIdeal):
        gens = []
        for combo in itertools.combinations_with_replacement(ideal.generators, r):
            prod = SparsePolynomial.constant(ideal.nvars, 1)
            for g in combo:
                prod = prod * g
            gens.append(prod)
        return PolyIdeal(ideal.nvars, gens)
    raise InputError(f"not an ideal: {ideal!r}")


def ideal_product(a, b):
    """Ideal generated by pairwise products of the generators."""
    if a.nvars != b.nvars:
        raise InputError("ideal product needs matching variable counts")
    if isinstance(a, MonomialIdeal) and isinstance(b, MonomialIdeal):
        gens = [
            tuple(x + y for x, y in zip(g, h))
            for g in a.generators
            for h in b.generators
        ]
        return MonomialIdeal(a.nvars, gens)
    pa = a.to_poly_ideal() if isinstance(a, MonomialIdeal) else a
    pb = b.to_poly_ideal() if isinstance(b, MonomialIdeal) else b
    if not isinstance(pa, PolyIdeal) or not isinstance(pb, PolyIdeal):
        raise InputError("ideal product expects ideals")
    gens = [g * h for g in pa.generators for h in pb.generators]
    return PolyIdeal(a.nvars, gens)


def ideal_sum(a, b):
    """Ideal generated by the union of the generators."""
    if a.nvars != b.nvars:
        raise InputError("ideal sum needs matching variable counts")
    if isinstance(a, MonomialIdeal) and isinstance(b, MonomialIdeal):
        return MonomialIdeal(a.nvars, a.generators + b.generators)
    pa = a.to_poly_ideal() if isinstance(a, MonomialIdeal) else a
    pb = b.to_poly_ideal() if isinstance(b, MonomialIdeal) else b
    if not isinstance(pa, PolyIdeal) or not isinstance(pb, PolyIdeal):
        raise InputError("ideal sum expects ideals")
    return PolyIdeal(a.nvars, pa.generators + pb.generators)
