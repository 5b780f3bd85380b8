"""Exact multivariate polynomials, relation discovery, and resultants.

Two polynomial types:

* :class:`MultiPoly` — polynomials with rational coefficients in a fixed
  tuple of named variables, enough arithmetic for verification work
  (ring operations, exact division, Sylvester resultants),
* :class:`BivarPoly` — the output of :func:`find_relation`: a monic
  bivariate relation X^n - Y^m + sum C_{a,b} X^a Y^b between two series
  with poles of coprime orders m and n at infinity, all monomials
  satisfying a*m + b*n <= m*n.

Linear systems are solved by exact Gaussian elimination; pivots are
chosen by smallest numerator-plus-denominator bit length to keep the
intermediate rationals modest.  Resultants use fraction-free
Bareiss elimination over the polynomial ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import ExactDivisionError, PrecisionError
from .series import QSeries

__all__ = [
    "BivarPoly",
    "MultiPoly",
    "eval_poly",
    "find_relation",
    "poly_arithmetic",
    "resultant_eliminate",
    "vanishing_factor",
    "variables",
]


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected a rational coefficient, got {type(x).__name__}")


class MultiPoly:
    """A polynomial over Q in a fixed tuple of named variables.

    ``coeffs`` maps exponent tuples (aligned with ``variables``) to nonzero
    Fractions.  Monomial order for leading terms and display is descending
    lexicographic on the exponent tuple.
    """

    __slots__ = ("variables", "coeffs")

    def __init__(self, variables: Sequence[str], coeffs: Mapping[tuple, object] = ()):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate variable names")
        clean: dict[tuple[int, ...], Fraction] = {}
        for mono, c in dict(coeffs).items():
            key = tuple(int(e) for e in mono)
            if len(key) != len(vs):
                raise ValueError(f"monomial {mono} does not match variables {vs}")
            if any(e < 0 for e in key):
                raise ValueError("negative exponent in monomial")
            c = _rat(c)
            if c:
                clean[key] = clean.get(key, Fraction(0)) + c
                if not clean[key]:
                    del clean[key]
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "coeffs", clean)

    # -- basic structure ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self, var: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = self.variables.index(var)
        if not self.coeffs:
            return -1
        return max(m[i] for m in self.coeffs)

    def total_degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(sum(m) for m in self.coeffs)

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        """Leading (monomial, coefficient) in descending lex order."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.coeffs)
        return m, self.coeffs[m]

    def constant_term(self) -> Fraction:
        return self.coeffs.get((0,) * len(self.variables), Fraction(0))

    def with_variables(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-express over a superset (or reordering) of the variables."""
        vs = tuple(variables)
        idx = []
        for v in self.variables:
            if v not in vs:
                raise ValueError(f"variable {v} missing from {vs}")
            idx.append(vs.index(v))
        out: dict[tuple[int, ...], Fraction] = {}
        for mono, c in self.coeffs.items():
            key = [0] * len(vs)
            for pos, e in zip(idx, mono):
                key[pos] = e
            out[tuple(key)] = c
        return MultiPoly(vs, out)

    def _aligned(self, other: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        if self.variables == other.variables:
            return self, other
        union = tuple(sorted(set(self.variables) | set(other.variables)))
        return self.with_variables(union), other.with_variables(union)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly(self.variables, {(0,) * len(self.variables): other})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        out = dict(a.coeffs)
        for m, c in b.coeffs.items():
            out[m] = out.get(m, Fraction(0)) + c
        return MultiPoly(a.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiPoly) else -_rat(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _rat(other)
            return MultiPoly(self.variables, {m: c * v for m, v in self.coeffs.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for m1, c1 in a.coeffs.items():
            for m2, c2 in b.coeffs.items():
                key = tuple(x + y for x, y in zip(m1, m2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(a.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly(self.variables, {(0,) * len(self.variables): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly(self.variables, {(0,) * len(self.variables): other})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.variables, frozenset(self.coeffs.items())))

    # -- content ----------------------------------------------------------

    def scalar_content(self) -> Fraction:
        """Positive rational c with self/c integer, coprime, positive-leading."""
        if not self.coeffs:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.coeffs.values():
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        content = Fraction(num, den)
        if self.leading()[1] < 0:
            content = -content
        return content

    def monomial_content(self) -> tuple[int, ...]:
        """Componentwise minimum exponent over all monomials."""
        if not self.coeffs:
            return (0,) * len(self.variables)
        mins = None
        for m in self.coeffs:
            mins = m if mins is None else tuple(map(min, mins, m))
        return mins

    def strip_content(self) -> tuple["MultiPoly", Fraction, tuple[int, ...]]:
        """Factor out scalar and monomial content; returns (primitive, scalar, monomial)."""
        mono = self.monomial_content()
        shifted = MultiPoly(
            self.variables,
            {tuple(e - d for e, d in zip(m, mono)): c for m, c in self.coeffs.items()},
        )
        scal = shifted.scalar_content()
        prim = MultiPoly(
            self.variables, {m: c / scal for m, c in shifted.coeffs.items()}
        )
        return prim, scal, mono

    # -- display -----------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for mono in sorted(self.coeffs, reverse=True):
            c = self.coeffs[mono]
            factors = []
            for name, e in zip(self.variables, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag}*{body}"
            if not parts:
                parts.append(piece if c > 0 else f"-{piece}")
            else:
                parts.append(f"+ {piece}" if c > 0 else f"- {piece}")
        return " ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.variables!r}, {len(self.coeffs)} terms)"


def variables(*names: str) -> tuple[MultiPoly, ...]:
    """Generator polynomials, one per name, over the union of the names."""
    vs = tuple(names)
    out = []
    for i, _ in enumerate(vs):
        mono = tuple(1 if j == i else 0 for j in range(len(vs)))
        out.append(MultiPoly(vs, {mono: 1}))
    return tuple(out)


@dataclass(frozen=True)
class BivarPoly:
    """A monic relation X^n - Y^m + sum C_{a,b} X^a Y^b with am + bn <= mn.

    ``m`` and ``n`` are the pole orders at infinity of the two series the
    relation was fitted to; ``coeffs`` maps (a, b) to the coefficient of
    X^a Y^b and includes the fixed monomials (n, 0) -> 1 and (0, m) -> -1.
    """

    coeffs: Mapping[tuple[int, int], Fraction]
    m: int
    n: int

    def __post_init__(self):
        object.__setattr__(
            self,
            "coeffs",
            {k: _rat(c) for k, c in dict(self.coeffs).items() if c},
        )

    def as_multipoly(self, names: tuple[str, str] = ("X", "Y")) -> MultiPoly:
        return MultiPoly(names, dict(self.coeffs))

    def __str__(self):
        return str(self.as_multipoly())

    def __eq__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and (self.m, self.n) == (other.m, other.n)


# ---------------------------------------------------------------- evaluation


def eval_poly(poly, assignment: Mapping[str, object]):
    """Evaluate a polynomial at series (or rational) values, exactly.

    Every variable of the polynomial must be assigned.  Powers of each
    value are computed once and reused.
    """
    if isinstance(poly, BivarPoly):
        poly = poly.as_multipoly()
    for i, name in enumerate(poly.variables):
        if name not in assignment and any(m[i] for m in poly.coeffs):
            raise ValueError(f"unassigned variable {name}")
    if not poly.coeffs:
        return Fraction(0)
    powers: list[dict[int, object]] = []
    for i, name in enumerate(poly.variables):
        needed = {m[i] for m in poly.coeffs}
        table: dict[int, object] = {0: Fraction(1)}
        for e in sorted(needed - {0}):
            table[e] = assignment[name] ** e
        powers.append(table)
    total = None
    for mono, c in poly.coeffs.items():
        term = c
        for i, e in enumerate(mono):
            if e:
                term = powers[i][e] * term
        total = term if total is None else total + term
    return total


def _value_is_zero(val) -> bool:
    if isinstance(val, QSeries):
        return val.is_zero()
    return val == 0


# ---------------------------------------------------------------- arithmetic


def exact_divide(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Quotient p/q when the division is exact.

    Raises ExactDivisionError carrying the remainder's leading monomial
    when q does not divide p.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p, q = p._aligned(q)
    quot = MultiPoly(p.variables, {})
    rem = p
    lm_q, lc_q = q.leading()
    while not rem.is_zero():
        lm_r, lc_r = rem.leading()
        diff = tuple(a - b for a, b in zip(lm_r, lm_q))
        if any(d < 0 for d in diff):
            lead_str = str(MultiPoly(rem.variables, {lm_r: 1}))
            raise ExactDivisionError(
                f"not an exact division: remainder has leading monomial {lead_str}"
            )
        t = MultiPoly(p.variables, {diff: lc_r / lc_q})
        quot = quot + t
        rem = rem - t * q
    return quot


def poly_arithmetic(p: MultiPoly, q: MultiPoly, operator: str) -> MultiPoly:
    """Dispatch for the three exact polynomial operations."""
    if operator == "add":
        return p + q
    if operator == "multiply":
        return p * q
    if operator == "exact_divide":
        return exact_divide(p, q)
    raise ValueError(f"unknown operator {operator!r}")


# ---------------------------------------------------------------- resultants


def resultant_eliminate(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant of p and q with respect to one variable.

    The determinant is computed by fraction-free Bareiss elimination over
    the polynomial ring in the remaining variables, so it vanishes at
    every specialization where p and q share a root in ``var``.
    """
    p, q = p._aligned(q)
    if var not in p.variables:
        raise ValueError(f"unknown variable {var}")
    dp, dq = p.degree(var), q.degree(var)
    if dp < 1 or dq < 1:
        raise ValueError(f"resultant requires positive degree in {var}")
    rest = tuple(v for v in p.variables if v != var)
    if not rest:
        rest = ("1",)  # degenerate: constants only; keep a dummy axis
    idx = p.variables.index(var)

    def coeff_rows(poly: MultiPoly, deg: int) -> list[MultiPoly]:
        rows = [dict() for _ in range(deg + 1)]
        for mono, c in poly.coeffs.items():
            rest_mono = tuple(e for i, e in enumerate(mono) if i != idx)
            if len(rest_mono) == 0:
                rest_mono = (0,)
            rows[mono[idx]][rest_mono] = c
        return [MultiPoly(rest, r) for r in rows]

    pc = coeff_rows(p, dp)
    qc = coeff_rows(q, dq)
    size = dp + dq
    zero = MultiPoly(rest, {})
    mat: list[list[MultiPoly]] = []
    for r in range(dq):
        row = [zero] * size
        for k in range(dp + 1):
            row[r + k] = pc[dp - k]
        mat.append(row)
    for r in range(dp):
        row = [zero] * size
        for k in range(dq + 1):
            row[r + k] = qc[dq - k]
        mat.append(row)

    sign = 1
    prev = MultiPoly(rest, {(0,) * len(rest): 1})
    for k in range(size - 1):
        if mat[k][k].is_zero():
            swap = next(
                (i for i in range(k + 1, size) if not mat[i][k].is_zero()), None
            )
            if swap is None:
                return MultiPoly(rest, {})
            mat[k], mat[swap] = mat[swap], mat[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]
                mat[i][j] = exact_divide(num, prev)
            mat[i][k] = zero
        prev = mat[k][k]
    det = mat[size - 1][size - 1]
    if sign < 0:
        det = -det
    if det.variables == ("1",):
        det = MultiPoly((), {(): c for (_,), c in det.coeffs.items()})
    return det


def vanishing_factor(factors: Sequence[MultiPoly], assignment) -> int:
    """Index of the unique factor that vanishes at the series assignment.

    Every other factor must evaluate to a series with nonzero leading
    coefficient; otherwise the factorization is inconsistent with the
    series data.
    """
    zero_at = [i for i, f in enumerate(factors) if _value_is_zero(eval_poly(f, assignment))]
    if len(zero_at) != 1:
        raise ValueError("factorization inconsistent with series")
    return zero_at[0]


# ---------------------------------------------------------------- relations


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Exact Gaussian elimination; returns (solution, None) or (None, reason).

    reason is "underdetermined" or "inconsistent".  Pivots minimize the
    bit length of numerator plus denominator.
    """
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(ncols):
        cand = [i for i in range(r, len(m)) if m[i][col]]
        if not cand:
            continue
        best = min(
            cand,
            key=lambda i: m[i][col].numerator.bit_length()
            + m[i][col].denominator.bit_length(),
        )
        m[r], m[best] = m[best], m[r]
        pv = m[r][col]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append((r, col))
        r += 1
        if r == len(m):
            break
    for i in range(r, len(m)):
        if m[i][ncols]:
            return None, "inconsistent"
    if len(pivots) < ncols:
        return None, "underdetermined"
    sol = [Fraction(0)] * ncols
    for row, col in pivots:
        sol[col] = m[row][ncols] / m[row][col]
    return sol, None


def find_relation(x: QSeries, y: QSeries) -> BivarPoly:
    """The monic bivariate relation between two series with poles at infinity.

    With m, n the (coprime) pole orders of x and y, solves for the
    coefficients of F(X, Y) = X^n - Y^m + sum_{am+bn <= mn} C_{a,b} X^a Y^b
    such that F(x, y) = 0, then re-checks the residual through the full
    common truncation.
    """
    for s, label in ((x, "x"), (y, "y")):
        if s.D != 1:
            raise ValueError(f"{label} must have integer exponents")
        if s.is_zero() or s.valuation() >= 0:
            raise ValueError(f"{label} must have a pole at infinity")
        if s.leading_coefficient() != 1:
            raise ValueError(f"{label} must have leading coefficient 1")
    m, n = -x.valuation(), -y.valuation()
    m, n = int(m), int(n)
    if math.gcd(m, n) != 1:
        raise ValueError(f"pole orders {m} and {n} are not coprime")

    bound = [
        (a, b)
        for a in range(n + 1)
        for b in range(m + 1)
        if a * m + b * n <= m * n
    ]
    unknowns = [ab for ab in bound if ab not in ((n, 0), (0, m))]

    xs: dict[int, QSeries] = {0: QSeries.constant(1)}
    for a in range(1, n + 1):
        xs[a] = xs[a - 1] * x
    ys: dict[int, QSeries] = {0: QSeries.constant(1)}
    for b in range(1, m + 1):
        ys[b] = ys[b - 1] * y
    monos = {(a, b): xs[a] * ys[b] for (a, b) in bound}

    t_min = None
    for s in monos.values():
        te = s.truncation_exponent()
        if te is not None:
            te_int = math.floor(te)
            t_min = te_int if t_min is None else min(t_min, te_int)
    if t_min is None:
        # all inputs exact: take one past the largest stored exponent
        t_min = 1 + max(
            (int(e) for s in monos.values() for e, _ in s.items()), default=0
        )

    n_eq = t_min + m * n
    if n_eq < len(unknowns):
        need = len(unknowns) - m * n
        raise PrecisionError(
            f"insufficient truncation: need expansions through q^{need} "
            f"(have q^{t_min})"
        )

    def coeff_of(s: QSeries, e: int) -> Fraction:
        te = s.truncation_exponent()
        if te is not None and Fraction(e) >= te:
            return Fraction(0)
        return s.coefficient(e)

    fixed = monos[(n, 0)] - monos[(0, m)]
    rows, rhs = [], []
    for e in range(-m * n, t_min):
        rows.append([coeff_of(monos[ab], e) for ab in unknowns])
        rhs.append(-coeff_of(fixed, e))
    sol, reason = _solve_exact(rows, rhs)
    if reason == "inconsistent":
        raise ValueError("no relation at this degree bound")
    if reason == "underdetermined":
        raise PrecisionError(
            f"insufficient truncation: the system is still underdetermined at "
            f"q^{t_min}; increase the expansion order"
        )

    coeffs: dict[tuple[int, int], Fraction] = {(n, 0): Fraction(1), (0, m): Fraction(-1)}
    for ab, c in zip(unknowns, sol):
        if c:
            coeffs[ab] = c

    residual = None
    for ab, c in coeffs.items():
        term = c * monos[ab]
        residual = term if residual is None else residual + term
    if not residual.is_zero():
        raise ValueError("no relation at this degree bound")
    return BivarPoly(coeffs, m=m, n=n)
