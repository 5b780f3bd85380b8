"""Exact truncated Laurent series in rational powers of q.

A :class:`QSeries` stores a finite window of exact rational coefficients of

    f(q) = sum_j  c_j * q^(j/D)

with integer indices ``j`` on the grid ``1/D``, together with an optional
truncation index ``T``.  ``T = None`` marks an *exact* Laurent polynomial:
every coefficient outside the stored window is exactly zero.  A finite ``T``
means the coefficients of ``q^(j/D)`` for ``j >= T`` are unknown; everything
below is stored or exactly zero.  All arithmetic propagates truncation
honestly, so a coefficient is only ever reported when it is actually known.

Series are normalised on construction: zero coefficients are stripped from
both ends of the window, stored coefficients at or past ``T`` are discarded,
and the grid is compressed by the gcd of the support (the compression divisor
is also required to divide ``T``, so no knowledge is silently lost).  Two
series that print the same are equal regardless of the grid they were built
on.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import PrecisionError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _rat(x) -> Fraction:
    """Coerce to Fraction, refusing floats (exactness is the whole point)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _ceil_div(n: int, d: int) -> int:
    return -((-n) // d)


class QSeries:
    """One truncated Laurent series in q^(1/D) with Fraction coefficients.

    ``coeffs[k]`` is the coefficient of ``q^((v+k)/D)``.  Instances are
    immutable; all operations return new series.
    """

    __slots__ = ("D", "v", "coeffs", "T")

    def __init__(self, coeffs=(), v=0, D=1, T=None):
        if not isinstance(D, int) or D <= 0:
            raise ValueError("grid denominator D must be a positive integer")
        cs = [_rat(c) for c in coeffs]
        v = int(v)
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        if lead:
            v += lead
            cs = cs[lead:]
        if T is not None:
            T = int(T)
            if cs and v + len(cs) > T:
                cs = cs[: max(0, T - v)]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            if T is None:
                self.D, self.v, self.coeffs, self.T = 1, 0, (), None
            else:
                s = math.gcd(D, T)
                if s > 1:
                    D //= s
                    T //= s
                self.D, self.v, self.coeffs, self.T = D, T, (), T
            return
        s = D
        for k, c in enumerate(cs):
            if c:
                s = math.gcd(s, v + k)
        if T is not None:
            s = math.gcd(s, T)
        if s > 1:
            cs = [cs[j] for j in range(0, len(cs), s)]
            v //= s
            D //= s
            if T is not None:
                T //= s
        self.D, self.v, self.coeffs, self.T = D, v, tuple(cs), T

    # -- raw construction ------------------------------------------------

    @staticmethod
    def _raw(coeffs, v, D, T):
        # caller guarantees the normalisation invariants
        s = object.__new__(QSeries)
        s.D, s.v, s.coeffs, s.T = D, v, tuple(coeffs), T
        return s

    @classmethod
    def zero(cls, T=None, D=1) -> "QSeries":
        """The zero series: exact when T is None, else 0 + O(q^(T/D))."""
        return cls((), 0, D, T)

    @classmethod
    def constant(cls, c) -> "QSeries":
        return cls((c,), 0, 1, None)

    @classmethod
    def monomial(cls, c, e=0) -> "QSeries":
        """The exact single term c * q^e, for rational e."""
        e = _rat(e)
        return cls((c,), e.numerator, e.denominator, None)

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        """True when no nonzero coefficient is known (zero through T)."""
        return not self.coeffs

    def is_exact(self) -> bool:
        return self.T is None

    def truncation_exponent(self):
        """Exponent where unknown coefficients start, or None if exact."""
        return None if self.T is None else Fraction(self.T, self.D)

    def valuation(self):
        """Exponent of the first nonzero term.

        Returns None for the exact zero series; raises PrecisionError when
        the series is zero through its truncation (the valuation, if any, is
        beyond what is known).
        """
        if self.coeffs:
            return Fraction(self.v, self.D)
        if self.T is None:
            return None
        raise PrecisionError(
            "series is zero through O(q^%s); valuation unknown"
            % Fraction(self.T, self.D)
        )

    def leading_coefficient(self) -> Fraction:
        if self.coeffs:
            return self.coeffs[0]
        if self.T is None:
            raise ValueError("the zero series has no leading term")
        raise PrecisionError("series is zero through its truncation")

    def leading_term(self):
        return self.valuation(), self.leading_coefficient()

    def coefficient(self, e) -> Fraction:
        """The exact coefficient of q^e, or raise PrecisionError.

        Exponents off the grid or outside the stored window are exactly zero
        as long as they lie below the truncation order.
        """
        e = _rat(e)
        t = e * self.D
        if t.denominator == 1:
            j = t.numerator
            if self.coeffs and self.v <= j < self.v + len(self.coeffs):
                return self.coeffs[j - self.v]
            if self.T is None or j < self.T:
                return _ZERO
        elif self.T is None or e < Fraction(self.T, self.D):
            return _ZERO
        raise PrecisionError(
            "insufficient precision: coefficient of q^%s lies at or beyond "
            "the truncation order q^%s" % (e, Fraction(self.T, self.D))
        )

    def items(self):
        """Yield (exponent, coefficient) for each stored nonzero term."""
        for k, c in enumerate(self.coeffs):
            if c:
                yield Fraction(self.v + k, self.D), c

    def _nz(self):
        # (grid index, coefficient) pairs, ascending
        v = self.v
        for k, c in enumerate(self.coeffs):
            if c:
                yield v + k, c

    # -- grid handling ----------------------------------------------------

    def _rescaled(self, m: int) -> "QSeries":
        # same series viewed on the finer grid D*m; bypasses normalisation
        # (which would immediately compress it back)
        if m == 1:
            return self
        if self.coeffs:
            cs = [_ZERO] * ((len(self.coeffs) - 1) * m + 1)
            for k, c in enumerate(self.coeffs):
                cs[k * m] = c
        else:
            cs = ()
        T = None if self.T is None else self.T * m
        return QSeries._raw(cs, self.v * m, self.D * m, T)

    def _common(self, other):
        D = math.lcm(self.D, other.D)
        return self._rescaled(D // self.D), other._rescaled(D // other.D), D

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        f, g, D = self._common(o)
        ts = [t for t in (f.T, g.T) if t is not None]
        T = min(ts) if ts else None
        parts = [s for s in (f, g) if s.coeffs]
        if not parts:
            return QSeries((), 0, D, T)
        lo = min(s.v for s in parts)
        hi = max(s.v + len(s.coeffs) for s in parts)
        if T is not None:
            hi = min(hi, T)
        out = [_ZERO] * max(0, hi - lo)
        for s in parts:
            for j, c in s._nz():
                if j < hi:
                    out[j - lo] += c
        return QSeries(out, lo, D, T)

    __radd__ = __add__

    def __neg__(self):
        return QSeries._raw(tuple(-c for c in self.coeffs), self.v, self.D, self.T)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if (not self.coeffs and self.T is None) or (not o.coeffs and o.T is None):
            return QSeries()
        f, g, D = self._common(o)
        # empty truncated factors carry v = T, so the min rule below treats
        # their (unknown) valuation by its lower bound
        cands = []
        if f.T is not None:
            cands.append(f.T + g.v)
        if g.T is not None:
            cands.append(g.T + f.v)
        T = min(cands) if cands else None
        if not f.coeffs or not g.coeffs:
            return QSeries((), 0, D, T)
        v = f.v + g.v
        hi = (f.v + len(f.coeffs) - 1) + (g.v + len(g.coeffs) - 1) + 1
        if T is not None:
            hi = min(hi, T)
        out = [_ZERO] * max(0, hi - v)
        fnz = list(f._nz())
        gnz = list(g._nz())
        if len(fnz) > len(gnz):
            fnz, gnz = gnz, fnz
        for i, ci in fnz:
            for j, cj in gnz:
                k = i + j
                if k >= hi:
                    break  # gnz ascends
                out[k - v] += ci * cj
        return QSeries(out, v, D, T)

    __rmul__ = __mul__

    def __pow__(self, n):
        if isinstance(n, Fraction):
            if n.denominator == 1:
                n = int(n)
            elif len(self.coeffs) == 1 and self.T is None and self.coeffs[0] == 1:
                return QSeries.monomial(1, Fraction(self.v, self.D) * n)
            else:
                raise ValueError(
                    "fractional powers are only defined for q-monomials with "
                    "coefficient 1; use sqrt() for series"
                )
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return QSeries.constant(1)
        if n < 0:
            return self.invert() ** (-n)
        result = None
        base = self
        while True:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if not n:
                return result
            base = base * base

    # -- inversion, division, square root ---------------------------------

    def _unit_part(self):
        # self with the leading monomial divided out; auto-compressed
        return QSeries(
            self.coeffs, 0, self.D, None if self.T is None else self.T - self.v
        )

    def invert(self, terms=None) -> "QSeries":
        """Multiplicative inverse.

        For a truncated series the inverse keeps the same relative window
        (number of known orders past the leading exponent).  Inverting an
        exact series with more than one term produces an infinite expansion,
        so an explicit window must be given: ``terms`` is the number of
        integer q-orders to compute past the leading exponent.
        """
        if not self.coeffs:
            if self.T is None:
                raise ZeroDivisionError("cannot invert the zero series")
            raise PrecisionError(
                "cannot invert a series that is zero through its truncation"
            )
        u = self._unit_part()
        mono = QSeries((_ONE,), -self.v, self.D)
        if u.T is None and len(u.coeffs) == 1:
            return QSeries((1 / u.coeffs[0],), -self.v, self.D)
        if u.T is None:
            if terms is None:
                raise PrecisionError(
                    "inverting an exact series gives an infinite expansion; "
                    "pass terms=<orders past the leading exponent>"
                )
            R = int(terms) * u.D
        else:
            R = u.T if terms is None else min(u.T, int(terms) * u.D)
        a = list(u.coeffs[:R]) + [_ZERO] * max(0, R - len(u.coeffs))
        b = [_ZERO] * R
        inv0 = 1 / a[0]
        b[0] = inv0
        for k in range(1, R):
            acc = _ZERO
            for i in range(1, k + 1):
                if a[i]:
                    acc += a[i] * b[k - i]
            if acc:
                b[k] = -inv0 * acc
        return QSeries(b, 0, u.D, R) * mono

    def div(self, other, terms=None) -> "QSeries":
        """self / other.

        When the divisor is exact but the dividend is truncated, the
        divisor's expansion window defaults to the dividend's relative
        window, which is all the quotient can honestly use.
        """
        g = _coerce(other)
        if g is None:
            raise TypeError(f"cannot divide a QSeries by {type(other).__name__}")
        if (
            terms is None
            and g.T is None
            and len(g.coeffs) > 1
            and self.T is not None
        ):
            terms = _ceil_div(self.T - self.v, self.D)
        return self * g.invert(terms)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.div(o)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o.div(self)

    def sqrt(self, terms=None) -> "QSeries":
        """Square root with positive leading coefficient.

        The leading coefficient must be the square of a rational, otherwise
        ValueError("no rational square root ...") is raised.  An odd leading
        index moves the result onto the doubled grid.  As with ``invert``,
        exact inputs need an explicit ``terms`` window.
        """
        if not self.coeffs:
            if self.T is None:
                return QSeries()
            raise PrecisionError(
                "series is zero through its truncation; square root undetermined"
            )
        c0 = self.coeffs[0]
        if c0 < 0:
            raise ValueError(
                f"no rational square root: leading coefficient {c0} is negative"
            )
        rn, rd = math.isqrt(c0.numerator), math.isqrt(c0.denominator)
        if rn * rn != c0.numerator or rd * rd != c0.denominator:
            raise ValueError(
                f"no rational square root: leading coefficient {c0} "
                "is not the square of a rational"
            )
        r0 = Fraction(rn, rd)
        u = self._unit_part()
        e = Fraction(self.v, 2 * self.D)
        mono = QSeries((r0,), e.numerator, e.denominator)
        if u.T is None and len(u.coeffs) == 1:
            return mono
        if u.T is None:
            if terms is None:
                raise PrecisionError(
                    "square root of an exact series gives an infinite "
                    "expansion; pass terms=<orders past the leading exponent>"
                )
            R = int(terms) * u.D
        else:
            R = u.T if terms is None else min(u.T, int(terms) * u.D)
        inv_c0 = 1 / c0
        a = [c * inv_c0 for c in u.coeffs[:R]] + [_ZERO] * max(0, R - len(u.coeffs))
        b = [_ZERO] * R
        b[0] = _ONE
        half = Fraction(1, 2)
        for k in range(1, R):
            acc = a[k]
            for i in range(1, k):
                if b[i]:
                    acc -= b[i] * b[k - i]
            if acc:
                b[k] = acc * half
        return QSeries(b, 0, u.D, R) * mono

    # -- reshaping ---------------------------------------------------------

    def truncate(self, e) -> "QSeries":
        """Forget all coefficients at exponents >= e."""
        t = _rat(e) * self.D
        T = _ceil_div(t.numerator, t.denominator)
        if self.T is not None:
            T = min(T, self.T)
        return QSeries(self.coeffs, self.v, self.D, T)

    def subs_qpow(self, m) -> "QSeries":
        """Substitute q -> q^m for a positive rational m."""
        m = _rat(m)
        if m <= 0:
            raise ValueError("substitution exponent must be positive")
        p, r = m.numerator, m.denominator
        if self.coeffs:
            cs = [_ZERO] * ((len(self.coeffs) - 1) * p + 1)
            for k, c in enumerate(self.coeffs):
                cs[k * p] = c
        else:
            cs = ()
        T = None if self.T is None else self.T * p
        return QSeries(cs, self.v * p, self.D * r, T)

    # -- comparison and display --------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        # equality through the common truncation
        return not (self - o).coeffs

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        parts = []
        for e, c in self.items():
            qp = _fmt_qpow(e)
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = qp
            else:
                body = f"{mag}*{qp}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        if self.T is not None:
            parts.append(("+ " if parts else "") + "O(%s)" % _fmt_qpow(Fraction(self.T, self.D), o_term=True))
        if not parts:
            return "0"
        return " ".join(parts)

    def __repr__(self):
        return f"QSeries({self})"


def _fmt_qpow(e: Fraction, o_term: bool = False) -> str:
    if e == 0:
        return "1" if o_term else ""
    if e == 1:
        return "q"
    if e.denominator == 1:
        return f"q^{e.numerator}"
    return f"q^({e})"


def _coerce(x):
    if isinstance(x, QSeries):
        return x
    if isinstance(x, (int, Fraction)):
        return QSeries._raw((Fraction(x),), 0, 1, None) if x else QSeries._raw((), 0, 1, None)
    return None


def qpow(e) -> QSeries:
    """The exact monomial q^e."""
    return QSeries.monomial(1, e)


#: the exact constant 1
ONE = QSeries.constant(1)
