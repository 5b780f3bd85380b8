"""Constructors for classical q-products and Lambert series.

Everything here returns a :class:`~qlambert.series.QSeries` with honest
truncation bookkeeping.  The primitive products (``pochhammer``, ``eta``,
``gen_eta``, ``theta_f``, ``lambert_mod``, ``pi_q``) take an *absolute*
exponent ceiling ``order``: the result is known modulo ``q^order`` (often a
little further).  The named modular functions of :func:`gosper_symbols` have
poles of different orders at infinity, so there ``order`` is the *relative*
window: the number of known q-orders past the leading exponent.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .series import QSeries, qpow


def _ceil(x) -> int:
    x = Fraction(x)
    return -((-x.numerator) // x.denominator)


def pochhammer(sign: int, a: int, b: int, order: int) -> QSeries:
    """The product  prod_{n>=0} (1 - sign * q^(a + n b)),  modulo q^order."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if a < 1 or b < 1:
        raise ValueError("pochhammer exponents must satisfy a >= 1, b >= 1")
    order = int(order)
    if order < 1:
        raise ValueError("order must be a positive integer")
    c = [0] * order
    c[0] = 1
    m = a
    while m < order:
        # in-place multiply by (1 - sign*q^m); descending j keeps c[j-m] fresh
        if sign == 1:
            for j in range(order - 1, m - 1, -1):
                if c[j - m]:
                    c[j] -= c[j - m]
        else:
            for j in range(order - 1, m - 1, -1):
                if c[j - m]:
                    c[j] += c[j - m]
        m += b
    return QSeries(c, 0, 1, order)


def eta(delta: int, order) -> QSeries:
    """Dedekind eta at delta*tau:  q^(delta/24) * prod_{n>=1} (1 - q^(delta n))."""
    if delta < 1:
        raise ValueError("eta argument must be a positive integer")
    pref = Fraction(delta, 24)
    w = max(1, _ceil(Fraction(order) - pref))
    return qpow(pref) * pochhammer(1, delta, delta, w)


def _b2(t: Fraction) -> Fraction:
    # second Bernoulli polynomial
    return t * t - t + Fraction(1, 6)


def gen_eta_prefactor(level: int, g: int) -> Fraction:
    """Leading exponent  level * B2(g/level) / 2  of eta_{level,g}."""
    return Fraction(level, 2) * _b2(Fraction(g % level, level))


def gen_eta(level: int, g: int, order) -> QSeries:
    """Generalized eta function eta_{level,g}.

    For 0 < g < level this is
        q^(level*B2(g/level)/2) (q^g; q^level) (q^(level-g); q^level),
    and other indices reduce through eta_{N,g+N} = eta_{N,-g} = -eta_{N,g}.
    Indices divisible by the level are rejected (the product degenerates).
    """
    if level < 1:
        raise ValueError("level must be a positive integer")
    g0 = g % (2 * level)
    sign = 1
    if g0 >= level:
        g0 -= level
        sign = -1
    if g0 == 0:
        raise ValueError("index g must not be divisible by the level")
    pref = gen_eta_prefactor(level, g0)
    w = max(1, _ceil(Fraction(order) - pref))
    unit = pochhammer(1, g0, level, w) * pochhammer(1, level - g0, level, w)
    out = qpow(pref) * unit
    return -out if sign < 0 else out


@dataclass
class EtaQuotient:
    """A product  prod_{delta | level} eta(delta tau)^(r_delta).

    ``exponents`` maps delta -> r_delta; zero exponents are dropped and every
    delta must divide the level.
    """

    level: int
    exponents: dict

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be a positive integer")
        clean = {}
        for d in sorted(self.exponents):
            r = self.exponents[d]
            if not r:
                continue
            d = int(d)
            if d < 1 or self.level % d:
                raise ValueError(
                    f"eta argument {d} does not divide the level {self.level}"
                )
            clean[d] = int(r)
        self.exponents = clean

    def weight(self) -> Fraction:
        return Fraction(sum(self.exponents.values()), 2)

    def prefactor_exponent(self) -> Fraction:
        return sum(
            (Fraction(d * r, 24) for d, r in self.exponents.items()), Fraction(0)
        )

    def series(self, order) -> QSeries:
        pref = self.prefactor_exponent()
        w = max(1, _ceil(Fraction(order) - pref))
        num = QSeries([1], 0, 1, w)
        den = QSeries([1], 0, 1, w)
        for d, r in self.exponents.items():
            p = pochhammer(1, d, d, w)
            if r > 0:
                num *= p**r
            else:
                den *= p ** (-r)
        return qpow(pref) * (num * den.invert())


@dataclass
class GenEtaQuotient:
    """A product  prod_g eta_{level,g}^(r_g)  with 1 <= g <= level/2."""

    level: int
    exponents: dict

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be a positive integer")
        clean = {}
        for g in sorted(self.exponents):
            r = self.exponents[g]
            if not r:
                continue
            g = int(g)
            if not 1 <= g <= self.level // 2:
                raise ValueError(
                    f"index {g} outside 1..{self.level // 2} for level {self.level}"
                )
            clean[g] = int(r)
        self.exponents = clean

    def prefactor_exponent(self) -> Fraction:
        return sum(
            (r * gen_eta_prefactor(self.level, g) for g, r in self.exponents.items()),
            Fraction(0),
        )

    def series(self, order) -> QSeries:
        pref = self.prefactor_exponent()
        w = max(1, _ceil(Fraction(order) - pref))
        num = QSeries([1], 0, 1, w)
        den = QSeries([1], 0, 1, w)
        for g, r in self.exponents.items():
            p = pochhammer(1, g, self.level, w) * pochhammer(
                1, self.level - g, self.level, w
            )
            if r > 0:
                num *= p**r
            else:
                den *= p ** (-r)
        return qpow(pref) * (num * den.invert())


def theta_f(sa: int, a: int, sb: int, b: int, order, form: str = "product") -> QSeries:
    """Ramanujan's theta function f(x, y) at x = sa*q^a, y = sb*q^b.

    Arguments must be signed q-monomials (sa, sb in {+1, -1}; a, b positive
    integers).  The default is the triple-product form
        f(x, y) = (-x; xy)_inf (-y; xy)_inf (xy; xy)_inf;
    ``form="sum"`` computes the bilateral series
        sum_{n in Z} x^(n(n+1)/2) y^(n(n-1)/2)
    by direct accumulation, as an independent cross-check.
    """
    if sa not in (1, -1) or sb not in (1, -1):
        raise ValueError("theta arguments must be signed q-monomials")
    if a < 1 or b < 1:
        raise ValueError("theta exponents must be positive integers")
    order = int(order)
    if order < 1:
        raise ValueError("order must be a positive integer")
    if form == "product":
        # (v; Q) with a sign-alternating ratio Q = -q^step splits into the
        # even- and odd-index subproducts, each with ratio q^(2 step)
        def poch_signed(s0, e, step):
            if sa * sb == 1:
                return pochhammer(s0, e, step, order)
            return pochhammer(s0, e, 2 * step, order) * pochhammer(
                -s0, e + step, 2 * step, order
            )

        return (
            poch_signed(-sa, a, a + b)
            * poch_signed(-sb, b, a + b)
            * poch_signed(sa * sb, a + b, a + b)
        )
    if form == "sum":
        c = [0] * order
        k = 0
        while True:
            for n in (k,) if k == 0 else (k, -k):
                e = (a * n * (n + 1) + b * n * (n - 1)) // 2
                if e < order:
                    c[e] += (sa ** ((n * (n + 1) // 2) % 2)) * (
                        sb ** ((n * (n - 1) // 2) % 2)
                    )
            k += 1
            ep = (a * k * (k + 1) + b * k * (k - 1)) // 2
            en = (a * k * (k - 1) + b * k * (k + 1)) // 2
            if ep >= order and en >= order:
                break
        return QSeries(c, 0, 1, order)
    raise ValueError(f"unknown form {form!r}; expected 'product' or 'sum'")


def lambert_mod(r: int, modulus: int, order) -> QSeries:
    """sum over n >= 1, n ≡ r (mod modulus), of  q^n / (1 - q^n)^2.

    The coefficient of q^M is  sum of M/d over divisors d | M with
    d ≡ r (mod modulus).
    """
    if modulus < 1:
        raise ValueError("modulus must be a positive integer")
    order = int(order)
    if order < 1:
        raise ValueError("order must be a positive integer")
    r = r % modulus
    c = [0] * order
    n = r if r else modulus
    while n < order:
        for m in range(n, order, n):
            c[m] += m // n
        n += modulus
    return QSeries(c, 0, 1, order)


def lambert_L(k: int, order) -> QSeries:
    """L_k = sum_{n>=1} q^(kn)/(1-q^(kn))^2."""
    return lambert_mod(0, k, order)


def lambert_L_odd(k: int, order) -> QSeries:
    """L'_k = sum over odd multiples:  sum_{n>=1, n odd} q^(kn)/(1-q^(kn))^2."""
    return lambert_mod(k, 2 * k, order)


def bailey_specialization(i: int, modulus: int, order) -> QSeries:
    """Bilateral Lambert-series combination for an even modulus L:

        lambert_mod(i, L) + lambert_mod(-i, L) - 2 lambert_mod(L/2, L).

    This is the two-variable Lambert kernel with its arguments specialised to
    the q-powers i and L/2; indices i ≡ 0 or L/2 (mod L) make the
    specialisation collapse onto a pole and are rejected.
    """
    if modulus % 2:
        raise ValueError("bilateral specialisation needs an even modulus")
    i0 = i % modulus
    if i0 == 0 or i0 == modulus // 2:
        raise ValueError(
            "pole in bilateral sum: index %d is 0 or %d modulo %d"
            % (i, modulus // 2, modulus)
        )
    half = lambert_mod(modulus // 2, modulus, order)
    return (
        lambert_mod(i0, modulus, order)
        + lambert_mod(modulus - i0, modulus, order)
        - 2 * half
    )


def _pi_unit(k: int, w: int) -> QSeries:
    return pochhammer(1, 2 * k, 2 * k, w) ** 4 * pochhammer(1, k, k, w) ** (-2)


def pi_q(k: int, order) -> QSeries:
    """Pi_{q^k} = q^(k/4) (q^(2k); q^(2k))^2 / (q^k; q^(2k))^2.

    Equal to the eta quotient eta(2k tau)^4 / eta(k tau)^2.
    """
    if k < 1:
        raise ValueError("argument must be a positive integer")
    pref = Fraction(k, 4)
    w = max(1, _ceil(Fraction(order) - pref))
    return qpow(pref) * _pi_unit(k, w)


# -- named level-14 functions ------------------------------------------------

_SYMBOL_CACHE: dict = {}
_SYMBOL_LOCK = threading.RLock()


def _sym_g1(R):
    return GenEtaQuotient(14, {6: 2, 1: -2}).series(Fraction(-5, 2) + R)


def _sym_g2(R):
    return GenEtaQuotient(14, {4: 2, 3: -2}).series(Fraction(-1, 2) + R)


def _sym_g3(R):
    return GenEtaQuotient(14, {2: 2, 5: -2}).series(Fraction(3, 2) + R)


def _sym_g(R):
    return qpow(Fraction(-3, 2)) * _pi_unit(1, R) * _pi_unit(7, R).invert()


def _sym_z(R):
    num = lambert_L_odd(1, R + 2) - 7 * lambert_L_odd(7, R + 2)
    den = qpow(Fraction(7, 2)) * _pi_unit(7, R) ** 2
    z = num * den.invert()
    alt = gosper_symbols("g1", R) + gosper_symbols("g2", R) + gosper_symbols("g3", R)
    if z != alt:
        raise ArithmeticError(
            "cross-check failed: the Lambert-series and eta-quotient builds "
            "of z disagree"
        )
    return z


def _sym_w(R):
    return 4 * (lambert_L(1, R) - 7 * lambert_L(7, R)) + 1


def _sym_f0(R):
    g1, g2, g3 = (gosper_symbols(n, R) for n in ("g1", "g2", "g3"))
    return g1**2 + g2**2 + g3**2


def _sym_f1(R):
    g1, g2, g3 = (gosper_symbols(n, R) for n in ("g1", "g2", "g3"))
    return g1 * g2 + g1 * g3 + g2 * g3


def _sym_f(R):
    den = qpow(Fraction(7, 2)) * _pi_unit(7, R) ** 2 * gosper_symbols("z", R)
    return gosper_symbols("w", R) * den.invert()


def _sym_h1(R):
    p7sq = qpow(Fraction(7, 2)) * _pi_unit(7, R) ** 2
    p14sq = qpow(7) * _pi_unit(14, R) ** 2
    return gosper_symbols("g", R) * p7sq * p14sq.invert()


def _sym_h2(R):
    p7sq = qpow(Fraction(7, 2)) * _pi_unit(7, R) ** 2
    p14sq = qpow(7) * _pi_unit(14, R) ** 2
    return p7sq * (gosper_symbols("g", R) * p14sq).invert()


def _sym_H(R):
    return gosper_symbols("h1", R) + 16 * gosper_symbols("h2", R).invert()


def _sym_t(R):
    return gosper_symbols("H", R) + 4 * gosper_symbols("f1", R)


_BUILDERS = {
    "z": _sym_z,
    "w": _sym_w,
    "g": _sym_g,
    "g1": _sym_g1,
    "g2": _sym_g2,
    "g3": _sym_g3,
    "f0": _sym_f0,
    "f1": _sym_f1,
    "f": _sym_f,
    "h1": _sym_h1,
    "h2": _sym_h2,
    "H": _sym_H,
    "t": _sym_t,
}

SYMBOL_NAMES = tuple(_BUILDERS)


def gosper_symbols(name: str, order: int) -> QSeries:
    """Named modular functions for the level-14 identities, by relative window.

    ``order`` counts the known q-orders past the leading exponent (the
    functions have poles of different orders at infinity, so an absolute cap
    would be awkward).  Builds are cached and thread-safe; building z
    cross-checks its Lambert-series route against g1+g2+g3 and refuses to
    return on mismatch.

    name  definition                              leading exponent
    ----  -------------------------------------   ----------------
    z     (L'_1 - 7 L'_7) / Pi_{q^7}^2                 -5/2
    w     4 (L_1 - 7 L_7) + 1                           0
    g     Pi_q / Pi_{q^7}                              -3/2
    g1    eta_{14,6}^2 / eta_{14,1}^2                  -5/2
    g2    eta_{14,4}^2 / eta_{14,3}^2                  -1/2
    g3    eta_{14,2}^2 / eta_{14,5}^2                   3/2
    f0    g1^2 + g2^2 + g3^2                           -5
    f1    g1 g2 + g1 g3 + g2 g3                        -3
    f     w / (Pi_{q^7}^2 z)                           -1
    h1    g Pi_{q^7}^2 / Pi_{q^14}^2                   -5
    h2    Pi_{q^7}^2 / (g Pi_{q^14}^2)                 -2
    H     h1 + 16/h2                                   -5
    t     H + 4 f1                                     -5
    """
    order = int(order)
    if order < 1:
        raise ValueError("order must be a positive relative window")
    if name not in _BUILDERS:
        raise KeyError(
            f"unknown symbol {name!r}; available: {', '.join(SYMBOL_NAMES)}"
        )
    with _SYMBOL_LOCK:
        key = (name, order)
        got = _SYMBOL_CACHE.get(key)
        if got is None:
            got = _BUILDERS[name](order)
            _SYMBOL_CACHE[key] = got
        return got
