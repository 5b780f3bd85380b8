"""Cusps of Gamma_0(N) and exact vanishing orders of eta-type products.

Conventions used throughout:

* a cusp a/c is stored reduced with c >= 0; infinity is (1, 0),
* ``cusp_set(N)`` returns one representative per Gamma_0(N)-class, ordered
  by increasing denominator, with 0 = (0, 1) first and infinity last,
* orders reported by :func:`eta_cusp_order` and :func:`gen_eta_cusp_ord`
  are invariant orders (local order times cusp width), so a weight-0
  invariant quotient has integer orders summing to zero over a full set
  of representatives.

All arithmetic is exact (integers and Fractions).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .constructors import EtaQuotient, GenEtaQuotient

__all__ = [
    "Cusp",
    "CuspTable",
    "apply_gamma",
    "class_representative",
    "constancy_check",
    "cusp_equivalent",
    "cusp_matrix",
    "cusp_set",
    "cusp_width",
    "eta_cusp_order",
    "eta_modularity",
    "gen_eta_cusp_ord",
    "gen_eta_gamma1_check",
    "kronecker",
    "parse_cusp",
    "psi",
    "sum_ord_bound",
]


@dataclass(frozen=True, order=True)
class Cusp:
    """A cusp of the extended upper half plane, stored as a reduced fraction.

    ``Cusp(a, c)`` represents a/c; infinity is ``Cusp(1, 0)``.  The
    constructor reduces to lowest terms and normalizes the sign so c >= 0.
    """

    a: int
    c: int

    def __init__(self, a: int, c: int) -> None:
        if not (isinstance(a, int) and isinstance(c, int)):
            raise TypeError("cusp entries must be integers")
        if a == 0 and c == 0:
            raise ValueError("0/0 is not a cusp")
        g = math.gcd(a, c)
        a //= g
        c //= g
        if c < 0 or (c == 0 and a < 0):
            a, c = -a, -c
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)

    @property
    def is_infinity(self) -> bool:
        return self.c == 0

    def value(self) -> Fraction | None:
        """The cusp as a rational number, or None for infinity."""
        if self.c == 0:
            return None
        return Fraction(self.a, self.c)

    def __str__(self) -> str:
        if self.c == 0:
            return "inf"
        if self.c == 1:
            return str(self.a)
        return f"{self.a}/{self.c}"

    def __repr__(self) -> str:
        return f"Cusp({self.a}, {self.c})"


def parse_cusp(text: str) -> Cusp:
    """Parse ``"inf"``, ``"0"``, ``"1/2"``, ``"-3/14"``, ... into a Cusp."""
    s = text.strip().lower()
    if s in ("inf", "oo", "infinity", "∞"):
        return Cusp(1, 0)
    if "/" in s:
        num, _, den = s.partition("/")
        return Cusp(int(num), int(den))
    return Cusp(int(s), 1)


def _as_cusp(r) -> Cusp:
    if isinstance(r, Cusp):
        return r
    if isinstance(r, str):
        return parse_cusp(r)
    if isinstance(r, tuple) and len(r) == 2:
        return Cusp(r[0], r[1])
    if isinstance(r, Fraction):
        return Cusp(r.numerator, r.denominator)
    if isinstance(r, int):
        return Cusp(r, 1)
    raise TypeError(f"cannot interpret {r!r} as a cusp")


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def psi(n: int) -> int:
    """Index of Gamma_0(n) in the modular group: n * prod_{p|n} (1 + 1/p)."""
    if n < 1:
        raise ValueError("level must be a positive integer")
    num, den = n, 1
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            num *= p + 1
            den *= p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        num *= m + 1
        den *= m
    return num // den


def cusp_width(n: int, r) -> int:
    """Width of the cusp r on Gamma_0(n): n / gcd(c^2, n)."""
    c = _as_cusp(r).c
    return n // math.gcd(c * c, n)


@dataclass(frozen=True)
class CuspTable:
    """A complete set of cusp representatives of Gamma_0(level) with widths."""

    level: int
    entries: tuple[tuple[Cusp, int], ...]

    @property
    def cusps(self) -> tuple[Cusp, ...]:
        return tuple(r for r, _ in self.entries)

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(h for _, h in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def cusp_set(n: int) -> CuspTable:
    """One representative per cusp class of Gamma_0(n).

    For each divisor c of n there are phi(gcd(c, n/c)) classes a/c with
    a running over units modulo gcd(c, n/c).  The class with c = 1 is
    presented as 0 and the class with c = n as infinity.  Widths sum
    to psi(n).
    """
    if n < 1:
        raise ValueError("level must be a positive integer")
    entries: list[tuple[Cusp, int]] = []
    for c in _divisors(n):
        d = math.gcd(c, n // c)
        seen: set[int] = set()
        for u in range(1, d + 1):
            if math.gcd(u, d) != 1 or u in seen:
                continue
            seen.add(u)
            if c == n:
                rep = Cusp(1, 0)
            elif c == 1:
                rep = Cusp(0, 1)
            else:
                a = u
                while math.gcd(a, c) != 1:
                    a += d
                rep = Cusp(a, c)
            entries.append((rep, n // math.gcd(c * c, n)))
    table = CuspTable(n, tuple(entries))
    assert sum(table.widths) == psi(n)
    return table


def cusp_equivalent(n: int, r1, r2) -> bool:
    """Whether two cusps lie in the same Gamma_0(n) orbit.

    a1/c1 ~ a2/c2 iff there is a unit s mod n with c2 = s*c1 (mod n) and
    a2 = s^{-1}*a1 (mod gcd(c1, n)).
    """
    x, y = _as_cusp(r1), _as_cusp(r2)
    g1 = math.gcd(x.c, n)
    for s in range(1, n + 1):
        if math.gcd(s, n) != 1:
            continue
        if (y.c - s * x.c) % n != 0:
            continue
        if (y.a - pow(s, -1, n) * x.a) % g1 == 0:
            return True
    return False


def class_representative(n: int, r) -> Cusp:
    """The representative from cusp_set(n) equivalent to r."""
    cusp = _as_cusp(r)
    for rep, _ in cusp_set(n):
        if cusp_equivalent(n, cusp, rep):
            return rep
    raise AssertionError(f"no representative found for {cusp} on Gamma_0({n})")


def cusp_matrix(r) -> tuple[tuple[int, int], tuple[int, int]]:
    """A determinant-1 integer matrix [[a, b], [c, d]] sending infinity to r.

    Infinity maps to the identity, 0 to [[0, -1], [1, 0]], and generally
    b is the smallest nonnegative solution of a*d - b*c = 1.
    """
    cusp = _as_cusp(r)
    a, c = cusp.a, cusp.c
    # extended gcd: a*d - c*b = 1
    old_r, rr = a, c
    old_s, ss = 1, 0
    old_t, tt = 0, 1
    while rr != 0:
        q = old_r // rr
        old_r, rr = rr, old_r - q * rr
        old_s, ss = ss, old_s - q * ss
        old_t, tt = tt, old_t - q * tt
    # old_r = gcd = +-1; a*old_s + c*old_t = old_r
    d, b = old_s * old_r, -old_t * old_r
    # shift (b, d) -> (b + t*a, d + t*c) to canonicalize
    if a != 0:
        t = (b % abs(a) - b) // a
    else:
        t = (0 - d) // c
    b, d = b + t * a, d + t * c
    assert a * d - b * c == 1
    return ((a, b), (c, d))


def apply_gamma(mat: Sequence[Sequence[int]], r) -> Cusp:
    """Image of a cusp under a fractional-linear map [[p, q], [u, v]]."""
    (p, q), (u, v) = mat
    cusp = _as_cusp(r)
    return Cusp(p * cusp.a + q * cusp.c, u * cusp.a + v * cusp.c)


def kronecker(a: int, n: int) -> int:
    """The Kronecker symbol (a | n), extending Jacobi to all integers n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0
    t = 1
    if n < 0:
        n = -n
        if a < 0:
            t = -t
    while n % 2 == 0:
        n //= 2
        if a % 8 in (3, 5):
            t = -t
    # Jacobi symbol (a | n) with n odd positive
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def eta_modularity(quot: EtaQuotient, n: int) -> dict:
    """Invariance report for an eta quotient on Gamma_0(n).

    Checks the two mod-24 congruences (sum of delta*r_delta and of
    (n/delta)*r_delta) and triviality of the character
    d -> ((-1)^k prod delta^{r_delta} | d), sampled over every residue
    class d in [1, 24n] coprime to 6n, which covers a full period of the
    character.  ``character_trivial`` is None when the weight is not an
    integer.  ``invariant`` means: transforms with trivial multiplier
    under all of Gamma_0(n) in weight ``weight``.
    """
    exps = quot.exponents
    weight = Fraction(sum(exps.values()), 2)
    cong = sum(d * r for d, r in exps.items()) % 24 == 0
    cong_dual = sum((Fraction(n, d) * r for d, r in exps.items()), Fraction(0)) % 24 == 0
    report = {
        "weight": weight,
        "congruence_24": cong,
        "congruence_24_dual": cong_dual,
        "character_trivial": None,
        "invariant": False,
    }
    if weight.denominator == 1:
        m = 1
        for d, r in exps.items():
            if r % 2:
                m *= d
        if weight % 2:
            m = -m
        trivial = True
        for d in range(1, 24 * n + 1):
            if math.gcd(d, 6 * n) != 1:
                continue
            if kronecker(m, d) != 1:
                trivial = False
                break
        report["character_trivial"] = trivial
        report["invariant"] = cong and cong_dual and trivial
    return report


def _p2(x: Fraction) -> Fraction:
    # second Bernoulli polynomial on the fractional part of x
    x = x - (x.numerator // x.denominator)
    return x * x - x + Fraction(1, 6)


def eta_cusp_order(quot: EtaQuotient, n: int, r) -> Fraction:
    """Invariant order of an eta quotient at a cusp of Gamma_0(n).

    The cusp is reduced to its class representative a/c with c | n first;
    the order is then (n / (24 gcd(c^2, n))) * sum gcd(c, delta)^2
    r_delta / delta.  At infinity this is the q-valuation.
    """
    rep = class_representative(n, r)
    c = rep.c
    total = sum(
        (Fraction(math.gcd(c, d) ** 2, d) * rd for d, rd in quot.exponents.items()),
        Fraction(0),
    )
    return Fraction(n, 24 * math.gcd(c * c, n)) * total


def gen_eta_cusp_ord(quot: GenEtaQuotient, n: int, r) -> Fraction:
    """Invariant order of a generalized eta quotient at a cusp of Gamma_0(n).

    The cusp a/c is used exactly as passed (no class reduction); callers
    pick the representative whose orbit they mean.  With M the quotient's
    level and d = gcd(c, M),

        m0 = (d^2 / 2M) * sum_g r_g P2(a g / d),
        Ord = (n / gcd(c^2, n)) * m0,

    where P2 is the periodic second Bernoulli polynomial.  At infinity
    (1, 0) this is the q-valuation; M need not divide n, which is what
    the mixed-level tables use.
    """
    cusp = _as_cusp(r)
    a, c = cusp.a, cusp.c
    m = quot.level
    d = math.gcd(c, m)
    m0 = Fraction(d * d, 2 * m) * sum(
        (rg * _p2(Fraction(a * g, d)) for g, rg in quot.exponents.items()),
        Fraction(0),
    )
    return Fraction(n, math.gcd(c * c, n)) * m0


def gen_eta_gamma1_check(quot: GenEtaQuotient) -> bool:
    """Whether a generalized eta quotient is invariant on Gamma_1(level).

    Congruence conditions: sum r_g = 0 (mod 12), sum g r_g = 0 (mod 2),
    and sum g^2 r_g = 0 (mod 2*level).
    """
    n = quot.level
    s0 = sum(quot.exponents.values())
    s1 = sum(g * r for g, r in quot.exponents.items())
    s2 = sum(g * g * r for g, r in quot.exponents.items())
    return s0 % 12 == 0 and s1 % 2 == 0 and s2 % (2 * n) == 0


def sum_ord_bound(
    parts: Sequence[Mapping[Cusp, Fraction | int]],
) -> dict[Cusp, tuple[Fraction, bool]]:
    """Per-cusp lower bound on the order of a sum of functions.

    Given the cusp-order tables of several functions, the order of their
    sum at each cusp is at least the minimum over the parts; the bound is
    an equality whenever the minimum is attained by exactly one part
    (leading terms cannot cancel).  Returns cusp -> (min, uniquely_attained).
    All parts must share the same cusp keys.
    """
    if not parts:
        raise ValueError("need at least one part")
    keys = set(parts[0])
    for p in parts[1:]:
        if set(p) != keys:
            raise ValueError("parts disagree on the cusp set")
    out: dict[Cusp, tuple[Fraction, bool]] = {}
    for r in parts[0]:
        vals = [Fraction(p[r]) for p in parts]
        lo = min(vals)
        out[r] = (lo, vals.count(lo) == 1)
    return out


def constancy_check(orders) -> bool:
    """Whether a cusp-order table is consistent with a constant function.

    A weight-0 invariant function holomorphic on the upper half plane with
    nonnegative order at every cusp has no poles, hence is constant.
    """
    vals = orders.values() if isinstance(orders, Mapping) else orders
    return all(Fraction(v) >= 0 for v in vals)
