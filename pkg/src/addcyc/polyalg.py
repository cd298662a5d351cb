"""Exact polynomial arithmetic over Z_p and Z_{p^2}.

Polynomials are dense ascending coefficient lists: a_0 + a_1 x + ... + a_n x^n
is stored as (a_0, ..., a_n) with a_n != 0, and () for the zero polynomial.
Every coefficient is a reduced residue for the carrying modulus, which is
either p (field case) or p^2 (ring case).

The module also owns the factorization of x^n - 1 over Z_{p^2}: p-cyclotomic
cosets index the irreducible factors over Z_p, minimal polynomials are built
in the splitting field, and a single Newton correction lifts each factor to
Z_{p^2}.  Root-exponent sets of divisors and their sumset-based circle
products live here as well, since they are read straight off the coset
metadata.

All values are immutable; every operation is a pure function.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass, field


class PolyError(ValueError):
    pass


class NonMonicDivisor(PolyError):
    pass


class BothZero(PolyError):
    pass


class ZeroInput(PolyError):
    pass


class NotCoprime(PolyError):
    pass


class NotADivisor(PolyError):
    pass


class NotAProductOfFactors(PolyError):
    pass


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeBase:
    """The pair of moduli (p, p^2) every computation is relative to."""

    p: int
    p2: int = field(init=False)

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        object.__setattr__(self, "p2", self.p * self.p)


class Poly:
    """Immutable dense polynomial with coefficients reduced mod `mod`."""

    __slots__ = ("mod", "coeffs")

    def __init__(self, coeffs, mod):
        c = [int(v) % mod for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "mod", mod)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero(mod):
        return Poly((), mod)

    @staticmethod
    def one(mod):
        return Poly((1,), mod)

    @staticmethod
    def const(c, mod):
        return Poly((c,), mod)

    @staticmethod
    def x(mod):
        return Poly((0, 1), mod)

    @staticmethod
    def monomial(deg, mod, coeff=1):
        return Poly([0] * deg + [coeff], mod)

    @staticmethod
    def xn_minus_1(n, mod):
        return Poly([-1] + [0] * (n - 1) + [1], mod)

    # -- basic queries -------------------------------------------------
    @property
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def sort_key(self):
        return (self.degree, self.coeffs)

    # -- ring operations -----------------------------------------------
    def _check(self, other):
        if self.mod != other.mod:
            raise PolyError("mixed moduli %d and %d" % (self.mod, other.mod))

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)], self.mod)

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) - other.coeff(i) for i in range(n)], self.mod)

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.mod)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly([c * other for c in self.coeffs], self.mod)
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.mod)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, self.mod)

    __rmul__ = __mul__

    def __pow__(self, e):
        r = Poly.one(self.mod)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.mod == other.mod
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.mod, self.coeffs))

    def __call__(self, x0):
        y = 0
        for c in reversed(self.coeffs):
            y = (y * x0 + c) % self.mod
        return y

    def __repr__(self):
        return f"Poly({poly_to_string(self)!r} mod {self.mod})"

    def monic(self):
        """Normalize leading coefficient to 1 (mod must be prime)."""
        if self.is_zero:
            return self
        inv = pow(self.leading, -1, self.mod)
        return self * inv


# ---------------------------------------------------------------------------
# division, gcd, lcm, reductions
# ---------------------------------------------------------------------------

def poly_divmod_monic(dividend, divisor):
    """Exact (quotient, remainder) by a monic divisor, over Z_p or Z_{p^2}."""
    if divisor.is_zero or not divisor.is_monic:
        raise NonMonicDivisor(f"divisor must be monic, got {poly_to_string(divisor)}")
    dividend._check(divisor)
    mod = dividend.mod
    r = list(dividend.coeffs)
    d = divisor.degree
    if len(r) - 1 < d:
        return Poly.zero(mod), dividend
    q = [0] * (len(r) - d)
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i] % mod
        if c:
            q[i - d] = c
            for j, b in enumerate(divisor.coeffs):
                r[i - d + j] = (r[i - d + j] - c * b) % mod
        r[i] = 0
    return Poly(q, mod), Poly(r, mod)


def poly_mod(u, m):
    return poly_divmod_monic(u, m)[1]


def poly_divides(d, u):
    """d | u with d monic."""
    return poly_divmod_monic(u, d)[1].is_zero


def poly_gcd(u, v):
    """Monic gcd over the field Z_p; gcd(u, 0) = monic(u)."""
    if u.is_zero and v.is_zero:
        raise BothZero("gcd(0, 0) undefined")
    a, b = u, v
    while not b.is_zero:
        a, b = b, poly_divmod_monic(a, b.monic())[1]
    return a.monic()


def poly_lcm(u, v):
    """Monic lcm over Z_p."""
    if u.is_zero or v.is_zero:
        raise ZeroInput("lcm requires nonzero inputs")
    g = poly_gcd(u, v)
    q, r = poly_divmod_monic((u * v).monic(), g)
    assert r.is_zero
    return q.monic()


def poly_xgcd(u, v):
    """Extended Euclid over Z_p: returns (g, s, t) with s*u + t*v = g monic."""
    mod = u.mod
    r0, r1 = u, v
    s0, s1 = Poly.one(mod), Poly.zero(mod)
    t0, t1 = Poly.zero(mod), Poly.one(mod)
    while not r1.is_zero:
        q, r = poly_divmod_monic(r0, r1.monic())
        lc_inv = pow(r1.leading, -1, mod)
        q = q * lc_inv
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = pow(r0.leading, -1, mod)
    return r0 * lc, s0 * lc, t0 * lc


def reduce_mod_p(u, base):
    """Coefficientwise reduction Z_{p^2} -> Z_p (the overline map)."""
    return Poly(u.coeffs, base.p)


def lift_to_p2(u, base):
    """Coefficientwise inclusion Z_p -> Z_{p^2}."""
    return Poly(u.coeffs, base.p2)


# ---------------------------------------------------------------------------
# text syntax
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"([+-]?)\s*(\d+)?\s*(x)?\s*(?:\^\s*(\d+))?\s*")


def poly_from_string(text, mod):
    """Parse caret form "x^5+3x^4-x^3+x^2+2x-1" or list form "[8,2,6,1]"."""
    s = text.strip()
    if not s:
        raise PolyError("empty polynomial text")
    if s.startswith("["):
        if not s.endswith("]"):
            raise PolyError(f"bad list syntax: {text!r}")
        inner = s[1:-1].strip()
        items = [v.strip() for v in inner.split(",")] if inner else []
        return Poly([int(v) for v in items], mod)
    coeffs = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise PolyError(f"cannot parse polynomial at {s[pos:]!r}")
        sign, num, xsym, exp = m.groups()
        if num is None and xsym is None:
            raise PolyError(f"cannot parse polynomial at {s[pos:]!r}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        e = 0
        if xsym:
            e = int(exp) if exp is not None else 1
        elif exp is not None:
            raise PolyError(f"exponent without x in {text!r}")
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
    deg = max(coeffs)
    return Poly([coeffs.get(i, 0) for i in range(deg + 1)], mod)


def poly_to_string(u):
    """Canonical caret form: residues in [0, mod), descending powers."""
    if u.is_zero:
        return "0"
    parts = []
    for e in range(u.degree, -1, -1):
        c = u.coeff(e)
        if not c:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            xs = "x" if e == 1 else f"x^{e}"
            parts.append(xs if c == 1 else f"{c}{xs}")
    return "+".join(parts)


# ---------------------------------------------------------------------------
# cyclotomic cosets, factorization of x^n - 1, Hensel lifting
# ---------------------------------------------------------------------------

def cyclotomic_cosets(p, n):
    """Partition of Z_n into orbits of multiplication by p, sorted by minimum."""
    seen = [False] * n
    cosets = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = []
        e = start
        while not seen[e]:
            seen[e] = True
            orbit.append(e)
            e = (e * p) % n
        cosets.append(tuple(sorted(orbit)))
    return sorted(cosets)


def multiplicative_order(m, n):
    if n == 1:
        return 1
    import math

    if math.gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) != 1")
    k, v = 1, m % n
    while v != 1:
        v = (v * m) % n
        k += 1
    return k


@dataclass(frozen=True)
class ExponentSet:
    """Root exponents of a divisor of x^n - 1: a set closed under *p mod n."""

    n: int
    exps: frozenset

    def __post_init__(self):
        object.__setattr__(self, "exps", frozenset(self.exps))

    def sumset(self, other):
        s = {(a + b) % self.n for a in self.exps for b in other.exps}
        return ExponentSet(self.n, s)


@dataclass(frozen=True)
class XnFactorization:
    """Basic-irreducible factorization of x^n - 1 over Z_{p^2} with cosets."""

    base: PrimeBase
    n: int
    factors: tuple  # of (Poly over p^2, coset tuple)

    def lifted(self):
        return [f for f, _ in self.factors]

    def reductions(self):
        return [reduce_mod_p(f, self.base) for f, _ in self.factors]

    def coset_of(self, index):
        return self.factors[index][1]


def hensel_lift(fbar, n, base):
    """The unique monic divisor of x^n - 1 over Z_{p^2} reducing to fbar.

    One Newton correction suffices for a single lifting level: with g the
    cofactor mod p and u*fbar + v*g = 1, the defect of the naive lift is
    divisible by p and v times it, reduced mod fbar, is the correction.
    """
    p, p2 = base.p, base.p2
    if not fbar.is_monic or fbar.mod != p:
        raise PolyError("hensel_lift expects a monic polynomial over Z_p")
    xn1_p = Poly.xn_minus_1(n, p)
    q, r = poly_divmod_monic(xn1_p, fbar)
    if not r.is_zero:
        raise NotADivisor(f"{poly_to_string(fbar)} does not divide x^{n}-1 mod {p}")
    gbar = q
    f1 = lift_to_p2(fbar, base)
    g1 = lift_to_p2(gbar, base)
    defect = Poly.xn_minus_1(n, p2) - f1 * g1
    e = Poly([c // p for c in defect.coeffs], p)  # all residues of defect are multiples of p
    g0, s0, t0 = poly_xgcd(fbar, gbar)
    assert g0 == Poly.one(p), "fbar and cofactor must be coprime"
    delta = poly_mod(t0 * e, fbar)  # t0*gbar = 1 - s0*fbar, so t0*e carries the fbar share
    lifted = f1 + lift_to_p2(delta, base) * p
    rem = poly_divmod_monic(Poly.xn_minus_1(n, p2), lifted)[1]
    if not rem.is_zero:
        raise PolyError("Hensel correction failed to produce a divisor")
    assert reduce_mod_p(lifted, base) == fbar
    return lifted


@functools.lru_cache(maxsize=None)
def _factor_cache(p, n):
    base = PrimeBase(p)
    import math

    if n < 1 or math.gcd(n, p) != 1:
        raise NotCoprime(f"require n >= 1 with gcd(n, p) = 1, got n={n}, p={p}")
    from . import extfield

    cosets = cyclotomic_cosets(p, n)
    d = multiplicative_order(p, n)
    fld = extfield.GFExt(p, d)
    xi = fld.primitive_root_of_unity(n)
    out = []
    for coset in cosets:
        fbar = fld.minimal_polynomial([fld.power(xi, e) for e in coset])
        lifted = hensel_lift(fbar, n, base)
        out.append((lifted, tuple(coset)))
    out.sort(key=lambda t: t[0].sort_key())
    prod = Poly.one(base.p2)
    for f, _ in out:
        prod = prod * f
    assert prod == Poly.xn_minus_1(n, base.p2)
    return XnFactorization(base, n, tuple(out))


def factor_xn_minus_1(base, n):
    """Factor x^n - 1 into basic irreducibles over Z_{p^2}, deterministically."""
    return _factor_cache(base.p, n)


def exponent_set_of(divisor, fact):
    """Union of the cosets of the factors whose reduction divides `divisor`."""
    base = fact.base
    if divisor.mod != base.p:
        raise PolyError("exponent_set_of expects a polynomial over Z_p")
    exps = set()
    acc = Poly.one(base.p)
    for f, coset in fact.factors:
        fbar = reduce_mod_p(f, base)
        if poly_divides(fbar, divisor):
            exps.update(coset)
            acc = acc * fbar
    if acc != divisor.monic():
        raise NotADivisor(
            f"{poly_to_string(divisor)} is not a divisor of x^{fact.n}-1 mod {base.p}"
        )
    return ExponentSet(fact.n, exps)


def divisor_from_exponents(exps, fact):
    """The monic divisor of x^n - 1 over Z_p whose root exponents are `exps`."""
    base = fact.base
    out = Poly.one(base.p)
    covered = set()
    for f, coset in fact.factors:
        if set(coset) <= exps.exps:
            out = out * reduce_mod_p(f, base)
            covered.update(coset)
    if covered != set(exps.exps):
        raise NotADivisor("exponent set is not a union of cosets")
    return out


def circle_product(c, j, fact):
    """The divisor whose roots are all j-fold products of roots of c.

    Computed as the j-fold sumset mod n of c's root exponents; sumsets of
    p-closed sets stay p-closed, so the result is a union of cosets.
    """
    if j < 1:
        raise PolyError("circle product needs j >= 1")
    e = exponent_set_of(c, fact)
    acc = e
    for _ in range(j - 1):
        acc = acc.sumset(e)
    return divisor_from_exponents(acc, fact)


def divisors_over_p2(g, fact):
    """All monic divisors of g over Z_{p^2}, g a product of basic factors."""
    base = fact.base
    if g.mod != base.p2:
        raise PolyError("divisors_over_p2 expects a polynomial over Z_{p^2}")
    parts = []
    rest = g
    for f, _ in fact.factors:
        q, r = poly_divmod_monic(rest, f)
        if r.is_zero:
            parts.append(f)
            rest = q
    if rest != Poly.one(base.p2):
        raise NotAProductOfFactors(
            f"{poly_to_string(g)} is not a product of factors of x^{fact.n}-1"
        )
    out = []
    for k in range(len(parts) + 1):
        for combo in itertools.combinations(parts, k):
            d = Poly.one(base.p2)
            for f in combo:
                d = d * f
            out.append(d)
    out.sort(key=Poly.sort_key)
    dedup = []
    for d in out:
        if not dedup or dedup[-1] != d:
            dedup.append(d)
    return dedup


def bezout_pair_lifted(h, g, n, base):
    """(lambda, mu) over Z_{p^2} with lambda*h + mu*g = 1 mod x^n - 1.

    Extended Euclid over Z_p followed by one Newton correction; h and g are
    coprime mod p whenever f*h*g = x^n - 1 with x^n - 1 squarefree mod p.
    """
    p, p2 = base.p, base.p2
    hbar = reduce_mod_p(h, base)
    gbar = reduce_mod_p(g, base)
    g0, lam0, mu0 = poly_xgcd(hbar, gbar)
    if g0 != Poly.one(p):
        raise NotCoprime("h and g are not coprime mod p")
    lam = lift_to_p2(lam0, base)
    mu = lift_to_p2(mu0, base)
    xn1 = Poly.xn_minus_1(n, p2)
    defect = Poly.one(p2) - (lam * h + mu * g)
    defect = poly_mod(defect, xn1)
    corr = Poly([c // p for c in defect.coeffs], p)
    boost = Poly.one(p2) + lift_to_p2(corr, base) * p
    lam = poly_mod(lam * boost, xn1)
    mu = poly_mod(mu * boost, xn1)
    check = poly_mod(lam * h + mu * g, xn1)
    assert check == Poly.one(p2), "Bezout lift failed"
    return lam, mu
