"""Arithmetic in the extension fields GF(p^d) used as splitting fields.

Elements are coefficient tuples of length d over Z_p, reduced modulo a fixed
irreducible m(y).  The modulus is found by exhaustive search in ascending
lexicographic order of coefficient tuples, so every run of every process
builds the same field.

The point of this module is independence: `circle_product_bruteforce`
enumerates actual roots of unity and multiplies them in the field, with no
reference to the sumset arithmetic in `polyalg`, so the two routes can be
checked against each other.
"""

from __future__ import annotations

import functools
import itertools

from .polyalg import Poly, poly_mod, poly_divmod_monic, PolyError, multiplicative_order


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _powmod_poly(b, e, m):
    r = Poly.one(b.mod)
    b = poly_mod(b, m)
    while e:
        if e & 1:
            r = poly_mod(r * b, m)
        b = poly_mod(b * b, m)
        e >>= 1
    return r


def is_irreducible(m):
    """Irreducibility over Z_p via the x^(p^k) - x ladder."""
    p = m.mod
    d = m.degree
    if d <= 0:
        return False
    if d == 1:
        return True
    x = Poly.x(p)
    if _powmod_poly(x, p**d, m) != poly_mod(x, m):
        return False
    for q in _prime_factors(d):
        probe = _powmod_poly(x, p ** (d // q), m) - poly_mod(x, m)
        g = probe
        a, b = m, g
        while not b.is_zero:
            a, b = b, poly_divmod_monic(a, b.monic())[1]
        if a.degree != 0:
            return False
    return True


@functools.lru_cache(maxsize=None)
def find_irreducible(p, d):
    """First monic irreducible of degree d over Z_p in lex coefficient order."""
    if d == 1:
        return Poly.x(p)
    for tail in itertools.product(range(p), repeat=d):
        m = Poly(list(tail) + [1], p)
        if is_irreducible(m):
            return m
    raise PolyError(f"no irreducible of degree {d} over GF({p})")  # pragma: no cover


class GFExt:
    """GF(p^d) as Z_p[y]/(m(y)); elements are length-d tuples over Z_p."""

    def __init__(self, p, d):
        self.p = p
        self.d = d
        self.modulus = find_irreducible(p, d)
        self.size = p**d
        self.zero = (0,) * d
        self.one = tuple([1] + [0] * (d - 1)) if d > 0 else ()

    def element(self, coeffs):
        c = [v % self.p for v in coeffs]
        c += [0] * (self.d - len(c))
        return tuple(c[: self.d])

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        prod = poly_mod(Poly(a, self.p) * Poly(b, self.p), self.modulus)
        return self.element(prod.coeffs)

    def power(self, a, e):
        r = self.one
        b = a
        e = int(e)
        if e < 0:
            raise ValueError("negative exponent")
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def elements(self):
        for tup in itertools.product(range(self.p), repeat=self.d):
            yield tup

    def primitive_root_of_unity(self, n):
        """First (in lex order) element of multiplicative order exactly n."""
        if (self.size - 1) % n != 0:
            raise PolyError(f"no n-th roots of unity: {n} does not divide p^d - 1")
        cof = (self.size - 1) // n
        checks = [n // q for q in _prime_factors(n)]
        for tup in self.elements():
            if tup == self.zero:
                continue
            z = self.power(tup, cof)
            if z == self.one and n > 1:
                continue
            if all(self.power(z, c) != self.one for c in checks):
                return z
        raise PolyError("no primitive root found")  # pragma: no cover

    def eval_poly(self, u, z):
        """Evaluate u in Z_p[x] at the field element z."""
        acc = self.zero
        for c in reversed(u.coeffs):
            acc = self.add(self.mul(acc, z), self.element((c,)))
        return acc

    def minimal_polynomial(self, roots):
        """prod (x - r) over the given roots; coefficients must land in Z_p."""
        coeffs = [self.one]  # ascending, over the field
        for r in roots:
            nr = self.neg(r)
            new = [self.zero] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                new[i] = self.add(new[i], self.mul(c, nr))
                new[i + 1] = self.add(new[i + 1], c)
            coeffs = new
        for c in coeffs:
            if any(v for v in c[1:]):
                raise PolyError("product of roots is not Frobenius closed")
        return Poly([c[0] for c in coeffs], self.p)


@functools.lru_cache(maxsize=None)
def _splitting_field(p, n):
    return GFExt(p, multiplicative_order(p, n))


def circle_product_bruteforce(c, j, n):
    """Circle product by explicit root enumeration in the splitting field.

    Roots of c are found by evaluating c at every n-th root of unity; the
    product polynomial is rebuilt from all j-fold products of those roots.
    """
    p = c.mod
    fld = _splitting_field(p, n)
    xi = fld.primitive_root_of_unity(n)
    roots = []
    for i in range(n):
        z = fld.power(xi, i)
        if fld.eval_poly(c, z) == fld.zero:
            roots.append(z)
    if len(roots) != c.degree:
        raise PolyError("input does not split with distinct roots of unity")
    products = set()
    for combo in itertools.product(roots, repeat=j):
        acc = fld.one
        for r in combo:
            acc = fld.mul(acc, r)
        products.add(acc)
    return fld.minimal_polynomial(sorted(products))
