"""Exact integer polynomial arithmetic, fraction-free determinants, and
real-root isolation on (0, 1).

Coefficients are arbitrary-precision Python ints throughout: Bareiss
intermediates for the kneading matrices overflow 64 bits, and the root
bisection relies on exact sign evaluation at rationals.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import InexactDivisionError

NEG_INF = float("-inf")


class Poly:
    """Integer polynomial in one variable, ascending coefficients.

    Immutable and kept normalized (no trailing zeros), so equality and
    hashing are structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def t() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def const(c: int) -> "Poly":
        return Poly((c,))

    @staticmethod
    def monomial(c: int, k: int) -> "Poly":
        return Poly((0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Poly":
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return Poly((0,) * k + self.coeffs)

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, abs(c))
        return g

    def primitive(self) -> "Poly":
        """Divide by the content, normalizing the leading sign to positive."""
        g = self.content()
        if g == 0:
            return self
        if self.leading() < 0:
            g = -g
        return Poly(tuple(c // g for c in self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def to_list(self):
        return list(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "t" if mag == 1 else f"{mag}*t"
            else:
                term = f"t^{i}" if mag == 1 else f"{mag}*t^{i}"
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def exact_div(a: Poly, b: Poly) -> Poly:
    """Quotient a / b in the integer polynomial ring; b must divide a."""
    if b.is_zero():
        raise InexactDivisionError("division by the zero polynomial")
    if a.is_zero():
        return Poly()
    if a.degree < b.degree:
        raise InexactDivisionError("degree of divisor exceeds degree of dividend")
    rem = list(a.coeffs)
    bc = b.coeffs
    lead = bc[-1]
    out = [0] * (len(rem) - len(bc) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = rem[i + len(bc) - 1]
        if c % lead != 0:
            raise InexactDivisionError(f"{b!r} does not divide {a!r}")
        q = c // lead
        out[i] = q
        if q:
            for j, cb in enumerate(bc):
                rem[i + j] -= q * cb
    if any(rem):
        raise InexactDivisionError(f"{b!r} does not divide {a!r}")
    return Poly(out)


def pseudo_rem(a: Poly, b: Poly) -> Poly:
    """Remainder of abs(lc(b))**d * a modulo b, an integer polynomial.

    The scale factor is kept positive so the result is sign-faithful for
    Sturm chains.
    """
    if b.is_zero():
        raise ZeroDivisionError("pseudo remainder by zero polynomial")
    d = int(a.degree - b.degree) + 1
    if d <= 0:
        return a
    rem = list(a.coeffs)
    bc = b.coeffs
    lead = bc[-1]
    steps = 0
    while len(rem) >= len(bc) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(bc):
            break
        head = rem[-1]
        rem = [c * lead for c in rem]
        steps += 1
        off = len(rem) - len(bc)
        for j, cb in enumerate(bc):
            rem[off + j] -= head * cb
        rem.pop()
    result = Poly(rem)
    missing = d - steps
    if missing > 0:
        result = result * (lead ** missing)
    if lead < 0 and d % 2 == 1:
        result = -result
    return result


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Greatest common divisor in the integer polynomial ring."""
    if a.is_zero():
        return b.primitive() * b.content() if not b.is_zero() else Poly()
    if b.is_zero():
        return a.primitive() * a.content()
    content = int_gcd(a.content(), b.content())
    x, y = a.primitive(), b.primitive()
    if x.degree < y.degree:
        x, y = y, x
    while not y.is_zero():
        r = pseudo_rem(x, y).primitive()
        x, y = y, r
    return x * content


def squarefree_part(p: Poly) -> Poly:
    """p divided by gcd(p, p'), with positive leading coefficient."""
    if p.is_zero():
        return p
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.primitive()
    return exact_div(p, g).primitive()


def sturm_chain(p: Poly):
    """Sturm sequence of a squarefree polynomial."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        r = pseudo_rem(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append((-r).primitive())
    return [q for q in chain if not q.is_zero()]


def sign_variations(chain, x: Fraction) -> int:
    signs = [s for s in (q.sign_at(x) for q in chain) if s != 0]
    return sum(1 for s0, s1 in zip(signs, signs[1:]) if s0 != s1)


def count_roots(chain, a: Fraction, b: Fraction) -> int:
    """Number of roots in (a, b]; a and b must not be roots of chain[0]."""
    return sign_variations(chain, a) - sign_variations(chain, b)


def _deflate_endpoints(p: Poly) -> Poly:
    """Remove roots at 0 and 1 from a squarefree polynomial."""
    if p.constant() == 0:
        p = Poly(p.coeffs[1:])
    if p(1) == 0:
        p = exact_div(p, Poly((-1, 1)))
    return p


def count_roots_in_unit_interval(p: Poly) -> int:
    """Number of distinct real roots of p in the open interval (0, 1)."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    q = _deflate_endpoints(squarefree_part(p))
    if q.degree <= 0:
        return 0
    chain = sturm_chain(q)
    return count_roots(chain, Fraction(0), Fraction(1))


def smallest_root_in_unit_interval(p: Poly, tol: float = 1e-12):
    """Least root of p in (0, 1) to absolute tolerance tol, or None.

    Sturm counts steer a dyadic bisection that always keeps the leftmost
    root inside the bracket; every sign is evaluated exactly.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    q = _deflate_endpoints(squarefree_part(p))
    if q.degree <= 0:
        return None
    chain = sturm_chain(q)
    lo, hi = Fraction(0), Fraction(1)
    if count_roots(chain, lo, hi) == 0:
        return None
    while float(hi - lo) > tol:
        mid = (lo + hi) / 2
        if count_roots(chain, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return float((lo + hi) / 2)


def bareiss_determinant(matrix) -> Poly:
    """Exact determinant of a square matrix of Poly via fraction-free
    elimination.

    Pivoting takes the first nonzero entry by row order; every interior
    division is exact by the Bareiss identity.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        return Poly.one()
    m = [list(row) for row in matrix]
    sign = 1
    prev = Poly.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Poly.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(pivot * row_i[j] - head * m[k][j], prev)
            row_i[k] = Poly.zero()
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det
