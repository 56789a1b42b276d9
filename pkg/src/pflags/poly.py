"""Univariate polynomials over a finite field.

A polynomial is an immutable ascending coefficient tuple with no trailing
zeros; the empty tuple is the zero polynomial and ``degree`` of zero is -1.
Coefficients are int-encoded field elements (see ``fields``).  The
indeterminate is positional: the same class serves polynomials in the chart
coordinate x and, after a Frobenius rewrite, in the twist coordinate.
"""

from __future__ import annotations

from .errors import PflagsError
from .fields import Field, GF, find_irreducible_coeffs


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: Field, c: int) -> "Poly":
        return cls(field, (field.check(c),))

    @classmethod
    def monomial(cls, field: Field, c: int, n: int) -> "Poly":
        return cls(field, (0,) * n + (field.check(c),))

    # -- structure ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lc(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return format_poly(self, "x")

    # -- ring operations ----------------------------------------------------

    def _same_field(self, other: "Poly"):
        if self.field != other.field:
            raise PflagsError("mixed-field polynomial arithmetic")

    def __add__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F, ())
        out = [0] * (len(a) + len(b) - 1)
        if F.k == 1:
            p = F.p
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            out = [c % p for c in out]
        else:
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    def scale(self, c: int) -> "Poly":
        F = self.field
        if c == 0:
            return Poly(F, ())
        if c == 1:
            return self
        return Poly(F, [F.mul(c, a) for a in self.coeffs])

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise PflagsError("negative polynomial power")
        result = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        self._same_field(other)
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if self.degree < db:
            return Poly(F, ()), self
        inv_lead = F.inv(other.lc())
        quo = [0] * (self.degree - db + 1)
        for shift in range(self.degree - db, -1, -1):
            c = F.mul(rem[shift + db], inv_lead)
            if c:
                quo[shift] = c
                for i, bc in enumerate(other.coeffs):
                    rem[shift + i] = F.sub(rem[shift + i], F.mul(c, bc))
        return Poly(F, quo), Poly(F, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.field.inv(self.lc()))

    # -- calculus and substitution -------------------------------------------

    def derivative(self) -> "Poly":
        F = self.field
        if F.k == 1:
            p = F.p
            out = [c * i % p for i, c in enumerate(self.coeffs)][1:]
        else:
            out = [F.mul(c, F.scalar(i)) for i, c in enumerate(self.coeffs)][1:]
        return Poly(F, out)

    def evaluate(self, a: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def compose_xpow(self, n: int) -> "Poly":
        """Substitute x -> x^n."""
        if n < 1:
            raise PflagsError("substitution power must be >= 1")
        if n == 1 or self.is_zero():
            return self
        out = [0] * (self.degree * n + 1)
        for i, c in enumerate(self.coeffs):
            out[i * n] = c
        return Poly(self.field, out)

    def pth_root(self) -> "Poly":
        """The g with g^p = self; requires every exponent divisible by p."""
        F = self.field
        p = F.p
        for i, c in enumerate(self.coeffs):
            if c and i % p:
                raise PflagsError("polynomial is not a p-th power")
        return Poly(F, [F.pth_root(c) for c in self.coeffs[::p]])

    # -- factor structure ------------------------------------------------------

    def squarefree_decomposition(self) -> list[tuple["Poly", int]]:
        """Monic squarefree factors with multiplicities, valid in char p.

        Returns pairs (g, e), pairwise coprime squarefree monic g with
        distinct e >= 1 and prod g^e = self/lc.  Multiplicities divisible by p
        are recovered through p-th roots.
        """
        f = self.monic()
        out: list[tuple[Poly, int]] = []
        if f.degree <= 0:
            return out
        fp = f.derivative()
        if fp.is_zero():
            for g, e in f.pth_root().squarefree_decomposition():
                out.append((g, e * self.field.p))
            return out
        c = poly_gcd(f, fp)
        w = f // c
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, c)
            z = w // y
            if z.degree > 0:
                out.append((z, i))
            w = y
            c = c // y
            i += 1
        if c.degree > 0:
            for g, e in c.pth_root().squarefree_decomposition():
                out.append((g, e * self.field.p))
        out.sort(key=lambda ge: ge[1])
        return out


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def find_irreducible(p: int, k: int) -> Poly:
    """Smallest monic irreducible polynomial of degree k over F_p.

    Candidates are ordered by the integer value of their little-endian base-p
    coefficient vector; for k = 1 the marker polynomial x is returned.
    """
    return Poly(GF(p), find_irreducible_coeffs(p, k))


def roots_in_field(f: Poly) -> list[int]:
    """All roots of f in the ambient field, with multiplicity, by evaluation.

    Roots are reported in increasing element encoding, each repeated per its
    multiplicity (found by repeated division).
    """
    if f.is_zero():
        raise PflagsError("roots of the zero polynomial")
    F = f.field
    out = []
    for a in F.elements():
        if f.evaluate(a) == 0:
            lin = Poly(F, (F.neg(a), 1))
            g = f
            while True:
                q, r = divmod(g, lin)
                if not r.is_zero():
                    break
                out.append(a)
                g = q
    return out


def format_poly(f: Poly, var: str = "x") -> str:
    if f.is_zero():
        return "0"
    F = f.field
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        cs = str(c) if F.k == 1 else str(F.coeffs(c))
        if i == 0:
            parts.append(cs)
        else:
            xs = var if i == 1 else f"{var}^{i}"
            parts.append(xs if c == 1 else f"{cs}*{xs}")
    return " + ".join(parts)
