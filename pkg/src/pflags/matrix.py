"""Square matrices over F_q(x), with the linear algebra the geometry needs.

Besides ring operations this module provides: a division-free characteristic
polynomial (classical recurrences divide by integers that vanish mod p),
kernel and inverse by Gaussian elimination over the rational function field,
the action of a connection operator T(v) = v' + A v, its p-th iterate (the
p-curvature matrix), gauge transformation, and the solver for T(v) = 0 viewed
as F_q(x^p)-linear algebra on the rank-rp module F_q(x)^r.
"""

from __future__ import annotations

from .errors import InternalInvariantError, PflagsError
from .fields import Field
from .poly import Poly, poly_gcd
from .ratfunc import RatFunc

Vec = tuple[RatFunc, ...]


class MatRF:
    """An r x r matrix of reduced rational functions."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise PflagsError("matrix must be square and nonempty")
        for row in rows:
            for e in row:
                if not isinstance(e, RatFunc) or e.field != field:
                    raise PflagsError("matrix entries must be RatFunc over the field")
        self.field = field
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, field: Field, n: int) -> "MatRF":
        one, zero = RatFunc.one(field), RatFunc.zero(field)
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, n: int) -> "MatRF":
        zero = RatFunc.zero(field)
        return cls(field, [[zero] * n for _ in range(n)])

    @classmethod
    def from_polys(cls, field: Field, rows) -> "MatRF":
        return cls(field, [[RatFunc(e) for e in row] for row in rows])

    def __getitem__(self, i: int):
        return self.rows[i]

    def __eq__(self, other):
        return isinstance(other, MatRF) and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        body = "; ".join(", ".join(repr(e) for e in row) for row in self.rows)
        return f"[{body}]"

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def __add__(self, other: "MatRF") -> "MatRF":
        return MatRF(self.field, [[a + b for a, b in zip(r1, r2)]
                                  for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "MatRF") -> "MatRF":
        return MatRF(self.field, [[a - b for a, b in zip(r1, r2)]
                                  for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "MatRF":
        return MatRF(self.field, [[-a for a in row] for row in self.rows])

    def __mul__(self, other: "MatRF") -> "MatRF":
        n = self.n
        cols = list(zip(*other.rows))
        return MatRF(self.field, [[_dot(self.rows[i], cols[j]) for j in range(n)]
                                  for i in range(n)])

    def scale(self, c: RatFunc) -> "MatRF":
        return MatRF(self.field, [[c * a for a in row] for row in self.rows])

    def transpose(self) -> "MatRF":
        return MatRF(self.field, list(zip(*self.rows)))

    def matvec(self, v: Vec) -> Vec:
        return tuple(_dot(row, v) for row in self.rows)

    def derivative(self) -> "MatRF":
        return MatRF(self.field, [[a.derivative() for a in row] for row in self.rows])

    def map_entries(self, fn) -> "MatRF":
        return MatRF(self.field, [[fn(a) for a in row] for row in self.rows])

    def pow(self, e: int) -> "MatRF":
        result = MatRF.identity(self.field, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


def _dot(u, v) -> RatFunc:
    it = iter(zip(u, v))
    a, b = next(it)
    acc = a * b
    for a, b in it:
        if a.is_zero() or b.is_zero():
            continue
        acc = acc + a * b
    return acc


def charpoly_berkowitz(m: MatRF) -> list[RatFunc]:
    """Characteristic polynomial of m, ascending coefficients, leading 1.

    Berkowitz's vector recurrence: division-free, so safe in characteristic p.
    """
    F = m.field
    one = RatFunc.one(F)
    n = m.n
    poly = [one, -m.rows[0][0]]  # descending coefficients for the 1x1 corner
    for i in range(1, n):
        a = m.rows[i][i]
        row = m.rows[i][:i]
        col = tuple(m.rows[t][i] for t in range(i))
        sub = [m.rows[t][:i] for t in range(i)]
        # first column of the Toeplitz matrix: 1, -a, -row.col, -row.sub.col, ...
        toeplitz_col = [one, -a]
        v = col
        for _ in range(i):
            toeplitz_col.append(-_dot(row, v))
            v = tuple(_dot(r, v) for r in sub)
        new = []
        for t in range(i + 2):
            acc = None
            for b in range(min(t, i) + 1):
                term = toeplitz_col[t - b] * poly[b]
                acc = term if acc is None else acc + term
            new.append(acc)
        poly = new
    poly.reverse()
    return poly


def is_nilpotent(m: MatRF) -> bool:
    return m.pow(m.n).is_zero()


# -- Gaussian elimination over F_q(x) --------------------------------------------


def _rref(rows: list[list[RatFunc]]) -> tuple[list[list[RatFunc]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if not rows[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [inv * e for e in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def kernel(m: MatRF) -> list[Vec]:
    """A basis of the right kernel.

    Each basis vector has a 1 at its free column and free columns are taken in
    increasing index order, so the result is deterministic.
    """
    rows, pivots = _rref([list(r) for r in m.rows])
    F = m.field
    zero, one = RatFunc.zero(F), RatFunc.one(F)
    free = [c for c in range(m.n) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * m.n
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return basis


def inverse(m: MatRF) -> MatRF:
    """Matrix inverse by Gauss-Jordan; raises on singular input."""
    F = m.field
    n = m.n
    ident = MatRF.identity(F, n)
    aug = [list(m.rows[i]) + list(ident.rows[i]) for i in range(n)]
    rows, pivots = _rref(aug)
    if pivots != list(range(n)):
        raise PflagsError("matrix is singular")
    return MatRF(F, [row[n:] for row in rows])


def solve(m_cols: list[Vec], target: Vec, field: Field) -> Vec | None:
    """Solve sum_j x_j * m_cols[j] = target; None when inconsistent."""
    ncols = len(m_cols)
    nrows = len(target)
    aug = [[m_cols[j][i] for j in range(ncols)] + [target[i]] for i in range(nrows)]
    rows, pivots = _rref(aug)
    if ncols in pivots:
        return None
    zero = RatFunc.zero(field)
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][ncols]
    return tuple(x)


# -- connection operator and p-curvature ---------------------------------------


def apply_connection(a: MatRF, v: Vec) -> Vec:
    """T(v) = v' + A v."""
    av = a.matvec(v)
    return tuple(x.derivative() + y for x, y in zip(v, av))


def gauge_transform(a: MatRF, g: MatRF) -> MatRF:
    """Connection matrix in the frame given by the columns of g:
    g^{-1} (A g + g')."""
    return inverse(g) * (a * g + g.derivative())


def p_curvature_matrix(a: MatRF, p: int) -> MatRF:
    """The matrix of T^p, T(v) = v' + A v; O_X-linear by Jacobson's theorem.

    Columns are computed over a common denominator: with A = B/beta and
    v = n/delta, T(v) = (beta(n' delta - n delta') + delta B n) / (beta delta^2),
    reducing by the gcd each step to keep degrees at their true size.
    """
    F = a.field
    n = a.n
    beta = Poly.one(F)
    for row in a.rows:
        for e in row:
            if not e.den.is_one():
                beta = beta // poly_gcd(beta, e.den) * e.den
    bmat = [[e.num * (beta // e.den) for e in row] for row in a.rows]
    zero_p = Poly.zero(F)
    columns = []
    for i in range(n):
        num = [zero_p] * n
        num[i] = Poly.one(F)
        den = Poly.one(F)
        for _ in range(p):
            num, den = _apply_t_common_den(bmat, beta, num, den)
        columns.append([RatFunc(e, den) for e in num])
    return MatRF(F, [[columns[j][i] for j in range(n)] for i in range(n)])


def _apply_t_common_den(bmat, beta: Poly, num: list[Poly], den: Poly):
    """One application of T to v = num/den where A = bmat/beta."""
    dden = den.derivative()
    bn = [_poly_dot(row, num) for row in bmat]
    new_num = [beta * (ni.derivative() * den - ni * dden) + den * bi
               for ni, bi in zip(num, bn)]
    new_den = beta * den * den
    if not new_den.is_one():
        g = new_den
        for e in new_num:
            g = poly_gcd(g, e)
            if g.degree <= 0:
                break
        if g.degree > 0:
            new_num = [e // g for e in new_num]
            new_den = new_den // g
        c = new_den.lc()
        if c != 1:
            inv = new_den.field.inv(c)
            new_den = new_den.scale(inv)
            new_num = [e.scale(inv) for e in new_num]
    return new_num, new_den


def _poly_dot(row, vec) -> Poly:
    acc = None
    for a, b in zip(row, vec):
        if a.is_zero() or b.is_zero():
            continue
        term = a * b
        acc = term if acc is None else acc + term
    if acc is None:
        return Poly.zero(row[0].field)
    return acc


# -- horizontal sections: T(v) = 0 as F_q(x^p)-linear algebra ---------------------


def _frobenius_parts(f: RatFunc, p: int) -> list[RatFunc]:
    """Write f = sum_{j<p} c_j(x^p) x^j; returns the c_j as functions of y.

    Uses f = n d^{p-1} / d^p and d^p = D(x^p) with D the coefficient-wise
    Frobenius of d, then groups numerator monomials by exponent mod p.
    """
    F = f.field
    if f.is_zero():
        return [RatFunc.zero(F)] * p
    d = f.den
    if d.is_one():
        big = f.num
        den_y = Poly.one(F)
    else:
        big = f.num * d ** (p - 1)
        den_y = Poly(F, [F.frobenius(c) for c in d.coeffs])
    parts = []
    for j in range(p):
        parts.append(RatFunc(Poly(F, big.coeffs[j::p]), den_y))
    return parts


def horizontal_sections(a: MatRF) -> list[Vec]:
    """A basis of { v in F_q(x)^r : v' + A v = 0 } over F_q(x^p).

    F_q(x)^r is an F_q(x^p)-module with basis x^j e_i (0 <= j < p), on which T
    acts linearly; the kernel is computed by Gaussian elimination over the
    twist function field and mapped back.  Every returned vector is
    re-verified to be horizontal.
    """
    F = a.field
    p = F.p
    r = a.n
    dim = r * p
    zero = RatFunc.zero(F)
    cols: list[list[RatFunc]] = []
    for i in range(r):
        a_parts = [_frobenius_parts(a.rows[t][i], p) for t in range(r)]
        for j in range(p):
            col = [zero] * dim
            if j >= 1:
                col[i * p + (j - 1)] = RatFunc.constant(F, F.scalar(j))
            # A[t][i] * x^j spread over the x-power basis, carrying y = x^p
            for t in range(r):
                for jj in range(p):
                    c = a_parts[t][jj]
                    if c.is_zero():
                        continue
                    e = jj + j
                    if e >= p:
                        c = c * RatFunc.x(F)  # the carried x^p is y
                        e -= p
                    idx = t * p + e
                    col[idx] = col[idx] + c
            cols.append(col)
    m = MatRF(F, [[cols[c][t] for c in range(dim)] for t in range(dim)])
    sols = []
    for kv in kernel(m):
        v = []
        for i in range(r):
            acc = RatFunc.zero(F)
            for j in range(p):
                c = kv[i * p + j]
                if c.is_zero():
                    continue
                acc = acc + c.compose_xpow(p) * RatFunc(Poly.monomial(F, 1, j))
            v.append(acc)
        v = tuple(v)
        if any(not e.is_zero() for e in apply_connection(a, v)):
            raise InternalInvariantError("claimed horizontal section fails T(v) = 0")
        sols.append(v)
    return sols
