"""Bundles and level-m differential modules on the projective line.

Everything lives in the split chart model: a bundle is a descending multiset
of summand degrees with transition matrix diag(x^{d_i}) between the two
standard charts, and a connection is d + A dx on the finite chart.  A level-m
object is stored through the level-shift equivalence as a level-0 connection
on the m-th Frobenius twist (coordinate y, pulled back via y -> x^{p^m});
divided-power operator actions are never materialized.

Validity of a chart matrix is decided by computing the actual infinity-chart
matrix and checking regularity at y = 0, which makes the entry-bound shape of
valid matrices (zero diagonal, A_{ji} != 0 only for d_j >= d_i + 2 with
deg A_{ji} <= d_j - d_i - 2) a testable consequence rather than an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantError, NeedsExtensionError, PreconditionError, PflagsError
from .fields import Field
from .matrix import MatRF, horizontal_sections, inverse, p_curvature_matrix
from .poly import Poly
from .ratfunc import RatFunc

PolyMat = tuple[tuple[Poly, ...], ...]


class BundleP1:
    """A direct sum of line bundles, stored as descending degrees."""

    __slots__ = ("degrees",)

    def __init__(self, degrees):
        ds = tuple(sorted((int(d) for d in degrees), reverse=True))
        if not ds:
            raise PflagsError("bundle must have positive rank")
        self.degrees = ds

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    def __eq__(self, other):
        return isinstance(other, BundleP1) and self.degrees == other.degrees

    def __hash__(self):
        return hash(self.degrees)

    def __repr__(self):
        return f"O{self.degrees}"


@dataclass(frozen=True)
class Violation:
    """A pole at y = 0 in the infinity-chart matrix."""

    row: int
    col: int
    order: int

    def describe(self) -> str:
        return f"entry ({self.row + 1},{self.col + 1}) has a pole of order {self.order} at infinity"


class Conn0:
    """A connection d + A dx on a split bundle, A an r x r matrix of polynomials."""

    __slots__ = ("field", "bundle", "A", "_violations")

    def __init__(self, field: Field, bundle: BundleP1, A):
        rows = tuple(tuple(e for e in row) for row in A)
        r = bundle.rank
        if len(rows) != r or any(len(row) != r for row in rows):
            raise PflagsError(f"matrix must be {r}x{r} to match the bundle rank")
        for row in rows:
            for e in row:
                if not isinstance(e, Poly) or e.field != field:
                    raise PflagsError("entries must be polynomials over the connection field")
        self.field = field
        self.bundle = bundle
        self.A = rows
        self._violations: list[Violation] | None = None

    @property
    def rank(self) -> int:
        return self.bundle.rank

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.bundle.degrees

    def matrix(self) -> MatRF:
        return MatRF.from_polys(self.field, self.A)

    def __eq__(self, other):
        return (
            isinstance(other, Conn0)
            and self.field == other.field
            and self.bundle == other.bundle
            and self.A == other.A
        )

    def __hash__(self):
        return hash((self.field, self.bundle, self.A))

    def __repr__(self):
        return f"Conn0({self.field!r}, {self.bundle!r})"


class DmBundle:
    """A level-m object stored as a level-0 connection on the m-th twist.

    The represented bundle on the original curve has degrees p^m times the
    base degrees, and all level-m questions are answered through the base
    connection plus the substitution x -> x^{p^m}.
    """

    __slots__ = ("m", "base")

    def __init__(self, m: int, base: Conn0):
        if m < 0:
            raise PreconditionError(f"level must be >= 0, got {m}")
        self.m = m
        self.base = base

    @property
    def field(self) -> Field:
        return self.base.field

    def underlying_degrees(self) -> tuple[int, ...]:
        scale = self.field.p**self.m
        return tuple(d * scale for d in self.base.degrees)

    def __eq__(self, other):
        return isinstance(other, DmBundle) and self.m == other.m and self.base == other.base

    def __repr__(self):
        return f"DmBundle(m={self.m}, base={self.base!r})"


class FlagP1:
    """A complete coordinate flag: step j is the span of the first j permuted
    basis vectors."""

    __slots__ = ("perm",)

    def __init__(self, perm):
        perm = tuple(int(i) for i in perm)
        if sorted(perm) != list(range(len(perm))):
            raise PflagsError(f"{perm} is not a permutation of 0..{len(perm) - 1}")
        self.perm = perm

    def steps(self):
        return [tuple(self.perm[:j]) for j in range(1, len(self.perm) + 1)]

    def __eq__(self, other):
        return isinstance(other, FlagP1) and self.perm == other.perm

    def __repr__(self):
        return f"FlagP1{self.perm}"


# -- existence of level-m structures ------------------------------------------------


def admits_level(b: BundleP1, p: int, m: int) -> bool:
    """Whether the split bundle carries a level-m module structure: every
    degree must be divisible by p^{m+1}."""
    if m < 0:
        raise PreconditionError(f"level must be >= 0, got {m}")
    q = p ** (m + 1)
    return all(d % q == 0 for d in b.degrees)


def canonical_connection(b: BundleP1, field: Field, m: int) -> DmBundle:
    """The canonical level-m structure on a bundle with p^{m+1} | degrees:
    base degrees d_i / p^m on the twist, base matrix zero."""
    p = field.p
    q = p ** (m + 1)
    for d in b.degrees:
        if d % q:
            raise PreconditionError(
                f"degree {d} is not divisible by p^(m+1) = {q}; no level-{m} structure"
            )
    base_degs = tuple(d // p**m for d in b.degrees)
    zero = Poly.zero(field)
    r = b.rank
    base = Conn0(field, BundleP1(base_degs), [[zero] * r for _ in range(r)])
    return DmBundle(m, base)


# -- validity -----------------------------------------------------------------------


def infinity_chart_matrix(c: Conn0) -> MatRF:
    """The connection matrix on the chart at infinity, as functions of y = 1/x:
    -y^{-2} (diag(d_i x^{-1}) + G^{-1} A G) at x = 1/y, G = diag(x^{d_i})."""
    F = c.field
    degs = c.degrees
    y = RatFunc.x(F)
    inv_y2 = RatFunc(Poly.one(F), Poly.monomial(F, 1, 2))
    rows = []
    for j in range(c.rank):
        row = []
        for i in range(c.rank):
            a = c.A[j][i]
            if a.is_zero():
                entry = RatFunc.zero(F)
            else:
                # a(1/y) = reversed(a) / y^deg
                rev = RatFunc(Poly(F, tuple(reversed(a.coeffs))), Poly.monomial(F, 1, a.degree))
                shift = degs[j] - degs[i]
                power = RatFunc(Poly.monomial(F, 1, shift)) if shift >= 0 else RatFunc(
                    Poly.one(F), Poly.monomial(F, 1, -shift)
                )
                entry = power * rev
            if i == j:
                entry = entry + RatFunc.constant(F, F.scalar(degs[i])) * y
            row.append(-inv_y2 * entry)
        rows.append(row)
    return MatRF(F, rows)


def validate(c: Conn0) -> list[Violation]:
    """All infinity-chart poles of the connection; empty exactly when c is a
    genuine connection on the split bundle."""
    if c._violations is None:
        inf = infinity_chart_matrix(c)
        out = []
        for j in range(c.rank):
            for i in range(c.rank):
                order = inf.rows[j][i].pole_order_at_zero()
                if order > 0:
                    out.append(Violation(j, i, order))
        c._violations = out
    return list(c._violations)


def structural_violations(c: Conn0) -> list[tuple[int, int]]:
    """Entry positions violating the derived shape of valid matrices; an
    implementation of validity independent of the infinity-chart computation,
    kept for cross-checking."""
    p = c.field.p
    degs = c.degrees
    bad = []
    for j in range(c.rank):
        for i in range(c.rank):
            a = c.A[j][i]
            if i == j:
                if degs[i] % p or not a.is_zero():
                    bad.append((j, i))
            elif not a.is_zero():
                gap = degs[j] - degs[i] - 2
                if gap < 0 or a.degree > gap:
                    bad.append((j, i))
    return bad


def ensure_valid(c: Conn0):
    violations = validate(c)
    if violations:
        detail = "; ".join(v.describe() for v in violations)
        raise PreconditionError(f"connection is not valid on the split bundle: {detail}")


# -- curvature ----------------------------------------------------------------------


def p_curvature(c: Conn0) -> MatRF:
    """Matrix of the p-th iterate of T(v) = v' + A v; on the standard chart
    the p-th symbol term vanishes, so this is the full obstruction."""
    ensure_valid(c)
    return p_curvature_matrix(c.matrix(), c.field.p)


def pm1_curvature(d: DmBundle) -> MatRF:
    """Level-m curvature of the represented object: the base p-curvature with
    x -> x^{p^m} substituted in every entry."""
    psi = p_curvature(d.base)
    if d.m == 0:
        return psi
    power = d.field.p**d.m
    return psi.map_entries(lambda e: e.compose_xpow(power))


def frobenius_pullback(d: DmBundle, s: int) -> DmBundle:
    """Pull back along s relative Frobenius steps: the base is unchanged, the
    level rises by s, underlying degrees multiply by p^s."""
    if s < 0:
        raise PreconditionError(f"pullback steps must be >= 0, got {s}")
    return DmBundle(d.m + s, d.base)


def as_level(c: Conn0, m: int = 0) -> DmBundle:
    return DmBundle(m, c)


# -- tensor and dual -----------------------------------------------------------------


def tensor(a: Conn0, b: Conn0) -> tuple[Conn0, tuple[int, ...]]:
    """Tensor product connection on the summed degrees.

    Returns the connection on the re-sorted degree multiset and the
    permutation used: position n of the output is pair index perm[n] in the
    lexicographic (i, k) enumeration of summand pairs.
    """
    if a.field != b.field:
        raise PflagsError("tensor of connections over different fields")
    F = a.field
    ra, rb = a.rank, b.rank
    pair_degrees = [a.degrees[i] + b.degrees[k] for i in range(ra) for k in range(rb)]
    zero = Poly.zero(F)
    n = ra * rb
    big = [[zero] * n for _ in range(n)]
    for j in range(ra):
        for i in range(ra):
            aji = a.A[j][i]
            if not aji.is_zero():
                for l in range(rb):
                    big[j * rb + l][i * rb + l] = big[j * rb + l][i * rb + l] + aji
    for l in range(rb):
        for k in range(rb):
            blk = b.A[l][k]
            if not blk.is_zero():
                for i in range(ra):
                    big[i * rb + l][i * rb + k] = big[i * rb + l][i * rb + k] + blk
    perm = _sorting_permutation(pair_degrees)
    newA = [[big[perm[u]][perm[v]] for v in range(n)] for u in range(n)]
    conn = Conn0(F, BundleP1([pair_degrees[t] for t in perm]), newA)
    return conn, perm


def dual(a: Conn0) -> tuple[Conn0, tuple[int, ...]]:
    """Dual connection: degrees negated and re-sorted, matrix -A^T conjugated
    by the sorting permutation (same permutation convention as tensor)."""
    F = a.field
    r = a.rank
    neg_degrees = [-d for d in a.degrees]
    negT = [[-a.A[v][u] for v in range(r)] for u in range(r)]
    perm = _sorting_permutation(neg_degrees)
    newA = [[negT[perm[u]][perm[v]] for v in range(r)] for u in range(r)]
    conn = Conn0(F, BundleP1([neg_degrees[t] for t in perm]), newA)
    return conn, perm


def _sorting_permutation(degrees) -> tuple[int, ...]:
    """Indices sorting degrees descending, stable within equal degrees."""
    return tuple(sorted(range(len(degrees)), key=lambda t: (-degrees[t], t)))


# -- Cartier descent -----------------------------------------------------------------


def cartier_descent(c: Conn0) -> tuple[BundleP1, MatRF]:
    """Descend a connection with vanishing p-curvature to the Frobenius twist.

    Returns the descended degrees (d_i / p) and an invertible frame whose
    columns are horizontal; horizontality and invertibility are re-verified.
    No field extension is attempted: a short horizontal basis raises instead.
    """
    ensure_valid(c)
    psi = p_curvature(c)
    if not psi.is_zero():
        raise PreconditionError("p-curvature does not vanish; nothing descends")
    a = c.matrix()
    sols = horizontal_sections(a)
    r = c.rank
    if len(sols) != r:
        raise NeedsExtensionError(
            f"found {len(sols)} horizontal sections over the ground field, need {r}"
        )
    frame = MatRF(c.field, [[sols[j][i] for j in range(r)] for i in range(r)])
    try:
        inverse(frame)
    except PflagsError as exc:
        raise NeedsExtensionError("horizontal sections do not form a frame") from exc
    descended = BundleP1(d // c.field.p for d in c.degrees)
    return descended, frame


# -- complete flags ------------------------------------------------------------------


def verify_flag(c: Conn0, flag: FlagP1) -> bool:
    """Whether every prefix span of the flag is stable under the connection.

    Coordinate spans of the split model are subbundles outright, so stability
    of each step is the whole condition: A may not map a chosen summand to an
    unchosen one.
    """
    if len(flag.perm) != c.rank:
        raise PreconditionError("flag size does not match the connection rank")
    chosen: set[int] = set()
    for s in flag.perm:
        chosen.add(s)
        for i in range(c.rank):
            if i in chosen:
                continue
            for col in chosen:
                if not c.A[i][col].is_zero():
                    return False
    return True


def complete_flag(obj: Conn0 | DmBundle) -> FlagP1:
    """A complete flag of subbundles stable under the connection.

    Level m > 0 reduces to the base connection on the twist, which carries the
    same flag.  At level 0 the permutation sorting degrees descending (stable
    within ties) works: a valid matrix only maps summands to strictly higher
    degree, so every descending prefix is stable.  The result is re-verified.
    """
    if isinstance(obj, DmBundle):
        return complete_flag(obj.base)
    ensure_valid(obj)
    perm = _sorting_permutation(obj.degrees)
    flag = FlagP1(perm)
    if not verify_flag(obj, flag):
        raise InternalInvariantError("constructed flag failed stability verification")
    return flag
