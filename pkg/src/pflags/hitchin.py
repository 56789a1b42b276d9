"""Chart-level p-curvature laboratory for the hyperbolic regime.

A connection here is just d + A dx on a trivialized affine chart, with A an
arbitrary matrix over F_q(x); no global geometry is imposed.  The module
computes characteristic polynomials of p-curvature and their descent to the
twist, the dimension count showing split characteristic polynomials are rare,
rank-2 certificates that no stable line exists in the chart, and the
triangularization algorithm for nilpotent p-curvature.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    InternalInvariantError,
    NeedsExtensionError,
    PflagsError,
    PreconditionError,
)
from .fields import Field
from .matrix import (
    MatRF,
    apply_connection,
    charpoly_berkowitz,
    gauge_transform,
    horizontal_sections,
    is_nilpotent,
    kernel,
    p_curvature_matrix,
    solve,
)
from .poly import Poly
from .ratfunc import RatFunc, in_frobenius_subfield, sqrt_ratfunc


@dataclass(frozen=True)
class ChartConn:
    """d + A dx on a trivialized chart; entries are reduced rational functions."""

    field: Field
    r: int
    A: MatRF

    def __post_init__(self):
        if self.A.n != self.r or self.A.field != self.field:
            raise PflagsError("chart matrix shape or field mismatch")

    @classmethod
    def from_conn0(cls, c) -> "ChartConn":
        """Embed a split-model connection on the projective line by forgetting
        the chart at infinity."""
        return cls(c.field, c.rank, c.matrix())


@dataclass(frozen=True)
class CharPolyP:
    """Non-leading coefficients of det(t - psi) plus the twist-descent flag."""

    coeffs: tuple[RatFunc, ...]
    descent_ok: bool

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def full(self) -> list[RatFunc]:
        """Ascending coefficients including the leading 1."""
        field = self.coeffs[0].field
        return list(self.coeffs) + [RatFunc.one(field)]


class Verdict(enum.Enum):
    CERTIFIED = "certified"
    NOT_CERTIFIED = "not_certified"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class NoFlagCertificate:
    verdict: Verdict
    char: CharPolyP
    witness: RatFunc | None = None
    reason: str = ""


@dataclass(frozen=True)
class HitchinDims:
    dim_b: int
    dim_d: int
    gamma_nondominant: bool


@dataclass(frozen=True)
class NilpotentFlag:
    """Gauge matrix whose columns triangularize the connection; the flag steps
    are the spans of the leading columns, so the permutation is the identity."""

    gauge: MatRF
    perm: tuple[int, ...]


def p_curvature_chart(c: ChartConn) -> MatRF:
    """The p-curvature matrix T^p on the chart, T(v) = v' + A v.

    Linearity over the structure sheaf is re-verified on a sample section
    before returning; failure indicates an iteration bug, not bad input.
    """
    F = c.field
    psi = p_curvature_matrix(c.A, F.p)
    f = RatFunc(Poly(F, (1, 1)))  # x + 1
    v = tuple(RatFunc(Poly.monomial(F, 1, i % 3)) for i in range(c.r))
    lhs = tuple(f * e for e in v)
    rhs = v
    for _ in range(F.p):
        lhs = apply_connection(c.A, lhs)
        rhs = apply_connection(c.A, rhs)
    if lhs != tuple(f * e for e in rhs):
        raise InternalInvariantError("p-curvature operator is not O-linear")
    if rhs != psi.matvec(v):
        raise InternalInvariantError("p-curvature matrix disagrees with iterated T")
    return psi


def char_poly_psi(c: ChartConn) -> CharPolyP:
    """det(t - psi) by the division-free recurrence; each coefficient is
    tested for membership in the twist function field F_q(x^p)."""
    cp = charpoly_berkowitz(p_curvature_chart(c))
    coeffs = tuple(cp[:-1])
    descent_ok = all(in_frobenius_subfield(a, 1) for a in coeffs if not a.is_zero())
    return CharPolyP(coeffs, descent_ok)


def hitchin_dims(g: int, r: int) -> HitchinDims:
    """Dimension of the space of candidate characteristic polynomials versus
    the split locus: dim B = g + (r^2 - 1)(g - 1) against dim D = r g.

    The count uses dim H^0(Omega^i) = (2i - 1)(g - 1) for i >= 2, so it needs
    g >= 2.
    """
    if g < 2:
        raise PreconditionError(f"genus must be >= 2 for this count, got {g}")
    if r < 1:
        raise PreconditionError(f"rank must be >= 1, got {r}")
    dim_b = g + (r * r - 1) * (g - 1)
    dim_d = r * g
    return HitchinDims(dim_b, dim_d, dim_b > dim_d)


def no_flag_certificate_rank2(c: ChartConn) -> NoFlagCertificate:
    """Certify that no line in the chart is stable under the connection.

    A stable line forces an eigenline of psi over F_q(x), so an irreducible
    det(t - psi) rules it out.  For p odd this is a non-square discriminant;
    for p = 2 with zero trace a non-square constant term.  The remaining
    p = 2 case would need an Artin-Schreier irreducibility test and returns
    Unknown rather than a possibly wrong verdict.
    """
    if c.r != 2:
        raise PreconditionError(f"certificate requires rank 2, got rank {c.r}")
    F = c.field
    char = char_poly_psi(c)
    a0, a1 = char.coeffs
    s = -a1  # trace of psi
    q = a0  # det of psi
    if F.p != 2:
        four = RatFunc.constant(F, F.scalar(4))
        disc = s * s - four * q
        root = sqrt_ratfunc(disc)
        if root is None:
            return NoFlagCertificate(Verdict.CERTIFIED, char, disc,
                                     "discriminant is a non-square in F_q(x)")
        half = RatFunc.constant(F, F.inv(F.scalar(2)))
        eig = (s + root) * half
        return NoFlagCertificate(Verdict.NOT_CERTIFIED, char, eig,
                                 "psi has an eigenvalue over F_q(x)")
    if s.is_zero():
        root = sqrt_ratfunc(q)
        if root is None:
            return NoFlagCertificate(Verdict.CERTIFIED, char, q,
                                     "constant term is a non-square in F_q(x)")
        return NoFlagCertificate(Verdict.NOT_CERTIFIED, char, root,
                                 "psi has an eigenvalue over F_q(x)")
    return NoFlagCertificate(Verdict.UNKNOWN, char, None,
                             "p = 2 with nonzero trace: Artin-Schreier case not decided")


def nilpotent_flag_chart(c: ChartConn) -> NilpotentFlag:
    """Triangularize a connection whose p-curvature is nilpotent.

    Recursively: the kernel of psi is stable under T (psi is T^p, which
    commutes with T) and carries vanishing p-curvature, so it contains a
    horizontal vector over F_q(x); that line starts the flag, and the quotient
    inherits nilpotent p-curvature.  The returned gauge G makes
    G^{-1} A G + G^{-1} G' upper triangular, which is re-verified.
    """
    F = c.field
    psi = p_curvature_chart(c)
    if not is_nilpotent(psi):
        raise PreconditionError("p-curvature is not nilpotent; no flag this way")
    gauge = _triangularize(F, c.A)
    transformed = gauge_transform(c.A, gauge)
    for i in range(c.r):
        for j in range(i):
            if not transformed.rows[i][j].is_zero():
                raise InternalInvariantError("gauge failed to triangularize the connection")
    return NilpotentFlag(gauge, tuple(range(c.r)))


def _triangularize(field: Field, a: MatRF) -> MatRF:
    r = a.n
    if r == 1:
        return MatRF.identity(field, 1)
    psi = p_curvature_matrix(a, field.p)
    ker = kernel(psi)
    if not ker:
        raise PreconditionError("p-curvature has trivial kernel; not nilpotent")
    v0 = _horizontal_in_subspace(field, a, ker)
    g1_cols = _extend_to_basis(field, v0, r)
    g1 = MatRF(field, [[g1_cols[j][i] for j in range(r)] for i in range(r)])
    b = gauge_transform(a, g1)
    for i in range(r):
        if not b.rows[i][0].is_zero():
            raise InternalInvariantError("horizontal column did not produce a zero column")
    sub = MatRF(field, [row[1:] for row in b.rows[1:]])
    g_sub = _triangularize(field, sub)
    zero, one = RatFunc.zero(field), RatFunc.one(field)
    block = [[one] + [zero] * (r - 1)]
    for i in range(r - 1):
        block.append([zero] + list(g_sub.rows[i]))
    return g1 * MatRF(field, block)


def _horizontal_in_subspace(field: Field, a: MatRF, basis: list) -> tuple:
    """A nonzero T-horizontal vector inside the T-stable span of basis."""
    k = len(basis)
    images = [apply_connection(a, v) for v in basis]
    cols = []
    for img in images:
        x = solve(basis, img, field)
        if x is None:
            raise InternalInvariantError("kernel of psi is not stable under T")
        cols.append(x)
    restricted = MatRF(field, [[cols[j][i] for j in range(k)] for i in range(k)])
    sols = horizontal_sections(restricted)
    if not sols:
        raise NeedsExtensionError("no horizontal vector over the ground field")
    w = sols[0]
    v = [RatFunc.zero(field)] * a.n
    for coef, bv in zip(w, basis):
        if coef.is_zero():
            continue
        v = [acc + coef * e for acc, e in zip(v, bv)]
    v = tuple(v)
    if any(not e.is_zero() for e in apply_connection(a, v)):
        raise InternalInvariantError("restricted horizontal vector fails in the ambient space")
    return v


def _extend_to_basis(field: Field, v0, r: int) -> list:
    """Columns [v0, standard vectors] greedily completed to an invertible set."""
    zero, one = RatFunc.zero(field), RatFunc.one(field)
    cols = [tuple(v0)]
    for i in range(r):
        if len(cols) == r:
            break
        cand = tuple(one if t == i else zero for t in range(r))
        trial = cols + [cand]
        mat_rows = [[trial[j][t] for j in range(len(trial))] for t in range(r)]
        if _column_rank(field, mat_rows) == len(trial):
            cols.append(cand)
    if len(cols) != r:
        raise InternalInvariantError("failed to extend a vector to a basis")
    return cols


def _column_rank(field: Field, rows) -> int:
    from .matrix import _rref

    _, pivots = _rref([list(r) for r in rows])
    return len(pivots)
