"""The pencil of subalgebras of g x g attached to (GL(q+p), GL(q) x GL(p)).

Elements are pairs of (q+p) x (q+p) matrices.  The subalgebra at parameter t
is spanned by the block-diagonal diagonal copy of gl(q) x gl(p) together with
off-diagonal pairs

    ((0, tB; 0, 0), (0, B; 0, 0))   and   ((0, 0; C, 0), (0, 0; tC, 0)),

B of shape q x p and C of shape p x q.  Limits at t -> 0 and t -> infinity
are taken vector by vector in the Grassmannian; real forms are cut out by
the antiholomorphic involution built from J = diag(I_q, -I_p).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .scalars import (
    INFINITY,
    GaussianRational,
    Point,
    QI_ZERO,
    QI_ONE,
    RationalFunction,
    RF_ONE,
    RF_ZERO,
    RF_Z,
)
from .linalg import ExactMatrix, in_span, solve, span_rank
from .liefam import (
    FamilyMorphism,
    LieAlgebra,
    LieFamily,
    _freeze,
    check_morphism,
    contraction_family,
    fiber_invariants,
    sl2_algebra,
)
from .sl2fam import sl2_involution


class RankDropAtLimit(Exception):
    pass


class NoIsomorphismFound(Exception):
    pass


MatrixPair = Tuple[tuple, tuple]  # two n x n matrices as tuples of row tuples


@dataclass(frozen=True)
class GrassmannPencil:
    p: int
    q: int
    det_one: bool = False

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError("block sizes must be positive")

    @property
    def n(self) -> int:
        return self.p + self.q


# ---------------------------------------------------------------------------
# Matrix-pair helpers (entries: anything with exact ring operations)
# ---------------------------------------------------------------------------


def _elementary(n: int, i: int, j: int, one, zero):
    return tuple(
        tuple(one if (r, c) == (i, j) else zero for c in range(n)) for r in range(n)
    )


def _zero_matrix(n: int, zero):
    return tuple(tuple(zero for _ in range(n)) for _ in range(n))


def _mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mat_scale(a, c):
    return tuple(tuple(c * x for x in row) for row in a)


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(
            _sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)
        )
        for i in range(n)
    )


def _sum(terms):
    acc = None
    for t in terms:
        acc = t if acc is None else acc + t
    return acc


def pair_add(x: MatrixPair, y: MatrixPair) -> MatrixPair:
    return (_mat_add(x[0], y[0]), _mat_add(x[1], y[1]))


def pair_scale(x: MatrixPair, c) -> MatrixPair:
    return (_mat_scale(x[0], c), _mat_scale(x[1], c))


def pair_bracket(x: MatrixPair, y: MatrixPair) -> MatrixPair:
    return (
        _mat_sub(_mat_mul(x[0], y[0]), _mat_mul(y[0], x[0])),
        _mat_sub(_mat_mul(x[1], y[1]), _mat_mul(y[1], x[1])),
    )


def pair_product(x: MatrixPair, y: MatrixPair) -> MatrixPair:
    return (_mat_mul(x[0], y[0]), _mat_mul(x[1], y[1]))


def flatten_pair(x: MatrixPair) -> list:
    out = []
    for m in x:
        for row in m:
            out.extend(row)
    return out


def _pair_is_zero(x: MatrixPair) -> bool:
    return all(_entry_is_zero(v) for v in flatten_pair(x))


def _entry_is_zero(v) -> bool:
    return v.is_zero() if hasattr(v, "is_zero") else v == 0


# ---------------------------------------------------------------------------
# Pencil bases
# ---------------------------------------------------------------------------


def k_basis(pencil: GrassmannPencil, one=QI_ONE, zero=QI_ZERO) -> List[MatrixPair]:
    """Diagonally embedded basis of gl(q) x gl(p), trace part removed when
    det_one: diagonal units are replaced by consecutive differences."""
    n = pencil.n
    q = pencil.q
    out = []
    blocks = [range(q), range(q, n)]
    for block in blocks:
        for i in block:
            for j in block:
                if i == j:
                    continue
                e = _elementary(n, i, j, one, zero)
                out.append((e, e))
    if pencil.det_one:
        for i in range(n - 1):
            e = _mat_sub(
                _elementary(n, i, i, one, zero), _elementary(n, i + 1, i + 1, one, zero)
            )
            out.append((e, e))
    else:
        for i in range(n):
            e = _elementary(n, i, i, one, zero)
            out.append((e, e))
    return out


def p_basis(pencil: GrassmannPencil, t=None) -> List[MatrixPair]:
    """Off-diagonal pairs at parameter t (symbolic when t is None)."""
    n, q = pencil.n, pencil.q
    if t is None:
        one, zero, tval = RF_ONE, RF_ZERO, RF_Z
    else:
        one, zero, tval = QI_ONE, QI_ZERO, GaussianRational._coerce(t)
    out = []
    for i in range(q):
        for j in range(q, n):
            e = _elementary(n, i, j, one, zero)
            out.append((_mat_scale(e, tval), e))
    for i in range(q, n):
        for j in range(q):
            e = _elementary(n, i, j, one, zero)
            out.append((e, _mat_scale(e, tval)))
    return out


def pencil_basis(pencil: GrassmannPencil, t=None) -> List[MatrixPair]:
    if t is None:
        kb = k_basis(pencil, RF_ONE, RF_ZERO)
    else:
        kb = k_basis(pencil)
    return kb + p_basis(pencil, t)


# ---------------------------------------------------------------------------
# Grassmannian limits
# ---------------------------------------------------------------------------


def _limit_vector(pair: MatrixPair, boundary: Point) -> MatrixPair:
    """Divide by the content power of the local coordinate, then evaluate."""
    entries = flatten_pair(pair)
    orders = [f.ord_at(boundary) for f in entries if not f.is_zero()]
    if not orders:
        raise RankDropAtLimit("zero vector in pencil basis")
    m = min(orders)
    if boundary is INFINITY:
        norm = RationalFunction.monomial(m)
    else:
        norm = (RF_Z - RationalFunction.constant(boundary)) ** (-m)
    normalized = pair_scale(pair, norm)
    def ev(f: RationalFunction) -> GaussianRational:
        return f.evaluate_point(boundary)
    return tuple(
        tuple(tuple(ev(v) for v in row) for row in mat) for mat in normalized
    )


def limit_subspace(pencil: GrassmannPencil, boundary: Point) -> List[MatrixPair]:
    """The limit of p_t in the Grassmannian as t approaches the boundary."""
    if boundary is not INFINITY:
        boundary = GaussianRational._coerce(boundary)
    limited = [_limit_vector(v, boundary) for v in p_basis(pencil)]
    expected = 2 * pencil.p * pencil.q
    if span_rank([flatten_pair(v) for v in limited]) != expected:
        raise RankDropAtLimit(
            f"limit at {boundary} spans less than dimension {expected}"
        )
    return limited


# ---------------------------------------------------------------------------
# Subalgebra and group-closure checks
# ---------------------------------------------------------------------------


def verify_subalgebra(basis: Sequence[MatrixPair]):
    """None when every pairwise bracket lies in the span; else (i, j)."""
    flat = [flatten_pair(v) for v in basis]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            br = flatten_pair(pair_bracket(basis[i], basis[j]))
            if not in_span(flat, br):
                return (i, j)
    return None


def fiber_group_closure_check(
    pencil: GrassmannPencil, boundary: Point = None, p_pairs: Optional[list] = None
):
    """Degenerate-fiber group law: elements k + X with X in the limit space
    multiply within the same shape.  Needs X X' = 0 (both orders) and the
    limit space stable under left/right multiplication by k.

    Returns None on success, else a description of the failure.
    """
    if p_pairs is None:
        p_pairs = limit_subspace(pencil, boundary)
    flat_p = [flatten_pair(v) for v in p_pairs]
    for i, x in enumerate(p_pairs):
        for j, y in enumerate(p_pairs):
            if not _pair_is_zero(pair_product(x, y)):
                return f"product of limit vectors {i} and {j} is nonzero"
    kb = k_basis(pencil)
    for a, d in enumerate(kb):
        for i, x in enumerate(p_pairs):
            for prod, side in ((pair_product(d, x), "left"), (pair_product(x, d), "right")):
                if not in_span(flat_p, flatten_pair(prod)):
                    return f"{side} action of k vector {a} leaves the limit space at {i}"
    return None


# ---------------------------------------------------------------------------
# Comparison with the contraction family
# ---------------------------------------------------------------------------


def family_from_pairs(labels: Sequence[str], basis: Sequence[MatrixPair]) -> LieFamily:
    """Structure constants of a pencil basis over the function field."""
    flat = [flatten_pair(v) for v in basis]
    span = ExactMatrix(flat).transpose()
    d = len(basis)
    tbl = []
    for i in range(d):
        row = []
        for j in range(d):
            coords = solve(span, flatten_pair(pair_bracket(basis[i], basis[j])))
            if coords is None:
                raise NoIsomorphismFound("pencil basis is not bracket-closed")
            row.append(coords)
        tbl.append(row)
    return LieFamily(labels=tuple(labels), constants=_freeze(tbl))


def contraction_comparison(pencil: GrassmannPencil) -> FamilyMorphism:
    """Identify the rank-one det-one pencil with the sl(2) contraction family
    (pencil parameter = chart coordinate)."""
    if not (pencil.p == 1 and pencil.q == 1 and pencil.det_one):
        raise NoIsomorphismFound("comparison applies to the p=q=1 det-one pencil")
    fam = family_from_pairs(("h", "u", "v"), pencil_basis(pencil))
    target = contraction_family(sl2_algebra(), sl2_involution())
    phi = FamilyMorphism.identity(3)
    witness = check_morphism(phi, fam, target)
    if witness is not None:
        raise NoIsomorphismFound(f"structure constants differ: {witness}")
    return phi


# ---------------------------------------------------------------------------
# Real structures and real forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RealStructureSpec:
    """The antiholomorphic pair involution (M1, M2) -> (-J M2* J, -J M1* J)
    with J = diag(I_q, -I_p); fixed vectors of fibers over real points are
    the real forms."""

    p: int
    q: int

    def j_matrix(self, one=QI_ONE, zero=QI_ZERO):
        n = self.p + self.q
        return tuple(
            tuple(
                (one if i < self.q else zero - one) if i == j else zero
                for j in range(n)
            )
            for i in range(n)
        )

    def apply(self, pair: MatrixPair) -> MatrixPair:
        J = self.j_matrix()
        def star(m):
            n = len(m)
            return tuple(
                tuple(m[j][i].conjugate() for j in range(n)) for i in range(n)
            )
        def half(m):
            return _mat_scale(_mat_mul(_mat_mul(J, star(m)), J), -QI_ONE)
        return (half(pair[1]), half(pair[0]))


def _real_coords(pair: MatrixPair) -> List[Fraction]:
    out = []
    for v in flatten_pair(pair):
        out.append(v.re)
        out.append(v.im)
    return out


def _real_basis(basis: Sequence[MatrixPair]) -> List[MatrixPair]:
    """Q-basis {b, i*b} of the fibers viewed as rational vector spaces."""
    out = []
    for b in basis:
        out.append(b)
        out.append(pair_scale(b, GaussianRational(0, 1)))
    return out


@dataclass
class RealFormReport:
    basis: List[MatrixPair]
    signature: Tuple[int, int, int]  # (n_plus, n_zero, n_minus)
    invariants: dict

    @property
    def dimension(self) -> int:
        return len(self.basis)


def real_form_at(pencil: GrassmannPencil, x) -> RealFormReport:
    """Fixed points of the real structure on the fiber over a real point x
    (0 and infinity use the Grassmannian limit), with exact Killing data."""
    if x is INFINITY or GaussianRational._coerce(x).is_zero():
        boundary = x if x is INFINITY else GaussianRational(0)
        fiber = k_basis(pencil) + limit_subspace(pencil, boundary)
    else:
        x = GaussianRational._coerce(x)
        if not x.is_real():
            raise ValueError("real forms live over real points")
        fiber = k_basis(pencil) + p_basis(pencil, x)
    sigma = RealStructureSpec(pencil.p, pencil.q)
    rb = _real_basis(fiber)
    coords = [_real_coords(v) for v in rb]
    span = ExactMatrix(coords).transpose()
    # Matrix of sigma on the fiber in the rational basis.
    columns = []
    for v in rb:
        img = solve(span, _real_coords(sigma.apply(v)))
        if img is None:
            raise ValueError("real structure does not preserve this fiber")
        columns.append(img)
    m = len(rb)
    fixed_system = ExactMatrix(
        [
            [columns[j][i] - (Fraction(1) if i == j else Fraction(0)) for j in range(m)]
            for i in range(m)
        ]
    )
    kernel_basis = _fraction_kernel(fixed_system)
    real_basis = []
    for coeffs in kernel_basis:
        acc = None
        for c, v in zip(coeffs, rb):
            if c == 0:
                continue
            term = pair_scale(v, GaussianRational(c))
            acc = term if acc is None else pair_add(acc, term)
        real_basis.append(acc)
    constants = _structure_constants_real(real_basis)
    killing = _killing_matrix(constants)
    signature = sylvester_signature(killing)
    algebra = LieAlgebra.from_constants(
        tuple(f"r{i}" for i in range(len(real_basis))),
        [
            [[GaussianRational(c) for c in row] for row in plane]
            for plane in constants
        ],
    )
    return RealFormReport(real_basis, signature, fiber_invariants(algebra))


def _fraction_kernel(m: ExactMatrix) -> List[List[Fraction]]:
    from .linalg import kernel

    return kernel(m, Fraction(1), Fraction(0))


def _structure_constants_real(basis: Sequence[MatrixPair]) -> list:
    coords = [_real_coords(v) for v in basis]
    span = ExactMatrix(coords).transpose()
    d = len(basis)
    tbl = []
    for i in range(d):
        row = []
        for j in range(d):
            sol = solve(span, _real_coords(pair_bracket(basis[i], basis[j])))
            if sol is None:
                raise ValueError("real form is not bracket-closed")
            row.append(sol)
        tbl.append(row)
    return tbl


def _killing_matrix(constants) -> List[List[Fraction]]:
    d = len(constants)

    def ad(i):
        return [[constants[i][j][k] for j in range(d)] for k in range(d)]

    ads = [ad(i) for i in range(d)]
    out = []
    for a in range(d):
        row = []
        for b in range(d):
            tr = Fraction(0)
            for r in range(d):
                for s in range(d):
                    tr += ads[a][r][s] * ads[b][s][r]
            row.append(tr)
        out.append(row)
    return out


def sylvester_signature(sym: Sequence[Sequence[Fraction]]) -> Tuple[int, int, int]:
    """(n_plus, n_zero, n_minus) of a symmetric rational matrix, by exact
    symmetric Gaussian reduction."""
    n = len(sym)
    m = [list(row) for row in sym]
    plus = minus = zero = 0
    for i in range(n):
        if m[i][i] == 0:
            swap = next((j for j in range(i + 1, n) if m[j][j] != 0), None)
            if swap is not None:
                m[i], m[swap] = m[swap], m[i]
                for row in m:
                    row[i], row[swap] = row[swap], row[i]
            else:
                off = next((j for j in range(i + 1, n) if m[i][j] != 0), None)
                if off is None:
                    zero += 1
                    continue
                for c in range(n):
                    m[i][c] += m[off][c]
                for r in range(n):
                    m[r][i] += m[r][off]
        d = m[i][i]
        if d > 0:
            plus += 1
        else:
            minus += 1
        for r in range(i + 1, n):
            if m[r][i] != 0:
                f = m[r][i] / d
                for c in range(n):
                    m[r][c] -= f * m[i][c]
        for c in range(i + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / d
                for r in range(n):
                    m[r][c] -= f * m[r][i]
    return (plus, zero, minus)
