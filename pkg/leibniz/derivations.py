"""Derivations, inner derivations and the completeness verdict.

A derivation is a linear map d with d([x, y]) = [d(x), y] + [x, d(y)].
Matrices act on coordinate columns: column j holds the coordinates of
d(b_j), so the unknown d[i][j] sits at position i * n + j.
"""
import logging

from leibniz import settings
from leibniz.algebra import Algebra, right_matrix
from leibniz.invariants import center
from leibniz.items import CompletenessReport, DerivationSpace, IdentityVerdict
from leibniz.utils import exactmat
from leibniz.utils.exactmat import Matrix
from leibniz.utils.sampling import make_rng, random_vector

logger = logging.getLogger(__name__)


def _derivation_equations(A: Algebra):
    n = A.dim
    rows = []
    for a in range(n):
        for b in range(n):
            ab = A.product(a, b)
            for t in range(n):
                row = {}
                # d([b_a, b_b])_t
                for u, c in enumerate(ab):
                    if c:
                        row[t * n + u] = row.get(t * n + u, 0) + c
                for i in range(n):
                    # [d(b_a), b_b]_t
                    c = A.structure_constant(i, b, t)
                    if c:
                        row[i * n + a] = row.get(i * n + a, 0) - c
                    # [b_a, d(b_b)]_t
                    c = A.structure_constant(a, i, t)
                    if c:
                        row[i * n + b] = row.get(i * n + b, 0) - c
                if any(row.values()):
                    rows.append(row)
    return rows


def _as_matrix(vector, n):
    return Matrix(n, n, tuple(vector))


def derivation_basis(A: Algebra):
    """Canonical basis of Der(A) as n x n matrices."""
    n = A.dim
    kernel = exactmat.kernel_from_equations(_derivation_equations(A), n * n)
    return [_as_matrix(v, n) for v in kernel]


def inner_derivations(A: Algebra):
    """Basis of Inner(A) = span{R_x}, right multiplications R_x(y) = [y, x]."""
    n = A.dim
    spanners = [right_matrix(A, A.basis_vector(i)).flatten() for i in range(n)]
    return [_as_matrix(v, n) for v in exactmat.canonical_span(spanners, n * n)]


def derivation_space(A: Algebra) -> DerivationSpace:
    space = DerivationSpace(algebra=A, basis=derivation_basis(A), inner_basis=inner_derivations(A))
    logger.debug(f"dim Der = {len(space.basis)}, dim Inner = {len(space.inner_basis)}")
    return space


def is_derivation(A: Algebra, d: Matrix) -> bool:
    for a in range(A.dim):
        for b in range(A.dim):
            lhs = d.apply(A.product(a, b))
            first = A.multiply(d.column(a), A.basis_vector(b))
            second = A.multiply(A.basis_vector(a), d.column(b))
            if any(x - y - z for x, y, z in zip(lhs, first, second)):
                return False
    return True


def _span_rank(matrices, n):
    return exactmat.row_space_rank([m.flatten() for m in matrices], n * n)


def outer_derivations(A: Algebra):
    """Derivations completing a basis of Inner(A) to one of Der(A)."""
    space = derivation_space(A)
    n = A.dim
    chosen = list(space.inner_basis)
    outer = []
    for d in space.basis:
        if _span_rank(chosen + [d], n) > _span_rank(chosen, n):
            chosen.append(d)
            outer.append(d)
    return outer


def is_complete(A: Algebra) -> CompletenessReport:
    """Z(A) = 0 and Der(A) = Inner(A), decided by rank containment both ways."""
    n = A.dim
    space = derivation_space(A)
    der_rank = _span_rank(space.basis, n)
    inner_rank = _span_rank(space.inner_basis, n)
    joint_rank = _span_rank(space.basis + space.inner_basis, n)
    report = CompletenessReport(
        center_dim=center(A).dim,
        der_dim=der_rank,
        inner_dim=inner_rank,
        inner_in_der=joint_rank == der_rank,
        der_in_inner=joint_rank == inner_rank,
    )
    if not report.inner_in_der:
        logger.error("Inner derivations escape Der: derivation equations are inconsistent")
    logger.info(f"Completeness: center {report.center_dim}, Der {report.der_dim}, "
                f"Inner {report.inner_dim} -> {'complete' if report.complete else 'not complete'}")
    return report


def check_inner_commutator_identity(A: Algebra, trials=None, seed=None) -> IdentityVerdict:
    """R_x R_y - R_y R_x = R_[y,x] on seeded random pairs."""
    trials = settings.DEFAULT_TRIALS if trials is None else trials
    rng = make_rng(settings.DEFAULT_SEED if seed is None else seed)
    for _ in range(trials):
        x = random_vector(rng, A.dim)
        y = random_vector(rng, A.dim)
        R_x, R_y = right_matrix(A, x), right_matrix(A, y)
        if R_x @ R_y - R_y @ R_x != right_matrix(A, A.multiply(y, x)):
            return IdentityVerdict(holds=False, trials=trials, failure=(x, y))
    return IdentityVerdict(holds=True, trials=trials)
