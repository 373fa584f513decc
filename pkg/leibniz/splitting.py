"""Cross actions of sl2 on a complete solvable radical.

Given a radical R with nilradical N and a Levi factor S, every Leibniz
algebra L = R + S is determined by the cross products [S, R] and [R, S],
which lie in N. ``solve_cross_action`` walks the filtration
N, N^2, ..., N^tau = 0: stage m works in R/N^m, where the earlier stages
have already forced the cross products into the layer N^(m-1)/N^m. The
Leibniz identity on every basis triple mixing S and R gives constraints of
degree at most two in the layer unknowns; they are solved exactly and the
verdict is "splits" when every stage leaves only the zero action.
"""
import logging
from typing import Dict, List, Optional

from leibniz.algebra import (
    Algebra, Subspace, direct_sum, is_ideal, is_lie, product_subspace, quotient, require_leibniz,
)
from leibniz.derivations import is_complete
from leibniz.exceptions import (
    DimensionMismatch, InvalidParameters, NonlinearStageError, NotNilpotent, PreconditionFailed,
)
from leibniz.families.simple import build_sl2
from leibniz.invariants import verify_declared_nilradical
from leibniz.items import CrossAction, SplitCertificate, StageRecord
from leibniz.utils import exactmat
from leibniz.utils.exactmat import ONE, ZERO

logger = logging.getLogger(__name__)


def filtration_layers(R: Algebra, N: Subspace) -> List[Subspace]:
    """N, N^2, ..., N^tau = 0 with N^(k+1) = [N^k, N] taken inside R."""
    terms = [N]
    while not terms[-1].is_zero():
        following = product_subspace(R, terms[-1], N)
        if following == terms[-1]:
            raise NotNilpotent(f"N^k stalls at dimension {following.dim}")
        terms.append(following)
    return terms


# Polynomials of degree <= 2 are {monomial: coefficient} maps: None is the
# constant monomial, an int u is the unknown u, a pair (u, v) with u <= v is u*v.

def _monomial(a, b):
    if a is None:
        return b
    if b is None:
        return a
    if isinstance(a, tuple) or isinstance(b, tuple):
        raise NonlinearStageError("cross-action constraint of degree above two")
    return (a, b) if a <= b else (b, a)


def _accumulate(target: Dict, poly: Dict, factor):
    for key, c in poly.items():
        value = target.get(key, ZERO) + factor * c
        if value:
            target[key] = value
        else:
            target.pop(key, None)


def _poly_product(p: Dict, q: Dict):
    result = {}
    for a, ca in p.items():
        for b, cb in q.items():
            key = _monomial(a, b)
            value = result.get(key, ZERO) + ca * cb
            if value:
                result[key] = value
            else:
                result.pop(key, None)
    return result


class CrossActionUnknowns:
    """Stage-m unknowns and the symbolic bracket of Q + S, Q = R/N^m.

    Left unknowns hold [s, q_a] and right unknowns hold [q_a, s], each as
    coordinates in the layer basis w_1, ..., w_l of N^(m-1)/N^m.
    """

    def __init__(self, m, Q: Algebra, S: Algebra, layer: Subspace):
        self.m = m
        self.Q, self.S = Q, S
        self.layer = layer
        self.d, self.p, self.l = Q.dim, S.dim, layer.dim
        self.count = 2 * self.p * self.d * self.l
        self._table = {}
        d = self.d
        for i, j, vector in Q.products:
            self._table[(i, j)] = {t: {None: c} for t, c in enumerate(vector) if c}
        for i, j, vector in S.products:
            self._table[(d + i, d + j)] = {d + t: {None: c} for t, c in enumerate(vector) if c}
        for s in range(self.p):
            for a in range(d):
                left, right = {}, {}
                for c, w in enumerate(layer.basis):
                    for t, coeff in enumerate(w):
                        if coeff:
                            left.setdefault(t, {})[self.left_unknown(s, a, c)] = coeff
                            right.setdefault(t, {})[self.right_unknown(a, s, c)] = coeff
                self._table[(d + s, a)] = left
                self._table[(a, d + s)] = right

    def left_unknown(self, s, a, c):
        return (s * self.d + a) * self.l + c

    def right_unknown(self, a, s, c):
        return self.p * self.d * self.l + (a * self.p + s) * self.l + c

    def decode(self, u):
        """('left', s, a, c) or ('right', a, s, c) for unknown index u."""
        half = self.p * self.d * self.l
        if u < half:
            sa, c = divmod(u, self.l)
            s, a = divmod(sa, self.d)
            return 'left', s, a, c
        as_, c = divmod(u - half, self.l)
        a, s = divmod(as_, self.p)
        return 'right', a, s, c

    def basis(self, i):
        return {i: {None: ONE}}

    def multiply(self, x: Dict, y: Dict):
        result = {}
        for i, pi in x.items():
            for j, pj in y.items():
                images = self._table.get((i, j))
                if not images:
                    continue
                coefficient = _poly_product(pi, pj)
                for t, pt in images.items():
                    term = _poly_product(coefficient, pt)
                    target = result.setdefault(t, {})
                    _accumulate(target, term, ONE)
        return {t: p for t, p in result.items() if p}

    def residual(self, i, j, k):
        """[b_i,[b_j,b_k]] - [[b_i,b_j],b_k] + [[b_i,b_k],b_j] with symbolic cross products."""
        e_i, e_j, e_k = self.basis(i), self.basis(j), self.basis(k)
        result = {}
        for t, p in self.multiply(e_i, self.multiply(e_j, e_k)).items():
            _accumulate(result.setdefault(t, {}), p, ONE)
        for t, p in self.multiply(self.multiply(e_i, e_j), e_k).items():
            _accumulate(result.setdefault(t, {}), p, -ONE)
        for t, p in self.multiply(self.multiply(e_i, e_k), e_j).items():
            _accumulate(result.setdefault(t, {}), p, ONE)
        return {t: p for t, p in result.items() if p}

    def constraints(self):
        """Residual coordinates of every mixed triple, lexicographic in (i, j, k, t)."""
        d, size = self.d, self.d + self.p
        rows = []
        for i in range(size):
            for j in range(size):
                for k in range(size):
                    in_s = (i >= d) + (j >= d) + (k >= d)
                    if in_s == 0 or in_s == 3:
                        continue
                    residual = self.residual(i, j, k)
                    for t in sorted(residual):
                        rows.append(((i, j, k), residual[t]))
        return rows

    def render(self, vector):
        """Named cross products of an assignment to the unknowns."""
        values = {}
        for u, c in enumerate(vector):
            if not c:
                continue
            side, first, second, layer_index = self.decode(u)
            w = self.layer.basis[layer_index]
            image = values.setdefault((side, first, second), [ZERO] * self.d)
            for t, coeff in enumerate(w):
                if coeff:
                    image[t] += c * coeff
        products = {}
        for (side, first, second), image in sorted(values.items()):
            if not any(image):
                continue
            if side == 'left':
                name = f"[{self.S.labels[first]}, {self.Q.labels[second]}]"
            else:
                name = f"[{self.Q.labels[first]}, {self.S.labels[second]}]"
            products[name] = self.Q.describe(image)
        return products


def _split_constraint(triple, poly):
    constant = poly.get(None, ZERO)
    if constant:
        raise NonlinearStageError(f"constraint from triple {triple} has constant term {constant}")
    linear = {key: c for key, c in poly.items() if isinstance(key, int)}
    quadratic = {key: c for key, c in poly.items() if isinstance(key, tuple)}
    return linear, quadratic


def _vanishes_on(quadratic, kernel):
    """True iff the quadratic form is identically zero on span(kernel)."""
    variables = {u for pair in quadratic for u in pair}
    relevant = [v for v in kernel if any(v[u] for u in variables)]
    for a, x in enumerate(relevant):
        for y in relevant[a:]:
            # symmetrised bilinear form B(x, y) + B(y, x)
            total = ZERO
            for (u, v), c in quadratic.items():
                total += c * (x[u] * y[v] + y[u] * x[v])
            if total:
                return False
    return True


def _solve_stage(unknowns: CrossActionUnknowns):
    """Linearisation cascade; returns the stage record and the final kernel."""
    linear, pending = [], []
    constraints = unknowns.constraints()
    for triple, poly in constraints:
        lin, quad = _split_constraint(triple, poly)
        if quad:
            pending.append((lin, quad))
        elif lin:
            linear.append(lin)

    rounds = 0
    while True:
        rounds += 1
        kernel = exactmat.kernel_from_equations(linear, unknowns.count)
        logger.debug(f"Stage {unknowns.m} round {rounds}: {len(linear)} linear rows, "
                     f"kernel {len(kernel)}, {len(pending)} pending")
        if not kernel or not pending:
            break
        remaining = []
        for lin, quad in pending:
            if _vanishes_on(quad, kernel):
                if lin:
                    linear.append(lin)
            else:
                remaining.append((lin, quad))
        progressed = len(remaining) < len(pending)
        pending = remaining
        if not progressed:
            break

    # zero solves every leftover constraint once the kernel is trivial
    deferred = len(pending) if kernel else 0
    record = StageRecord(
        m=unknowns.m,
        layer_dim=unknowns.l,
        unknowns=unknowns.count,
        rows=len(constraints),
        kernel_dim=len(kernel),
        deferred=deferred,
        rounds=rounds,
    )
    return record, kernel


def _check_preconditions(R, N, S, require_complete):
    notes = []
    require_leibniz(R)
    require_leibniz(S)
    if not is_lie(S):
        raise PreconditionFailed('S is a Lie algebra')
    report = verify_declared_nilradical(R, N)
    if not report.passed:
        raise PreconditionFailed('declared nilradical', f"failed checks: {report.failures()}")
    completeness = is_complete(R)
    if not completeness.complete:
        if require_complete:
            raise PreconditionFailed(
                'R is complete',
                f"center {completeness.center_dim}, Der {completeness.der_dim}, Inner {completeness.inner_dim}")
        notes.append('completeness precondition waived: R is not complete')
    return notes


def solve_cross_action(R: Algebra, N: Subspace, S: Optional[Algebra] = None,
                       require_complete=True) -> SplitCertificate:
    """Certify that every Leibniz algebra R + S has zero cross products.

    Stages m = 2, ..., tau are solved in order and the search stops at the
    first stage whose kernel is nonzero; its first kernel vector is
    returned as a witness.
    """
    if S is None:
        S = build_sl2()
    if N.ambient != R:
        raise DimensionMismatch("declared nilradical belongs to a different algebra")
    notes = _check_preconditions(R, N, S, require_complete)

    layers = filtration_layers(R, N)
    tau = len(layers)
    logger.info(f"Solving cross actions over {tau - 1} stage(s), nilindex {tau}")
    stages, witness = [], None
    for m in range(2, tau + 1):
        Q, projection = quotient(R, layers[m - 1], prefix='')
        layer = Subspace.span(Q, [projection(v) for v in layers[m - 2].basis])
        unknowns = CrossActionUnknowns(m, Q, S, layer)
        record, kernel = _solve_stage(unknowns)
        stages.append(record)
        logger.debug(f"Stage {m}: layer {record.layer_dim}, {record.unknowns} unknowns, "
                     f"{record.rows} rows, kernel {record.kernel_dim}")
        if kernel:
            witness = {
                'stage': m,
                'status': 'candidate' if record.deferred else 'solution',
                'products': unknowns.render(kernel[0]),
            }
            logger.info(f"Stage {m} leaves a {len(kernel)}-dimensional kernel")
            break

    certificate = SplitCertificate(
        stages=stages,
        witness=witness,
        completeness_required=require_complete,
        notes=notes,
    )
    logger.info(f"Cross-action verdict: {certificate.verdict}")
    return certificate


def glue_semidirect(R: Algebra, S: Algebra, action: CrossAction, nilradical: Optional[Subspace] = None) -> Algebra:
    """R + S with the given cross products, R's basis first; raises LeibnizViolation."""
    n, p = R.dim, S.dim
    for s, r in action.left:
        if not (0 <= s < p and 0 <= r < n):
            raise InvalidParameters(f"cross pair [{s}, {r}] outside the bases")
    for r, s in action.right:
        if not (0 <= s < p and 0 <= r < n):
            raise InvalidParameters(f"cross pair [{r}, {s}] outside the bases")
    if nilradical is not None:
        for vector in list(action.left.values()) + list(action.right.values()):
            if not nilradical.contains_vector(vector):
                raise InvalidParameters(f"cross product {R.describe(vector)} leaves the nilradical")

    base = direct_sum(R, S)
    products = {(i, j): vector for i, j, vector in base.products}
    padding = exactmat.zero_vector(p)
    for (s, r), vector in action.left.items():
        products[(n + s, r)] = exactmat.as_vector(vector) + padding
    for (r, s), vector in action.right.items():
        products[(r, n + s)] = exactmat.as_vector(vector) + padding
    return require_leibniz(Algebra.from_products(base.labels, products))


def verify_split(L: Algebra, R_sub: Subspace, S_sub: Subspace) -> bool:
    """[R, S] = [S, R] = 0 and both summands are ideals of L."""
    for r in R_sub.basis:
        for s in S_sub.basis:
            if any(L.multiply(r, s)) or any(L.multiply(s, r)):
                return False
    return is_ideal(L, R_sub) and is_ideal(L, S_sub)


def reassemble(R: Algebra, S: Algebra):
    """Zero-action gluing with the radical and Levi subspaces, as used after a split verdict."""
    L = glue_semidirect(R, S, CrossAction())
    R_sub = Subspace.from_indices(L, range(R.dim))
    S_sub = Subspace.from_indices(L, range(R.dim, R.dim + S.dim))
    return L, R_sub, S_sub
