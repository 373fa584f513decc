"""Structure-constant representation of Leibniz algebras.

An :class:`Algebra` stores the nonzero products of its basis vectors,
``[b_i, b_j] = sum_t c[i][j][t] b_t``, over exact rationals. Elements and
subspaces carry coordinate vectors in that basis; subspaces are kept in
canonical row-reduced form so equal subspaces compare equal.
"""
import logging
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Tuple

from leibniz.exceptions import DimensionMismatch, LeibnizViolation, NotAnIdeal, NotClosed
from leibniz.items import LeibnizVerdict
from leibniz.utils import exactmat
from leibniz.utils.exactmat import ONE, ZERO, Matrix, Vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Algebra:
    """Finite-dimensional algebra given by its nonzero basis products."""

    labels: Tuple[str, ...]
    products: Tuple[Tuple[int, int, Vector], ...]  # sorted by (i, j), zero products omitted

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise DimensionMismatch(f"basis labels are not unique: {list(self.labels)}")
        lookup = {}
        sparse = []
        for i, j, vector in self.products:
            if not (0 <= i < n and 0 <= j < n):
                raise DimensionMismatch(f"product ({i}, {j}) outside a {n}-dimensional basis")
            if len(vector) != n:
                raise DimensionMismatch(f"product ({i}, {j}) has {len(vector)} coordinates, expected {n}")
            if (i, j) in lookup:
                raise DimensionMismatch(f"product ({i}, {j}) given twice")
            lookup[(i, j)] = vector
            sparse.append((i, j, [(t, c) for t, c in enumerate(vector) if c]))
        object.__setattr__(self, '_lookup', lookup)
        object.__setattr__(self, '_sparse', sparse)

    @classmethod
    def from_products(cls, labels, products: Mapping):
        """Build from {(i, j): vector or {t: coeff}}; zero entries are dropped."""
        labels = tuple(labels)
        n = len(labels)
        entries = []
        for (i, j), value in products.items():
            if isinstance(value, Mapping):
                vector = exactmat.densify({t: exactmat.to_rational(c) for t, c in value.items()}, n)
            else:
                vector = exactmat.as_vector(value)
            if any(vector):
                entries.append((i, j, vector))
        entries.sort(key=lambda entry: (entry[0], entry[1]))
        return cls(labels, tuple(entries))

    @property
    def dim(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise DimensionMismatch(f"no basis vector labelled {label!r}") from None

    def product(self, i, j) -> Vector:
        """Coordinates of [b_i, b_j]."""
        return self._lookup.get((i, j)) or exactmat.zero_vector(self.dim)

    def structure_constant(self, i, j, t):
        return self.product(i, j)[t]

    def multiply(self, u: Sequence, v: Sequence) -> Vector:
        """Bilinear expansion of [u, v] through the structure constants."""
        result = [ZERO] * self.dim
        for i, j, terms in self._sparse:
            a = u[i]
            if not a:
                continue
            b = v[j]
            if not b:
                continue
            ab = a * b
            for t, c in terms:
                result[t] += ab * c
        return tuple(result)

    def basis_vector(self, i) -> Vector:
        return exactmat.unit_vector(i, self.dim)

    def basis_element(self, i):
        return Element(self, self.basis_vector(i))

    def element(self, coords):
        return Element(self, exactmat.as_vector(coords))

    def zero(self):
        return Element(self, exactmat.zero_vector(self.dim))

    def describe(self, vector):
        """Human-readable linear combination, e.g. "2*e1_1 - 1/2*x1"."""
        terms = []
        for label, c in zip(self.labels, vector):
            if not c:
                continue
            sign = '-' if c < 0 else '+'
            size = abs(c)
            body = label if size == 1 else f"{exactmat.format_rational(size)}*{label}"
            terms.append((sign, body))
        if not terms:
            return '0'
        first_sign, first = terms[0]
        text = ('-' if first_sign == '-' else '') + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class Element:
    algebra: Algebra = field(repr=False)
    coords: Vector

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise DimensionMismatch(
                f"element has {len(self.coords)} coordinates in a {self.algebra.dim}-dimensional algebra")

    def _peer(self, other):
        if not isinstance(other, Element) or not _same_algebra(self.algebra, other.algebra):
            raise DimensionMismatch("elements belong to different algebras")
        return other

    def __add__(self, other):
        other = self._peer(other)
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = self._peer(other)
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, scalar):
        scalar = exactmat.to_rational(scalar)
        return Element(self.algebra, tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coords)

    def __str__(self):
        return self.algebra.describe(self.coords)


def _same_algebra(a, b):
    return a is b or a == b


def _coords(algebra, x):
    if isinstance(x, Element):
        if not _same_algebra(x.algebra, algebra):
            raise DimensionMismatch("element belongs to a different algebra")
        return x.coords
    vector = exactmat.as_vector(x)
    if len(vector) != algebra.dim:
        raise DimensionMismatch(f"vector of length {len(vector)} in a {algebra.dim}-dimensional algebra")
    return vector


def bracket(x: Element, y: Element) -> Element:
    """[x, y] for two elements of the same algebra."""
    if not _same_algebra(x.algebra, y.algebra):
        raise DimensionMismatch("cannot bracket elements of different algebras")
    return Element(x.algebra, x.algebra.multiply(x.coords, y.coords))


def leibniz_residual(A: Algebra, i, j, k) -> Vector:
    """[b_i,[b_j,b_k]] - [[b_i,b_j],b_k] + [[b_i,b_k],b_j] in coordinates."""
    e_i, e_j, e_k = A.basis_vector(i), A.basis_vector(j), A.basis_vector(k)
    lhs = A.multiply(e_i, A.product(j, k))
    first = A.multiply(A.product(i, j), e_k)
    second = A.multiply(A.product(i, k), e_j)
    return tuple(a - b + c for a, b, c in zip(lhs, first, second))


def find_violations(A: Algebra, first_only=False):
    """Every basis triple (i, j, k), in lexicographic order, where the identity fails."""
    violations = []
    n = A.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                residual = leibniz_residual(A, i, j, k)
                if any(residual):
                    violations.append(((i, j, k), residual))
                    if first_only:
                        return violations
    return violations


def check_leibniz(A: Algebra) -> LeibnizVerdict:
    """Verify the Leibniz identity on all basis triples.

    Trilinearity makes basis triples sufficient; the first violation in
    lexicographic (i, j, k) order is reported.
    """
    violations = find_violations(A, first_only=True)
    if not violations:
        return LeibnizVerdict(ok=True)
    triple, residual = violations[0]
    logger.debug(f"Leibniz identity fails at {triple}: {A.describe(residual)}")
    return LeibnizVerdict(ok=False, triple=triple, residual=residual)


def require_leibniz(A: Algebra) -> Algebra:
    """Return ``A`` unchanged, or raise LeibnizViolation with the first failing triple."""
    verdict = check_leibniz(A)
    if not verdict.ok:
        raise LeibnizViolation(verdict.triple, verdict.residual)
    return A


def is_lie(A: Algebra) -> bool:
    n = A.dim
    for i in range(n):
        if any(A.product(i, i)):
            return False
        for j in range(i + 1, n):
            if any(a + b for a, b in zip(A.product(i, j), A.product(j, i))):
                return False
    return True


@dataclass(frozen=True)
class Subspace:
    """Subspace of an algebra, stored as canonical RREF basis rows."""

    ambient: Algebra = field(repr=False)
    basis: Tuple[Vector, ...]

    @classmethod
    def span(cls, ambient: Algebra, vectors):
        rows = [_coords(ambient, v) for v in vectors]
        return cls(ambient, tuple(exactmat.canonical_span(rows, ambient.dim)))

    @classmethod
    def whole(cls, ambient: Algebra):
        return cls(ambient, tuple(ambient.basis_vector(i) for i in range(ambient.dim)))

    @classmethod
    def zero(cls, ambient: Algebra):
        return cls(ambient, ())

    @classmethod
    def from_indices(cls, ambient: Algebra, indices):
        return cls.span(ambient, [ambient.basis_vector(i) for i in indices])

    @property
    def dim(self):
        return len(self.basis)

    @property
    def pivots(self):
        return tuple(exactmat.first_nonzero(row) for row in self.basis)

    def is_zero(self):
        return not self.basis

    def reduce(self, vector) -> Vector:
        """Remainder of ``vector`` after clearing every pivot coordinate."""
        w = list(_coords(self.ambient, vector))
        for row, pivot in zip(self.basis, self.pivots):
            c = w[pivot]
            if c:
                for t, value in enumerate(row):
                    if value:
                        w[t] -= c * value
        return tuple(w)

    def contains_vector(self, vector) -> bool:
        return not any(self.reduce(vector))

    def contains(self, other: 'Subspace') -> bool:
        return all(self.contains_vector(row) for row in other.basis)

    def coordinates(self, vector) -> Vector:
        """Coordinates of a member vector in this subspace's RREF basis."""
        vector = _coords(self.ambient, vector)
        if not self.contains_vector(vector):
            raise DimensionMismatch("vector does not lie in the subspace")
        return tuple(vector[p] for p in self.pivots)

    def complement_indices(self):
        pivots = set(self.pivots)
        return tuple(i for i in range(self.ambient.dim) if i not in pivots)

    def __add__(self, other: 'Subspace'):
        if not _same_algebra(self.ambient, other.ambient):
            raise DimensionMismatch("subspaces of different algebras")
        return Subspace.span(self.ambient, self.basis + other.basis)

    def elements(self):
        return [Element(self.ambient, row) for row in self.basis]

    def basis_indices(self):
        """Ambient indices when every basis row is a unit vector, else None."""
        indices = []
        for row in self.basis:
            support = [t for t, v in enumerate(row) if v]
            if len(support) != 1 or row[support[0]] != ONE:
                return None
            indices.append(support[0])
        return indices


def subspace_from_spanners(A: Algebra, vectors) -> Subspace:
    return Subspace.span(A, vectors)


def product_subspace(A: Algebra, U: Subspace, V: Subspace) -> Subspace:
    """span{[u, v]} over basis vectors u of U and v of V."""
    return Subspace.span(A, [A.multiply(u, v) for u in U.basis for v in V.basis])


def is_ideal(A: Algebra, I: Subspace) -> bool:
    """True iff [A, I] and [I, A] both lie in I."""
    for row in I.basis:
        for j in range(A.dim):
            e_j = A.basis_vector(j)
            if not I.contains_vector(A.multiply(e_j, row)):
                return False
            if not I.contains_vector(A.multiply(row, e_j)):
                return False
    return True


@dataclass(frozen=True)
class Projection:
    """Canonical map A -> A/I onto the non-pivot coordinates of I."""

    ideal: Subspace = field(repr=False)
    complement: Tuple[int, ...]

    def __call__(self, vector) -> Vector:
        reduced = self.ideal.reduce(vector)
        return tuple(reduced[c] for c in self.complement)

    def lift(self, coords) -> Vector:
        """Coset representative supported on the complement coordinates."""
        vector = [ZERO] * self.ideal.ambient.dim
        for c, value in zip(self.complement, coords):
            vector[c] = exactmat.to_rational(value)
        return tuple(vector)

    @property
    def matrix(self) -> Matrix:
        n = self.ideal.ambient.dim
        return Matrix.from_columns([self(exactmat.unit_vector(i, n)) for i in range(n)], len(self.complement))


def quotient(A: Algebra, I: Subspace, prefix='ē'):
    """Quotient algebra A/I on the non-pivot coordinates of I, with its projection.

    Products of coset representatives are well defined because I is a
    two-sided ideal, which is checked first.
    """
    if not is_ideal(A, I):
        raise NotAnIdeal("quotient requires a two-sided ideal")
    complement = I.complement_indices()
    projection = Projection(I, complement)
    products = {}
    for a, ca in enumerate(complement):
        for b, cb in enumerate(complement):
            image = projection(A.product(ca, cb))
            if any(image):
                products[(a, b)] = image
    labels = [f"{prefix}{A.labels[c]}" for c in complement]
    return Algebra.from_products(labels, products), projection


def _unique_labels(taken, labels):
    result = []
    seen = set(taken)
    for label in labels:
        while label in seen:
            label += "'"
        seen.add(label)
        result.append(label)
    return result


def direct_sum(A: Algebra, B: Algebra) -> Algebra:
    """Block-diagonal algebra A ⊕ B; B's basis follows A's."""
    n, m = A.dim, B.dim
    products = {}
    for i, j, vector in A.products:
        products[(i, j)] = vector + exactmat.zero_vector(m)
    for i, j, vector in B.products:
        products[(n + i, n + j)] = exactmat.zero_vector(n) + vector
    labels = list(A.labels) + _unique_labels(A.labels, B.labels)
    return Algebra.from_products(labels, products)


def left_matrix(A: Algebra, x) -> Matrix:
    """Matrix of L_x(y) = [x, y]."""
    x = _coords(A, x)
    return Matrix.from_columns([A.multiply(x, A.basis_vector(j)) for j in range(A.dim)], A.dim)


def right_matrix(A: Algebra, x) -> Matrix:
    """Matrix of R_x(y) = [y, x]."""
    x = _coords(A, x)
    return Matrix.from_columns([A.multiply(A.basis_vector(j), x) for j in range(A.dim)], A.dim)


def subalgebra(A: Algebra, U: Subspace) -> Algebra:
    """The algebra induced on U, in U's RREF basis."""
    products = {}
    for a, u in enumerate(U.basis):
        for b, v in enumerate(U.basis):
            image = A.multiply(u, v)
            if not U.contains_vector(image):
                raise NotClosed(f"[{A.describe(u)}, {A.describe(v)}] leaves the subspace")
            coords = U.coordinates(image)
            if any(coords):
                products[(a, b)] = coords
    indices = U.basis_indices()
    if indices is not None:
        labels = [A.labels[i] for i in indices]
    else:
        labels = [f"u{r + 1}" for r in range(U.dim)]
    return Algebra.from_products(labels, products)


def change_basis(A: Algebra, P: Matrix, labels=None) -> Algebra:
    """Structure constants in the basis formed by the columns of invertible P."""
    if P.rows != A.dim or P.cols != A.dim:
        raise DimensionMismatch(f"change of basis must be {A.dim}x{A.dim}")
    P_inv = exactmat.inverse(P)
    columns = [P.column(a) for a in range(A.dim)]
    products = {}
    for a, u in enumerate(columns):
        for b, v in enumerate(columns):
            image = A.multiply(u, v)
            if any(image):
                products[(a, b)] = P_inv.apply(image)
    labels = labels or [f"v{a + 1}" for a in range(A.dim)]
    return Algebra.from_products(labels, products)


def permute_basis(A: Algebra, perm: Sequence[int]) -> Algebra:
    """Reorder the basis so that new vector a is old vector perm[a]."""
    if sorted(perm) != list(range(A.dim)):
        raise DimensionMismatch(f"{list(perm)} is not a permutation of {A.dim} indices")
    position = {old: new for new, old in enumerate(perm)}
    products = {}
    for i, j, vector in A.products:
        products[(position[i], position[j])] = tuple(vector[perm[a]] for a in range(A.dim))
    return Algebra.from_products([A.labels[old] for old in perm], products)
