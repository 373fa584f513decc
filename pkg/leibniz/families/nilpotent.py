from dataclasses import dataclass
from typing import Tuple

from leibniz.algebra import Algebra, Subspace, require_leibniz
from leibniz.exceptions import InvalidParameters


@dataclass(frozen=True)
class BlockShape:
    """Descending block sizes (m1 >= m2 >= ... >= ms >= 1)."""

    m: Tuple[int, ...]

    def __post_init__(self):
        if not self.m:
            raise InvalidParameters("block shape must be nonempty")
        if any(not isinstance(size, int) or size < 1 for size in self.m):
            raise InvalidParameters(f"block sizes must be positive integers: {self.m}")
        if any(a < b for a, b in zip(self.m, self.m[1:])):
            raise InvalidParameters(f"block sizes must be descending: {self.m}")

    @classmethod
    def of(cls, shape):
        if isinstance(shape, BlockShape):
            return shape
        if isinstance(shape, str):
            try:
                shape = [int(part) for part in shape.split(',')]
            except ValueError:
                raise InvalidParameters(f"cannot read block shape {shape!r}") from None
        return cls(tuple(shape))

    @property
    def blocks(self):
        return len(self.m)

    @property
    def dim(self):
        return sum(self.m)

    def offset(self, t):
        """Index of e^t_1 (t counted from 1) in the blockwise basis."""
        return sum(self.m[:t - 1])

    def index(self, t, i):
        return self.offset(t) + i - 1

    def labels(self):
        return [f"e{t}_{i}" for t, size in enumerate(self.m, start=1) for i in range(1, size + 1)]


def build_abelian(k) -> Algebra:
    """A(k): k-dimensional, every product zero."""
    if k < 0:
        raise InvalidParameters(f"dimension must be non-negative, got {k}")
    return Algebra.from_products([f"a{i}" for i in range(1, k + 1)], {})


def nilpotent_products(shape: BlockShape):
    """[e^t_i, e^1_1] = e^t_(i+1) for 1 <= i <= m_t - 1, as {(i, j): {t: 1}} on the blockwise basis."""
    products = {}
    head = shape.index(1, 1)
    for t, size in enumerate(shape.m, start=1):
        for i in range(1, size):
            products[(shape.index(t, i), head)] = {shape.index(t, i + 1): 1}
    return products


def build_N(shape):
    """N_{m1,...,ms} and the span of its generators e^t_1."""
    shape = BlockShape.of(shape)
    N = require_leibniz(Algebra.from_products(shape.labels(), nilpotent_products(shape)))
    generators = Subspace.from_indices(N, [shape.index(t, 1) for t in range(1, shape.blocks + 1)])
    return N, generators
