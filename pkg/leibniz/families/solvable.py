"""Solvable extensions of nilpotent Leibniz algebras.

Three families, each returned with its nilradical:

* R(N_{m1,...,ms}, s), the codimension-s extension of N_{m1,...,ms};
* R(A(k), k), with [f_i, x_i] = f_i and [x_i, f_i] = alpha_i f_i;
* the general table of an algebra whose nilradical has as many generators
  as the codimension (``build_table2``).
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Tuple

from leibniz.algebra import Algebra, Subspace, require_leibniz, subalgebra
from leibniz.exceptions import InvalidParameters
from leibniz.families.nilpotent import BlockShape, nilpotent_products
from leibniz.utils.exactmat import to_rational

logger = logging.getLogger(__name__)


def build_R_N(shape, s=None):
    """R(N_{m1,...,ms}, s) on the basis e^1_1, ..., e^s_{ms}, x_1, ..., x_s."""
    shape = BlockShape.of(shape)
    s = shape.blocks if s is None else s
    if s != shape.blocks:
        raise InvalidParameters(f"codimension {s} must equal the number of blocks {shape.blocks}")
    n = shape.dim
    x = {j: n + j - 1 for j in range(1, s + 1)}

    products = nilpotent_products(shape)
    for i in range(1, shape.m[0] + 1):
        products[(shape.index(1, i), x[1])] = {shape.index(1, i): i}
    for t in range(2, s + 1):
        for i in range(2, shape.m[t - 1] + 1):
            products[(shape.index(t, i), x[1])] = {shape.index(t, i): i - 1}
        for i in range(1, shape.m[t - 1] + 1):
            products[(shape.index(t, i), x[t])] = {shape.index(t, i): 1}
    products[(x[1], shape.index(1, 1))] = {shape.index(1, 1): -1}

    labels = shape.labels() + [f"x{j}" for j in range(1, s + 1)]
    R = require_leibniz(Algebra.from_products(labels, products))
    return R, Subspace.from_indices(R, range(n))


def build_R_A(k, alpha):
    """R(A(k), k) on the basis f_1, ..., f_k, x_1, ..., x_k."""
    alpha = tuple(to_rational(a) for a in alpha)
    if len(alpha) != k:
        raise InvalidParameters(f"expected {k} alpha values, got {len(alpha)}")
    if any(a not in (-1, 0) for a in alpha):
        raise InvalidParameters(f"alpha values must lie in {{-1, 0}}: {[str(a) for a in alpha]}")
    products = {}
    for i in range(k):
        products[(i, k + i)] = {i: 1}
        products[(k + i, i)] = {i: alpha[i]}
    labels = [f"f{i}" for i in range(1, k + 1)] + [f"x{i}" for i in range(1, k + 1)]
    R = require_leibniz(Algebra.from_products(labels, products))
    return R, Subspace.from_indices(R, range(k))


def drop_complement(k, alpha, j):
    """R(A(k), k) with x_j removed: a solvable algebra that is not complete."""
    R, N = build_R_A(k, alpha)
    if not 1 <= j <= k:
        raise InvalidParameters(f"x{j} is not a complement vector of R(A({k}), {k})")
    kept = [i for i in range(2 * k) if i != k + j - 1]
    reduced = subalgebra(R, Subspace.from_indices(R, kept))
    return reduced, Subspace.from_indices(reduced, range(k))


def _integer(value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidParameters(f"malformed table parameters: expected an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class Table2Params:
    """Parameters of the general table; every index counts from 1.

    ``c[(i, j)][t]`` gives [e_i, e_j] with k+1 <= t <= n; ``b[i-1]`` fixes
    [x_i, e_i] = (b_i - 1) e_i; ``a[(i, j)]`` gives [e_i, x_j] = a_ij e_i for
    non-generators i; ``bprime[(j, i)][t]`` gives [x_j, e_i] for
    non-generators i. Omitted products are zero.
    """

    k: int
    n: int
    b: Tuple[int, ...]
    c: Mapping[Tuple[int, int], Mapping[int, Fraction]] = field(default_factory=dict)
    a: Mapping[Tuple[int, int], int] = field(default_factory=dict)
    bprime: Mapping[Tuple[int, int], Mapping[int, Fraction]] = field(default_factory=dict)

    def validate(self):
        k, n = self.k, self.n
        if k < 0 or n < k:
            raise InvalidParameters(f"need 0 <= k <= n, got k={k}, n={n}")
        if len(self.b) != k or any(b not in (0, 1) for b in self.b):
            raise InvalidParameters(f"b must hold {k} values from {{0, 1}}: {list(self.b)}")
        for (i, j), coeffs in self.c.items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvalidParameters(f"c index ({i}, {j}) out of range 1..{n}")
            for t in coeffs:
                if not k + 1 <= t <= n:
                    raise InvalidParameters(f"c[{i},{j}] targets e{t}, outside the non-generators {k + 1}..{n}")
        for (i, j), value in self.a.items():
            if not (k + 1 <= i <= n and 1 <= j <= k):
                raise InvalidParameters(f"a index ({i}, {j}) out of range")
            if not isinstance(value, int) or value < 0:
                raise InvalidParameters(f"a[{i},{j}] must be a non-negative integer, got {value!r}")
        for (j, i), coeffs in self.bprime.items():
            if not (1 <= j <= k and k + 1 <= i <= n):
                raise InvalidParameters(f"bprime index ({j}, {i}) out of range")
            for t in coeffs:
                if not k + 1 <= t <= n:
                    raise InvalidParameters(f"bprime[{j},{i}] targets e{t}, outside the non-generators")
        return self

    @classmethod
    def from_json(cls, document):
        """Read {"k", "n", "b", "c": [{"i", "j", "coeffs"}], "a": [{"i", "j", "value"}], "bprime": [...]}."""
        try:
            return cls(
                k=_integer(document['k']),
                n=_integer(document['n']),
                b=tuple(_integer(v) for v in document.get('b', [])),
                c={(_integer(e['i']), _integer(e['j'])): {int(t): to_rational(v) for t, v in e['coeffs'].items()}
                   for e in document.get('c', [])},
                a={(_integer(e['i']), _integer(e['j'])): _integer(e['value']) for e in document.get('a', [])},
                bprime={(_integer(e['j']), _integer(e['i'])): {int(t): to_rational(v) for t, v in e['coeffs'].items()}
                        for e in document.get('bprime', [])},
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidParameters(f"malformed table parameters: {e}") from None


def build_table2(p: Table2Params, labels=None):
    """Solvable algebra on e_1, ..., e_n, x_1, ..., x_k; rejects parameters breaking the Leibniz identity."""
    p.validate()
    k, n = p.k, p.n
    e = lambda i: i - 1  # noqa: E731
    x = lambda j: n + j - 1  # noqa: E731

    products: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for (i, j), coeffs in p.c.items():
        products[(e(i), e(j))] = {e(t): to_rational(v) for t, v in coeffs.items()}
    for i in range(1, k + 1):
        products[(e(i), x(i))] = {e(i): 1}
        products[(x(i), e(i))] = {e(i): p.b[i - 1] - 1}
    for (i, j), value in p.a.items():
        products[(e(i), x(j))] = {e(i): value}
    for (j, i), coeffs in p.bprime.items():
        products[(x(j), e(i))] = {e(t): to_rational(v) for t, v in coeffs.items()}

    labels = labels or [f"e{i}" for i in range(1, n + 1)] + [f"x{j}" for j in range(1, k + 1)]
    R = Algebra.from_products(labels, products)
    require_leibniz(R)
    return R, Subspace.from_indices(R, range(n))


def table2_from_R_N(shape):
    """Parameters reproducing R(N_shape, s), with the matching labels and basis order.

    Generators e^t_1 come first, then the non-generators layer by layer.
    Returns (params, labels, perm) where perm[a] is the blockwise index of
    table position a, so ``permute_basis(build_R_N(shape)[0], perm)``
    equals ``build_table2(params, labels)[0]``.
    """
    shape = BlockShape.of(shape)
    s = shape.blocks
    order = [(t, 1) for t in range(1, s + 1)]
    for i in range(2, shape.m[0] + 1):
        order.extend((t, i) for t in range(1, s + 1) if shape.m[t - 1] >= i)
    position = {ti: pos + 1 for pos, ti in enumerate(order)}

    c = {}
    for t, size in enumerate(shape.m, start=1):
        for i in range(1, size):
            c[(position[(t, i)], position[(1, 1)])] = {position[(t, i + 1)]: Fraction(1)}
    a = {}
    for t, i in order[s:]:
        if t == 1:
            a[(position[(t, i)], 1)] = i
        else:
            a[(position[(t, i)], 1)] = i - 1
            a[(position[(t, i)], t)] = 1
    b = tuple(0 if t == 1 else 1 for t in range(1, s + 1))

    params = Table2Params(k=s, n=shape.dim, b=b, c=c, a={key: v for key, v in a.items() if v})
    labels = [f"e{t}_{i}" for t, i in order] + [f"x{j}" for j in range(1, s + 1)]
    perm = [shape.index(t, i) for t, i in order] + [shape.dim + j for j in range(s)]
    return params, labels, perm


def heisenberg_params(symmetric=True):
    """Two generators e1, e2 with [e1, e2] = e3, and [e2, e1] = -e3 when symmetric.

    The symmetric table is a Lie algebra and needs b = (0, 0) with
    [x_j, e3] = -e3. Without [e2, e1] the identity forces b = (1, 0) and
    leaves [x_j, e3] = 0.
    """
    c = {(1, 2): {3: Fraction(1)}}
    if symmetric:
        c[(2, 1)] = {3: Fraction(-1)}
        b = (0, 0)
        bprime = {(j, 3): {3: Fraction(-1)} for j in (1, 2)}
    else:
        b = (1, 0)
        bprime = {}
    return Table2Params(k=2, n=3, b=b, c=c, a={(3, 1): 1, (3, 2): 1}, bprime=bprime)


def table2_examples():
    """Named table instances with a non-abelian nilradical."""
    examples = {
        'heisenberg-lie': heisenberg_params(),
        'heisenberg-leibniz': heisenberg_params(symmetric=False),
    }
    for shape in ((2, 1), (3,), (2, 2)):
        params, _, _ = table2_from_R_N(shape)
        examples['rn-' + '-'.join(map(str, shape))] = params
    return examples
