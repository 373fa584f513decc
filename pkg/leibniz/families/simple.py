"""The Levi factor sl2 and its irreducible modules."""
from fractions import Fraction

from leibniz import settings
from leibniz.algebra import Algebra, require_leibniz
from leibniz.exceptions import InvalidParameters
from leibniz.families.nilpotent import build_abelian
from leibniz.items import CrossAction


def build_sl2() -> Algebra:
    """sl2 on (e, f, h) with [e, h] = 2e, [f, h] = -2f and [e, f] = h."""
    e, f, h = range(3)
    products = {
        (e, h): {e: 2},
        (h, e): {e: -2},
        (f, h): {f: -2},
        (h, f): {f: 2},
        (e, f): {h: 1},
        (f, e): {h: -1},
    }
    return require_leibniz(Algebra.from_products(settings.SL2_LABELS, products))


def _module_matrices(dim):
    # Weight basis v_0, ..., v_n of the irreducible module of dimension n + 1,
    # written for the bracket of build_sl2 (e -> e, f -> -f, h -> -h of the usual one)
    n = dim - 1
    e, f, h = {}, {}, {}
    for i in range(dim):
        h[i] = {i: Fraction(-(n - 2 * i))}
        if i + 1 < dim:
            f[i] = {i + 1: Fraction(-(i + 1))}
        if i > 0:
            e[i] = {i - 1: Fraction(n - i + 1)}
    return e, f, h


def sl2_module_action(dim=3):
    """A(dim) with the irreducible sl2 action: [s, v] = s.v and [v, s] = -s.v.

    Gluing this action onto A(dim) gives a Lie algebra, so it satisfies the
    Leibniz identity while its cross products do not vanish.
    """
    if dim < 1:
        raise InvalidParameters(f"module dimension must be positive, got {dim}")
    V = build_abelian(dim)
    left, right = {}, {}
    for s, images in enumerate(_module_matrices(dim)):
        for r, image in images.items():
            vector = tuple(image.get(t, Fraction(0)) for t in range(dim))
            left[(s, r)] = vector
            right[(r, s)] = tuple(-c for c in vector)
    return V, CrossAction(left=left, right=right)
