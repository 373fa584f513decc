"""Algebra interchange format and the JSON sidecars that travel with it.

    {"dim": n, "basis": ["e1", ...],
     "table": [{"left": i, "right": j, "coeffs": {"t": "p/q", ...}}, ...]}

Indices count from 0, absent products are zero and writers emit entries
sorted by (left, right, t). Readers reject anything else with the JSON
path of the offending value.
"""
import json
import logging

from leibniz.algebra import Algebra, Subspace
from leibniz.exceptions import AlgebraParseError, DimensionMismatch
from leibniz.items import CrossAction
from leibniz.utils.codec import sparse_coeffs_to_json
from leibniz.utils.exactmat import ZERO, parse_rational

logger = logging.getLogger(__name__)

ALGEBRA_KEYS = ('dim', 'basis', 'table')
ENTRY_KEYS = ('left', 'right', 'coeffs')


def _load(data):
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode('utf-8')
        except UnicodeDecodeError as e:
            raise AlgebraParseError(f"input is not UTF-8: {e.reason}", f"byte {e.start}") from None
    if isinstance(data, str):
        try:
            return json.loads(data)
        except json.JSONDecodeError as e:
            raise AlgebraParseError(e.msg, f"line {e.lineno} column {e.colno}") from None
    return data


def _is_index(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _expect_keys(obj, keys, position, required=None):
    if not isinstance(obj, dict):
        raise AlgebraParseError("expected an object", position)
    unknown = sorted(set(obj) - set(keys))
    if unknown:
        raise AlgebraParseError(f"unknown key {unknown[0]!r}", position)
    for key in required if required is not None else keys:
        if key not in obj:
            raise AlgebraParseError(f"missing key {key!r}", position)


def _parse_coeffs(coeffs, dim, position):
    if not isinstance(coeffs, dict):
        raise AlgebraParseError("coefficients must be an object", position)
    vector = {}
    for key, value in coeffs.items():
        where = f"{position}.{key}"
        if not (key.isdigit() and key.isascii()) or int(key) >= dim:
            raise AlgebraParseError(f"coefficient index {key!r} outside 0..{dim - 1}", where)
        try:
            vector[int(key)] = parse_rational(value)
        except ValueError:
            raise AlgebraParseError(f"coefficient {value!r} is not a rational \"p/q\"", where) from None
    return vector


def parse_algebra(data) -> Algebra:
    """Read an algebra from JSON text, bytes or an already decoded document."""
    document = _load(data)
    _expect_keys(document, ALGEBRA_KEYS, '$')

    dim = document['dim']
    if not _is_index(dim) or dim < 0:
        raise AlgebraParseError(f"dim must be a non-negative integer, got {dim!r}", '$.dim')

    basis = document['basis']
    if not isinstance(basis, list) or len(basis) != dim:
        raise AlgebraParseError(f"basis must list {dim} labels", '$.basis')
    for position, label in enumerate(basis):
        if not isinstance(label, str) or not label:
            raise AlgebraParseError("labels must be nonempty strings", f"$.basis[{position}]")
    if len(set(basis)) != dim:
        raise AlgebraParseError("basis labels must be unique", '$.basis')

    table = document['table']
    if not isinstance(table, list):
        raise AlgebraParseError("table must be a list", '$.table')
    products = {}
    for position, entry in enumerate(table):
        where = f"$.table[{position}]"
        _expect_keys(entry, ENTRY_KEYS, where)
        for side in ('left', 'right'):
            if not _is_index(entry[side]) or not 0 <= entry[side] < dim:
                raise AlgebraParseError(f"{side} index must lie in 0..{dim - 1}", f"{where}.{side}")
        pair = (entry['left'], entry['right'])
        if pair in products:
            raise AlgebraParseError(f"product {pair} listed twice", where)
        products[pair] = _parse_coeffs(entry['coeffs'], dim, f"{where}.coeffs")

    A = Algebra.from_products(basis, products)
    logger.debug(f"Parsed a {A.dim}-dimensional algebra with {len(A.products)} nonzero products")
    return A


def algebra_to_json(A: Algebra):
    return {
        'dim': A.dim,
        'basis': list(A.labels),
        'table': [
            {'left': i, 'right': j, 'coeffs': sparse_coeffs_to_json(vector)}
            for i, j, vector in A.products
        ],
    }


def dump_json(document):
    """Canonical compact JSON text; equal documents give equal bytes."""
    return json.dumps(document, separators=(',', ':'), ensure_ascii=False)


def serialize_algebra(A: Algebra) -> str:
    return dump_json(algebra_to_json(A))


def nilradical_to_json(N: Subspace):
    indices = N.basis_indices()
    if indices is None:
        raise DimensionMismatch("only coordinate subspaces have an index sidecar")
    return {'nilradical': indices}


def parse_index_set(data, A: Algebra, key='nilradical') -> Subspace:
    """Coordinate subspace from {"<key>": [indices]} or a bare index list."""
    document = _load(data)
    if isinstance(document, dict):
        _expect_keys(document, (key,), '$')
        document, root = document[key], f"$.{key}"
    else:
        root = '$'
    if not isinstance(document, list):
        raise AlgebraParseError("expected a list of basis indices", root)
    for position, index in enumerate(document):
        if not _is_index(index) or not 0 <= index < A.dim:
            raise AlgebraParseError(f"index must lie in 0..{A.dim - 1}", f"{root}[{position}]")
    return Subspace.from_indices(A, document)


def parse_action(data, R: Algebra, S: Algebra) -> CrossAction:
    """Cross products from [{"left": "e", "right": 0, "coeffs": {...}}, ...].

    Levi basis vectors are named by label and radical ones by index, so
    each entry reads either [s, r] or [r, s].
    """
    document = _load(data)
    root = '$'
    if isinstance(document, dict):
        _expect_keys(document, ('action',), '$')
        document, root = document['action'], '$.action'
    if not isinstance(document, list):
        raise AlgebraParseError("action must be a list of products", root)
    left, right = {}, {}
    for position, entry in enumerate(document):
        where = f"{root}[{position}]"
        _expect_keys(entry, ENTRY_KEYS, where)
        first, second = entry['left'], entry['right']
        if isinstance(first, str) and _is_index(second):
            target, key = left, (_levi_index(S, first, f"{where}.left"), _radical_index(R, second, f"{where}.right"))
        elif _is_index(first) and isinstance(second, str):
            target, key = right, (_radical_index(R, first, f"{where}.left"), _levi_index(S, second, f"{where}.right"))
        else:
            raise AlgebraParseError("one side must be a Levi label and the other a radical index", where)
        if key in target:
            raise AlgebraParseError("product listed twice", where)
        coeffs = _parse_coeffs(entry['coeffs'], R.dim, f"{where}.coeffs")
        target[key] = tuple(coeffs.get(t, ZERO) for t in range(R.dim))
    return CrossAction(left=left, right=right)


def _levi_index(S, label, position):
    if label not in S.labels:
        raise AlgebraParseError(f"no Levi basis vector {label!r}", position)
    return S.labels.index(label)


def _radical_index(R, index, position):
    if not 0 <= index < R.dim:
        raise AlgebraParseError(f"radical index must lie in 0..{R.dim - 1}", position)
    return index
