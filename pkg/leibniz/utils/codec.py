"""JSON forms of exact scalars, vectors, matrices and subspaces."""
from leibniz.utils.exactmat import format_rational


def vector_to_json(vector):
    return [format_rational(v) for v in vector]


def matrix_to_json(m):
    return {
        'rows': m.rows,
        'cols': m.cols,
        'entries': [[format_rational(v) for v in m.row(i)] for i in range(m.rows)],
    }


def subspace_to_json(subspace):
    return {
        'dim': subspace.dim,
        'basis': [vector_to_json(row) for row in subspace.basis],
    }


def sparse_coeffs_to_json(vector):
    """{"t": "p/q"} map of the nonzero coordinates, keys in index order."""
    return {str(t): format_rational(v) for t, v in enumerate(vector) if v}
