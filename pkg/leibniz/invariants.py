import logging

from leibniz import settings
from leibniz.algebra import (
    Algebra, Subspace, is_ideal, product_subspace, right_matrix, subalgebra,
)
from leibniz.exceptions import NotClosed, NotNilpotent
from leibniz.items import CharSeq, IdentityVerdict, NilradicalCheck, NilradicalReport, SeriesReport
from leibniz.utils import exactmat
from leibniz.utils.sampling import make_rng, random_vector

logger = logging.getLogger(__name__)


def _series(A: Algebra, kind):
    whole = Subspace.whole(A)
    terms = [whole]
    while not terms[-1].is_zero():
        last = terms[-1]
        following = product_subspace(A, last, whole if kind == 'lower-central' else last)
        if following == last:
            break
        terms.append(following)
    index = len(terms) if terms[-1].is_zero() else None
    return SeriesReport(kind=kind, terms=terms, index=index)


def lower_central_series(A: Algebra) -> SeriesReport:
    """L^1 = L, L^(k+1) = [L^k, L] until two consecutive terms agree."""
    return _series(A, 'lower-central')


def derived_series(A: Algebra) -> SeriesReport:
    """L^[1] = L, L^[k+1] = [L^[k], L^[k]] until two consecutive terms agree."""
    return _series(A, 'derived')


def is_nilpotent(A: Algebra) -> bool:
    return lower_central_series(A).reaches_zero


def is_solvable(A: Algebra) -> bool:
    return derived_series(A).reaches_zero


def _kernel_subspace(A: Algebra, equations):
    return Subspace.span(A, exactmat.kernel_from_equations(equations, A.dim))


def _left_conditions(A: Algebra):
    # [b_j, z] = 0, one row per (j, t)
    rows = []
    for j in range(A.dim):
        for t in range(A.dim):
            rows.append({i: A.structure_constant(j, i, t) for i in range(A.dim)})
    return rows


def _right_conditions(A: Algebra):
    # [z, b_j] = 0
    rows = []
    for j in range(A.dim):
        for t in range(A.dim):
            rows.append({i: A.structure_constant(i, j, t) for i in range(A.dim)})
    return rows


def center(A: Algebra) -> Subspace:
    """Z(L) = {x : [x, y] = [y, x] = 0 for all y}."""
    return _kernel_subspace(A, _right_conditions(A) + _left_conditions(A))


def right_annihilator(A: Algebra) -> Subspace:
    """Ann_r(L) = {z : [y, z] = 0 for all y}."""
    return _kernel_subspace(A, _left_conditions(A))


def is_nilpotent_operator(op) -> bool:
    """M^n = 0 for a square n x n matrix."""
    if op.rows != op.cols:
        return False
    return op.power(op.rows).is_zero()


def jordan_profile_nilpotent(op):
    """Descending Jordan block sizes of a nilpotent matrix.

    The number of blocks of size >= k is rank(M^(k-1)) - rank(M^k).
    """
    n = op.rows
    if op.cols != n:
        raise NotNilpotent("Jordan profiles need a square matrix")
    ranks = [n]
    power = exactmat.Matrix.identity(n)
    while ranks[-1] > 0:
        if len(ranks) > n:
            raise NotNilpotent(f"operator is not nilpotent: rank stalls at {ranks[-1]}")
        power = power @ op
        ranks.append(exactmat.rank(power))
        if ranks[-1] == ranks[-2] and ranks[-1] > 0:
            raise NotNilpotent(f"operator is not nilpotent: rank stalls at {ranks[-1]}")
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))] + [0]
    profile = []
    for size in range(len(at_least) - 1, 0, -1):
        profile.extend([size] * (at_least[size - 1] - at_least[size]))
    return tuple(profile)


def characteristic_sequence(N: Algebra, samples=None, seed=None, shape=None) -> CharSeq:
    """C(N): lexicographic maximum of the Jordan profile of R_x over x in N minus N^2.

    Candidates are the basis vectors outside N^2 followed by ``samples``
    seeded random combinations; the first maximal candidate is the witness.
    When ``shape`` is given the result is cross-checked against it.
    """
    samples = settings.DEFAULT_SAMPLES if samples is None else samples
    seed = settings.DEFAULT_SEED if seed is None else seed
    if not is_nilpotent(N):
        raise NotNilpotent("characteristic sequences are defined for nilpotent algebras only")

    whole = Subspace.whole(N)
    square = product_subspace(N, whole, whole)
    candidates = [N.basis_vector(i) for i in square.complement_indices()]
    if candidates:
        rng = make_rng(seed)
        drawn = 0
        while drawn < samples:
            x = random_vector(rng, N.dim)
            if square.contains_vector(x):
                continue
            candidates.append(x)
            drawn += 1

    best, witness = None, N.zero().coords
    for x in candidates:
        profile = jordan_profile_nilpotent(right_matrix(N, x))
        if best is None or profile > best:
            best, witness = profile, x
    best = best or ()

    mode = 'sampled'
    if shape is not None:
        if tuple(shape) == best:
            mode = 'exact-family'
        else:
            logger.warning(f"Sampled characteristic sequence {best} differs from declared shape {tuple(shape)}")
    logger.debug(f"C(N) = {best} from {len(candidates)} candidates")
    return CharSeq(sequence=best, witness=N.element(witness), mode=mode, candidates=len(candidates))


def _nilpotent_subalgebra(R: Algebra, U: Subspace):
    try:
        return is_nilpotent(subalgebra(R, U))
    except NotClosed:
        return False


def verify_declared_nilradical(R: Algebra, N: Subspace) -> NilradicalReport:
    """Necessary conditions for N to be the nilradical of R.

    Maximality is only probed through one-dimensional extensions.
    """
    checks = [NilradicalCheck('ideal', is_ideal(R, N))]

    try:
        nilpotent = is_nilpotent(subalgebra(R, N))
        checks.append(NilradicalCheck('nilpotent', nilpotent))
    except NotClosed as e:
        checks.append(NilradicalCheck('nilpotent', False, f"not a subalgebra: {e}"))

    if is_solvable(R):
        whole = Subspace.whole(R)
        contained = N.contains(product_subspace(R, whole, whole))
        checks.append(NilradicalCheck('derived-algebra-inside', contained))
    else:
        checks.append(NilradicalCheck('derived-algebra-inside', True, 'not applicable: R is not solvable'))

    extendable = []
    for i in N.complement_indices():
        extension = N + Subspace.from_indices(R, [i])
        if _nilpotent_subalgebra(R, extension):
            extendable.append(R.labels[i])
    detail = f"nilpotent extensions by {extendable}" if extendable else ''
    checks.append(NilradicalCheck('extension-probe', not extendable, detail))
    return NilradicalReport(checks=checks)


def check_radical_containment(L: Algebra, radical: Subspace, nilradical: Subspace) -> bool:
    """[L, R] + [R, L] inside N."""
    whole = Subspace.whole(L)
    return (nilradical.contains(product_subspace(L, whole, radical))
            and nilradical.contains(product_subspace(L, radical, whole)))


def check_symmetric_annihilation(A: Algebra, trials=None, seed=None) -> IdentityVerdict:
    """[z, [x,y] + [y,x]] = 0 for every basis z, on seeded random pairs x, y."""
    trials = settings.DEFAULT_TRIALS if trials is None else trials
    rng = make_rng(settings.DEFAULT_SEED if seed is None else seed)
    annihilator = right_annihilator(A)
    for _ in range(trials):
        x = random_vector(rng, A.dim)
        y = random_vector(rng, A.dim)
        symmetric = tuple(a + b for a, b in zip(A.multiply(x, y), A.multiply(y, x)))
        if not annihilator.contains_vector(symmetric):
            return IdentityVerdict(holds=False, trials=trials, failure=(x, y))
    return IdentityVerdict(holds=True, trials=trials)
