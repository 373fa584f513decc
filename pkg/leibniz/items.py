from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Tuple

from leibniz.utils.codec import matrix_to_json, sparse_coeffs_to_json, subspace_to_json, vector_to_json

# Matrices of linear maps act on coordinate columns: column j holds d(b_j)
MATRIX_CONVENTION = 'columns are images of basis vectors'


@dataclass(frozen=True)
class LeibnizVerdict:
    ok: bool
    triple: Optional[Tuple[int, int, int]] = None
    residual: Optional[tuple] = None  # coordinates of the failing identity

    def to_dict(self):
        if self.ok:
            return {'verdict': 'ok'}
        return {
            'verdict': 'violation',
            'triple': list(self.triple),
            'residual': vector_to_json(self.residual),
        }


@dataclass(frozen=True)
class SeriesReport:
    kind: str  # 'lower-central' or 'derived'
    terms: list  # Subspaces, L^1 first, stops at the first repeat
    index: Optional[int]  # None when the series never reaches zero

    @property
    def dims(self):
        return [term.dim for term in self.terms]

    @property
    def reaches_zero(self):
        return self.index is not None

    def to_dict(self):
        return {
            'kind': self.kind,
            'dims': self.dims,
            'index': self.index if self.index is not None
            else ('not nilpotent' if self.kind == 'lower-central' else 'not solvable'),
            'terms': [subspace_to_json(term) for term in self.terms],
        }


@dataclass(frozen=True)
class CharSeq:
    sequence: Tuple[int, ...]
    witness: object  # Element
    mode: str  # 'sampled' or 'exact-family'
    candidates: int = 0

    def to_dict(self):
        return {
            'sequence': list(self.sequence),
            'witness': vector_to_json(self.witness.coords),
            'mode': self.mode,
            'candidates': self.candidates,
        }


@dataclass(frozen=True)
class NilradicalCheck:
    name: str
    passed: bool
    detail: str = ''


@dataclass(frozen=True)
class NilradicalReport:
    checks: List[NilradicalCheck]
    maximality: str = 'probed, not certified'

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def failures(self):
        return [check.name for check in self.checks if not check.passed]

    def to_dict(self):
        return {
            'passed': self.passed,
            'checks': [{'name': c.name, 'passed': c.passed, 'detail': c.detail} for c in self.checks],
            'maximality': self.maximality,
        }


@dataclass(frozen=True)
class DerivationSpace:
    algebra: object
    basis: list  # Matrices
    inner_basis: list  # Matrices, a basis of {R_x}

    @property
    def dims(self):
        return len(self.basis), len(self.inner_basis)

    def to_dict(self, emit_basis=False):
        report = {
            'der_dim': len(self.basis),
            'inner_dim': len(self.inner_basis),
            'convention': MATRIX_CONVENTION,
        }
        if emit_basis:
            report['basis'] = [matrix_to_json(d) for d in self.basis]
            report['inner_basis'] = [matrix_to_json(d) for d in self.inner_basis]
        return report


@dataclass(frozen=True)
class CompletenessReport:
    center_dim: int
    der_dim: int
    inner_dim: int
    inner_in_der: bool
    der_in_inner: bool

    @property
    def complete(self):
        return self.center_dim == 0 and self.inner_in_der and self.der_in_inner

    def to_dict(self):
        return {
            'center_dim': self.center_dim,
            'der_dim': self.der_dim,
            'inner_dim': self.inner_dim,
            'verdict': 'complete' if self.complete else 'not complete',
        }


@dataclass(frozen=True)
class IdentityVerdict:
    holds: bool
    trials: int
    failure: Optional[tuple] = None  # (x, y) coordinates of the first failing pair


@dataclass(frozen=True)
class StageRecord:
    m: int  # works in R/N^m with unknowns in N^(m-1)/N^m
    layer_dim: int
    unknowns: int
    rows: int
    kernel_dim: int
    deferred: int = 0
    rounds: int = 1

    def to_dict(self):
        return {
            'm': self.m,
            'layer_dim': self.layer_dim,
            'unknowns': self.unknowns,
            'rows': self.rows,
            'kernel_dim': self.kernel_dim,
            'deferred': self.deferred,
            'rounds': self.rounds,
        }


@dataclass(frozen=True)
class SplitCertificate:
    stages: List[StageRecord]
    witness: Optional[dict] = None  # named products of a kernel vector
    completeness_required: bool = True
    notes: List[str] = field(default_factory=list)

    @property
    def splits(self):
        return all(stage.kernel_dim == 0 for stage in self.stages)

    @property
    def verdict(self):
        return 'splits' if self.splits else 'nonzero-kernel'

    def to_dict(self):
        report = {
            'stages': [stage.to_dict() for stage in self.stages],
            'verdict': self.verdict,
            'completeness_required': self.completeness_required,
        }
        if self.witness is not None:
            report['witness'] = self.witness
        if self.notes:
            report['notes'] = list(self.notes)
        return report


@dataclass(frozen=True)
class CrossAction:
    """Products between a Levi factor S and a radical R, as R-coordinate vectors.

    ``left[(s, r)]`` is [s, r] and ``right[(r, s)]`` is [r, s]; both are
    indexed by basis positions. Missing pairs multiply to zero.
    """

    left: Mapping[Tuple[int, int], tuple] = field(default_factory=dict)
    right: Mapping[Tuple[int, int], tuple] = field(default_factory=dict)

    def is_zero(self):
        return not any(any(v) for v in list(self.left.values()) + list(self.right.values()))

    def to_list(self, levi_labels):
        entries = []
        for (s, r), vector in sorted(self.left.items()):
            if any(vector):
                entries.append({'left': levi_labels[s], 'right': r, 'coeffs': sparse_coeffs_to_json(vector)})
        for (r, s), vector in sorted(self.right.items()):
            if any(vector):
                entries.append({'left': r, 'right': levi_labels[s], 'coeffs': sparse_coeffs_to_json(vector)})
        return entries
