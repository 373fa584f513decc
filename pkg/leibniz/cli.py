"""Command-line front door: ``python run.py <verb> ...``.

Exit codes: 0 when the verdict is positive, 1 when it is negative (Leibniz
violation, not complete, nonzero kernel, failed nilradical checks) and 2
on usage, input or precondition errors.
"""
import argparse
import json
import logging
import re
import sys
from pathlib import Path

from leibniz import __version__, settings
from leibniz.algebra import Subspace, check_leibniz, is_lie, quotient
from leibniz.derivations import check_inner_commutator_identity, derivation_space, is_complete, outer_derivations
from leibniz.exceptions import AlgebraParseError, InvalidParameters, LeibnizError, LeibnizViolation
from leibniz.families import (
    BlockShape, Table2Params, build_N, build_R_A, build_R_N, build_sl2, build_table2, table2_examples,
)
from leibniz.invariants import (
    center, characteristic_sequence, check_radical_containment, check_symmetric_annihilation,
    derived_series, lower_central_series, right_annihilator, verify_declared_nilradical,
)
from leibniz.items import LeibnizVerdict
from leibniz.pipelines import ReportPipeline, SummaryPipeline, input_digest
from leibniz.serialization import (
    nilradical_to_json, parse_action, parse_algebra, parse_index_set, serialize_algebra,
)
from leibniz.splitting import glue_semidirect, reassemble, solve_cross_action, verify_split
from leibniz.utils.codec import subspace_to_json

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2
INDEX_LIST = re.compile(r'\d+(,\d+)*')


def setup_logger(level=None, log_file=None):
    """Set up logging on stderr (stdout carries the reports) and an optional file."""
    handlers = [logging.StreamHandler(sys.stderr)]
    log_file = log_file or settings.LOG_FILE
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format=settings.LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
    return logging.getLogger(__name__)


def _int_list(text):
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _join_negative_values(argv):
    # "--alpha -1,0" would otherwise be read as an unknown option
    joined, tokens = [], iter(argv)
    for token in tokens:
        if token == '--alpha':
            value = next(tokens, None)
            joined.append(token if value is None else f"--alpha={value}")
        else:
            joined.append(token)
    return joined


def parse_arguments(argv):
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(prog='leibniz', description='Exact toolkit for Leibniz algebras.')
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('-o', '--output', help='Write the result here instead of stdout')
    style = parser.add_mutually_exclusive_group()
    style.add_argument('--json', action='store_true', help='Compact canonical JSON reports (default)')
    style.add_argument('--pretty', action='store_true', help='Indented reports plus a coloured summary on stderr')
    parser.add_argument('--log-level', help=f"Logging level (default {settings.LOG_LEVEL})")
    parser.add_argument('--log-file', help='Also log to this file')
    verbs = parser.add_subparsers(dest='verb', required=True)

    build = verbs.add_parser('build', help='Build a family member')
    kinds = build.add_subparsers(dest='kind', required=True)
    nfs = kinds.add_parser('nfs', help='N_{m1,...,ms}, or R(N, s) with --solvable')
    nfs.add_argument('--shape', required=True, help='Descending block sizes, e.g. 3,2')
    nfs.add_argument('--solvable', action='store_true')
    ext = kinds.add_parser('abelian-ext', help='R(A(k), k)')
    ext.add_argument('--k', type=int, required=True)
    ext.add_argument('--alpha', type=_int_list, required=True, help='alpha values from {-1, 0}')
    kinds.add_parser('sl2', help='sl2 on (e, f, h)')
    table2 = kinds.add_parser('table2', help='General table with as many generators as the codimension')
    source = table2.add_mutually_exclusive_group(required=True)
    source.add_argument('--params', help='Parameter JSON file')
    source.add_argument('--example', choices=sorted(table2_examples()))
    for kind in (nfs, ext, table2):
        kind.add_argument(
            '--sidecar', help='Where to write {"nilradical": [...]} (default: beside -o or in the output directory)')

    check = verbs.add_parser('check', help='Verify the Leibniz identity on all basis triples')
    check.add_argument('algebra')

    series = verbs.add_parser('series', help='Lower central or derived series')
    series.add_argument('algebra')
    series.add_argument('--kind', choices=('lc', 'derived'), default='lc')

    centre = verbs.add_parser('center', help='Center and right annihilator')
    centre.add_argument('algebra')

    char_seq = verbs.add_parser('char-seq', help='Characteristic sequence of a nilpotent algebra')
    char_seq.add_argument('algebra')
    char_seq.add_argument('--samples', type=int, default=settings.DEFAULT_SAMPLES)
    char_seq.add_argument('--seed', type=int, default=settings.DEFAULT_SEED)
    char_seq.add_argument('--shape', type=_int_list, help='Expected sequence, e.g. 3,2')

    derivations = verbs.add_parser('derivations', help='Der and Inner dimensions')
    derivations.add_argument('algebra')
    derivations.add_argument('--emit-basis', action='store_true')

    complete = verbs.add_parser('complete', help='Trivial center and every derivation inner')
    complete.add_argument('algebra')

    nilradical = verbs.add_parser('nilradical-verify', help='Check a declared nilradical')
    nilradical.add_argument('algebra')
    nilradical.add_argument('--declared', required=True,
                            help='Basis indices, e.g. 0,1,2, or a {"nilradical": [indices]} file')

    split = verbs.add_parser('split', help='Certify that R + sl2 is a direct sum')
    split.add_argument('--radical', required=True)
    split.add_argument('--nilradical', required=True)
    split.add_argument('--levi', choices=('sl2',), default='sl2')
    split.add_argument('--emit-certificate', help='Also write the certificate here')
    split.add_argument('--allow-incomplete', action='store_true', help='Waive the completeness precondition')

    glue = verbs.add_parser('glue', help='Assemble R + sl2 from explicit cross products')
    glue.add_argument('--radical', required=True)
    glue.add_argument('--levi', choices=('sl2',), default='sl2')
    glue.add_argument('--action', help='Cross-product JSON file (zero action when omitted)')
    glue.add_argument('--nilradical', help='Reject cross products leaving this nilradical')

    quotient_verb = verbs.add_parser('quotient', help='Quotient by a coordinate ideal')
    quotient_verb.add_argument('algebra')
    quotient_verb.add_argument('--ideal', type=_int_list, required=True, help='Basis indices, e.g. 1,2')

    identities = verbs.add_parser('identities', help='Seeded identity suite')
    identities.add_argument('algebra')
    identities.add_argument('--trials', type=int, default=settings.DEFAULT_TRIALS)
    identities.add_argument('--seed', type=int, default=settings.DEFAULT_SEED)

    return parser.parse_args(_join_negative_values(argv))


class Session:
    """Inputs read during one command, with their digests."""

    def __init__(self, args):
        self.args = args
        self.digests = {}

    def read(self, path):
        data = Path(path).read_bytes()
        self.digests[str(path)] = input_digest(data)
        return data

    def algebra(self, path):
        return parse_algebra(self.read(path))

    def report(self, report):
        indent = 2 if self.args.pretty else None
        stamped = ReportPipeline(self.args.output, self.digests, indent).process_item(report)
        if self.args.pretty:
            SummaryPipeline().process_item(self.args.verb, report)
        return stamped

    def emit_text(self, text, path=None):
        path = path or self.args.output
        if path:
            Path(path).parent.mkdir(parents=True, exist_ok=True)
            Path(path).write_text(text + '\n', encoding='utf-8')
            logger.info(f"Wrote {path}")
        else:
            sys.stdout.write(text + '\n')


def _sidecar_path(args):
    if getattr(args, 'sidecar', None):
        return args.sidecar
    if args.output:
        output = Path(args.output)
        return str(output.with_name(f"{output.stem}_nilradical.json"))
    return str(Path(settings.OUTPUT_DIR) / f"{_build_name(args)}_nilradical.json")


def _build_name(args):
    """File stem naming a built family member, e.g. R_N_3_2 or R_A_-1_0."""
    if args.kind == 'nfs':
        prefix = 'R_N' if args.solvable else 'N'
        return '_'.join([prefix] + [part.strip() for part in args.shape.split(',')])
    if args.kind == 'abelian-ext':
        return '_'.join(['R_A'] + [str(a) for a in args.alpha])
    return args.example or Path(args.params).stem


def _violation_report(error: LeibnizViolation):
    return LeibnizVerdict(ok=False, triple=error.triple, residual=error.residual).to_dict()


def _cmd_build(session, args):
    if args.kind == 'nfs':
        shape = BlockShape.of(args.shape)
        if args.solvable:
            A, N = build_R_N(shape)
        else:
            A, _ = build_N(shape)
            N = Subspace.whole(A)
    elif args.kind == 'abelian-ext':
        A, N = build_R_A(args.k, args.alpha)
    elif args.kind == 'sl2':
        A, N = build_sl2(), None
    else:
        if args.params:
            try:
                params = Table2Params.from_json(json.loads(session.read(args.params)))
            except json.JSONDecodeError as e:
                raise InvalidParameters(f"{args.params}: {e}") from None
        else:
            params = table2_examples()[args.example]
        try:
            A, N = build_table2(params)
        except LeibnizViolation as e:
            logger.error(f"Rejected table parameters: {e}")
            session.report(_violation_report(e))
            return EXIT_NEGATIVE

    session.emit_text(serialize_algebra(A))
    if N is not None:
        session.emit_text(json.dumps(nilradical_to_json(N)), _sidecar_path(args))
    return EXIT_OK


def _cmd_check(session, args):
    A = session.algebra(args.algebra)
    verdict = check_leibniz(A)
    report = verdict.to_dict()
    if verdict.ok:
        report['lie'] = is_lie(A)
    else:
        report['labels'] = [A.labels[i] for i in verdict.triple]
    session.report(report)
    return EXIT_OK if verdict.ok else EXIT_NEGATIVE


def _cmd_series(session, args):
    A = session.algebra(args.algebra)
    series = lower_central_series(A) if args.kind == 'lc' else derived_series(A)
    session.report(series.to_dict())
    return EXIT_OK


def _cmd_center(session, args):
    A = session.algebra(args.algebra)
    session.report({
        'center': subspace_to_json(center(A)),
        'right_annihilator': subspace_to_json(right_annihilator(A)),
    })
    return EXIT_OK


def _cmd_char_seq(session, args):
    A = session.algebra(args.algebra)
    result = characteristic_sequence(A, samples=args.samples, seed=args.seed, shape=args.shape)
    report = result.to_dict()
    report['seed'] = args.seed
    report['samples'] = args.samples
    session.report(report)
    return EXIT_OK


def _cmd_derivations(session, args):
    A = session.algebra(args.algebra)
    report = derivation_space(A).to_dict(emit_basis=args.emit_basis)
    report['outer_dim'] = len(outer_derivations(A))
    session.report(report)
    return EXIT_OK


def _cmd_complete(session, args):
    A = session.algebra(args.algebra)
    report = is_complete(A)
    session.report(report.to_dict())
    return EXIT_OK if report.complete else EXIT_NEGATIVE


def _cmd_nilradical_verify(session, args):
    A = session.algebra(args.algebra)
    if INDEX_LIST.fullmatch(args.declared):
        N = parse_index_set(_int_list(args.declared), A)
    else:
        N = parse_index_set(session.read(args.declared), A)
    report = verify_declared_nilradical(A, N)
    result = report.to_dict()
    result['verdict'] = 'passed' if report.passed else 'failed'
    session.report(result)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _cmd_split(session, args):
    R = session.algebra(args.radical)
    N = parse_index_set(session.read(args.nilradical), R)
    S = build_sl2()
    certificate = solve_cross_action(R, N, S, require_complete=not args.allow_incomplete)
    report = certificate.to_dict()
    if certificate.splits:
        L, R_sub, S_sub = reassemble(R, S)
        N_sub = Subspace.span(L, [tuple(v) + (0,) * S.dim for v in N.basis])
        report['reassembled'] = {
            'verify_split': verify_split(L, R_sub, S_sub),
            'radical_containment': check_radical_containment(L, R_sub, N_sub),
        }
    stamped = session.report(report)
    if args.emit_certificate:
        ReportPipeline(args.emit_certificate).process_item(stamped)
    return EXIT_OK if certificate.splits else EXIT_NEGATIVE


def _cmd_glue(session, args):
    R = session.algebra(args.radical)
    S = build_sl2()
    action = parse_action(session.read(args.action), R, S) if args.action else None
    N = parse_index_set(session.read(args.nilradical), R) if args.nilradical else None
    try:
        if action is None:
            L, _, _ = reassemble(R, S)
        else:
            L = glue_semidirect(R, S, action, nilradical=N)
    except LeibnizViolation as e:
        logger.error(f"Glued table violates the Leibniz identity: {e}")
        session.report(_violation_report(e))
        return EXIT_NEGATIVE
    session.emit_text(serialize_algebra(L))
    return EXIT_OK


def _cmd_quotient(session, args):
    A = session.algebra(args.algebra)
    if any(not 0 <= i < A.dim for i in args.ideal):
        raise InvalidParameters(f"ideal indices must lie in 0..{A.dim - 1}")
    Q, _ = quotient(A, Subspace.from_indices(A, args.ideal))
    session.emit_text(serialize_algebra(Q))
    return EXIT_OK


def _cmd_identities(session, args):
    A = session.algebra(args.algebra)
    commutator = check_inner_commutator_identity(A, trials=args.trials, seed=args.seed)
    annihilation = check_symmetric_annihilation(A, trials=args.trials, seed=args.seed)
    holds = commutator.holds and annihilation.holds
    session.report({
        'verdict': 'holds' if holds else 'fails',
        'inner_commutator': commutator.holds,
        'symmetric_annihilation': annihilation.holds,
        'trials': args.trials,
        'seed': args.seed,
    })
    return EXIT_OK if holds else EXIT_NEGATIVE


COMMANDS = {
    'build': _cmd_build,
    'check': _cmd_check,
    'series': _cmd_series,
    'center': _cmd_center,
    'char-seq': _cmd_char_seq,
    'derivations': _cmd_derivations,
    'complete': _cmd_complete,
    'nilradical-verify': _cmd_nilradical_verify,
    'split': _cmd_split,
    'glue': _cmd_glue,
    'quotient': _cmd_quotient,
    'identities': _cmd_identities,
}


def run(argv=None):
    """Run one command and return its exit code."""
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_ERROR
    setup_logger(args.log_level, args.log_file)

    session = Session(args)
    try:
        return COMMANDS[args.verb](session, args)
    except AlgebraParseError as e:
        logger.error(f"Malformed input at {e.position}: {e}")
        _error_report(str(e), e.position)
    except LeibnizError as e:
        logger.error(f"{args.verb} failed: {e}")
        _error_report(str(e))
    except OSError as e:
        logger.error(f"Cannot access {e.filename}: {e.strerror}")
        _error_report(f"{e.filename}: {e.strerror}")
    return EXIT_ERROR


def _error_report(message, position=None):
    report = {'verdict': 'error', 'error': message}
    if position is not None:
        report['position'] = position
    sys.stdout.write(json.dumps(report, separators=(',', ':')) + '\n')


def main():
    sys.exit(run())
