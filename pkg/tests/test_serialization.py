import json
from fractions import Fraction

import pytest

from leibniz.algebra import Algebra, Subspace
from leibniz.exceptions import AlgebraParseError, DimensionMismatch
from leibniz.families import build_N, build_R_A, build_R_N, build_sl2, sl2_module_action
from leibniz.items import CrossAction
from leibniz.serialization import (
    algebra_to_json, dump_json, nilradical_to_json, parse_action, parse_algebra, parse_index_set,
    serialize_algebra,
)

TWO_DIM_LIE = '{"dim":2,"basis":["f1","x1"],"table":[{"left":0,"right":1,"coeffs":{"0":"1"}},' \
              '{"left":1,"right":0,"coeffs":{"0":"-1"}}]}'


def test_parse_two_dim_lie(two_dim_lie):
    assert parse_algebra(TWO_DIM_LIE) == two_dim_lie
    assert parse_algebra(TWO_DIM_LIE.encode('utf-8')) == two_dim_lie
    assert parse_algebra(json.loads(TWO_DIM_LIE)) == two_dim_lie


def test_writer_output_is_canonical(two_dim_lie):
    assert serialize_algebra(two_dim_lie) == TWO_DIM_LIE


@pytest.mark.parametrize('algebra', [
    build_N((3, 2))[0],
    build_R_N((2, 1))[0],
    build_R_A(2, [-1, 0])[0],
    build_sl2(),
    Algebra.from_products(['u', 'v'], {(0, 0): {1: Fraction(-3, 7)}}),
])
def test_written_algebras_read_back(algebra):
    text = serialize_algebra(algebra)
    assert parse_algebra(text) == algebra
    assert serialize_algebra(parse_algebra(text)) == text


def test_entries_are_sorted_whatever_the_input_order():
    shuffled = {
        'dim': 2, 'basis': ['a', 'b'],
        'table': [
            {'left': 1, 'right': 0, 'coeffs': {'1': '2'}},
            {'left': 0, 'right': 1, 'coeffs': {'1': '3/6', '0': '0'}},
        ],
    }
    document = algebra_to_json(parse_algebra(shuffled))
    assert [(e['left'], e['right']) for e in document['table']] == [(0, 1), (1, 0)]
    assert document['table'][0]['coeffs'] == {'1': '1/2'}


def test_zero_dimensional_algebra():
    A = parse_algebra('{"dim":0,"basis":[],"table":[]}')
    assert A.dim == 0
    assert serialize_algebra(A) == '{"dim":0,"basis":[],"table":[]}'


@pytest.mark.parametrize('document, position', [
    ({'dim': -1, 'basis': [], 'table': []}, '$.dim'),
    ({'dim': '2', 'basis': ['a', 'b'], 'table': []}, '$.dim'),
    ({'dim': True, 'basis': ['a'], 'table': []}, '$.dim'),
    ({'dim': 2, 'basis': ['a'], 'table': []}, '$.basis'),
    ({'dim': 2, 'basis': ['a', 'a'], 'table': []}, '$.basis'),
    ({'dim': 1, 'basis': [3], 'table': []}, '$.basis[0]'),
    ({'dim': 1, 'basis': ['a'], 'table': [], 'extra': 1}, '$'),
    ({'dim': 1, 'basis': ['a']}, '$'),
    ({'dim': 1, 'basis': ['a'], 'table': {}}, '$.table'),
    ({'dim': 1, 'basis': ['a'], 'table': [{'left': 0, 'right': 0}]}, '$.table[0]'),
    ({'dim': 1, 'basis': ['a'], 'table': [{'left': 0, 'right': 1, 'coeffs': {}}]}, '$.table[0].right'),
    ({'dim': 1, 'basis': ['a'], 'table': [{'left': 0, 'right': 0, 'coeffs': {'0': '1.5'}}]}, '$.table[0].coeffs.0'),
    ({'dim': 1, 'basis': ['a'], 'table': [{'left': 0, 'right': 0, 'coeffs': {'0': 1}}]}, '$.table[0].coeffs.0'),
    ({'dim': 1, 'basis': ['a'], 'table': [{'left': 0, 'right': 0, 'coeffs': {'0': '1/0'}}]}, '$.table[0].coeffs.0'),
    ({'dim': 1, 'basis': ['a'], 'table': [{'left': 0, 'right': 0, 'coeffs': {'1': '1'}}]}, '$.table[0].coeffs.1'),
    ({'dim': 1, 'basis': ['a'], 'table': [{'left': 0, 'right': 0, 'coeffs': {'0': '1'}, 'note': ''}]},
     '$.table[0]'),
])
def test_malformed_documents_report_their_position(document, position):
    with pytest.raises(AlgebraParseError) as excinfo:
        parse_algebra(document)
    assert excinfo.value.position == position
    assert str(excinfo.value).startswith(position)


def test_duplicate_products_are_rejected():
    entry = {'left': 0, 'right': 0, 'coeffs': {'0': '1'}}
    with pytest.raises(AlgebraParseError) as excinfo:
        parse_algebra({'dim': 1, 'basis': ['a'], 'table': [entry, dict(entry)]})
    assert excinfo.value.position == '$.table[1]'


def test_invalid_json_reports_line_and_column():
    with pytest.raises(AlgebraParseError) as excinfo:
        parse_algebra('{"dim": 1,\n "basis": [}')
    assert excinfo.value.position.startswith('line 2 column')


def test_dump_json_is_compact():
    assert dump_json({'verdict': 'ok', 'dims': [1, 0]}) == '{"verdict":"ok","dims":[1,0]}'


def test_nilradical_sidecar():
    R, N = build_R_N((2, 1))
    sidecar = nilradical_to_json(N)
    assert sidecar == {'nilradical': [0, 1, 2]}
    assert parse_index_set(json.dumps(sidecar), R) == N
    assert parse_index_set('[0, 1, 2]', R) == N


def test_sidecar_needs_a_coordinate_subspace(sl2):
    with pytest.raises(DimensionMismatch):
        nilradical_to_json(Subspace.span(sl2, [(1, 1, 0)]))


@pytest.mark.parametrize('text, position', [
    ('{"nilradical": [0, 5]}', '$.nilradical[1]'),
    ('{"nilradical": "0"}', '$.nilradical'),
    ('{"ideal": [0]}', '$'),
    ('[-1]', '$[0]'),
])
def test_malformed_index_sets(text, position):
    R, _ = build_R_A(1, [-1])
    with pytest.raises(AlgebraParseError) as excinfo:
        parse_index_set(text, R)
    assert excinfo.value.position == position


def test_index_set_under_another_key(sl2):
    assert parse_index_set('{"ideal": [2]}', sl2, key='ideal') == Subspace.from_indices(sl2, [2])


def test_action_reads_back(sl2):
    V, action = sl2_module_action(3)
    document = {'action': action.to_list(sl2.labels)}
    assert parse_action(json.dumps(document), V, sl2) == CrossAction(
        left={key: value for key, value in action.left.items() if any(value)},
        right={key: value for key, value in action.right.items() if any(value)},
    )


def test_action_entries_name_both_sides(sl2):
    R, _ = build_R_A(1, [-1])
    action = parse_action([
        {'left': 'h', 'right': 0, 'coeffs': {'0': '2'}},
        {'left': 0, 'right': 'h', 'coeffs': {'0': '-2'}},
    ], R, sl2)
    assert action.left == {(2, 0): (2, 0)}
    assert action.right == {(0, 2): (-2, 0)}


@pytest.mark.parametrize('entries, position', [
    ([{'left': 0, 'right': 1, 'coeffs': {}}], '$[0]'),
    ([{'left': 'k', 'right': 0, 'coeffs': {}}], '$[0].left'),
    ([{'left': 'e', 'right': 4, 'coeffs': {}}], '$[0].right'),
    ([{'left': 'e', 'right': 0, 'coeffs': {'0': 'x'}}], '$[0].coeffs.0'),
    ([{'left': 'e', 'right': 0, 'coeffs': {}}, {'left': 'e', 'right': 0, 'coeffs': {}}], '$[1]'),
])
def test_malformed_actions(sl2, entries, position):
    R, _ = build_R_A(1, [-1])
    with pytest.raises(AlgebraParseError) as excinfo:
        parse_action(entries, R, sl2)
    assert excinfo.value.position == position
