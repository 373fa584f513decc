import io
import json

from leibniz import __version__
from leibniz.pipelines import CertificatePipeline, ReportPipeline, SummaryPipeline, input_digest


def test_input_digest_of_text_and_bytes():
    assert input_digest('abc') == input_digest(b'abc')
    assert input_digest(b'abc') == 'ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad'


def test_report_pipeline_writes_a_stamped_file(tmp_path):
    output = tmp_path / 'reports' / 'r.json'
    stamped = ReportPipeline(str(output), {'b.json': 'bb', 'a.json': 'aa'}).process_item({'verdict': 'ok'})
    assert json.loads(output.read_text()) == stamped
    assert stamped['version'] == __version__
    assert list(stamped['input_sha256']) == ['a.json', 'b.json']


def test_report_pipeline_without_inputs(capsys):
    ReportPipeline().process_item({'verdict': 'ok'})
    assert capsys.readouterr().out == '{"verdict":"ok","version":"%s"}\n' % __version__


def test_summary_pipeline():
    stream = io.StringIO()
    SummaryPipeline(stream).process_item('complete', {'verdict': 'not complete', 'der_dim': 4})
    line = stream.getvalue()
    assert 'not complete' in line
    assert 'der_dim=4' in line


def test_certificate_pipeline(tmp_path):
    pipeline = CertificatePipeline(str(tmp_path))
    pipeline.open()
    pipeline.process_item('r-a-1', {'verdict': 'splits'})
    pipeline.process_item('r-a-1', {'verdict': 'nonzero-kernel'})
    pipeline.process_item('abelian', {'verdict': 'nonzero-kernel'})
    combined = pipeline.close()

    assert json.loads((tmp_path / 'r-a-1.json').read_text()) == {'verdict': 'splits'}
    assert json.loads((tmp_path / 'abelian.json').read_text()) == {'verdict': 'nonzero-kernel'}
    assert set(json.loads(open(combined).read())) == {'r-a-1', 'abelian'}


def test_report_pipeline_indents_on_request(capsys):
    ReportPipeline(indent=2).process_item({'verdict': 'ok'})
    out = capsys.readouterr().out
    assert out.startswith('{\n  "verdict": "ok"')
    assert json.loads(out)['version'] == __version__
