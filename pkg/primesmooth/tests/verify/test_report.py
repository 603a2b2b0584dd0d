import json
from fractions import Fraction

import pytest

from primesmooth.errors import RangeError, ReportIOError
from primesmooth.verify import CSV_HEADER, SweepConfig, read_records, read_report, run_sweep, write_report


@pytest.fixture(scope='module')
def records():
    config = SweepConfig(
        primes=[101, 211, 401, 809, 1601], seed=0, trials=1, theorems={'J1': {'sizes': [0.25, 0.5]}})
    return run_sweep(config)


def test_empty_report_is_header_only(tmp_path):
    path = tmp_path / 'empty.csv'
    write_report([], path)
    assert path.read_text() == ','.join(CSV_HEADER) + '\n'


def test_csv_roundtrip(tmp_path, records):
    path = tmp_path / 'r.csv'
    write_report(records[:1], path)
    lines = path.read_bytes().split(b'\n')
    assert len(lines) == 3 and lines[-1] == b''
    assert b'\r' not in path.read_bytes()
    back = read_records(path)
    assert len(back) == 1
    for name in ['theorem', 'p', 'h', 'N', 'exact_count', 'main_term', 'abs_error', 'seed']:
        assert getattr(back[0], name) == getattr(records[0], name)
    assert back[0].K is None and back[0].delta is None


def test_rewriting_read_records_is_stable(tmp_path, records):
    write_report(records, tmp_path / 'a.csv')
    write_report(read_records(tmp_path / 'a.csv'), tmp_path / 'b.csv')
    assert (tmp_path / 'a.csv').read_bytes() == (tmp_path / 'b.csv').read_bytes()


def test_ratios_recomputable_from_file(tmp_path, records):
    """Exact error and printed envelope reproduce the printed ratio"""
    path = tmp_path / 'r.csv'
    write_report(records, path)
    rows = read_report(path)
    assert len(rows) == 10
    for row in rows:
        main = Fraction(int(row['main_term_num']), int(row['main_term_den']))
        error = abs(int(row['exact_count']) - main)
        assert error == Fraction(row['abs_error'])
        ratio = float(error) / float(row['envelope_new'])
        assert ratio == pytest.approx(float(row['ratio_new']), rel=1e-10)


def test_json_mirror(tmp_path, records):
    write_report(records, tmp_path / 'r.json', 'json')
    data = json.loads((tmp_path / 'r.json').read_text())
    assert len(data) == 10
    assert list(data[0]) == CSV_HEADER
    assert data[0]['exact_count'] == records[0].exact_count


def test_report_errors(tmp_path, records):
    with pytest.raises(ReportIOError):
        write_report(records, tmp_path / 'missing' / 'r.csv')
    with pytest.raises(RangeError):
        write_report(records, tmp_path / 'r.xml', 'xml')
    with pytest.raises(ReportIOError):
        read_report(tmp_path / 'nothing.csv')
    (tmp_path / 'other.csv').write_text('a,b\n1,2\n')
    with pytest.raises(RangeError):
        read_report(tmp_path / 'other.csv')
