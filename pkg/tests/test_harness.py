import io
import math

import pytest

from prationality.harness import (
    CELL_NOT_APPLICABLE,
    CELL_P_RATIONAL,
    FieldRecord,
    RecordParseError,
    bundled_pure_cubic_h,
    bundled_records,
    density_scan,
    load_records,
    records_to_csv,
    render_table_csv,
    render_table_text,
    reproduce_table,
)

EX63_CSV = """label,degree,poly,h,unit,unit_den,torsion_order,basis,aux_q,aux_gen_poly,aux_power_gen
x^4-2*x^2+3,4,3;0;-2;0;1,1,-2;-1;1;1,1,2,,,,
"""

EX62_CSV = """label,degree,poly,h,unit,unit_den,torsion_order,basis,aux_q,aux_gen_poly,aux_power_gen
x^3-4*x+27,3,27;-4;0;1,3,-3280;-3462;-729,1,2,,2,1;1,-604;265;-77
"""


def test_load_csv_example_63():
    records = load_records(io.StringIO(EX63_CSV), "csv")
    assert len(records) == 1
    r = records[0]
    assert r.poly_coeffs == (3, 0, -2, 0, 1)
    assert r.class_number == 1
    assert r.unit_coeffs == (-2, -1, 1, 1)
    assert r.aux is None


def test_load_csv_example_62_with_aux():
    records = load_records(io.StringIO(EX62_CSV), "csv")
    r = records[0]
    assert r.aux is not None
    assert r.aux.q == 2
    assert r.aux.gen_poly == (1, 1)
    assert r.aux.power_gen == (-604, 265, -77)


def test_load_empty_file():
    assert load_records(io.StringIO(""), "csv") == []


def test_load_rejects_malformed_row():
    bad = EX63_CSV + "broken,3,1;1,1\n"
    with pytest.raises(RecordParseError) as err:
        load_records(io.StringIO(bad), "csv")
    assert "line 3" in str(err.value)


def test_load_skips_invalid_unit(caplog):
    # norm of 2 is 16, not a unit: the record is skipped with a diagnostic
    bad = (
        "label,degree,poly,h,unit,unit_den,torsion_order\n"
        "notaunit,4,3;0;-2;0;1,1,2;0;0;0,1,2\n"
    )
    with caplog.at_level("WARNING"):
        records = load_records(io.StringIO(bad), "csv")
    assert records == []
    assert any("norm" in r.message for r in caplog.records)


def test_csv_round_trip():
    records = load_records(io.StringIO(EX62_CSV), "csv")
    text = records_to_csv(records)
    again = load_records(io.StringIO(text), "csv")
    assert len(again) == 1
    a, b = records[0], again[0]
    assert (a.label, a.poly_coeffs, a.class_number) == (
        b.label,
        b.poly_coeffs,
        b.class_number,
    )
    assert a.unit_coeffs == b.unit_coeffs and a.unit_den == b.unit_den
    assert a.aux == b.aux


def test_load_json():
    data = """[
      {"label": "x^4-2*x^2+3", "degree": 4, "poly": [3, 0, -2, 0, 1],
       "h": 1, "unit": [-2, -1, 1, 1]}
    ]"""
    records = load_records(io.StringIO(data), "json")
    assert len(records) == 1
    assert records[0].unit_coeffs == (-2, -1, 1, 1)


def test_reproduce_table_examples():
    records = load_records(io.StringIO(EX62_CSV + EX63_CSV.splitlines()[1] + "\n"), "csv")
    rows = reproduce_table(records, 5, 13)
    assert len(rows) == 2
    assert set(rows[0].cells) == {5, 7, 11, 13}
    text = render_table_text(rows)
    assert "field" in text
    csv_text = render_table_csv(rows)
    assert csv_text.startswith("label,p,cell")


def test_reproduce_table_empty():
    assert reproduce_table([], 5, 100) == []


def test_table_cells_deterministic():
    records = load_records(io.StringIO(EX63_CSV), "csv")
    a = reproduce_table(records, 5, 30)
    b = reproduce_table(records, 5, 30)
    assert a == b


def test_density_scan_example_63():
    records = load_records(io.StringIO(EX63_CSV), "csv")
    res = density_scan(records[0], 100)
    # 23 primes in [5, 100]; the spec's derived bound
    assert res.count + res.undetermined <= 23
    assert res.count >= 21
    assert res.ratio_to_log_x == pytest.approx(res.count / math.log(100))
    # monotone in xmax
    res50 = density_scan(records[0], 50)
    assert res50.count <= res.count


def test_density_scan_small_range():
    records = load_records(io.StringIO(EX63_CSV), "csv")
    res = density_scan(records[0], 5)
    assert res.count in (0, 1)


def test_bundled_fixtures_present():
    t1 = bundled_records("table1")
    t2 = bundled_records("table2")
    ex = bundled_records("examples")
    assert len(t1) == 35
    assert len(t2) == 12
    assert len(ex) == 2
    h = bundled_pure_cubic_h()
    assert h[2791] == 31876011
