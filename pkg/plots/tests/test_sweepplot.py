import pytest

from sweepplot import REQUIRED_COLUMNS, SweepDataError, main, read_sweep, render

HEADER = "lambda,delta,K,f_greedy,S,R,B,alpha,alpha_G,bound_new,bound_cc,bound_classical"

ROWS = [
    "0.01,15,10,1495.1,22210,4716.9,4716.9,0.0059,0.9941,0.317,0.1053,0.6321205588",
    "0.1,15,10,1003.4,2512,1922.2,1922.2,0.2171,0.7829,0.522,0.2954,0.6321205588",
    "0.3,15,10,354.0,589.5,476.0,476.0,0.4632,0.5368,0.7438,0.5169,0.6321205588",
    "2,15,10,17.9,21.7,18.8,18.8,0.7954,0.2046,0.9516,0.8159,0.6321205588",
]


def write_csv(path, header=HEADER, rows=ROWS):
    path.write_text("\n".join([header, *rows]) + "\n")
    return path


def test_read_sweep_extracts_required_columns(tmp_path):
    data = read_sweep(write_csv(tmp_path / "sweep.csv"))
    assert set(data) == set(REQUIRED_COLUMNS)
    assert data["lambda"] == [0.01, 0.1, 0.3, 2.0]
    assert data["bound_new"][2] == 0.7438


def test_render_writes_svg_with_three_series(tmp_path):
    out = render(write_csv(tmp_path / "sweep.csv"), tmp_path / "figure.svg")
    assert out.exists() and out.stat().st_size > 0
    svg = out.read_text()
    assert "certificate f(greedy)/B" in svg
    assert "greedy-curvature bound" in svg
    assert "1 - 1/e" in svg


def test_render_png_flag(tmp_path):
    csv_path = write_csv(tmp_path / "sweep.csv")
    out = tmp_path / "figure.png"
    assert main([str(csv_path), str(out), "--png"]) == 0
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_header_only_csv_is_an_error(tmp_path):
    path = write_csv(tmp_path / "empty.csv", rows=[])
    with pytest.raises(SweepDataError, match="no rows"):
        read_sweep(path)
    assert main([str(path), str(tmp_path / "x.svg")]) == 2


@pytest.mark.parametrize("dropped", ["lambda", "bound_new", "bound_cc"])
def test_missing_column_is_named(tmp_path, capsys, dropped):
    cols = HEADER.split(",")
    idx = cols.index(dropped)
    header = ",".join(c for c in cols if c != dropped)
    rows = [",".join(v for i, v in enumerate(r.split(",")) if i != idx) for r in ROWS]
    path = write_csv(tmp_path / "partial.csv", header=header, rows=rows)
    assert main([str(path), str(tmp_path / "x.svg")]) == 2
    assert dropped in capsys.readouterr().err


def test_bad_cell_is_reported_with_line(tmp_path):
    rows = [ROWS[0], ROWS[1].replace("0.522", "oops")]
    path = write_csv(tmp_path / "bad.csv", rows=rows)
    with pytest.raises(SweepDataError, match="line 3"):
        read_sweep(path)


def test_missing_file_exits_nonzero(tmp_path, capsys):
    assert main([str(tmp_path / "nothing.csv"), str(tmp_path / "x.svg")]) == 2
    assert "error" in capsys.readouterr().err
