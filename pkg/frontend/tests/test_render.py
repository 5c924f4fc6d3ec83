import struct
import subprocess
import sys

import numpy as np
import pytest

from gridrender import (
    GridFormatError,
    RenderSpec,
    dump_values,
    load_grid,
    render,
    render_heatmap,
    render_line,
)
from gridrender.cli import main

SMALL_CSV = """\
# axis1_count=2
# axis1_label=a [eV]
# axis2_count=2
# axis2_label=b [eV]
# config_hash=abc
axis1,axis2,value
0.1,1.0,0.5
0.1,2.0,1.5
0.2,1.0,2.5
0.2,2.0,3.5
"""


@pytest.fixture(scope="module")
def figure_csv(tmp_path_factory):
    """Grids produced through the simulator's own CLI surface."""
    out_dir = tmp_path_factory.mktemp("grids")
    paths = {}
    for name in ("fig4a", "fig4b", "fig5"):
        path = out_dir / f"{name}.csv"
        subprocess.run(
            [sys.executable, "-m", "entspec.cli", "figure", name, "--out", str(path)],
            check=True,
        )
        paths[name] = path
    return paths


def bits(values):
    return [struct.pack(">d", float(v)) for v in values]


def test_csv_parsing(tmp_path):
    path = tmp_path / "grid.csv"
    path.write_text(SMALL_CSV)
    grid = load_grid(path)
    assert grid.axis1_label == "a [eV]"
    assert np.array_equal(grid.values, [[0.5, 1.5], [2.5, 3.5]])


def test_dump_is_bit_exact(tmp_path):
    path = tmp_path / "grid.csv"
    path.write_text(SMALL_CSV)
    dumped = [float(line) for line in dump_values(path).splitlines()]
    parsed = load_grid(path).values.ravel()
    assert bits(dumped) == bits(parsed)


def test_dump_matches_figure_grid(figure_csv, capsys):
    assert main(["--in", str(figure_csv["fig4a"]), "--dump"]) == 0
    dumped = [float(line) for line in capsys.readouterr().out.splitlines()]
    parsed = load_grid(figure_csv["fig4a"]).values.ravel()
    assert bits(dumped) == bits(parsed)


def test_fig4_renders_with_contours(figure_csv, tmp_path):
    for name in ("fig4a", "fig4b"):
        out = tmp_path / f"{name}.png"
        code = main(
            ["--in", str(figure_csv[name]), "--out", str(out), "--contours", "1,-1"]
        )
        assert code == 0
        assert out.stat().st_size > 0


def test_fig5_renders_as_line(figure_csv, tmp_path):
    grid = load_grid(figure_csv["fig5"])
    assert grid.axis2.size == 1
    out = tmp_path / "fig5.png"
    render(RenderSpec(str(figure_csv["fig5"]), str(out)))
    assert out.stat().st_size > 0


def test_two_point_line(tmp_path):
    path = tmp_path / "line.csv"
    path.write_text(
        "# axis1_count=2\n# axis1_label=T [K]\n# axis2_count=1\n# axis2_label=none [-]\n"
        "axis1,axis2,value\n100.0,0.0,1.0\n200.0,0.0,2.0\n"
    )
    out = tmp_path / "line.png"
    render_line(RenderSpec(str(path), str(out)))
    assert out.stat().st_size > 0


def test_constant_grid_renders_without_contours(tmp_path):
    rows = ["# axis1_count=2", "# axis2_count=2", "axis1,axis2,value"]
    rows += [f"{a},{b},7.0" for a in (0.0, 1.0) for b in (0.0, 1.0)]
    path = tmp_path / "const.csv"
    path.write_text("\n".join(rows) + "\n")
    out = tmp_path / "const.png"
    assert main(["--in", str(path), "--out", str(out), "--contours", "1,2"]) == 0
    assert out.stat().st_size > 0


def test_empty_grid_errors(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("# axis1_count=0\n# axis2_count=0\naxis1,axis2,value\n")
    assert main(["--in", str(path), "--out", str(tmp_path / "x.png")]) == 1


def test_malformed_input_errors(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("axis1,axis2,value\n1.0,2.0\n")
    assert main(["--in", str(path), "--out", str(tmp_path / "x.png")]) == 1
    assert "error:" in capsys.readouterr().err


def test_missing_file_errors(tmp_path):
    assert main(["--in", str(tmp_path / "nope.csv"), "--out", str(tmp_path / "x.png")]) == 1


def test_json_round_trip(tmp_path):
    import json

    doc = {
        "axis1_label": "a",
        "axis2_label": "b",
        "axis1_values": [0.1, 0.2],
        "axis2_values": [1.0, 2.0, 3.0],
        "values": [1.0, 2.0, 3.0, 4.0, 5.0, 6.0],
        "metadata": {"config_hash": "xyz"},
    }
    path = tmp_path / "grid.json"
    path.write_text(json.dumps(doc))
    grid = load_grid(path)
    assert grid.values.shape == (2, 3)
    out = tmp_path / "grid.png"
    render_heatmap(RenderSpec(str(path), str(out), log_scale=True))
    assert out.stat().st_size > 0


def test_log_scale_rejects_nonpositive(tmp_path):
    path = tmp_path / "neg.csv"
    rows = ["# axis1_count=2", "# axis2_count=2", "axis1,axis2,value"]
    rows += ["0.0,0.0,1.0", "0.0,1.0,-1.0", "1.0,0.0,1.0", "1.0,1.0,1.0"]
    path.write_text("\n".join(rows) + "\n")
    with pytest.raises(GridFormatError, match="non-positive"):
        render_heatmap(RenderSpec(str(path), str(tmp_path / "x.png"), log_scale=True))
