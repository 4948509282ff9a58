import json
import subprocess
import sys
from pathlib import Path


from cdlay.cli import main

SQUARE = Path(__file__).parent / "corpus" / "square.cdl"


def write(tmp_path, text, name="d.cdl"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_valid_build(tmp_path):
    out, geo = tmp_path / "o.svg", tmp_path / "o.json"
    assert main(["build", str(SQUARE), "-o", str(out), "--dump-geometry", str(geo)]) == 0
    assert out.read_text().startswith("<?xml")
    assert json.loads(geo.read_text())["cdlay-geom"] == 1
    assert not list(tmp_path.glob(".*.tmp"))


def test_outside_arrow_exit_2(tmp_path, capsys):
    src = write(tmp_path, "[grid]\nA & B\n[arrows]\nat (1,1) dir (5,0)\n")
    out = tmp_path / "o.svg"
    assert main(["build", str(src), "-o", str(out)]) == 2
    err = capsys.readouterr().err
    assert f"{src}:4:1:" in err
    assert "arrow at (1,1) dir (5,0)" in err and "points outside" in err
    assert not out.exists()


def test_parse_error_exit_1(tmp_path, capsys):
    src = write(tmp_path, "[grid]\nA\n[arrows]\nat (1,1) dir (1,0) head=q\n")
    assert main(["build", str(src), "-o", str(tmp_path / "o.svg")]) == 1
    assert f"{src}:4:25: Invalid option head=q" in capsys.readouterr().err


def test_missing_input_exit_3(tmp_path):
    assert main(["build", str(tmp_path / "nope.cdl"), "-o", str(tmp_path / "o.svg")]) == 3


def test_unwritable_output_exit_3(tmp_path):
    assert main(["build", str(SQUARE), "-o", str(tmp_path / "no" / "dir" / "o.svg")]) == 3


def test_check_writes_nothing(tmp_path):
    out = tmp_path / "o.svg"
    assert main(["build", str(SQUARE), "-o", str(out), "--check"]) == 0
    assert not out.exists()
    assert main(["build", str(SQUARE), "--check"]) == 0


def test_set_overrides_file_config(tmp_path):
    src = write(tmp_path, "[config]\ncgap_scale = 2\n[grid]\nA & B\n")
    geo = tmp_path / "o.json"
    assert main(["build", str(src), "-o", str(tmp_path / "o.svg"), "--dump-geometry", str(geo),
                 "--set", "cgap_scale=0.5", "--set", "margin=0pt"]) == 0
    dump = json.loads(geo.read_text())
    assert dump["grid"]["colgap"][1] == 20 * 65536
    assert dump["margin"] == 0


def test_bad_set_key(tmp_path, capsys):
    assert main(["build", str(SQUARE), "--check", "--set", "bogus=1"]) == 1
    assert "bogus" in capsys.readouterr().err


def test_metrics_file(tmp_path):
    m = write(tmp_path, "U+0041 20pt\n", "m.txt")
    geo = tmp_path / "o.json"
    assert main(["build", str(SQUARE), "-o", str(tmp_path / "o.svg"), "--metrics", str(m),
                 "--dump-geometry", str(geo)]) == 0
    assert json.loads(geo.read_text())["grid"]["colwidth"][0] == 20 * 65536
    assert main(["build", str(SQUARE), "--check", "--metrics", str(tmp_path / "none")]) == 3


def test_deterministic_outputs(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    main(["build", str(SQUARE), "-o", str(a)])
    main(["build", str(SQUARE), "-o", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point(tmp_path):
    out = tmp_path / "o.svg"
    r = subprocess.run([sys.executable, "-m", "cdlay", "build", str(SQUARE), "-o", str(out)],
                       capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    assert out.exists()
