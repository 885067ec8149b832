import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from rsg import formats
from rsg.cli import main

DATA = Path(__file__).parent / "data"


@pytest.fixture
def work(tmp_path):
    for f in DATA.glob("*.json"):
        shutil.copy(f, tmp_path / f.name)
    return tmp_path


def canonical(path):
    return formats.dumps(json.loads(Path(path).read_text()))


def test_validate_ok(work, capsys):
    assert main(["validate", str(work / "thread_params.json")]) == 0
    assert capsys.readouterr().out.startswith("ok: n=6 k=2 d=5 radius=2")


def test_validate_duplicate_c(work, capsys):
    assert main(["validate", str(work / "duplicate_c_params.json")]) == 2
    assert "equivalent" in capsys.readouterr().out


def test_genmat_thread(work, capsys):
    assert main(["genmat", str(work / "thread_params.json")]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 2
    assert rows[1][5] == {"num": [0, 2, 1], "den": [1]}
    assert main(["genmat", str(work / "thread_params.json"), "--rows", "6"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 6
    assert main(["genmat", str(work / "thread_params.json"), "--rows", "9"]) == 2


def test_annihilator_thread(work, capsys):
    assert main(["annihilator", str(work / "thread_params.json"), "--pretty"]) == 0
    out = capsys.readouterr()
    coeffs = json.loads(out.out)
    assert len(coeffs) == 7
    assert coeffs[6] == {"num": [1], "den": [1]}
    assert coeffs[3] == {"num": [2], "den": [1]}
    assert out.err.strip() == "X^6 + (2)X^3"


def test_decode_thread_example(work):
    out = work / "decoded.json"
    code = main(["decode", str(work / "thread_params.json"),
                 "--received", str(work / "thread_received.json"), "--out", str(out)])
    assert code == 0
    assert out.read_text() == canonical(work / "thread_message.json")


def test_encode_and_weight(work, capsys):
    cw = work / "codeword.json"
    assert main(["encode", str(work / "thread_params.json"),
                 "--message", str(work / "thread_message.json"), "--out", str(cw)]) == 0
    blocks = json.loads(cw.read_text())["blocks"]
    assert blocks[0][1] == {"num": [0, 1, 1], "den": [1]}
    assert main(["weight", str(work / "thread_params.json"), "--vector", str(cw)]) == 0
    # both blocks span F^3; block 0 has coordinates (1,0,0), (0,1,1), (2t^3,0,1)
    assert capsys.readouterr().out.strip() == "6"


@pytest.mark.parametrize("params", ["thread_params.json", "gf9_params.json"])
def test_roundtrip_through_files(work, params):
    p = str(work / params)
    if params == "gf9_params.json":
        (work / "msg.json").write_text(json.dumps([[1, 2], [0, 1]]))
        weights = "1,0"
    else:
        shutil.copy(work / "thread_message.json", work / "msg.json")
        weights = "1,1"
    assert main(["encode", p, "--message", str(work / "msg.json"), "--out", str(work / "cw.json")]) == 0
    assert main(["corrupt", p, "--codeword", str(work / "cw.json"), "--weights", weights,
                 "--seed", "7", "--out", str(work / "rx.json")]) == 0
    assert main(["decode", p, "--received", str(work / "rx.json"), "--out", str(work / "out.json")]) == 0
    assert (work / "out.json").read_text() == canonical(work / "msg.json")


def test_outputs_are_bit_identical(work):
    p = str(work / "thread_params.json")
    cw = work / "cw.json"
    main(["encode", p, "--message", str(work / "thread_message.json"), "--out", str(cw)])
    texts = []
    for i in range(2):
        rx = work / f"rx{i}.json"
        main(["corrupt", p, "--codeword", str(cw), "--weights", "2,0", "--seed", "99", "--out", str(rx)])
        texts.append(rx.read_text())
    assert texts[0] == texts[1]


def test_decode_beyond_radius_fails(work):
    p = str(work / "thread_params.json")
    cw = work / "cw.json"
    main(["encode", p, "--message", str(work / "thread_message.json"), "--out", str(cw)])
    rx = work / "rx.json"
    assert main(["corrupt", p, "--codeword", str(cw), "--weights", "2,2", "--seed", "1", "--out", str(rx)]) == 0
    out = work / "failure.json"
    assert main(["decode", p, "--received", str(rx), "--out", str(out)]) == 1
    report = json.loads(out.read_text())
    assert report["status"] == "failure" and report["reason"]


def test_malformed_json_points_at_field(work, capsys):
    bad = json.loads((work / "thread_params.json").read_text())
    bad["g"][1][2] = {"num": [1], "den": "x"}
    (work / "bad.json").write_text(json.dumps(bad))
    assert main(["validate", str(work / "bad.json")]) == 2
    assert "params.g[1][2]" in capsys.readouterr().err

    (work / "broken.json").write_text("{not json")
    assert main(["validate", str(work / "broken.json")]) == 2
    assert "malformed JSON" in capsys.readouterr().err


def test_bad_message_and_weights(work, capsys):
    p = str(work / "thread_params.json")
    (work / "short.json").write_text("[1]")
    assert main(["encode", p, "--message", str(work / "short.json")]) == 2
    assert "message" in capsys.readouterr().err
    assert main(["corrupt", p, "--codeword", str(work / "thread_received.json"),
                 "--weights", "4,0"]) == 2
    assert main(["corrupt", p, "--codeword", str(work / "thread_received.json"),
                 "--weights", "a"]) == 2


def test_invalid_params_block_encoding(work, capsys):
    assert main(["encode", str(work / "duplicate_c_params.json"),
                 "--message", str(work / "thread_message.json")]) == 2
    assert "equivalent" in capsys.readouterr().err


def test_usage_error_exit_code():
    assert main(["frobnicate"]) == 2


def test_console_entry_point(work):
    proc = subprocess.run([sys.executable, "-m", "rsg.cli", "validate", str(work / "gf9_params.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("ok: n=4 k=2 d=3")
