import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from womcodes import cli, fileformat
from womcodes.f2linalg import BitVector
from womcodes.lookupfree import params_of

FIXTURES = Path(__file__).parent / "fixtures"
EXPECTED = json.loads((FIXTURES / "expected.json").read_text())


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.fixture
def tmp(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return path
    write.dir = tmp_path
    return write


class TestSimple:
    def test_field_table(self, capsys):
        code, out, _ = run(capsys, "field-table")
        lines = out.splitlines()
        assert code == 0 and len(lines) == 32
        assert lines[0].startswith("1: ") and lines[3].startswith("4: ")

    def test_verify_ensemble(self, capsys):
        code, out, _ = run(capsys, "verify-ensemble", "--k", 3, "--b", 2)
        assert code == 0 and "FAIL" not in out

    def test_analyze_capacity(self, capsys):
        code, out, _ = run(capsys, "analyze", "capacity", "--json", "--steps", 10)
        d = json.loads(out)
        assert code == 0 and abs(d["value"] - 1.5849625) < 1e-6 and len(d["curve"]) == 11

    def test_analyze_rate3(self, capsys):
        code, out, _ = run(capsys, "analyze", "rate3", "--variant", "iii")
        assert code == 0 and "# value=1.809" in out

    def test_analyze_rate3_needs_variant(self, capsys):
        assert run(capsys, "analyze", "rate3")[0] == 2

    def test_rs_triplets(self, capsys):
        assert run(capsys, "rs", "encode2", "010", 1)[1] == "110"
        assert run(capsys, "rs", "encode2", "000", 1)[1] == "001"
        assert run(capsys, "rs", "decode", "101")[1] == "2"

    def test_rs_bad_usage(self, capsys):
        assert run(capsys, "rs", "encode2", "011", 1)[0] == 2
        assert run(capsys, "rs", "decode")[0] == 2

    def test_wom2_rate(self, capsys):
        code, out, _ = run(capsys, "wom2", "rate", "--params", "2,1,1,1,1", "--json")
        d = json.loads(out)
        assert code == 0 and d["rate"] == pytest.approx(0.8)

    def test_lookupfree_search(self, capsys):
        code, out, _ = run(capsys, "lookupfree", "search", "--m", 6, "--w", 3)
        assert out.splitlines() == ["alpha=3", "sigma=20", "sigma_g=16"]

    def test_lookupfree_build_json(self, capsys):
        code, out, _ = run(capsys, "lookupfree", "build", "--m", 6, "--w", 3, "--alpha", "3", "--json")
        assert json.loads(out)["extra"]["sigma_g"] == 16


class TestFixtures:
    @pytest.mark.parametrize("name,cmd", [
        ("rs_r1", ["rs", "decode"]), ("rs_r2", ["rs", "decode"]),
        ("wom2_r2", ["wom2", "decode"]),
        ("wom3_r1", ["wom3", "read"]), ("wom3_r2", ["wom3", "read"]), ("wom3_r3", ["wom3", "read"]),
        ("defect", ["defect", "read"]),
    ])
    def test_decode_text(self, capsys, name, cmd):
        code, out, _ = run(capsys, *cmd, "--image", FIXTURES / f"{name}.womc")
        assert code == 0 and out == EXPECTED[name]

    def test_decode_lists(self, capsys):
        assert run(capsys, "wom2", "decode", "--image", FIXTURES / "wom2_r1.womc")[1].split() == [
            str(v) for v in EXPECTED["wom2_r1"]]
        assert run(capsys, "lookupfree", "decode", "--image", FIXTURES / "lookupfree_r1.womc")[1] == str(
            EXPECTED["lookupfree_r1"])
        assert run(capsys, "lookupfree", "decode", "--image", FIXTURES / "lookupfree_r2.womc")[1].split() == [
            str(v) for v in EXPECTED["lookupfree_r2"]]


class TestExitCodes:
    def test_bad_magic(self, capsys, tmp):
        path = tmp.dir / "bad.womc"
        data = bytearray((FIXTURES / "rs_r1.womc").read_bytes())
        data[:4] = b"JUNK"
        path.write_bytes(bytes(data))
        assert run(capsys, "rs", "decode", "--image", path)[0] == 4

    def test_truncated(self, capsys, tmp):
        path = tmp.dir / "short.womc"
        path.write_bytes((FIXTURES / "wom3_r2.womc").read_bytes()[:-3])
        assert run(capsys, "wom3", "read", "--image", path)[0] == 4

    def test_missing_file(self, capsys, tmp):
        assert run(capsys, "defect", "read", "--image", tmp.dir / "nope.womc")[0] == 4

    def test_write_once_violation(self, capsys, tmp):
        # the seed region of this round-1 image already holds a 1 that round 2 would clear
        msg = tmp("x.txt", "1" * 24)
        code, _, err = run(capsys, "wom2", "encode2", "--image", FIXTURES / "wom2_r1_dirty_seed.womc",
                           "--message", msg, "--out", tmp.dir / "o.womc")
        assert code == 2 and "clear" in err
        assert not (tmp.dir / "o.womc").exists()

    def test_no_good_matrix(self, capsys, tmp):
        stuck = tmp("stuck.txt", "0=0\n1=0\n2=0\n")
        pay = tmp("p.txt", "11")
        code = run(capsys, "defect", "write", "--k", 2, "--b", 1, "--stuck", stuck, "--payload", pay,
                   "--image", tmp.dir / "d.womc")[0]
        assert code == 3

    def test_missing_image_flag(self, capsys):
        assert run(capsys, "wom3", "read")[0] == 2

    def test_wrong_round(self, capsys):
        assert run(capsys, "wom3", "capacity", "--image", FIXTURES / "wom3_r1.womc")[0] == 2


class TestPipelines:
    def test_wom2(self, capsys, tmp):
        img = tmp.dir / "w.womc"
        ranks = tmp("r.txt", "0 3 6 1")
        payload = "1011" * 4
        pay = tmp("p.txt", payload)
        assert run(capsys, "wom2", "encode1", "--params", "4,2,4,2,1", "--message", ranks, "--image", img)[0] == 0
        assert run(capsys, "wom2", "decode", "--image", img)[1].split() == ["0", "3", "6", "1"]
        assert run(capsys, "wom2", "encode2", "--message", pay, "--image", img)[0] == 0
        assert run(capsys, "wom2", "decode", "--image", img)[1] == payload

    def test_wom3(self, capsys, tmp):
        img = tmp.dir / "w.womc"
        w1 = tmp("w1.txt", "0123" * 3)
        w2 = tmp("w2.txt", "3210" * 3)
        args = ["--variant", "ii", "--m", 3, "--z", 3, "--chunk", "4,2"]
        assert run(capsys, "wom3", "write1", *args, "--message", w1, "--image", img)[0] == 0
        assert run(capsys, "wom3", "read", "--image", img)[1] == "0123" * 3
        assert run(capsys, "wom3", "write2", "--message", w2, "--image", img)[0] == 0
        assert run(capsys, "wom3", "read", "--image", img)[1] == "3210" * 3
        cap = int(run(capsys, "wom3", "capacity", "--image", img)[1])
        bits = tmp("b.txt", "10" * (cap // 2))
        code, out, _ = run(capsys, "wom3", "write3", "--message", bits, "--image", img)
        assert code == 0 and out == f"written_bits={cap}"
        assert run(capsys, "wom3", "read", "--image", img)[1] == "10" * (cap // 2)

    def test_rs_image(self, capsys, tmp):
        img = tmp.dir / "r.womc"
        assert run(capsys, "rs", "encode1", "--message", tmp("a", "0123"), "--image", img)[0] == 0
        assert run(capsys, "rs", "encode2", "--message", tmp("b", "1032"), "--image", img)[0] == 0
        assert run(capsys, "rs", "decode", "--image", img)[1] == "1032"
        bits = fileformat.read_image(img).cells
        assert bits == BitVector.from_str("001111011101")

    def test_lookupfree(self, capsys, tmp):
        img = tmp.dir / "l.womc"
        assert run(capsys, "lookupfree", "encode1", "--m", 4, "--w", 2, "--message", tmp("a", "123"),
                   "--image", img)[0] == 0
        assert run(capsys, "lookupfree", "decode", "--image", img)[1] == "123"
        n = params_of(fileformat.read_image(img)).sigma_g
        xs = " ".join(str(i % 3) for i in range(n))
        assert run(capsys, "lookupfree", "encode2", "--message", tmp("b", xs), "--image", img)[0] == 0
        assert run(capsys, "lookupfree", "decode", "--image", img)[1].split() == xs.split()

    def test_defect(self, capsys, tmp):
        img = tmp.dir / "d.womc"
        stuck = tmp("s.txt", "# index=bit\n0=1\n7=0\n")
        pay = tmp("p.txt", "10110010")
        code = run(capsys, "defect", "write", "--k", 4, "--b", 2, "--chunks", 2, "--stuck", stuck,
                   "--payload", pay, "--image", img)[0]
        assert code == 0
        assert run(capsys, "defect", "read", "--image", img)[1] == "10110010"
        cells = fileformat.read_image(img).cells
        assert cells[0] == 1 and cells[7] == 0

    def test_out_leaves_input(self, capsys, tmp):
        src = tmp.dir / "src.womc"
        shutil.copy(FIXTURES / "rs_r1.womc", src)
        before = src.read_bytes()
        out = tmp.dir / "next.womc"
        assert run(capsys, "rs", "encode2", "--message", tmp("m", "0" * 10), "--image", src, "--out", out)[0] == 0
        assert src.read_bytes() == before and out.exists()


def test_entry_point():
    exe = shutil.which("womc")
    cmd = [exe] if exe else [sys.executable, "-m", "womcodes.cli"]
    res = subprocess.run(cmd + ["rs", "encode1", "3"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "100"
