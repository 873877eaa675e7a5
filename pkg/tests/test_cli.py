import json

import pytest

from normbch.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGencode:
    def test_535(self, tmp_path, capsys):
        out = tmp_path / "hq535.txt"
        code, stdout, _ = run(capsys, "gencode", "--q", "5", "--m", "3", "--d", "5", "--out", str(out))
        assert code == 0
        assert "n=125 rows=8 rank=8 dimension=117" in stdout
        header = out.read_text().splitlines()[0]
        assert header == "q=5 n=125 r=8 blocks=ones:1,pow1:3,pow2:3,norm:1"
        manifest = json.loads((tmp_path / "hq535.txt.manifest.json").read_text())
        assert manifest["subcommand"] == "gencode"
        assert str(out) in manifest["outputs"]

    def test_invalid_params_exit_2(self, tmp_path, capsys):
        out = tmp_path / "bad.txt"
        code, _, stderr = run(capsys, "gencode", "--q", "3", "--m", "3", "--d", "5", "--out", str(out))
        assert code == 2
        assert "divides d-2" in stderr
        assert "below d-1" in stderr
        assert not out.exists()

    def test_relaxed_544(self, tmp_path, capsys):
        out = tmp_path / "hq544.txt"
        code, stdout, _ = run(
            capsys, "gencode", "--q", "5", "--m", "4", "--d", "4", "--relaxed", "--out", str(out)
        )
        assert code == 0
        assert "n=625" in stdout

    def test_reproducible_bytes(self, tmp_path, capsys):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        run(capsys, "gencode", "--q", "5", "--m", "2", "--d", "4", "--out", str(a))
        run(capsys, "gencode", "--q", "5", "--m", "2", "--d", "4", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_json_output(self, tmp_path, capsys):
        out = tmp_path / "m.txt"
        code, stdout, _ = run(
            capsys, "gencode", "--q", "5", "--m", "2", "--d", "4", "--json", "--out", str(out)
        )
        assert code == 0
        payload = json.loads(stdout)
        assert payload["n"] == 25 and payload["rank"] == 4


@pytest.fixture(scope="module")
def matrix_files(tmp_path_factory):
    base = tmp_path_factory.mktemp("matrices")
    aug524 = base / "aug524.txt"
    aug535 = base / "aug535.txt"
    bch535 = base / "bch535.txt"
    assert main(["gencode", "--q", "5", "--m", "2", "--d", "4", "--out", str(aug524)]) == 0
    assert main(["gencode", "--q", "5", "--m", "3", "--d", "5", "--out", str(aug535)]) == 0
    assert main(["gencode", "--q", "5", "--m", "3", "--d", "5", "--bch-only", "--out", str(bch535)]) == 0
    return {"aug524": aug524, "aug535": aug535, "bch535": bch535}


class TestVerifyDistance:
    def test_certified(self, matrix_files, capsys):
        code, stdout, _ = run(
            capsys, "verify-distance", "--matrix", str(matrix_files["aug524"]), "--d", "4"
        )
        assert code == 0
        assert "verdict=certified" in stdout
        assert "subset_count=2300" in stdout

    def test_counterexample_exit_1(self, matrix_files, capsys):
        code, stdout, _ = run(
            capsys, "verify-distance", "--matrix", str(matrix_files["bch535"]), "--d", "5"
        )
        assert code == 1
        assert "counterexample_weight=4" in stdout

    def test_budget_exit_2(self, matrix_files, capsys):
        code, _, stderr = run(
            capsys,
            "verify-distance", "--matrix", str(matrix_files["aug535"]), "--d", "5",
            "--budget", "1000",
        )
        assert code == 2
        assert "9691375" in stderr

    def test_json_and_cert_file(self, matrix_files, tmp_path, capsys):
        cert = tmp_path / "cert.txt"
        code, stdout, _ = run(
            capsys,
            "verify-distance", "--matrix", str(matrix_files["aug524"]), "--d", "4",
            "--json", "--out", str(cert),
        )
        assert code == 0
        assert json.loads(stdout)["verdict"] == "certified"
        assert "verdict=certified" in cert.read_text()
        assert (tmp_path / "cert.txt.manifest.json").exists()


class TestCheckLines:
    def test_524(self, capsys):
        code, stdout, _ = run(capsys, "check-lines", "--q", "5", "--m", "2", "--d", "4")
        assert code == 0
        assert "words_found=300" in stdout
        assert "violations=0" in stdout

    def test_invalid_without_experimental(self, capsys):
        code, _, stderr = run(capsys, "check-lines", "--q", "5", "--m", "4", "--d", "5")
        assert code == 2
        assert "parameter error" in stderr


class TestBounds:
    def test_single_pair(self, capsys):
        code, stdout, _ = run(capsys, "bounds", "--q", "5", "--d", "5")
        assert code == 0
        assert "best_upper=7/3 [norm-bch]" in stdout

    def test_table(self, capsys):
        code, stdout, _ = run(capsys, "bounds", "--table", "2..5", "4..6")
        assert code == 0
        assert "q=4" in stdout and "[quaternary-d6]" in stdout

    def test_json(self, capsys):
        code, stdout, _ = run(capsys, "bounds", "--q", "3", "--d", "4", "--json")
        assert code == 0
        payload = json.loads(stdout)
        assert payload["best_upper"] == "3449/2500"

    def test_missing_args(self, capsys):
        code, _, stderr = run(capsys, "bounds")
        assert code == 2


class TestReduce:
    def test_toy(self, tmp_path, capsys):
        src = tmp_path / "toy.cwl"
        src.write_text("0 0 0 0\n1 1 1 1\n2 2 2 2\n3 3 3 3\n")
        out = tmp_path / "sub.cwl"
        code, stdout, _ = run(
            capsys,
            "reduce", "--input", str(src), "--q2", "4", "--subset", "0,1,2", "--out", str(out),
        )
        assert code == 0
        assert "achieved=3" in stdout
        assert "floor=2" in stdout
        assert out.read_text() == "0 0 0 0\n1 1 1 1\n2 2 2 2\n"
        manifest = json.loads((tmp_path / "sub.cwl.manifest.json").read_text())
        assert manifest["subcommand"] == "reduce"

    def test_sampled(self, tmp_path, capsys):
        src = tmp_path / "toy.cwl"
        src.write_text("0 0 0 0\n1 1 1 1\n2 2 2 2\n3 3 3 3\n")
        code, stdout, _ = run(
            capsys,
            "reduce", "--input", str(src), "--q2", "4", "--subset", "0,1,2",
            "--trials", "32", "--seed", "5",
        )
        assert code == 0
        assert "mode=sampled" in stdout
        assert "guaranteed=false" in stdout

    def test_bad_subset(self, tmp_path, capsys):
        src = tmp_path / "toy.cwl"
        src.write_text("0 0\n1 1\n")
        code, _, stderr = run(capsys, "reduce", "--input", str(src), "--q2", "2", "--subset", "0,7")
        assert code == 2
        assert "parameter error" in stderr


def test_version_flag(capsys):
    assert main(["--version"]) == 0
    assert "normbch" in capsys.readouterr().out
