import json

import pytest

from orbivcd.cli import main, recheck_main
from orbivcd.verification import read_certificates


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("g, n, expected", [("2", "0", "3"), ("0", "0", "0"), ("1", "2", "2")])
def test_vcd(capsys, g, n, expected):
    code, out, _ = run(capsys, "vcd", "-g", g, "-n", n)
    assert code == 0
    assert out.strip() == expected


def test_vcd_json(capsys):
    code, out, _ = run(capsys, "vcd", "-g", "2", "--format", "json")
    assert json.loads(out) == [{"g": 2, "n": 0, "vcd": 3}]


def test_signatures(capsys):
    code, out, _ = run(capsys, "signatures", "-g", "2", "-d", "2")
    assert code == 0
    assert out.splitlines() == ["0;2,2,2,2,2,2", "1;2,2"]

    _, out, _ = run(capsys, "signatures", "-g", "3", "-d", "1")
    assert out.splitlines() == ["3;"]

    code, out, _ = run(capsys, "signatures", "-g", "2", "-d", "1000")
    assert (code, out) == (0, "")


def test_signatures_json_and_oracle(capsys):
    code, out, _ = run(capsys, "signatures", "-g", "2", "-d", "2", "--format", "json", "--oracle")
    assert code == 0
    assert json.loads(out) == ["0;2,2,2,2,2,2", "1;2,2"]


def test_wide_signatures_with_oracle(capsys):
    code, out, err = run(capsys, "signatures", "-g", "2", "-d", "2", "--no-divisor-constraint", "--oracle")
    assert code == 0
    assert {"0;3,3,6,6", "0;2,2,2,2,2,2", "1;2,2"} <= set(out.splitlines())
    assert "oracle" not in err


def test_covers(capsys):
    code, out, _ = run(capsys, "covers", "--base", "0;2,2,2,2,2,2", "-d", "2")
    assert code == 0
    totals = {line.split(" -[")[0] for line in out.splitlines()}
    assert totals == {"2;", "1;2,2,2,2", "0;2,2,2,2,2,2,2,2"}


@pytest.mark.parametrize(
    "argv",
    [
        ["vcd", "-g", "2", "--bogus"],
        ["signatures", "-g", "1", "-d", "2"],
        ["check", "prop5", "-g", "2"],
        ["check", "claim-uno", "-g", "2"],
        ["check", "prop5"],
        ["covers", "--base", "0;2,2", "-d", "1"],
        ["vcd", "-g", "2", "--workers", "0"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_bad_signature_is_usage_error(capsys):
    code, _, err = run(capsys, "covers", "--base", "0;1,2", "-d", "2")
    assert code == 2
    assert "Invalid period" in err


def test_check_eq5(capsys):
    code, out, err = run(capsys, "check", "eq5")
    assert code == 0
    assert "0 fails" in err
    assert len(out.splitlines()) == len(read_certificates(out.splitlines()))


def test_check_prop4_json_lists_exceptions(capsys):
    code, out, err = run(capsys, "check", "prop4", "--genus-max", "2", "--max-order", "8", "--format", "json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    exceptions = [r for r in records if r["record"] == "exception"]
    assert any(r["upper"] == [2, 0] and r["lower"] == [0, 6] for r in exceptions)
    assert "max_order g=2:8" in err


def test_summary_counts_match_report(capsys):
    code, out, err = run(capsys, "check", "gendec", "--genus-max", "2", "--max-order", "24")
    certs = read_certificates(out.splitlines())
    exceptions = sum(c.verdict == "exception" for c in certs)
    assert code == 0
    assert exceptions > 0
    assert f"gendec: {len(certs)} certificates, 0 fails, {exceptions} exceptions" in err


def test_json_and_text_reports_agree(capsys):
    argv = ["check", "gendec", "--genus-max", "2", "--max-order", "24"]
    _, text, _ = run(capsys, *argv)
    _, js, _ = run(capsys, *argv, "--format", "json")
    from_text = read_certificates(text.splitlines())
    from_json = read_certificates(js.splitlines())
    assert sorted(map(repr, from_text)) == sorted(map(repr, from_json))


def test_json_reports_are_reproducible(capsys):
    argv = ["check", "prop4", "--genus-max", "2", "--max-order", "24", "--format", "json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--workers", "4")
    assert first == second == parallel


def test_check_prop5(capsys):
    code, out, err = run(capsys, "check", "prop5", "-g", "3", "--max-order", "24")
    assert code == 0
    assert "0 fails" in err


def test_oracle_crosscheck_in_check(capsys):
    code, _, err = run(capsys, "check", "dichot", "-g", "2", "--max-order", "12", "--oracle")
    assert code == 0
    assert "0 oracle mismatches" in err


def test_store_run(capsys, tmp_path):
    url = f"sqlite:///{tmp_path / 'runs.db'}"
    code, _, _ = run(capsys, "check", "eq5", "--genus-max", "3", "--k-max", "4", "--db-url", url)
    assert code == 0
    assert (tmp_path / "runs.db").exists()


class TestRecheck:
    def report(self, capsys, tmp_path, fmt):
        _, out, _ = run(capsys, "check", "prop4", "--genus-max", "2", "--max-order", "12", "--format", fmt)
        path = tmp_path / f"report.{fmt}"
        path.write_text(out)
        return path

    @pytest.mark.parametrize("fmt", ["text", "json"])
    def test_clean_report(self, capsys, tmp_path, fmt):
        path = self.report(capsys, tmp_path, fmt)
        assert recheck_main([str(path)]) == 0
        assert main(["recheck", str(path)]) == 0

    def test_tampered_report(self, capsys, tmp_path):
        path = self.report(capsys, tmp_path, "text")
        lines = path.read_text().splitlines()
        lines[0] = lines[0].replace("\tpass\t", "\tfail\t").replace("\texception\t", "\tpass\t")
        path.write_text("\n".join(lines) + "\n")
        assert recheck_main([str(path)]) == 1
        _, err = capsys.readouterr()
        assert "1 disagreements" in err


class TestCacheCommands:
    def test_info_on_empty_dir(self, capsys, tmp_path):
        code, out, _ = run(capsys, "cache", "info", "--cache-dir", str(tmp_path))
        assert code == 0
        assert out.startswith("0 records")

    def test_verify_after_signatures(self, capsys, tmp_path):
        run(capsys, "signatures", "-g", "2", "-d", "2", "--cache-dir", str(tmp_path))
        code, out, _ = run(capsys, "cache", "verify", "--cache-dir", str(tmp_path))
        assert code == 0
        assert out.strip() == "1/1 records valid"

    def test_env_var_is_fallback(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("ORBIVCD_CACHE_DIR", str(tmp_path / "env"))
        run(capsys, "signatures", "-g", "2", "-d", "3")
        assert (tmp_path / "env" / "signatures.jsonl").exists()
        run(capsys, "signatures", "-g", "2", "-d", "3", "--cache-dir", str(tmp_path / "flag"))
        assert (tmp_path / "flag" / "signatures.jsonl").exists()
        _, out, _ = run(capsys, "cache", "info")
        assert out.startswith("1 records")

    def test_clear(self, capsys, tmp_path):
        run(capsys, "signatures", "-g", "2", "-d", "2", "--cache-dir", str(tmp_path))
        code, out, _ = run(capsys, "cache", "clear", "--cache-dir", str(tmp_path))
        assert code == 0
        assert list(tmp_path.iterdir()) == []

    def test_seeded_corruption(self, capsys, tmp_path):
        run(capsys, "signatures", "-g", "2", "-d", "2", "--cache-dir", str(tmp_path))
        path = tmp_path / "signatures.jsonl"
        header, record = path.read_text().splitlines()
        tampered = json.loads(record)
        tampered["signatures"] = ["1;2,2"]
        path.write_text(header + "\n" + json.dumps(tampered) + "\n")
        code, out, err = run(capsys, "cache", "verify", "--cache-dir", str(tmp_path))
        assert code == 3
        assert out.strip() == "0/1 records valid"
        assert "stale record 2" in err

        path.write_text(header + "\n{not json\n")
        code, _, err = run(capsys, "cache", "verify", "--cache-dir", str(tmp_path))
        assert code == 3
        assert "record 2" in err

        path.write_text('{"format": "orbivcd-signatures", "version": 99}\n')
        code, _, err = run(capsys, "signatures", "-g", "2", "-d", "2", "--cache-dir", str(tmp_path))
        assert code == 3
        assert "record 1" in err
