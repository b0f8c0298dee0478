import json

import pytest

from weylpoly.cli import main
from weylpoly.exactpoly import poly_from_json
from weylpoly.report import ReportEntry, VerificationReport


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_affine_type_D_text(self, capsys):
        code, out, _ = run(capsys, "compute", "--family", "tildeD", "--n", "3")
        assert code == 0
        assert out.strip() == "4x + 16x^2 + 4x^3"

    def test_coupled_family_text(self, capsys):
        code, out, _ = run(capsys, "compute", "--family", "Tq", "--n", "2")
        assert code == 0
        assert out.strip() == "(1 + q) + (1 + 2q + q^2)x + (q + q^2)x^2"

    def test_q_specialization(self, capsys):
        code, out, _ = run(capsys, "compute", "--family", "Dq", "--n", "3", "--q", "0")
        assert code == 0
        assert out.strip() == "1 + 4x + x^2"

    def test_json_output_validates(self, capsys):
        code, out, _ = run(capsys, "compute", "--family", "Dq", "--n", "3", "--format", "json")
        assert code == 0
        blob = json.loads(out)
        assert blob["vars"] == ["x", "q"]
        poly_from_json(blob)

    def test_json_single_variable(self, capsys):
        code, out, _ = run(capsys, "compute", "--family", "tildeB", "--n", "3", "--format", "json")
        blob = json.loads(out)
        assert blob["var"] == "x"

    def test_unknown_family_exits_2(self, capsys):
        code, _, err = run(capsys, "compute", "--family", "nope", "--n", "3")
        assert code == 2 and "unknown family" in err

    def test_out_of_range_exits_2(self, capsys):
        code, _, _ = run(capsys, "compute", "--family", "tildeD", "--n", "1")
        assert code == 2

    def test_q_on_single_variable_family_exits_2(self, capsys):
        code, _, err = run(capsys, "compute", "--family", "tildeD", "--n", "3", "--q", "2")
        assert code == 2 and "no q parameter" in err

    def test_bad_q_exits_2(self, capsys):
        code, _, _ = run(capsys, "compute", "--family", "Dq", "--n", "3", "--q", "x")
        assert code == 2


class TestVerify:
    def test_paper_tables_suite(self, capsys):
        code, out, err = run(capsys, "verify", "--suite", "paper_tables")
        assert code == 0
        report = VerificationReport.loads(out)
        assert report.all_passed
        keys = [(e.check_id, json.dumps(e.parameters, sort_keys=True)) for e in report.entries]
        assert len(keys) == len(set(keys))
        assert "fail: 0" in err

    def test_unknown_suite_exits_2(self, capsys):
        code, _, _ = run(capsys, "verify", "--suite", "bogus")
        assert code == 2

    def test_jobs_do_not_change_results(self, capsys):
        code1, out1, _ = run(capsys, "verify", "--suite", "paper_tables", "--jobs", "1")
        code2, out2, _ = run(capsys, "verify", "--suite", "paper_tables", "--jobs", "4")
        assert code1 == code2 == 0
        r1 = VerificationReport.loads(out1)
        r2 = VerificationReport.loads(out2)
        key = lambda r: [(e.check_id, json.dumps(e.parameters, sort_keys=True), e.verdict) for e in r.entries]
        assert key(r1) == key(r2)

    def test_small_oracle_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "oracles", "--max-n", "3")
        assert code == 0
        assert VerificationReport.loads(out).all_passed

    def test_q_samples_flag(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "interlacing", "--max-n", "4", "--q-samples", "1/3,3"
        )
        assert code == 0
        report = VerificationReport.loads(out)
        qs = {e.parameters.get("q") for e in report.entries if "q" in e.parameters}
        assert qs == {"1/3", "3"}

    def test_bad_q_samples_exits_2(self, capsys):
        code, _, _ = run(capsys, "verify", "--suite", "interlacing", "--q-samples", "a,b")
        assert code == 2


class TestReport:
    def _sample_report(self):
        return VerificationReport(
            (
                ReportEntry("alpha", {"n": 2}, "pass", None, 1.0),
                ReportEntry("beta", {"n": 3}, "fail", {"detail": "injected"}, 2.0),
                ReportEntry("gamma", {"n": 9}, "skipped", None, 0.0),
            )
        )

    def test_json_roundtrip_bit_exact(self, tmp_path, capsys):
        report = self._sample_report()
        path = tmp_path / "report.json"
        path.write_text(report.dumps(), encoding="utf-8")
        code, out, _ = run(capsys, "report", str(path), "--format", "json")
        assert code == 0
        assert VerificationReport.loads(out) == report
        assert json.loads(out) == json.loads(report.dumps())

    def test_markdown_lists_failures_first(self, tmp_path, capsys):
        path = tmp_path / "report.json"
        path.write_text(self._sample_report().dumps(), encoding="utf-8")
        code, out, _ = run(capsys, "report", str(path))
        assert code == 0
        rows = [line for line in out.splitlines() if line.startswith("| ")]
        assert rows[1].startswith("| fail | beta")
        assert "injected" in out

    def test_malformed_file_exits_2(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        code, _, _ = run(capsys, "report", str(path))
        assert code == 2

    def test_missing_file_exits_2(self, capsys):
        code, _, _ = run(capsys, "report", "/nonexistent/report.json")
        assert code == 2


class TestReportTypes:
    def test_fail_requires_witness(self):
        with pytest.raises(Exception):
            ReportEntry("x", {}, "fail", None, 0.0)

    def test_bad_verdict(self):
        with pytest.raises(Exception):
            ReportEntry("x", {}, "maybe", None, 0.0)

    def test_all_passed_ignores_skips(self):
        report = VerificationReport(
            (
                ReportEntry("a", {}, "pass", None, 0.0),
                ReportEntry("b", {}, "skipped", None, 0.0),
            )
        )
        assert report.all_passed
