import json
import math
import subprocess


def run_cli(cli_path, *args):
    return subprocess.run([cli_path, *args], capture_output=True, timeout=240)


class TestModule:
    def test_dilation_spectrum_matches_gram(self, core):
        region = core.Region.from_json('{"kind":"DilatedCopy","params":{"rho":0.5}}')
        result = core.spectrum("disc", region, 8)
        for k, lam in enumerate(result["eigenvalues"]):
            assert abs(lam - 0.5 ** (2 * k + 2)) < 1e-13

    def test_shorthand_regions(self, core):
        strip = core.Region.from_json("strip:0.25,0.5")
        assert strip.kind == "HorocyclicStrip"
        assert core.contains(strip, "disc", [0.6 + 0.0j])

    def test_region_json_round_trip(self, core):
        region = core.Region.from_json('{"kind":"Disc","params":{"center":[0.3,0.1],"radius":0.2}}')
        again = core.Region.from_json(region.to_json())
        assert again.kind == "Disc"

    def test_horostrip_endpoint(self, core):
        lo, hi = core.horostrip_interval(0.25, 0.5)
        assert lo == 0.0
        assert abs(hi - 2.0 / (3.0 * math.sqrt(3.0))) < 1e-12

    def test_cayley(self, core):
        assert core.cayley(0j) == 1j

    def test_lune_norm_strict(self, core):
        lo, hi = core.lune_norm(0.25, 0.75)
        assert lo == 0.0
        assert hi < 1.0 - 1e-6
        assert core.lune_norm(0.0, 0.5)[1] == 1.0

    def test_trace_dilated(self, core):
        region = core.Region.from_json("dilated:0.5")
        value, error = core.trace_by_formula("disc", region, 200000)
        assert abs(value - 0.25 / 0.75) <= error + 1e-9

    def test_nontraceclass_raises(self, core):
        region = core.Region.from_json("horodisc:0.5")
        try:
            core.trace_by_formula("disc", region, 200000)
        except Exception as e:
            assert "converging" in str(e)
        else:
            raise AssertionError("expected NonTraceClass")

    def test_ball_bounds(self, core):
        lower, upper = core.ball_bounds(2, 1.0, 0.5, 0.5)
        assert lower == 0.25
        assert abs(upper - math.sqrt(0.5)) < 1e-15

    def test_bidisc_norm(self, core):
        region = core.Region.from_json(
            '{"kind":"ProductRegion","params":{"factors":[[0.0,0.6],[0.4,1.0]]}}'
        )
        result = core.norm_estimate("polydisc:1,1", region, [10])
        assert abs(result["restriction_norm_lower"] - 0.6) < 1e-6


class TestCli:
    def test_spectrum_csv_deterministic(self, cli_path):
        args = [
            "spectrum",
            "--ambient", "disc",
            "--region", '{"kind":"DilatedCopy","params":{"rho":0.5}}',
            "--orders", "8",
            "--output", "csv",
        ]
        first = run_cli(cli_path, *args)
        second = run_cli(cli_path, *args)
        assert first.returncode == 0
        assert first.stdout == second.stdout
        lines = first.stdout.decode().strip().splitlines()
        assert lines[0] == "index,eigenvalue,order,gram_error,solver_residual"
        assert len(lines) == 9
        top = float(lines[1].split(",")[1])
        assert abs(top - 0.25) < 1e-13

    def test_oracle_horostrip_json(self, cli_path):
        result = run_cli(cli_path, "oracle", "--case", "horostrip",
                         "--rho1", "0.25", "--rho2", "0.5", "--output", "json")
        assert result.returncode == 0
        payload = json.loads(result.stdout)
        assert payload["lo"] == 0.0
        assert abs(payload["hi"] - 2.0 / (3.0 * math.sqrt(3.0))) < 1e-12

    def test_compare_case_exit_status(self, cli_path):
        result = run_cli(cli_path, "compare", "--case", "dilation")
        assert result.returncode == 0
        payload = json.loads(result.stdout)
        assert payload[0]["passed"] is True

    def test_trace_ideal_triangle_shorthand(self, cli_path):
        result = run_cli(cli_path, "trace", "--region", "ideal-triangle",
                         "--output", "json")
        assert result.returncode == 0
        payload = json.loads(result.stdout)
        assert abs(payload["value"] - 0.25) / 0.25 < 0.02

    def test_computation_error_is_structured(self, cli_path):
        result = run_cli(cli_path, "trace", "--region", "horodisc:0.5")
        assert result.returncode == 1
        err = json.loads(result.stderr)
        assert err["code"] == "NonTraceClass"

    def test_parse_error_exit_code(self, cli_path):
        result = run_cli(cli_path, "spectrum", "--region", "not-a-region")
        assert result.returncode in (1, 2)
        result = run_cli(cli_path, "--no-such-flag")
        assert result.returncode == 2

    def test_svg_output(self, cli_path, tmp_path):
        out = tmp_path / "plot.svg"
        result = run_cli(cli_path, "spectrum", "--region", "horodisc:0.5",
                         "--orders", "24", "--output", "svg", "--out", str(out))
        assert result.returncode == 0
        text = out.read_text()
        assert text.startswith("<svg")
        assert "circle" in text

    def test_sweep_reports_differences(self, cli_path):
        result = run_cli(cli_path, "sweep", "--region", "strip:0.25,0.5",
                         "--orders", "8,16", "--output", "csv")
        assert result.returncode == 0
        lines = result.stdout.decode().strip().splitlines()
        assert lines[0] == "order,top,bottom,top_difference"
        assert len(lines) == 3
