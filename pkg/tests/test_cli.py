import numpy as np
import pytest

from helpers import random_unit_vector
from qftsynth import cli
from qftsynth import fourier

INV_SQRT2 = np.sqrt(0.5)


def write_vector(path, values):
    path.write_text(cli.format_amplitudes(np.asarray(values, dtype=np.complex128)))
    return str(path)


def parse_amplitudes(text):
    rows = [line.split() for line in text.strip().splitlines()]
    return np.array([complex(float(r), float(i)) for r, i in rows])


class TestSynth:
    def test_single_qubit_text_and_counts(self, capsys):
        assert cli.main(["synth", "--n", "1"]) == 0
        captured = capsys.readouterr()
        assert captured.out == "qubits 1\nh 0\n"
        assert "hadamards=1" in captured.err
        assert "controlled_phases=0" in captured.err
        assert "swaps=0" in captured.err

    def test_four_qubit_counts(self, capsys):
        assert cli.main(["synth", "--n", "4"]) == 0
        err = capsys.readouterr().err
        assert "hadamards=4 controlled_phases=6 swaps=2 total=12" in err

    def test_level_one_counts(self, capsys):
        assert cli.main(["synth", "--n", "4", "--m", "1"]) == 0
        err = capsys.readouterr().err
        assert "hadamards=4 controlled_phases=0 swaps=2 total=6" in err

    def test_writes_output_file(self, tmp_path, capsys):
        out = tmp_path / "c.txt"
        assert cli.main(["synth", "--n", "3", "--out", str(out)]) == 0
        capsys.readouterr()
        from qftsynth import circuit as circ

        assert circ.parse_circuit_text(out.read_text()) == circ.synth_qft(3)

    def test_invalid_parameters_fail(self, capsys):
        assert cli.main(["synth", "--n", "0"]) == 1
        assert "error:" in capsys.readouterr().err
        assert cli.main(["synth", "--n", "4", "--m", "9"]) == 1
        assert "error:" in capsys.readouterr().err


class TestFft:
    def test_two_point_transform(self, tmp_path, capsys):
        infile = write_vector(tmp_path / "v.txt", [1, 0])
        assert cli.main(["fft", "--in", infile]) == 0
        out = parse_amplitudes(capsys.readouterr().out)
        np.testing.assert_allclose(out, [INV_SQRT2, INV_SQRT2], atol=1e-15)

    def test_delta_eight(self, tmp_path, capsys):
        infile = write_vector(tmp_path / "v.txt", [1, 0, 0, 0, 0, 0, 0, 0])
        assert cli.main(["fft", "--in", infile]) == 0
        out = parse_amplitudes(capsys.readouterr().out)
        np.testing.assert_allclose(out, np.full(8, 1 / np.sqrt(8)), atol=1e-15)

    def test_full_level_output_is_bit_identical(self, tmp_path, capsys):
        rng = np.random.default_rng(5)
        infile = write_vector(tmp_path / "v.txt", random_unit_vector(6, rng))
        assert cli.main(["fft", "--in", infile]) == 0
        exact = capsys.readouterr().out
        assert cli.main(["fft", "--in", infile, "--m", "6"]) == 0
        assert capsys.readouterr().out == exact

    def test_rejects_bad_length(self, tmp_path, capsys):
        infile = write_vector(tmp_path / "v.txt", [1, 0, 0])
        assert cli.main(["fft", "--in", infile]) == 1
        assert "power of two" in capsys.readouterr().err

    def test_rejects_malformed_line(self, tmp_path, capsys):
        bad = tmp_path / "v.txt"
        bad.write_text("1 0\n0\n")
        assert cli.main(["fft", "--in", str(bad)]) == 1
        assert ":2:" in capsys.readouterr().err

    def test_rejects_non_finite(self, tmp_path, capsys):
        bad = tmp_path / "v.txt"
        bad.write_text("1 0\nnan 0\n")
        assert cli.main(["fft", "--in", str(bad)]) == 1
        assert "non-finite" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert cli.main(["fft", "--in", "/nonexistent/v.txt"]) == 1
        assert "error:" in capsys.readouterr().err


class TestSimulate:
    def test_single_qubit(self, tmp_path, capsys):
        infile = write_vector(tmp_path / "v.txt", [1, 0])
        circ_path = tmp_path / "c.txt"
        cli.main(["synth", "--n", "1", "--out", str(circ_path)])
        capsys.readouterr()
        assert cli.main(["simulate", "--in", infile, "--circuit", str(circ_path)]) == 0
        out = parse_amplitudes(capsys.readouterr().out)
        np.testing.assert_allclose(out, [INV_SQRT2, INV_SQRT2], atol=1e-15)

    def test_matches_fft_subcommand(self, tmp_path, capsys):
        rng = np.random.default_rng(9)
        infile = write_vector(tmp_path / "v.txt", random_unit_vector(6, rng))
        circ_path = tmp_path / "c.txt"
        cli.main(["synth", "--n", "6", "--out", str(circ_path)])
        capsys.readouterr()
        assert cli.main(["fft", "--in", infile]) == 0
        via_fft = parse_amplitudes(capsys.readouterr().out)
        assert cli.main(["simulate", "--in", infile, "--circuit", str(circ_path)]) == 0
        via_sim = parse_amplitudes(capsys.readouterr().out)
        assert np.max(np.abs(via_fft - via_sim)) < 1e-9

    def test_rejects_length_mismatch(self, tmp_path, capsys):
        infile = write_vector(tmp_path / "v.txt", [1, 0, 0, 0])
        circ_path = tmp_path / "c.txt"
        cli.main(["synth", "--n", "3", "--out", str(circ_path)])
        capsys.readouterr()
        assert cli.main(["simulate", "--in", infile, "--circuit", str(circ_path)]) == 1
        assert "does not match" in capsys.readouterr().err

    def test_normalize_flag(self, tmp_path, capsys):
        infile = write_vector(tmp_path / "v.txt", [3, 4, 0, 0])
        circ_path = tmp_path / "c.txt"
        cli.main(["synth", "--n", "2", "--out", str(circ_path)])
        capsys.readouterr()
        assert cli.main(["simulate", "--in", infile, "--circuit", str(circ_path)]) == 1
        assert "norm" in capsys.readouterr().err
        assert (
            cli.main(
                ["simulate", "--in", infile, "--circuit", str(circ_path), "--normalize"]
            )
            == 0
        )
        out = parse_amplitudes(capsys.readouterr().out)
        assert abs(np.linalg.norm(out) - 1.0) < 1e-12


class TestVerify:
    @pytest.mark.parametrize("n", [1, 4, 8])
    def test_passes(self, n, capsys):
        assert cli.main(["verify", "--n", str(n)]) == 0
        out = capsys.readouterr().out
        assert "verdict: PASS" in out
        for line in out.splitlines():
            if line.startswith("max_entry_error:"):
                assert float(line.split(":")[1]) < 1e-10
                break
        else:
            pytest.fail("missing max_entry_error line")
        assert "elapsed_seconds:" in out
        assert "seed: 12345" in out

    def test_deterministic(self, capsys):
        cli.main(["verify", "--n", "3"])
        first = capsys.readouterr().out
        cli.main(["verify", "--n", "3"])
        second = capsys.readouterr().out
        strip_time = lambda s: [l for l in s.splitlines() if "elapsed" not in l]
        assert strip_time(first) == strip_time(second)

    def test_rejects_out_of_range_n(self, capsys):
        assert cli.main(["verify", "--n", "9"]) == 1
        assert "error:" in capsys.readouterr().err

    def test_rejects_bad_tolerance(self, capsys):
        assert cli.main(["verify", "--n", "2", "--tolerance", "0"]) == 1
        capsys.readouterr()


class TestCompareApprox:
    def test_table_and_bounds(self, capsys):
        assert cli.main(["compare-approx", "--n", "4"]) == 0
        out = capsys.readouterr().out
        lines = out.splitlines()
        rows = [l.split() for l in lines[2 : 2 + 4]]
        assert [int(r[0]) for r in rows] == [1, 2, 3, 4]
        deviations = [float(r[2]) for r in rows]
        bounds = [float(r[3]) for r in rows]
        assert all(d <= b + 1e-12 for d, b in zip(deviations, bounds))
        assert all(r[4] == "yes" for r in rows)
        # exact level deviates by rounding only, and deviation shrinks with m
        assert deviations[-1] < 1e-12
        assert deviations == sorted(deviations, reverse=True)
        assert any(l.startswith("eps_max=") for l in lines)

    def test_rejects_out_of_range_n(self, capsys):
        assert cli.main(["compare-approx", "--n", "0"]) == 1
        capsys.readouterr()


class TestDecompose:
    def test_dump_sections(self, capsys):
        assert cli.main(["decompose", "--n", "2", "--s", "0"]) == 0
        out = capsys.readouterr().out
        for section in (
            "stage matrix:",
            "orthogonal factor:",
            "diagonal factor:",
            "column phases:",
            "residual factorization:",
        ):
            assert section in out
        # 1/sqrt(2) printed with full precision somewhere in the grids
        assert f"{INV_SQRT2:.17g}" in out

    def test_writes_file(self, tmp_path, capsys):
        out = tmp_path / "d.txt"
        assert cli.main(["decompose", "--n", "3", "--s", "1", "--out", str(out)]) == 0
        capsys.readouterr()
        assert "orthogonal factor:" in out.read_text()

    def test_rejects_bad_stage(self, capsys):
        assert cli.main(["decompose", "--n", "2", "--s", "2"]) == 1
        capsys.readouterr()


class TestVectorFileFormat:
    def test_round_trip_is_bit_exact(self, tmp_path):
        rng = np.random.default_rng(31)
        v = random_unit_vector(5, rng)
        path = tmp_path / "v.txt"
        path.write_text(cli.format_amplitudes(v))
        back = cli.read_vector_file(str(path))
        assert np.array_equal(back, v)

    def test_blank_lines_ignored(self, tmp_path):
        path = tmp_path / "v.txt"
        path.write_text("1 0\n\n0 0\n")
        np.testing.assert_array_equal(cli.read_vector_file(str(path)), [1, 0])

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "v.txt"
        path.write_text("")
        with pytest.raises(ValueError, match="empty"):
            cli.read_vector_file(str(path))
