"""Command-line surface: exit codes, formats, determinism, figures."""

import pytest

from cardstar import cli, radii
from cardstar.cli import CliConfig, main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_config_validation():
    with pytest.raises(ValueError):
        CliConfig(samples=64)
    with pytest.raises(ValueError):
        CliConfig(tolerance=1.0)
    with pytest.raises(ValueError):
        CliConfig(output_format="pdf")


def test_member_command(capsys):
    code, out, _ = run(["member", "1", "0"], capsys)
    assert code == 0 and "inside" in out and "preimage" in out
    code, out, _ = run(["member", "0.5", "0"], capsys)
    assert code == 0 and "boundary" in out
    code, out, _ = run(["member", "2.5", "0.2"], capsys)
    assert code == 0 and "outside" in out


def test_radius_command(capsys):
    code, out, _ = run(["radius", "nephroid"], capsys)
    assert code == 0 and "0.557874" in out
    code, out, err = run(["radius", "not-a-class"], capsys)
    assert code == 2 and "available tags" in err
    code, out, err = run(["radius", "cardioid-in-janowski-m"], capsys)
    assert code == 2 and "--param" in err
    code, out, _ = run(["radius", "cardioid-in-janowski-m", "--param", "1.2"], capsys)
    assert code == 0
    code, out, err = run(["radius", "cardioid-in-bounded-re", "--param", "0.5"], capsys)
    assert code == 2 and "error" in err


def test_coeff_check_command(tmp_path, capsys):
    path = tmp_path / "series.txt"
    path.write_text("1.0 0.0\n0.3333333333333333 0.0\n")
    code, out, _ = run(["coeff-check", str(path)], capsys)
    assert code == 0 and "member" in out
    path.write_text("1.0 0.0\n0.5 0.0\n")
    code, out, _ = run(["coeff-check", str(path)], capsys)
    assert code == 0 and "inconclusive" in out
    path.write_text("2.0 0.0\n0.5 0.0\n")
    code, out, err = run(["coeff-check", str(path)], capsys)
    assert code == 2
    code, out, err = run(["coeff-check", str(tmp_path / "missing.txt")], capsys)
    assert code == 2


def test_constants_table_rows_and_determinism(capsys):
    code, out1, _ = run(["--format", "csv", "constants", "--no-oracle"], capsys)
    assert code == 0
    code, out2, _ = run(["--format", "csv", "constants", "--no-oracle"], capsys)
    assert out1 == out2
    rows = [line for line in out1.strip().splitlines()[1:] if line]
    assert len(rows) == len(radii.constants_registry())


def test_constants_text_mentions_candidates(capsys):
    code, out, _ = run(["constants", "--no-oracle"], capsys)
    assert code == 0
    assert "strong-order candidates" in out
    assert "formula-suspect" in out
    assert "published-decimal-mismatch" in out


def test_plot_unknown_tag(capsys):
    code, _, err = run(["plot", "nope"], capsys)
    assert code == 2 and "unknown figure tag" in err


def test_plot_csv_and_svg(capsys):
    code, out, _ = run(["plot", "lemma_disks_a1"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "curve,t,x,y"
    assert "inscribed_disk_a1" in out
    code, out, _ = run(["--format", "svg", "plot", "univalent_p_disk"], capsys)
    assert code == 0 and out.startswith("<svg") and "polyline" in out


def test_plot_deterministic(capsys):
    code, out1, _ = run(["plot", "inclusion_g3"], capsys)
    code, out2, _ = run(["plot", "inclusion_g3"], capsys)
    assert out1 == out2


def test_figure_checks_all_tags():
    for tag in cli.FIGURE_TAGS:
        for name, ok in cli.check_figure(tag):
            assert ok, (tag, name)


def test_verify_command_filtered(capsys):
    code, out, _ = run(["--samples", "512", "verify", "--filter", "ratio"], capsys)
    assert code == 0
    assert "checks passed" in out
    assert "PASS" in out


def test_verify_command_coarse_sampling(capsys):
    # the whole suite stays green at coarse sampling with relaxed tolerance
    code, out, _ = run(["--samples", "256", "verify"], capsys)
    assert code == 0


def test_verify_command_csv(capsys):
    code, out, _ = run(["--samples", "512", "--format", "csv", "verify",
                        "--filter", "partial"], capsys)
    assert code == 0
    assert out.startswith("claim,method,samples,verdict")


def test_samples_env_override(monkeypatch):
    monkeypatch.setenv("CARDIOID_SAMPLES", "512")
    parser = cli.build_parser()
    args = parser.parse_args(["constants"])
    assert args.samples == 512
