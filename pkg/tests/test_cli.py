"""End-to-end checks of the command-line surface.

Everything runs in-process through ``cli.main`` so coverage tools see it;
the slow selftest subcommand is exercised by the acceptance suite
instead.
"""

import json

import pytest

from sphzeta import cli
from sphzeta.errors import BracketError


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    return lines[0].split(","), [ln.split(",") for ln in lines[1:]]


def comment_lines(text):
    return [ln for ln in text.splitlines() if ln.startswith("#")]


# ---------------------------------------------------------------------------
# Scalar subcommands
# ---------------------------------------------------------------------------


def test_eigen_json_record(capsys):
    code, out, _ = run_cli(
        capsys, "eigen", "--l", "2", "--m", "1", "--gamma2", "0.4", "--no-timestamp"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["l"] == 2 and doc["m"] == 1 and doc["gamma2"] == 0.4
    assert doc["lambda"] == pytest.approx(6.170807545960717, rel=1e-12)
    assert doc["k_max"] >= doc["k_min"]
    assert doc["n_terms"] == doc["k_max"] - doc["k_min"] + 1
    assert doc["residual"] < 1e-10
    assert doc["meta"]["command"] == "eigen"
    assert "generated_at" not in doc["meta"]


def test_eigen_flat_limit_is_exact(capsys):
    code, out, _ = run_cli(capsys, "eigen", "--l", "5", "--gamma2", "0.0")
    assert code == 0
    doc = json.loads(out)
    assert doc["lambda"] == 30.0
    assert "generated_at" in doc["meta"]


def test_casimir_sphere_dirichlet(capsys):
    code, out, _ = run_cli(capsys, "casimir", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert doc["bc"] == "dirichlet" and doc["region"] == "total"
    assert doc["E0"] == pytest.approx(0.00281, rel=0.02)
    assert doc["energy"] == doc["E0"]


def test_casimir_prolate_expansion(capsys):
    code, out, _ = run_cli(
        capsys, "casimir", "--geometry", "prolate", "--e", "0.1", "--no-timestamp"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["c2"] == pytest.approx(1.0 / 3.0, rel=1e-12)
    assert doc["energy"] == pytest.approx(doc["E0"] * (1.0 + 0.01 / 3.0), rel=1e-12)


def test_casimir_scale_flag(capsys):
    _, ref_out, _ = run_cli(capsys, "casimir", "--no-timestamp")
    ref = json.loads(ref_out)

    code, out, _ = run_cli(capsys, "casimir", "--a", "2.0", "--no-timestamp")
    assert code == 0
    assert json.loads(out)["E0"] == pytest.approx(ref["E0"] / 2.0, rel=1e-12)

    code, out, _ = run_cli(
        capsys, "casimir", "--geometry", "oblate", "--a", "2.0", "--e", "0.1",
        "--no-timestamp",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["E0"] == pytest.approx(ref["E0"] / 2.0, rel=1e-12)
    assert doc["energy"] == pytest.approx(doc["E0"] * (1.0 - 0.01 / 3.0), rel=1e-12)

    code, _, err = run_cli(capsys, "casimir", "--a", "-1.0")
    assert code == 1
    assert "scale must be positive" in err


def test_zonal_factors_default_prescription(capsys):
    code, out, _ = run_cli(capsys, "zonal", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert doc["c2_exact"] == pytest.approx(0.25757167856340907, rel=1e-9)
    assert doc["c2_zonal"] == pytest.approx(-3.848027615536548, rel=1e-9)
    assert doc["c2_exact"] > 0.0 > doc["c2_zonal"]
    assert doc["prescription"] == "finite-part-with-pole-term"
    assert "mu_convention" in doc


def test_zonal_factors_alternate_prescription(capsys):
    code, out, _ = run_cli(
        capsys, "zonal", "--prescription", "finite-part", "--no-timestamp"
    )
    assert code == 0
    doc = json.loads(out)
    # Dropping the pole term flips the zonal factor's sign and moves the
    # exact one; the subcommand must thread the choice through.
    assert doc["c2_zonal"] > 0.0
    assert doc["c2_exact"] != pytest.approx(0.25757167856340907, rel=1e-4)


def test_bag_record(capsys):
    code, out, _ = run_cli(capsys, "bag", "--e", "0.2", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert doc["modified_mode_sum"] == pytest.approx(-0.7)
    assert doc["meson_prolate"] == pytest.approx(-0.7 * (1.0 - 0.04 / 6.0))
    assert doc["baryon_oblate"] == pytest.approx(-0.7 * (1.0 - 0.04 / 3.0))


# ---------------------------------------------------------------------------
# Table subcommands
# ---------------------------------------------------------------------------


def test_fig3_table(capsys):
    code, out, _ = run_cli(capsys, "fig3", "--no-timestamp")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["gamma2", "l", "ratio"]
    assert len(rows) == 4 * 50
    assert {r[1] for r in rows} == {"0", "10", "20", "30"}
    for g2, _, ratio in rows:
        assert 0.99 <= float(ratio) <= 1.01
        if g2 == "0":
            assert ratio == "1"


def test_fig4_table(capsys):
    code, out, _ = run_cli(capsys, "fig4", "--no-timestamp")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["e", "l", "ratio"]
    assert len(rows) == 4 * 60
    for e, _, ratio in rows:
        if e == "0":
            assert ratio == "1"
    # The first-order form visibly breaks down at large deformation.
    assert any(abs(float(r[2]) - 1.0) > 0.01 for r in rows if float(r[0]) > 0.25)


def test_fig1_table(capsys):
    code, out, _ = run_cli(capsys, "fig1", "--no-timestamp")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["e", "E_prolate", "E_oblate"]
    assert len(rows) == 61
    prolate = [float(r[1]) for r in rows]
    oblate = [float(r[2]) for r in rows]
    assert all(v > 0.0 for v in prolate + oblate)
    assert all(b > a for a, b in zip(prolate, prolate[1:]))
    assert all(b < a for a, b in zip(oblate, oblate[1:]))
    assert prolate[0] == pytest.approx(0.00281, rel=0.02)
    assert prolate[0] == oblate[0]


def test_shifts_table(capsys):
    code, out, _ = run_cli(capsys, "shifts", "--lmax", "1", "--no-timestamp")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["l", "m", "bc", "z0", "c_pred", "c_fit", "abs_err"]
    assert [(r[0], r[1]) for r in rows] == [("0", "0"), ("1", "0"), ("1", "1")]
    assert all(r[2] == "dirichlet" for r in rows)
    assert all(float(r[6]) < 1e-3 for r in rows)


def test_table_json_format(capsys):
    code, out, _ = run_cli(capsys, "fig1", "--format", "json", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert doc["columns"] == ["e", "E_prolate", "E_oblate"]
    assert len(doc["rows"]) == 61
    assert doc["meta"]["params"]["bc"] == "dirichlet"


def test_record_csv_format(capsys):
    code, out, _ = run_cli(capsys, "bag", "--format", "csv", "--no-timestamp")
    assert code == 0
    header, rows = parse_csv(out)
    assert header[:2] == ["e", "semi_axis"]
    assert len(rows) == 1


# ---------------------------------------------------------------------------
# Provenance, output files, and exit codes
# ---------------------------------------------------------------------------


def test_timestamp_toggle(capsys):
    _, with_ts, _ = run_cli(capsys, "fig3")
    _, without_ts, _ = run_cli(capsys, "fig3", "--no-timestamp")
    assert any(ln.startswith("# generated_at=") for ln in comment_lines(with_ts))
    assert not any("generated_at" in ln for ln in comment_lines(without_ts))
    assert comment_lines(without_ts)[0].startswith("# sphzeta 0.1.0 fig3")


def test_out_file(tmp_path, capsys):
    target = tmp_path / "fig4.csv"
    code, out, _ = run_cli(capsys, "fig4", "--out", str(target), "--no-timestamp")
    assert code == 0
    assert out == ""
    header, rows = parse_csv(target.read_text(encoding="utf-8"))
    assert header == ["e", "l", "ratio"]
    assert len(rows) == 240


def test_out_file_unwritable(capsys):
    code, _, err = run_cli(
        capsys, "bag", "--out", "/nonexistent-dir/bag.json", "--no-timestamp"
    )
    assert code == 1
    assert "cannot write" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("frobnicate",),
        ("eigen", "--l", "2"),  # missing --gamma2
        ("casimir", "--bc", "robin"),
        (),
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == 1
    assert err != ""


def test_domain_errors_exit_1(capsys):
    code, _, err = run_cli(capsys, "eigen", "--l", "-3", "--gamma2", "0.1")
    assert code == 1
    assert "invalid parameters" in err

    code, _, err = run_cli(capsys, "casimir", "--geometry", "sphere", "--e", "0.2")
    assert code == 1
    assert "sphere geometry requires e = 0" in err


def test_numerical_failure_exits_2(capsys, monkeypatch):
    def explode(*args, **kwargs):
        raise BracketError("no sign change in scan window")

    monkeypatch.setattr(cli.spheroidal, "eigen_decomp", explode)
    code, _, err = run_cli(capsys, "eigen", "--l", "2", "--gamma2", "0.4")
    assert code == 2
    assert "numerical failure" in err


def test_version_flag(capsys):
    code, out, _ = run_cli(capsys, "--version")
    assert code == 0
    assert out.strip() == "sphzeta 0.1.0"
