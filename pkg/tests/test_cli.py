import subprocess
import sys

import numpy as np
import pytest

from szeta.cli import (
    EXIT_COVERAGE,
    EXIT_PARSE,
    EXIT_PROPERTY,
    ZEROS_ENV_VAR,
    main,
)
from szeta.zeros import ZeroCatalog, serialize_zeros

from conftest import DATA_FILE

CSV_HEADER = "cutoff,T,empirical,formula_A,goldston_B,goldston_C,diff_A,rel_diff_A"


def _table(capsys, *extra, cutoffs="10000", primes="800"):
    rc = main(
        ["table", "--zeros", str(DATA_FILE), "--cutoffs", cutoffs, "--primes", primes, *extra]
    )
    captured = capsys.readouterr()
    assert rc == 0, captured.err
    return captured.out


def test_table_golden_row(capsys):
    out = _table(capsys, primes="5000")
    lines = out.strip().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 2
    fields = lines[1].split(",")
    assert len(fields) == 8
    assert fields[0] == "10000"
    assert abs(float(fields[1]) - 9998.85040) < 1e-5
    assert float(fields[2]) == pytest.approx(1653.145, rel=1e-2)
    assert float(fields[3]) == pytest.approx(1651.05, rel=1e-2)
    assert float(fields[6]) == pytest.approx(float(fields[2]) - float(fields[3]), abs=1e-12)


def test_table_tsv_format(capsys):
    out = _table(capsys, "--format", "tsv")
    lines = out.strip().splitlines()
    assert lines[0] == CSV_HEADER.replace(",", "\t")
    assert "\t" in lines[1] and "," not in lines[1]


def test_table_pretty_format(capsys):
    out = _table(capsys, "--format", "pretty")
    lines = out.strip().splitlines()
    assert lines[0].split() == ["cutoff", "T", "empirical", "A", "B", "C", "emp-A"]
    assert "9998.85040" in lines[1]


def test_table_output_is_deterministic(capsys):
    first = _table(capsys, cutoffs="5000,10000")
    second = _table(capsys, cutoffs="5000,10000")
    threaded = _table(capsys, "--parallel", cutoffs="5000,10000")
    assert first == second == threaded
    # rows come out in cutoff order either way
    assert [l.split(",")[0] for l in first.splitlines()[1:]] == ["5000", "10000"]


def test_cli_entry_point_matches_in_process(capsys):
    args = ["table", "--zeros", str(DATA_FILE), "--cutoffs", "5000", "--primes", "500"]
    rc = main(args)
    inproc = capsys.readouterr().out
    assert rc == 0
    run = subprocess.run(
        [sys.executable, "-m", "szeta.cli", *args],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert run.returncode == 0, run.stderr
    assert run.stdout == inproc


def test_table_requires_a_zero_source(monkeypatch):
    monkeypatch.delenv(ZEROS_ENV_VAR, raising=False)
    with pytest.raises(SystemExit) as exc:
        main(["table"])
    assert exc.value.code == 2


def test_zeros_env_var_is_honored(capsys, monkeypatch):
    monkeypatch.setenv(ZEROS_ENV_VAR, str(DATA_FILE))
    rc = main(["table", "--cutoffs", "5000", "--primes", "500"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.startswith(CSV_HEADER)


def test_malformed_zero_file_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("abc\n")
    rc = main(["table", "--zeros", str(bad), "--cutoffs", "10000"])
    captured = capsys.readouterr()
    assert rc == EXIT_PARSE
    assert "error:" in captured.err


def test_insufficient_coverage_exit_code(capsys, three_zero_file):
    rc = main(["table", "--zeros", str(three_zero_file), "--cutoffs", "10000"])
    assert rc == EXIT_COVERAGE
    capsys.readouterr()
    # a cutoff at or below the first zero is the same failure class
    rc = main(["table", "--zeros", str(three_zero_file), "--cutoffs", "14"])
    assert rc == EXIT_COVERAGE
    capsys.readouterr()


def test_bad_cutoff_lists_are_usage_errors(capsys):
    for text in ("200,100", "abc", ""):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--zeros", str(DATA_FILE), "--cutoffs", text])
        assert exc.value.code == 2
        capsys.readouterr()


def test_bad_numeric_flags_are_usage_errors(capsys):
    for extra in (("--beta", "1.5"), ("--gauss-order", "2")):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--zeros", str(DATA_FILE), "--cutoffs", "10000", *extra])
        assert exc.value.code == 2
        capsys.readouterr()


def test_smooth_model_flag_changes_low_t_treatment(capsys):
    exact = _table(capsys, "--smooth", "exact")
    asym = _table(capsys, "--smooth", "asymptotic")
    e = float(exact.splitlines()[1].split(",")[2])
    a = float(asym.splitlines()[1].split(",")[2])
    assert e != a
    assert abs(e - a) / e < 1e-3


def test_constants_output(capsys):
    rc = main(["constants"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "C0 = 0.5772156649" in out
    assert "K = 0.176248" in out
    assert "A(0.000) = 1.000000000000" in out
    assert "A(1.000) = 0.6079" in out
    assert "Li" in out


def test_constants_grid_is_configurable(capsys):
    rc = main(["constants", "--primes", "100", "--v-grid", "3"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "A(0.500)" in out
    assert "A(0.250)" not in out


def test_verify_passes_on_shipped_data(capsys):
    rc = main(["verify", "--zeros", str(DATA_FILE)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "FAIL" not in out
    assert "zero catalog counting cross-validation" in out
    assert "order doubling" in out


def test_verify_without_data_skips_catalog_checks(capsys, monkeypatch):
    monkeypatch.delenv(ZEROS_ENV_VAR, raising=False)
    rc = main(["verify"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "skip zero catalog checks" in out


def test_verify_flags_corrupt_data(capsys, catalog, tmp_path):
    damaged = ZeroCatalog(gammas=np.delete(catalog.gammas[:2000], 1000))
    path = tmp_path / "damaged.txt"
    serialize_zeros(damaged, path)
    rc = main(["verify", "--zeros", str(path)])
    out = capsys.readouterr().out
    assert rc == EXIT_PROPERTY
    assert "FAIL" in out
