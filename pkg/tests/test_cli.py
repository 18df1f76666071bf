"""Tests for the posetdim command line."""
from __future__ import annotations

import json
from pathlib import Path

import pytest

from src.app.cli import EXIT_FALSE, EXIT_OK, EXIT_USAGE, _settings_from, build_parser, run
from src.generators import standard_example
from src.poset import write_poset
from src.realizers import LocalRealizer, read_certificate, write_certificate


@pytest.fixture
def sk4(tmp_path: Path) -> Path:
    prefix = tmp_path / "sk4"
    assert run(["generate", "standard-example", "4", "-o", str(prefix)]) == EXIT_OK
    return prefix


def test_generate_writes_every_certificate(sk4: Path) -> None:
    for suffix in (".poset", ".rlz", ".lrlz", ".brlz"):
        assert sk4.with_name("sk4" + suffix).exists()


def test_verify_boolean_certificate(sk4: Path) -> None:
    assert run(["verify", "boolean", str(sk4) + ".poset", str(sk4) + ".brlz"]) == EXIT_OK


def test_flipped_table_bit_is_rejected(sk4: Path) -> None:
    path = Path(str(sk4) + ".brlz")
    lines = path.read_text(encoding="utf-8").splitlines()
    last = lines[-1]
    lines[-1] = last[:-1] + ("0" if last[-1] == "1" else "1")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    assert run(["verify", "boolean", str(sk4) + ".poset", str(path)]) == EXIT_FALSE


def test_verify_rejects_a_certificate_of_the_wrong_kind(sk4: Path) -> None:
    assert run(["verify", "realizer", str(sk4) + ".poset", str(sk4) + ".brlz"]) == EXIT_USAGE


def test_solve_dimension(sk4: Path, tmp_path: Path) -> None:
    poset = str(sk4) + ".poset"
    assert run(["solve", "dimension", poset, "--max-d", "3"]) == EXIT_FALSE
    witness = tmp_path / "w.rlz"
    assert run(["solve", "dimension", poset, "--max-d", "4", "--witness", str(witness)]) == EXIT_OK
    assert read_certificate(witness).size <= 4
    assert run(["verify", "realizer", poset, str(witness)]) == EXIT_OK


def test_solve_needs_a_bound(sk4: Path) -> None:
    assert run(["solve", "dimension", str(sk4) + ".poset"]) == EXIT_USAGE


def test_convert_local_to_boolean(sk4: Path, tmp_path: Path) -> None:
    out = tmp_path / "seven.brlz"
    args = ["convert", "local3-to-boolean", str(sk4) + ".poset", str(sk4) + ".lrlz", "-o", str(out)]
    assert run(args) == EXIT_OK
    assert read_certificate(out).size == 7
    assert run(["verify", "boolean", str(sk4) + ".poset", str(out)]) == EXIT_OK


def test_route_aliases(sk4: Path, tmp_path: Path) -> None:
    out = tmp_path / "alias.brlz"
    assert run(["convert", "thm5", str(sk4) + ".poset", str(sk4) + ".lrlz", "-o", str(out)]) == EXIT_OK
    assert out.exists()


def test_stats_as_json(tmp_path: Path, capsys) -> None:
    path = tmp_path / "s3.poset"
    write_poset(standard_example(3).poset, path)
    assert run(["--json", "stats", str(path)]) == EXIT_OK
    record = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert record["exit_code"] == 0
    assert record["n"] == 6
    assert record["comparable_pairs"] == 6
    assert record["critical_pairs"] == 3


def test_dry_run_sizes(capsys) -> None:
    assert run(["generate", "gadget", "3", "--dry-run-sizes"]) == EXIT_OK
    assert "2042975" in capsys.readouterr().out


def test_dry_run_sizes_past_float_range(capsys) -> None:
    assert run(["generate", "gadget", "6", "--dry-run-sizes"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "18386800" in out
    assert "10^10^10^" in out


def test_ramsey_refutation(tmp_path: Path, capsys) -> None:
    family = tmp_path / "fam.lrlz"
    write_certificate(LocalRealizer.from_sequences([tuple(range(5, 15)) + tuple(range(5))]), family)
    assert run(["--json", "refute", "ramsey", "5", str(family)]) == EXIT_FALSE
    record = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert record["quadruple"] == [0, 1, 2, 3]
    assert record["violated"] == [1, 10]


def test_gadget_refutation_beyond_the_cap(sk4: Path) -> None:
    assert run(["refute", "gadget", "3", str(sk4) + ".brlz"]) == EXIT_USAGE


def test_usage_errors(tmp_path: Path) -> None:
    assert run(["frobnicate"]) == EXIT_USAGE
    assert run(["generate", "standard-example"]) == EXIT_USAGE
    assert run(["stats", str(tmp_path / "missing.poset")]) == EXIT_USAGE
    assert run(["generate", "standard-example", "1", "-o", str(tmp_path / "s1")]) == EXIT_USAGE


def test_global_overrides() -> None:
    args = build_parser().parse_args(["--timeout-s", "5", "--seed", "9", "stats", "x.poset"])
    settings = _settings_from(args)
    assert settings.timeout_s == 5.0
    assert settings.seed == 9
