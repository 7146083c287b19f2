import json

import pytest
from click.testing import CliRunner

from amhs.cli import SweepConfig, cli, parse_prime_range, run_sweep, sweep
from amhs.errors import ParseError
from amhs.registry import CongruenceCheck


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def records(output: str):
    return [json.loads(line) for line in output.splitlines() if line]


def test_parse_prime_range():
    assert parse_prime_range("7..100") == (7, 100)
    assert parse_prime_range(" 11 ") == (11, 11)
    with pytest.raises(ParseError):
        parse_prime_range("7-100")


@pytest.mark.parametrize(
    "kwargs",
    [
        {"prime_lo": 4, "prime_hi": 10},
        {"prime_lo": 9, "prime_hi": 10},
        {"prime_lo": 11, "prime_hi": 7},
        {"prime_lo": 7, "prime_hi": 7, "jobs": 0},
        {"prime_lo": 7, "prime_hi": 7, "weight_cap": 9},
        {"prime_lo": 7, "prime_hi": 7, "power_override": 7},
        {"prime_lo": 7, "prime_hi": 7, "suites": ()},
        {"prime_lo": 7, "prime_hi": 7, "suites": ("X1",)},
        {"prime_lo": 7, "prime_hi": 7, "log_level": "LOUD"},
    ],
)
def test_sweep_config_validation(kwargs):
    with pytest.raises(ValueError):
        SweepConfig(**kwargs)


def test_sweep_config_primes():
    config = SweepConfig(prime_lo=7, prime_hi=30, suites=("C08", "C04.H"))
    assert list(config.primes()) == [7, 11, 13, 17, 19, 23, 29]
    assert config.selects("C04.H.a1.b2")
    assert not config.selects("C05.H.a1.b2")


def test_eval_exact(runner):
    result = runner.invoke(cli, ["eval", "H", "1,-3", "6"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "4769/51840"


def test_eval_residue(runner):
    result = runner.invoke(cli, ["eval", "H", "1,-3", "6", "--prime", "7"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "6 (mod 7)"


def test_eval_below_depth(runner):
    result = runner.invoke(cli, ["eval", "h", "1,1", "0"])
    assert result.stdout.strip() == "0"


def test_eval_negative_composition(runner):
    result = runner.invoke(cli, ["eval", "V", "-1", "2"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "5/8"


@pytest.mark.parametrize(
    "args",
    [
        ["eval", "H", "1,,2", "3"],
        ["eval", "H", "1", "7", "--prime", "7"],
        ["eval", "H", "1", "3", "--prime", "9"],
        ["eval", "X", "1", "3"],
        ["stuffle", "1,a", "2"],
    ],
)
def test_usage_errors(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 2


def test_stuffle(runner):
    result = runner.invoke(cli, ["stuffle", "-2", "-3,2"])
    assert result.exit_code == 0
    terms = result.stdout.strip().split(" + ")
    assert len(terms) == 5
    assert terms[0] == "1·(-3,-4)"

    assert runner.invoke(cli, ["stuffle", "1", ""]).stdout.strip() == "1·(1)"
    assert runner.invoke(cli, ["stuffle", "1", "1"]).stdout.strip() == "2·(1,1) + 1·(2)"


def test_verify_known_failure(runner):
    result = runner.invoke(cli, ["verify", "--primes", "7..7", "--suite", "C08", "--no-timing"])
    assert result.exit_code == 0
    *rows, summary = records(result.stdout)
    assert [r["id"] for r in rows] == sorted(r["id"] for r in rows)
    known = next(r for r in rows if r["id"] == "C08.known-fail.p7")
    assert known["status"] == "pass"
    assert (int(known["lhs"]) - int(known["rhs"])) % 7 == 5
    assert summary["record"] == "summary"
    assert summary["known_fail"] == 1
    assert summary["fail"] == 0
    assert summary["total"] == len(rows) == summary["pass"] + summary["skipped"]
    assert all(r["elapsed_us"] == 0 for r in rows)


def test_verify_rejects_small_prime(runner):
    result = runner.invoke(cli, ["verify", "--primes", "4..10"])
    assert result.exit_code == 2
    assert "prime_lo" in result.stderr


def test_verify_rejects_unknown_suite(runner):
    result = runner.invoke(cli, ["verify", "--primes", "7..7", "--suite", "C99"])
    assert result.exit_code == 2


def test_verify_writes_report(runner, tmp_path):
    out = tmp_path / "report.jsonl"
    args = ["verify", "--primes", "7..13", "--suite", "C03", "--no-timing", "--out", str(out)]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    assert result.stdout == ""
    rows = records(out.read_text())
    assert rows[-1]["primes"] == 3
    assert [(r["id"], r["p"]) for r in rows[:-1]] == sorted((r["id"], r["p"]) for r in rows[:-1])


def test_unexpected_failure_exits_one(runner, monkeypatch):
    failing = CongruenceCheck(
        id="C99.stub", family="C99", statement="1 = 2", lhs=lambda ctx: 1, rhs=lambda ctx: 2
    )
    monkeypatch.setattr(sweep, "_catalog", lambda weight_cap, seed: (failing,))
    result = runner.invoke(cli, ["verify", "--primes", "7..11"])
    assert result.exit_code == 1
    summary = records(result.stdout)[-1]
    assert summary["fail"] == 2
    assert "2 unexpected failures" in result.stderr


def test_power_override_lowers_modulus():
    config = SweepConfig(prime_lo=11, prime_hi=11, suites=("C01.k2",), power_override=1)
    report = run_sweep(config)
    assert [r["k"] for r in report.records] == [1]


@pytest.mark.slow
def test_report_independent_of_jobs():
    base = dict(prime_lo=7, prime_hi=31, suites=("C04", "C30", "C31"), no_timing=True, seed=5)
    serial = run_sweep(SweepConfig(jobs=1, **base)).lines()
    parallel = run_sweep(SweepConfig(jobs=3, **base)).lines()
    assert serial == parallel


@pytest.mark.slow
def test_full_sweep_small_primes():
    report = run_sweep(SweepConfig(prime_lo=7, prime_hi=100, jobs=4, no_timing=True))
    assert report.summary.fail == 0
    assert report.exit_code == 0
