"""
Tests for the command line.

This module runs ``main`` in-process with argument lists and checks the
printed output and the exit codes.
"""

import json
import logging

import pytest

from ncseries import identities
from ncseries.main import EXIT_FAILED, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE, main
from ncseries.models.report import Discrepancy, IdentityReport
from ncseries.store import SeriesStore

PATH_LENGTH_6 = "q^5 + 4 q^6 + 6 q^7 + 7 q^8 + 7 q^9 + 5 q^10 + 5 q^11 + 3 q^12 + 2 q^13 + q^14 + q^15"


@pytest.fixture(autouse=True)
def clear_store():
    """Clear the series store before each test."""
    SeriesStore.clear()
    yield
    SeriesStore.clear()


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_expand(capsys):
    code, out = run(capsys, "expand", "c1", "--max-len", "2", "--max-weight", "3")
    assert code == EXIT_OK
    assert out == "1 + X1 + X2 + X3 + X1X1 + X1X2 + X2X1\n"
    code, out = run(capsys, "expand", "sptrees", "--max-len", "1", "--max-weight", "0")
    assert out == "X0\n"


def test_expand_json(capsys):
    code, out = run(capsys, "expand", "p2", "--max-len", "2", "--max-weight", "4", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["context"] == {"max_len": 2, "max_weight": 4}
    assert {"word": [1, 3], "coeff": "1"} in payload["terms"]


def test_expand_is_deterministic(capsys):
    _, first = run(capsys, "expand", "sptrees", "--max-len", "5", "--max-weight", "8")
    SeriesStore.clear()
    _, second = run(capsys, "expand", "sptrees", "--max-len", "5", "--max-weight", "8")
    assert first == second


def test_unknown_names(capsys):
    assert main(["expand", "nonsense"]) == EXIT_UNKNOWN
    assert main(["qseries", "nonsense"]) == EXIT_UNKNOWN
    assert main(["verify", "nonsense"]) == EXIT_UNKNOWN


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["expand", "c1", "--max-len", "many"])
    assert excinfo.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == EXIT_USAGE
    assert main(["expand", "c1", "--max-len", "-1"]) == EXIT_USAGE
    assert main(["tables", "--n", "1", "--shifted"]) == EXIT_USAGE


def test_tables_shifted(capsys):
    code, out = run(capsys, "tables", "--n", "10", "--shifted")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "hatted sigma C(1)[10]"
    assert lines[1] == "k=1 weight=-1: 10"
    assert lines[2] == "k=2 weight=2: 55 64 [73] [82]"
    assert [line.split(":")[0] for line in lines[3:6]] == ["k=3 weight=-7", "k=4 weight=7", "k=5 weight=-1"]
    assert lines[-2:] == ["excluded: 73, 82", "total: 0"]


def test_tables_small(capsys):
    code, out = run(capsys, "tables", "--n", "2", "--shifted")
    assert code == EXIT_OK
    assert "k=1 weight=0: [2]" in out.splitlines()


def test_tables_json(capsys):
    code, out = run(capsys, "tables", "--n", "11", "--shifted", "--format", "json")
    payload = json.loads(out)
    assert payload["per_k"] == [-1, 4, -9, 11, -5]
    assert payload["excluded"] == [[8, 3]]
    assert payload["rows"][1] == [[5, 6], [6, 5], [7, 4], [8, 3], [9, 2]]


def test_qseries_pathlength(capsys):
    code, out = run(capsys, "qseries", "pathlength", "--n", "6")
    assert code == EXIT_OK
    assert out == PATH_LENGTH_6 + "\n"
    _, out = run(capsys, "qseries", "pathlength", "--n", "6", "--oracle")
    assert out == PATH_LENGTH_6 + "\n"
    _, out = run(capsys, "qseries", "pathlength", "--n", "1")
    assert out == "1\n"


def test_qseries_rr_product(capsys):
    code, out = run(capsys, "qseries", "rr-product", "--a", "2", "--b", "3", "--max-q", "11")
    assert code == EXIT_OK
    assert out.strip() == "1 - q^2 - q^3 + q^5 - q^7 - q^8 + q^9 + 2 q^10 + q^11"


def test_verify(capsys):
    code, out = run(capsys, "verify", "quotient", "--max-len", "2", "--max-weight", "2")
    assert code == EXIT_OK
    assert out.startswith("PASS quotient (max_len=2, max_weight=2)")


def test_verify_json(capsys):
    code, out = run(
        capsys, "verify", "rr_first", "closing-pentagonal", "--max-len", "3", "--max-weight", "6",
        "--max-q", "15", "--format", "json", "--sequential",
    )
    assert code == EXIT_OK
    reports = json.loads(out)
    assert [r["identity"] for r in reports] == ["rr-first", "closing-pentagonal"]
    assert all(r["passed"] for r in reports)


def test_verify_failure_exit_code(capsys, monkeypatch):
    def failing(bounds, seed):
        discrepancy = Discrepancy(location="somewhere", expected="1", actual="2")
        return IdentityReport(identity="quotient", passed=False, discrepancy=discrepancy)

    monkeypatch.setitem(identities.IDENTITIES, "quotient", identities.IdentityEntry("broken", failing))
    code, out = run(capsys, "verify", "quotient", "--sequential")
    assert code == EXIT_FAILED
    assert out.strip() == "FAIL quotient (): somewhere: expected 1, got 2"


def test_involutions(capsys):
    code, out = run(capsys, "involutions", "--count", "2", "--max-len", "3", "--max-weight", "6")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 6
    assert lines[0].startswith("PASS phi[C(1)]:")
    assert lines[0].endswith("1 fixed points")
    assert lines[1].startswith("PASS psi[N]:")
    _, again = run(capsys, "involutions", "--count", "2", "--max-len", "3", "--max-weight", "6")
    assert again == out, "output only depends on the seed"


def test_verify_logs_store_contents(capsys, caplog):
    caplog.set_level(logging.DEBUG, logger="ncseries")
    code, _ = run(capsys, "verify", "quotient", "--max-len", "2", "--max-weight", "2", "--sequential")
    assert code == EXIT_OK
    assert f"{SeriesStore.size()} series stored: {', '.join(SeriesStore.names())}" in caplog.text
    assert SeriesStore.size() > 0, "the quotient checker stores the series it builds"
