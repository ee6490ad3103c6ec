"""Tests for the command-line interface."""

import json

import pytest

from qfrieze import suite
from qfrieze.cli import main
from qfrieze.const import CHECK_BIJECTION, SCHEMA_VERSION
from qfrieze.models import CheckResult


class TestFrieze:
    """Tests for ``qfrieze frieze``."""

    def test_text(self, capsys):
        """Columns 0..3 for n = 2 print eight entries."""
        assert main(["frieze", "--n", "2", "--jmin", "0", "--jmax", "3"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 8
        assert lines[0] == "f(1,0) = X^(1,0)"
        assert lines[5] == "f(2,2) = X^(1,0)"

    def test_json_deterministic(self, capsys):
        """Two runs give byte-identical JSON."""
        argv = ["frieze", "--n", "4", "--jmin", "-1", "--jmax", "2", "--format", "json"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first
        data = json.loads(first)
        assert data["schema"] == SCHEMA_VERSION
        assert len(data["entries"]) == 16

    def test_odd_rank(self, capsys):
        """Odd n is a usage error."""
        assert main(["frieze", "--n", "3"]) == 2
        assert "n must be even" in capsys.readouterr().err

    def test_window_must_contain_zero(self, capsys):
        """--jmin above 0 is a usage error."""
        assert main(["frieze", "--n", "2", "--jmin", "1", "--jmax", "3"]) == 2
        assert "--jmin" in capsys.readouterr().err


class TestMutate:
    """Tests for ``qfrieze mutate``."""

    def test_single_direction(self, capsys):
        """μ₁ on the n = 2 seed."""
        assert main(["mutate", "--n", "2", "--seq", "1"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "B = [[0, -1], [1, 0]]",
            "Lambda = [[0, -1], [1, 0]]",
            "Y1 = X^(-1,1) + X^(-1,0)",
            "Y2 = X^(0,1)",
        ]

    def test_sweep_restores_matrices(self, capsys):
        """μ₄μ₃μ₂μ₁ returns B and Λ to the initial ones."""
        assert main(["mutate", "--n", "4", "--seq", "1,2,3,4", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        main(["mutate", "--n", "4", "--format", "json"])
        initial = json.loads(capsys.readouterr().out)
        assert data["B"] == initial["B"]
        assert data["Lambda"] == initial["Lambda"]
        assert data["cluster"] != initial["cluster"]

    def test_direction_out_of_range(self, capsys):
        """Direction 5 with n = 4 is a usage error."""
        assert main(["mutate", "--n", "4", "--seq", "1,5"]) == 2
        assert "out of range" in capsys.readouterr().err


class TestContinuant:
    """Tests for ``qfrieze continuant``."""

    def test_value(self, capsys):
        """P(2,1) for n = 2."""
        assert main(["continuant", "--n", "2", "--m", "2", "--i", "1"]) == 0
        assert capsys.readouterr().out.strip() == (
            "P(2,1) = X^(0,-1) + X^(-1,0) + X^(-1,-1)"
        )

    def test_undefined(self, capsys):
        """P(3,2) is undefined for n = 2."""
        assert main(["continuant", "--n", "2", "--m", "3", "--i", "2"]) == 2
        assert "undefined" in capsys.readouterr().err


class TestVariables:
    """Tests for ``qfrieze variables``."""

    @pytest.mark.parametrize(("n", "count"), [(2, 5), (4, 14)])
    def test_count(self, capsys, n, count):
        """n(n+3)/2 variables."""
        assert main(["variables", "--n", str(n), "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["count"] == count
        assert len({json.dumps(e["terms"]) for e in data["entries"]}) == count


class TestVerify:
    """Tests for ``qfrieze verify``."""

    def test_bijection(self, capsys):
        """Single check, JSON by default."""
        assert main(["verify", "--n", "2", "--checks", "bijection"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["summary"] == {"passed": 1, "failed": 0}
        assert data["checks"][0]["details"]["distinct"] == 5

    def test_all_defaults(self, capsys):
        """Every default check passes for n = 4."""
        assert main(["verify", "--n", "4", "--format", "text"]) == 0
        assert capsys.readouterr().out.splitlines()[-1] == "10 passed, 0 failed"

    def test_unknown_check(self, capsys):
        """Unknown check names are usage errors."""
        assert main(["verify", "--n", "2", "--checks", "nonsense"]) == 2
        assert "unknown check" in capsys.readouterr().err

    def test_failed_check_exits_one(self, capsys, monkeypatch):
        """A failing check gives exit status 1 and is counted in the summary."""
        monkeypatch.setitem(
            suite.CHECKS,
            CHECK_BIJECTION,
            lambda ctx: CheckResult(name=CHECK_BIJECTION, status="fail"),
        )
        assert main(["verify", "--n", "2", "--checks", "bijection"]) == 1
        data = json.loads(capsys.readouterr().out)
        assert data["summary"] == {"passed": 0, "failed": 1}

    def test_crashing_check_exits_one(self, capsys, monkeypatch):
        """A check raising an arbitrary exception still yields a report."""

        def broken(ctx):
            raise KeyError(-1)

        monkeypatch.setitem(suite.CHECKS, CHECK_BIJECTION, broken)
        assert main(["verify", "--n", "2", "--checks", "bijection"]) == 1
        data = json.loads(capsys.readouterr().out)
        assert data["checks"][0]["counterexample"]["error"] == "KeyError"
