"""Tests for the shiftlab command line"""
import json

import pytest

from cli import EXIT_FOUND, EXIT_OK, EXIT_USAGE, main


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


class TestParseDs:
    """Test suite for the parse-ds command"""

    def test_json(self, capsys):
        """Test canonical form, labels and facets as JSON"""
        assert main(["parse-ds", "DDS", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data == {"canonical": "DDS", "labels": [2, 3, 1], "facets": [[1, 2], [1, 3]]}

    def test_text(self, capsys):
        """Test the plain rendering includes the complex file format"""
        assert main(["parse-ds", "DDS"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "canonical: DDS" in out
        assert "n=3\n1 2\n1 3\n" in out

    def test_parse_error(self, capsys):
        """Test a bad string exits with the usage code"""
        assert main(["parse-ds", "DD|D"]) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err


class TestCertifyThreshold:
    """Test suite for the certify-threshold command"""

    def test_threshold(self, capsys, write):
        """Test the certificate of a path on three vertices"""
        path = write("p3.txt", "n=3\n1 2\n2 3\n")
        assert main(["certify-threshold", path]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["is_threshold"] is True
        assert data["creation_sequence"] == "DDS"
        assert data["creation_vertices"] == [3, 1, 2]
        assert data["weights"] == {"1": 1, "2": 3, "3": 2}
        assert data["t"] == 3

    def test_not_threshold(self, capsys, write):
        """Test a non-threshold graph reports its stuck vertices"""
        path = write("p4.txt", "n=4\n1 2\n2 3\n3 4\n")
        assert main(["certify-threshold", path]) == EXIT_FOUND
        data = json.loads(capsys.readouterr().out)
        assert data == {"is_threshold": False, "stuck_vertices": [1, 2, 3, 4]}

    def test_missing_file(self, tmp_path):
        """Test a missing file exits with the usage code"""
        assert main(["certify-threshold", str(tmp_path / "nope.txt")]) == EXIT_USAGE


class TestBuild:
    """Test suite for the build command"""

    def test_independence(self, capsys, write):
        """Test I(G) of the path on four vertices"""
        path = write("p4.txt", "n=4\n1 2\n2 3\n3 4\n")
        assert main(["build", "--op", "indep", path]) == EXIT_OK
        assert capsys.readouterr().out == "n=4\n1 3\n1 4\n2 4\n"

    def test_closed_neighborhood(self, capsys, write):
        """Test N[G] of the path on four vertices"""
        path = write("p4.txt", "n=4\n1 2\n2 3\n3 4\n")
        assert main(["build", "--op", "closed-nbhd", path]) == EXIT_OK
        assert capsys.readouterr().out == "n=4\n1 2\n3 4\n"

    def test_generalized_independence(self, capsys, write):
        """Test the generalized complex of a complex file"""
        path = write("edge.txt", "n=3\n1 2\n")
        assert main(["build", "--op", "gen-indep", path]) == EXIT_OK
        assert capsys.readouterr().out == "n=3\n1 3\n2 3\n"


class TestCheck:
    """Test suite for the check command"""

    def test_property_fails(self, capsys, write):
        """Test a failing property exits with EXIT_FOUND"""
        path = write("example.txt", "n=4\n1 2 3\n1 4\n2 4\n")
        assert main(["check", "--property", "flag", path]) == EXIT_FOUND
        assert "flag: false" in capsys.readouterr().out

    def test_property_holds_with_witness(self, capsys, write):
        """Test a balanced complex prints its coloring"""
        path = write("example.txt", "n=4\n1 2 3\n1 4\n2 4\n")
        assert main(["check", "--property", "balanced", path, "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["holds"] is True
        assert set(data["witness"]) == {"1", "2", "3", "4"}

    def test_shifted(self, write):
        """Test the shifted property"""
        path = write("example.txt", "n=4\n1 2 3\n1 4\n2 4\n")
        assert main(["check", "--property", "shifted", path]) == EXIT_OK

    def test_unknown_property(self, write):
        """Test argparse rejects unknown properties"""
        path = write("example.txt", "n=4\n1 2 3\n")
        with pytest.raises(SystemExit) as exc:
            main(["check", "--property", "round", path])
        assert exc.value.code == 2


class TestVerify:
    """Test suite for the verify command"""

    def test_golden(self, capsys):
        """Test the golden replays pass"""
        assert main(["verify", "--theorem", "golden"]) == EXIT_OK
        assert "golden" in capsys.readouterr().out

    def test_json_report(self, capsys):
        """Test a small sweep as JSON"""
        assert main(["verify", "--theorem", "T7", "--max-n", "3", "--jobs", "1", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["theorem"] == "T7"
        assert data["bound"] == 3
        assert data["checked"] == 8
        assert data["counterexamples"] == []

    def test_unknown_theorem(self):
        """Test argparse rejects unknown theorem ids"""
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--theorem", "T9"])
        assert exc.value.code == 2

    def test_guard(self, capsys):
        """Test a bound above the guard exits with the usage code"""
        assert main(["verify", "--theorem", "T1", "--max-n", "9", "--jobs", "1"]) == EXIT_USAGE
        assert "enumeration guard" in capsys.readouterr().err

    def test_bad_environment(self, capsys, monkeypatch):
        """Test an invalid SHIFTLAB_ setting exits with the usage code"""
        monkeypatch.setenv("SHIFTLAB_JOBS", "abc")
        assert main(["verify", "--theorem", "golden"]) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err

    def test_hope_always_succeeds(self):
        """Test the HOPE search exits 0"""
        assert main(["verify", "--theorem", "HOPE", "--max-n", "2", "--jobs", "1"]) == EXIT_OK

    def test_save(self, tmp_path, monkeypatch):
        """Test --save writes the report under the data directory"""
        monkeypatch.setenv("SHIFTLAB_DATA_DIR", str(tmp_path))
        assert main(["verify", "--theorem", "T6", "--max-n", "3", "--jobs", "1", "--save"]) == EXIT_OK
        saved = list((tmp_path / "reports").glob("T6_n3_*.json"))
        assert len(saved) == 1
