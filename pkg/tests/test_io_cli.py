import json

import pytest

from slidepol import UnitIdealError, grid_ring, make_ring, parse_ideal, render_ideal
from slidepol.cli import main
from slidepol.ideal_io import (
    ParseError,
    document_to_ideal,
    dumps_document,
    ideal_to_document,
    loads_document,
)


class TestGrammar:
    def test_worked_example_input(self, r4, example_ideal):
        assert parse_ideal("x*y*z, x*w, y*w", r4) == example_ideal

    def test_exponents(self, r4):
        ideal = parse_ideal("x^2*y*z, x^2*w, y*w", r4)
        assert (2, 1, 1, 0) in ideal.gens

    def test_whitespace_ignored(self, r2):
        assert parse_ideal(" x ^2 ,\n x * y ", r2) == parse_ideal("x^2, x*y", r2)

    def test_grid_variables(self):
        ring = grid_ring(("x", "y"), (2, 1))
        ideal = parse_ideal("x[1]*x[2], y[1]", ring)
        assert ideal.gens == ((0, 0, 1), (1, 1, 0))

    def test_zero_ideal(self, r2):
        assert parse_ideal("0", r2).is_zero
        assert parse_ideal("   ", r2).is_zero

    def test_round_trip(self, r4):
        for text in ("x*y*z, x*w, y*w", "x^2*w, y*w", "0"):
            ideal = parse_ideal(text, r4)
            assert parse_ideal(render_ideal(ideal), r4) == ideal

    def test_render_is_canonical(self, r2):
        ideal = parse_ideal("y^2, x", r2)
        assert render_ideal(ideal) == render_ideal(parse_ideal(render_ideal(ideal), r2))

    def test_unknown_variable_position(self, r2):
        with pytest.raises(ParseError) as err:
            parse_ideal("x*q", r2)
        assert err.value.line == 1 and err.value.col == 3

    def test_syntax_error_position(self, r2):
        with pytest.raises(ParseError) as err:
            parse_ideal("x^", r2)
        assert err.value.col == 3

    def test_multiline_error_position(self, r2):
        with pytest.raises(ParseError) as err:
            parse_ideal("x,\n y^", r2)
        assert err.value.line == 2

    def test_unit_generator_rejected(self, r2):
        with pytest.raises(UnitIdealError):
            parse_ideal("1", r2)

    def test_repeated_variable_accumulates(self, r2):
        assert parse_ideal("x*x", r2).gens == ((2, 0),)


class TestDocuments:
    def test_byte_identical_round_trip(self, r4):
        ideal = parse_ideal("x^2*y*z, x^2*w, y*w", r4)
        doc = ideal_to_document(ideal, (2, 1, 1, 1))
        blob = dumps_document(doc)
        ideal2, a2 = document_to_ideal(loads_document(blob))
        assert ideal2 == ideal and a2 == (2, 1, 1, 1)
        assert dumps_document(ideal_to_document(ideal2, a2)) == blob

    def test_arrays_beat_strings(self, r2):
        doc = {"vars": ["x", "y"], "gens": [[2, 0], "y"]}
        ideal, _ = document_to_ideal(doc)
        assert ideal == parse_ideal("x^2", make_ring(("x", "y")))

    def test_string_gens_accepted(self):
        doc = {"vars": ["x", "y"], "gens": ["x^2", "x*y"]}
        ideal, _ = document_to_ideal(doc)
        assert ideal == parse_ideal("x^2, x*y", make_ring(("x", "y")))

    def test_grid_document(self):
        ring = grid_ring(("x", "y"), (2, 1))
        ideal = parse_ideal("x[1]*x[2], y[1]", ring)
        doc = ideal_to_document(ideal)
        assert doc["grid"] == [2, 1]
        back, _ = document_to_ideal(doc)
        assert back == ideal


class TestCli:
    def test_slide_text(self, capsys):
        code = main(["slide", "--vars", "x,y,z,w", "--gens", "x*y*z, x*w, y*w", "--i", "1", "--j", "1"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "y*w, x^2*w, x^2*y*z"

    def test_dual_json(self, capsys):
        code = main([
            "--format", "json", "dual", "--vars", "x,y,z,w",
            "--gens", "x*y*z, x*w, y*w",
        ])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["gens_text"] == "z*w, y*w, x*w, x*y"

    def test_betti_json(self, capsys):
        code = main([
            "--format", "json", "betti", "--vars", "x,y", "--gens", "x, y",
            "--module", "ideal",
        ])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["by_index"] == {"0": 2, "1": 1}

    def test_props_and_sdepth(self, capsys):
        assert main(["props", "--vars", "x,y", "--gens", "x^2, y^2"]) == 0
        out = capsys.readouterr().out
        assert "cohen_macaulay: True" in out
        assert main(["sdepth", "--vars", "x,y", "--gens", "x, y", "--module", "ideal"]) == 0
        assert "sdepth: 1" in capsys.readouterr().out

    def test_bm_certify(self, capsys):
        code = main([
            "--format", "json", "bm", "--vars", "x,y,z,w",
            "--gens", "x*y*z, x*w, y*w", "--certify",
        ])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["certificate"]["verdict"] is True
        assert doc["certificate"]["dimension"] == 2

    def test_contract_inverts_slide(self, capsys):
        assert main(["contract", "--vars", "x,y,z,w", "--gens", "x^2*y*z, x^2*w, y*w",
                     "--i", "1", "--j", "1"]) == 0
        assert capsys.readouterr().out.strip() == "y*w, x*w, x*y*z"

    def test_polarize_and_reversed(self, capsys):
        assert main(["polarize", "--vars", "x,y", "--gens", "x^2, y", "--a", "2,3"]) == 0
        assert capsys.readouterr().out.strip() == "y[1], x[1]*x[2]"
        assert main(["polarize", "--vars", "x,y", "--gens", "x^2, y", "--a", "2,3",
                     "--reversed"]) == 0
        assert capsys.readouterr().out.strip() == "y[3], x[1]*x[2]"

    def test_depolarize(self, capsys):
        assert main(["depolarize", "--vars", "x,y", "--grid", "2,3",
                     "--gens", "x[1]*x[2], y[1]"]) == 0
        assert capsys.readouterr().out.strip() == "y, x^2"

    def test_inflate(self, capsys):
        assert main(["inflate", "--vars", "x,y,z,w", "--gens", "x*y*z, x*w, y*w",
                     "--i", "1"]) == 0
        out = capsys.readouterr().out.strip()
        assert out == "y[1]*w[1], x[1]*x[2]*w[1], x[1]*x[2]*y[1]*z[1]"

    def test_ass_renders_names(self, capsys):
        assert main(["ass", "--vars", "x,y", "--gens", "x^2, x*y"]) == 0
        out = capsys.readouterr().out
        assert "['x']" in out and "['x', 'y']" in out

    def test_pairs_summary(self, capsys):
        assert main(["--format", "json", "pairs", "--vars", "x,y", "--gens", "x^2, x*y"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["adeg"] == 2 and doc["deg"] == 1 and doc["dim"] == 1

    def test_depth_and_dim_commands(self, capsys):
        for cmd in ("depth", "dim"):
            assert main([cmd, "--vars", "x,y,z", "--gens", "x*y, x*z"]) == 0
            out = capsys.readouterr().out
            assert "depth: 1" in out and "dim: 2" in out

    def test_linquot_witness(self, capsys):
        assert main(["--format", "json", "linquot", "--vars", "x,y",
                     "--gens", "x^2, x*y, y^2"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["linear_quotients"] is True
        assert len(doc["order"]) == 3

    def test_betti_char_flag(self, capsys):
        assert main(["--format", "json", "betti", "--vars", "x,y,z",
                     "--gens", "x*y, y*z, x*z", "--char", "2"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["by_index"] == {"0": 1, "1": 3, "2": 2}

    def test_compress_script(self, capsys):
        code = main(["--format", "json", "compress", "--vars", "x,y", "--gens", "x^3, x^2*y, y^3"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["gens_text"] == "y^2, x*y, x^2"
        assert sorted(map(tuple, doc["script"])) == [(1, 1), (2, 2)]

    def test_ideal_file_input(self, tmp_path, capsys):
        path = tmp_path / "ideal.json"
        path.write_text(dumps_document({"vars": ["x", "y"], "gens": [[1, 1]], "a": [1, 1]}))
        assert main(["dual", "--ideal", str(path)]) == 0
        assert capsys.readouterr().out.strip() == "y, x"

    def test_usage_error_exit_code(self, capsys):
        assert main(["slide", "--vars", "x,y", "--i", "1", "--j", "1"]) == 2
        assert main(["dual", "--vars", "x,y", "--gens", "x*q"]) == 2

    def test_unit_ideal_exit_code(self, capsys):
        assert main(["dual", "--vars", "x,y", "--gens", "1"]) == 2

    def test_cap_exit_code(self, capsys):
        assert main(["dual", "--vars", "x,y", "--gens", "x*y", "--a", "2000,2000"]) == 3

    def test_verify_golden(self, capsys):
        assert main(["verify", "--suite", "golden"]) == 0
        assert "golden: ok" in capsys.readouterr().out

    def test_verify_unknown_suite(self, capsys):
        assert main(["verify", "--suite", "nope"]) == 2

    def test_verify_json_report_fields(self, capsys):
        assert main(["--format", "json", "verify", "--suite", "compress_roundtrip",
                     "--trials", "5", "--seed", "3"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["ok"] is True
        assert doc["version"]
        assert doc["config"]["seed"] == 3
        assert doc["completed"] == 5

    def test_verify_deterministic(self, capsys):
        args = ["--format", "json", "verify", "--suite", "dual_slide", "--trials", "8", "--seed", "5"]
        assert main(args) == 0
        first = json.loads(capsys.readouterr().out)
        assert main(args) == 0
        second = json.loads(capsys.readouterr().out)
        first.pop("elapsed_s")
        second.pop("elapsed_s")
        assert first == second
