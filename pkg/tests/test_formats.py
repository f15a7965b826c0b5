import json
from fractions import Fraction

import pytest

from conftest import make_complex
from src.algebra.rings import ZZ_RING, MultivariatePolynomialRing, RationalPolynomialRing
from src.complexes.ideals import PrincipalIdeal
from src.complexes.simplex import Simplex
from src.exceptions import ComplexValidationError, NotPrimeError, ParseError, SemanticError, StepIndexError
from src.filtrations.ideal_chain import ideal_chain_filtration
from src.filtrations.stanley_reisner import stanley_reisner_filtration
from src.filtrations.wrs import wrs_filtration
from src.formats.complex_file import complex_to_dict, parse_complex, parse_filtration, read_complex, write_complex, write_filtration
from src.formats.report import format_table, report_json, write_report
from src.formats.text_files import parse_graph, parse_simplex_list
from src.formats.validators import validate_degree, validate_max_dim, validate_page, validate_power, validate_prime, validate_step

TRIANGLE_FILE = """{
  "ring": "int",
  "vertices": ["v0", "v1", "v2"],
  "simplices": [
    {"vertices": ["v0"], "weight": "1"},
    {"vertices": ["v1"], "weight": "1"},
    {"vertices": ["v2"], "weight": "1"},
    {"vertices": ["v0", "v1"], "weight": "4"},
    {"vertices": ["v1", "v2"], "weight": "4"},
    {"vertices": ["v0", "v2"], "weight": "4"}
  ]
}
"""


class TestComplexFiles:
    def test_parse(self, triangle_complex):
        assert parse_complex(TRIANGLE_FILE) == triangle_complex

    def test_integer_weights_are_accepted(self):
        K = parse_complex('{"ring": "int", "vertices": ["a"], "simplices": [{"vertices": ["a"], "weight": 3}]}')
        assert K.weight(Simplex((0,))) == 3

    def test_close_faces(self):
        text = '{"ring": "int", "vertices": ["a", "b", "c"], "simplices": [{"vertices": ["c", "a", "b"], "weight": "6"}]}'
        K = parse_complex(text, close=True)
        assert len(K) == 7
        assert K.weight(Simplex((0, 1))) == 1
        assert not parse_complex(text).is_closed()

    def test_polynomial_ring(self, poly_triangle):
        data = complex_to_dict(poly_triangle)
        assert data['ring'] == "poly"
        assert data['variables'] == ["x"]
        assert data['simplices'][-1]['weight'] == "x^2"
        assert parse_complex(write_complex(poly_triangle)) == poly_triangle

    def test_write_and_read(self, tmp_path, triangle_complex):
        path = tmp_path / "triangle.json"
        write_complex(triangle_complex, str(path))
        assert read_complex(str(path)) == triangle_complex

    def test_malformed_json_reports_position(self):
        text = '{"ring": "int",\n "vertices": ["a"],\n "simplices": [}'
        with pytest.raises(ParseError) as info:
            parse_complex(text, "bad.json")
        assert info.value.line == 3
        assert info.value.column == 16
        assert str(info.value).startswith("bad.json:3:16: ")

    @pytest.mark.parametrize("text", [
        '[]',
        '{"vertices": ["a"], "simplices": []}',
        '{"ring": "reals", "vertices": ["a"], "simplices": []}',
        '{"ring": "poly", "vertices": ["a"], "simplices": []}',
        '{"ring": "int", "vertices": ["a", "a"], "simplices": []}',
        '{"ring": "int", "vertices": ["a"], "simplices": [{"vertices": ["b"]}]}',
        '{"ring": "int", "vertices": ["a"], "simplices": [{"vertices": ["a"]}, {"vertices": ["a"]}]}',
        '{"ring": "int", "vertices": ["a"], "simplices": [{"vertices": ["a"], "weight": "two"}]}',
        '{"ring": "int", "vertices": ["a"], "simplices": [{"vertices": ["a"], "weight": true}]}',
        '{"ring": "poly", "variables": ["x"], "vertices": ["a"], "simplices": [{"vertices": ["a"], "weight": "y"}]}',
    ], ids=["array", "no-ring", "bad-ring", "no-variables", "repeated-label", "unknown-vertex", "duplicate", "bad-weight",
            "bool-weight", "undeclared-variable"])
    def test_malformed_records(self, text):
        with pytest.raises(ParseError):
            parse_complex(text)


class TestFiltrationFiles:
    def test_round_trip_keeps_thresholds(self, triangle_complex):
        F = wrs_filtration(triangle_complex)
        data = json.loads(write_filtration(F))
        assert data['num_steps'] == 3
        assert data['thresholds'] == ["1", "4"]
        assert parse_filtration(write_filtration(F)) == F

    def test_ideal_chain_keeps_step_ideals(self, triangle_complex):
        F = ideal_chain_filtration(triangle_complex, [[4]])
        text = write_filtration(F)
        assert json.loads(text)['step_ideals'] == [["1"], ["4"], []]
        parsed = parse_filtration(text)
        assert parsed == F
        assert parsed.step_ideals == [PrincipalIdeal(ZZ_RING, 1), PrincipalIdeal(ZZ_RING, 4), PrincipalIdeal(ZZ_RING, 0)]

    def test_stanley_reisner_keeps_step_ideals(self):
        ring = MultivariatePolynomialRing(["x", "y", "z"])
        K = make_complex(ring, ["x", "y", "z"], {
            ("x",): "1", ("y",): "1", ("z",): "1", ("x", "y"): "x*y*z", ("y", "z"): "y*z", ("x", "z"): "x*z",
        })
        text = write_filtration(stanley_reisner_filtration(K))
        assert json.loads(text)['step_ideals'] == [["x*y"], ["x*y*z"]]
        assert [ideal.monomials for ideal in parse_filtration(text).step_ideals] == [((1, 1, 0),), ((1, 1, 1),)]

    def test_step_ideals_must_match_steps(self, triangle_complex):
        data = json.loads(write_filtration(ideal_chain_filtration(triangle_complex, [[4]])))
        data['step_ideals'] = [["1"], ["4"]]
        with pytest.raises(ParseError):
            parse_filtration(json.dumps(data))
        data['step_ideals'] = [["1"], [4], []]
        with pytest.raises(ParseError):
            parse_filtration(json.dumps(data))

    def test_missing_birth(self):
        text = '{"ring": "int", "vertices": ["a"], "num_steps": 1, "simplices": [{"vertices": ["a"]}]}'
        with pytest.raises(ParseError):
            parse_filtration(text)

    @pytest.mark.parametrize("birth", ["true", "false", "1.0", '"0"'])
    def test_birth_must_be_an_integer(self, birth):
        text = '{"ring": "int", "vertices": ["a"], "num_steps": 2, "simplices": [{"vertices": ["a"], "birth": %s}]}' % birth
        with pytest.raises(ParseError):
            parse_filtration(text)

    def test_births_must_respect_faces(self):
        text = ('{"ring": "int", "vertices": ["a", "b"], "num_steps": 2, "simplices": ['
                '{"vertices": ["a"], "birth": 1}, {"vertices": ["b"], "birth": 0}, {"vertices": ["a", "b"], "birth": 0}]}')
        with pytest.raises(ComplexValidationError):
            parse_filtration(text)


class TestTextFiles:
    def test_graph(self):
        graph = parse_graph("# weighted triangle\na b 0.5\nb c 0.5  # tie\na c 0.9\nd\n")
        assert graph.labels == ["a", "b", "c", "d"]
        assert graph.edges[2] == ("a", "c", Fraction(9, 10))

    def test_graph_wrong_arity(self):
        with pytest.raises(ParseError) as info:
            parse_graph("a b 0.5\n  c d\n", "g.txt")
        assert (info.value.line, info.value.column) == (2, 3)

    def test_graph_bad_weight(self):
        with pytest.raises(ParseError) as info:
            parse_graph("a b x1\n")
        assert (info.value.line, info.value.column) == (1, 5)

    def test_graph_duplicate_edge(self):
        with pytest.raises(ParseError):
            parse_graph("a b 1\nb a 2\n")

    def test_simplex_list(self, triangle_complex):
        simplices = parse_simplex_list("v0 v1\n# arc\nv2 v1\n", triangle_complex)
        assert simplices == [Simplex((0, 1)), Simplex((1, 2))]

    def test_simplex_list_errors(self, triangle_complex):
        with pytest.raises(ParseError) as info:
            parse_simplex_list("v0\nv7\n", triangle_complex)
        assert info.value.line == 2
        with pytest.raises(ParseError):
            parse_simplex_list("v0 v1 v2\n", triangle_complex)


class TestValidators:
    def test_prime(self):
        assert validate_prime("7", ZZ_RING) == 7
        assert validate_prime(-3, ZZ_RING) == 3
        ring = RationalPolynomialRing("x")
        assert validate_prime("2*x + 2", ring) == ring.parse("x + 1")
        with pytest.raises(NotPrimeError):
            validate_prime(1, ZZ_RING)
        with pytest.raises(NotPrimeError):
            validate_prime("x^2 - 1", ring)

    def test_step(self, edge_into_triangle):
        validate_step(edge_into_triangle, 0, 1)
        with pytest.raises(StepIndexError):
            validate_step(edge_into_triangle, 1, 1)
        with pytest.raises(StepIndexError):
            validate_step(edge_into_triangle, 0, -1)

    def test_ranges(self):
        validate_degree(0)
        validate_page(1)
        validate_max_dim(0)
        validate_power(1)
        for check, value in [(validate_degree, -1), (validate_page, 0), (validate_max_dim, -2), (validate_power, 0)]:
            with pytest.raises(SemanticError):
                check(value)


class TestReports:
    def test_table(self):
        text = format_table(["k", "group"], [(0, "Z"), (1, "Z/2")])
        assert text.splitlines() == ["k  group", "-  -----", "0  Z", "1  Z/2"]

    def test_json_keeps_ring_elements_readable(self, poly_ring):
        text = report_json({'group': "Z ⊕ Z/4", 'order': poly_ring.parse("x^2")})
        data = json.loads(text)
        assert data == {'group': "Z ⊕ Z/4", 'order': "x^2"}
        assert "⊕" in text

    def test_write_report(self, tmp_path):
        path = tmp_path / "report.json"
        write_report({'command': 'homology'}, str(path))
        assert json.loads(path.read_text(encoding='utf-8')) == {'command': 'homology'}
        write_report({'command': 'homology'}, None)
