import json

import pytest

from cli import EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_analyze_halved_cube(capsys):
    code, report = run_json(capsys, "analyze", "21,10,3;1,6,15")
    assert code == EXIT_OK
    assert report["array"] == "{21,10,3;1,6,15}"
    assert report["q_polynomial_orderings"] == ["(0,1,2,3)", "(0,2,3,1)"]
    assert report["orderings"][0]["terwilliger"]["roots"] == ["-2", "-1", "3", "4"]
    assert report["orderings"][1]["terwilliger"]["roots"] == ["-6", "-2", "3", "19"]
    assert isinstance(report["elapsed_seconds"], float)


def test_analyze_single_ordering(capsys):
    code, report = run_json(capsys, "analyze", "{91,66,45;1,6,15}", "--ordering", "0")
    assert code == EXIT_OK
    assert len(report["orderings"]) == 1
    assert report["orderings"][0]["terwilliger"]["roots"] == ["-5/2", "-2", "10", "31/2"]


def test_analyze_json_is_stable(capsys):
    _, first = run_json(capsys, "analyze", "21,10,3;1,6,15")
    _, second = run_json(capsys, "analyze", "21,10,3;1,6,15")
    first.pop("elapsed_seconds"), second.pop("elapsed_seconds")
    assert first == second


def test_analyze_diameter_two(capsys):
    code, report = run_json(capsys, "analyze", "3,2;1,1")
    assert code == EXIT_INFEASIBLE
    assert "requires D >= 3" in report["error"]
    assert report["srg"] == ["10", "3", "0", "1"]


def test_analyze_infeasible(capsys):
    code, report = run_json(capsys, "analyze", "3,2;2,1")
    assert code == EXIT_INFEASIBLE
    assert report["feasible"] is False
    assert report["violations"]


def test_analyze_short_array_is_refused_on_diameter(capsys):
    code, report = run_json(capsys, "analyze", "3,2;1")
    assert code == EXIT_INFEASIBLE
    assert report["D"] == 2
    assert "requires D >= 3" in report["error"]
    assert "position 3" in report["parse_error"]


@pytest.mark.parametrize("text, position", [("3,x;1,1", 2), ("21,10,3;1,6", 7)])
def test_analyze_parse_error(capsys, text, position):
    code, out, err = run(capsys, "analyze", text)
    assert code == EXIT_USAGE
    assert f"position {position}" in err
    assert out == ""


def test_analyze_bad_ordering_index(capsys):
    code, _, err = run(capsys, "analyze", "21,10,3;1,6,15", "--ordering", "7")
    assert code == EXIT_USAGE
    assert "out of range" in err


def test_analyze_text_output(capsys):
    code, out, _ = run(capsys, "analyze", "21,10,3;1,6,15")
    assert code == EXIT_OK
    assert "field" in out and "orderings[0].terwilliger.roots" in out


def test_classical(capsys):
    code, report = run_json(capsys, "classical", "3", "1", "2", "7")
    assert code == EXIT_OK
    assert report["closed_form_roots"] == ["-2", "-1", "3", "4"]
    assert all(report["checks"].values())
    assert report["ordering"] == "(0,1,2,3)"


def test_classical_infeasible(capsys):
    code, _, err = run(capsys, "classical", "3", "1", "0", "0")
    assert code == EXIT_INFEASIBLE
    assert "infeasible" in err


@pytest.mark.parametrize("argv, array", [
    (("7", "7/2", "13/2", "3"), "{91,66,45;1,6,15}"),
    (("6", "5/2", "6", "3"), "{36,25,16;1,4,18}"),
])
def test_type2(capsys, argv, array):
    code, report = run_json(capsys, "type2", *argv)
    assert code == EXIT_OK
    assert report["array"] == array
    assert all(report["checks"].values())


def test_type2_small_diameter(capsys):
    code, _, _ = run(capsys, "type2", "6", "2", "3", "2")
    assert code == EXIT_INFEASIBLE


def test_pseudo_partition(capsys):
    code, report = run_json(capsys, "pseudo-partition", "2", "3", "1")
    assert code == EXIT_OK
    assert report["array"] == "{91,66,45;1,6,15}"
    assert report["screening"]["verdict"] == "folded-halved-cube"
    code, report = run_json(capsys, "pseudo-partition", "0", "3", "1")
    assert code == EXIT_OK
    assert report["array"] == "{7,6,5;1,2,3}"
    assert "type2" not in report


def test_screen_known(capsys):
    code, report = run_json(capsys, "screen-known")
    assert code == EXIT_OK
    assert [r["verdict"] for r in report["reports"]] == [
        "folded-halved-cube", "folded-halved-cube", "folded-halved-cube", "folded-Johnson",
    ]


def test_verify(capsys):
    code, report = run_json(capsys, "verify", "halved-cube", "7")
    assert code == EXIT_OK
    assert report["passed"] is True
    assert report["array"] == "{21,10,3;1,6,15}"
    assert [o["terwilliger"]["zeros"] for o in report["orderings"]] == [["-2", "3"], ["-2", "3"]]


def test_verify_diameter_two(capsys):
    code, report = run_json(capsys, "verify", "petersen")
    assert code == EXIT_OK
    assert all("terwilliger" not in o for o in report["orderings"])


def test_verify_too_large(capsys):
    code, _, err = run(capsys, "verify", "johnson", "30", "15")
    assert code == EXIT_USAGE
    assert "limit" in err


def test_config_overrides_vertex_cap(capsys, tmp_path):
    cfg = tmp_path / "settings.toml"
    cfg.write_text("[settings]\nmax_vertices = 5\n")
    code, _, _ = run(capsys, "verify", "petersen", "--config", str(cfg))
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "verify", "petersen", "--config", str(cfg), "--max-vertices", "10")
    assert code == EXIT_OK


def test_export_graph(capsys, tmp_path):
    code, out, _ = run(capsys, "export-graph", "petersen")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 15
    target = tmp_path / "petersen.txt"
    code, report = run_json(capsys, "export-graph", "petersen", "-o", str(target))
    assert code == EXIT_OK
    assert report["edges"] == 15
    assert len(target.read_text().splitlines()) == 15


def test_pdf_output(capsys, tmp_path):
    target = tmp_path / "report.pdf"
    code, _, _ = run(capsys, "classical", "3", "1", "2", "7", "--pdf", str(target))
    assert code == EXIT_OK
    assert target.read_bytes().startswith(b"%PDF")


def test_usage_errors(capsys):
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "verify", "moore")[0] == EXIT_USAGE
    assert run(capsys, "classical", "3", "1", "x", "7")[0] == EXIT_USAGE
