import json

import yaml

from scripts.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_analyze_identity(capsys):
    code, report = run_json(capsys, "analyze", "--named", "identity2")
    assert code == 0
    assert set(report) == {"command", "inputs", "results", "limits", "version"}
    res = report["results"]
    assert res["matrix"]["index"] == 1
    assert res["matrix"]["unimodular"] is True
    assert res["matrix"]["delta"] == 1
    assert res["pm"]["cols"] == 5
    assert res["pm"]["unimodular"] is False
    assert res["pm"]["delta"] is None
    assert res["pm"]["minor_pair"]["minor1"] == 1
    assert res["pm"]["minor_pair"]["minor2"] == 2


def test_analyze_rank_deficient_graph(capsys):
    code, report = run_json(capsys, "analyze", "--named", "k22")
    assert code == 0
    assert report["results"]["matrix"]["index"] == "infinite"
    assert "minor_pair" not in report["results"]["pm"]
    assert report["results"]["pm"]["unimodular"] is None


def test_gb_tie(capsys):
    code, report = run_json(capsys, "gb", "--named", "tie", "--order", "glex", "--verify")
    assert code == 0
    res = report["results"]
    assert res["size"] == 1
    assert res["groebner_basis"]["binomials"] == ["x1*x2*x6 - x3*x4*x5"]
    assert res["initial_ideal"] == ["x1*x2*x6"]
    assert res["squarefree"] is True
    assert res["verified"] is True


def test_gb_text_format(capsys):
    code, out = run(capsys, "gb", "--named", "tie", "--order", "glex", "--format", "text")
    assert code == 0
    assert out == "x1*x2*x6 - x3*x4*x5\n"


def test_gb_text_format_still_writes_report(capsys, tmp_path):
    out_path = tmp_path / "gb.json"
    code, out = run(capsys, "gb", "--named", "tie", "--format", "text", "-o", str(out_path))
    assert code == 0
    assert out == "x3*x4*x5 - x1*x2*x6\n"
    assert json.loads(out_path.read_text(encoding="utf-8"))["results"]["size"] == 1


def test_gb_center_smallest_needs_symmetric_kind(capsys):
    code, report = run_json(capsys, "gb", "--named", "tie", "--center-smallest")
    assert code == 2
    assert report["error"]["error"] == "InvalidInput"


def test_gb_budget_exhausted(capsys):
    code, report = run_json(capsys, "gb", "--named", "nine_edges", "--kind", "rho±", "--budget", "1")
    assert code == 3
    assert "partial" in report["error"]


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("CSC_TORIC__SPAIR_BUDGET", "1")
    code, _ = run(capsys, "gb", "--named", "nine_edges", "--kind", "rho±")
    assert code == 3


def test_budget_from_config_file(capsys, tmp_path):
    path = tmp_path / "cfg.yaml"
    path.write_text("toric:\n  spair_budget: 1\n", encoding="utf-8")
    code, _ = run(capsys, "gb", "--named", "nine_edges", "--kind", "rho±", "--config", str(path))
    assert code == 3


def test_graph_report_wheel(capsys):
    code, report = run_json(capsys, "graph-report", "--family", "wheel:6")
    assert code == 0
    res = report["results"]
    assert res["bipartite"] is False
    assert res["disjoint_odd_cycles"] is None
    assert res["bridged"] is True
    assert res["apex"] is None
    assert res["unimodular_A_G"] is True


def test_graph_report_two_triangles(capsys):
    _, report = run_json(capsys, "graph-report", "--named", "two_triangles")
    res = report["results"]
    assert res["disjoint_odd_cycles"]["cycle1"] == [1, 2, 3]
    assert res["disjoint_odd_cycles"]["cycle2"] == [4, 5, 6]
    assert res["unimodular_A_G"] is False


def test_graph_report_bipartite(capsys):
    _, report = run_json(capsys, "graph-report", "--named", "path4_bad_labels")
    res = report["results"]
    assert res["bipartite"] is True
    assert res["chordal_bipartite"] is True
    assert res["star_condition_violation"] == [1, 2, 1, 2]


def test_graph_file_input(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("1 2\n2 3\n1 3\n", encoding="utf-8")
    code, report = run_json(capsys, "graph-report", "--graph", str(path))
    assert code == 0
    assert report["inputs"]["graph"] == str(path)
    assert report["results"]["edges"] == 3


def test_hilbert_wheel(capsys):
    code, report = run_json(capsys, "hilbert", "--family", "wheel:4")
    assert code == 0
    res = report["results"]
    assert res["h_vector"] == [1, 8, 14, 8, 1]
    assert res["krull_dim"] == 5
    assert res["stabilized"] is True
    assert res["gorenstein_consistent"] is True


def test_hilbert_confirm_degrees(capsys):
    _, plain = run_json(capsys, "hilbert", "--family", "wheel:4")
    code, report = run_json(capsys, "hilbert", "--family", "wheel:4", "--confirm-degrees", "2")
    assert code == 0
    assert report["results"]["h_vector"] == plain["results"]["h_vector"]
    assert len(report["results"]["values"]) == len(plain["results"]["values"]) + 2
    assert report["limits"]["semigroup"]["confirm_degrees"] == 2


def test_normal_witness(capsys):
    code, report = run_json(capsys, "normal", "--named", "nonnormal_pm")
    assert code == 0
    res = report["results"]
    assert res["verdict"] == "nonnormal"
    assert res["witness"] == [1, -1, 1]
    assert res["degree"] == 1


def test_normal_two_triangles_reports_odd_cycle_vector(capsys):
    code, report = run_json(capsys, "normal", "--named", "two_triangles", "--bound", "3")
    assert code == 0
    res = report["results"]
    assert res["verdict"] == "nonnormal"
    assert res["degree"] == 3
    assert res["witness"] == [1, 1, 1, -1, -1, -1, 3]
    assert [1, 1, 1, -1, -1, -1, 3] in res["violations"]


def test_normal_plain(capsys):
    _, report = run_json(capsys, "normal", "--named", "nonnormal_pm", "--kind", "plain", "--bound", "3")
    assert report["results"] == {"verdict": "normal", "up_to": 3}
    assert report["limits"]["bound"] == 3


def test_fano_square(capsys):
    code, report = run_json(capsys, "fano", "--named", "square", "--triangulate")
    assert code == 0
    res = report["results"]
    assert res["gorenstein_fano"] is True
    assert res["origin_interior"] is True
    tri = res["triangulation"]
    assert sum(tri["volumes"]) == tri["normalized_volume"]


def test_fano_requires_symmetric_kind(capsys):
    code, _ = run(capsys, "fano", "--named", "square", "--kind", "plain")
    assert code == 2


def test_bipartite_gb_command(capsys):
    code, report = run_json(capsys, "bipartite-gb", "--named", "k22", "--verify")
    assert code == 0
    assert report["results"]["size"] == 10
    assert report["results"]["verified"] is True


def test_theorem42_alias(capsys):
    code, report = run_json(capsys, "theorem42", "--named", "k22", "--verify")
    assert code == 0
    assert report["command"] == "bipartite-gb"
    assert report["results"]["size"] == 10
    assert report["results"]["verified"] is True


def test_bipartite_gb_k23_is_reduced(capsys):
    code, report = run_json(capsys, "bipartite-gb", "--named", "k23", "--verify")
    assert code == 0
    assert report["results"]["size"] == 22
    assert report["results"]["verified"] is True


def test_bipartite_gb_rejects_star_violation(capsys):
    code, report = run_json(capsys, "bipartite-gb", "--named", "path4_bad_labels")
    assert code == 2
    assert report["error"]["details"]["hypothesis"] == "star_condition"


def test_split_apex_tie(capsys):
    code, report = run_json(capsys, "split-apex", "--named", "tie")
    assert code == 0
    res = report["results"]
    assert res["vertex"] == 5
    assert res["vertices"] == 6
    assert res["bipartite"] is True
    assert res["same_toric_ideal"] is True


def test_bad_matrix_file(capsys, tmp_path):
    path = tmp_path / "a.txt"
    path.write_text("2 2\n1 0\n", encoding="utf-8")
    code, report = run_json(capsys, "analyze", "--matrix", str(path))
    assert code == 2
    assert report["error"]["error"] == "ParseError"


def test_missing_file(capsys, tmp_path):
    code, report = run_json(capsys, "analyze", "--matrix", str(tmp_path / "nada.txt"))
    assert code == 2
    assert report["error"]["error"] == "FileNotFoundError"


def test_unknown_name_and_kind(capsys):
    assert run(capsys, "analyze", "--named", "nope")[0] == 2
    assert run(capsys, "gb", "--named", "identity2", "--kind", "mu")[0] == 2
    assert run(capsys, "gb", "--named", "identity2", "--kind", "xyz")[0] == 2


def test_pretty_and_output(capsys, tmp_path):
    out_path = tmp_path / "r" / "report.yaml"
    code, out = run(capsys, "analyze", "--named", "identity2", "--pretty", "-o", str(out_path))
    assert code == 0
    printed = yaml.safe_load(out)
    saved = yaml.safe_load(out_path.read_text(encoding="utf-8"))
    assert printed == saved
    assert printed["results"]["matrix"]["index"] == 1


def test_output_without_suffix_is_json(capsys, tmp_path):
    code, _ = run(capsys, "hilbert", "--named", "identity2", "-o", str(tmp_path / "h"))
    assert code == 0
    data = json.loads((tmp_path / "h.json").read_text(encoding="utf-8"))
    assert data["results"]["h_vector"] == [1, 2, 1]


def test_validate(capsys):
    code, out = run(capsys, "validate")
    assert code == 0
    assert "Resultado geral: OK" in out
    code, report = run_json(capsys, "validate", "-q")
    assert code == 0
    assert report["results"]["ok"] is True
