# Graph documents and the CLI: parsing diagnostics, reports, exit codes.

import json
import pathlib
import re

import pytest
from hypothesis import given, settings

from graphck import (
    DocumentError,
    Report,
    emit_graph_document,
    load_graph_file,
    parse_graph_document,
    run_command,
)
from graphck.cli_io import ClaimLine
from graphck.citations import known_tags

from helpers import g1, graphs, two_sinks

GRAPH_DIR = pathlib.Path(__file__).resolve().parent.parent / "scripts" / "graphs"


def doc_of(**kw):
    base = {"vertices": ["v", "w"],
            "edges": [{"id": "e", "src": "v", "dst": "w"}]}
    base.update(kw)
    return base


# --- document parsing --------------------------------------------------------------


def test_round_trip_fixed():
    for g in (g1(), two_sinks()):
        assert parse_graph_document(emit_graph_document(g)) == g


def test_round_trip_with_name_and_infinite_bundles():
    doc = {"name": "demo", "vertices": ["v", "w"],
           "edges": [{"id": "e", "src": "v", "dst": "w",
                      "cardinality": "aleph0"},
                     {"id": "f", "src": "v", "dst": "w",
                      "cardinality": "uncountable"},
                     {"id": "g", "src": "w", "dst": "w",
                      "cardinality": "finite:3"}]}
    g = parse_graph_document(doc)
    assert emit_graph_document(g, name="demo") == doc


@settings(max_examples=80)
@given(graphs(infinite_ok=True))
def test_round_trip_property(g):
    assert parse_graph_document(emit_graph_document(g)) == g


def test_default_cardinality_is_single_edge():
    g = parse_graph_document(doc_of())
    assert g.bundles[0].cardinality.encode() == "finite:1"


@pytest.mark.parametrize("doc,needle", [
    ([1, 2], "document root"),
    (doc_of(extra=1), "unknown document keys: extra"),
    (doc_of(name=7), "name: must be a string"),
    ({"edges": []}, "vertices: must be a list"),
    ({"vertices": "vw"}, "vertices: must be a list"),
    ({"vertices": ["v", ""]}, "vertices[1]: must be a nonempty string"),
    ({"vertices": ["v", "v"]}, "vertices[1]: duplicate vertex 'v'"),
    (doc_of(edges={}), "edges: must be a list"),
    (doc_of(edges=["e"]), "edges[0]: must be an object"),
    (doc_of(edges=[{"id": "e", "src": "v", "dst": "w", "flavor": 1}]),
     "edges[0]: unknown keys: flavor"),
    (doc_of(edges=[{"id": "", "src": "v", "dst": "w"}]),
     "edges[0].id: must be a nonempty string"),
    (doc_of(edges=[{"id": "e", "src": "v"}]),
     "edges[0].dst: must be a nonempty string"),
    (doc_of(edges=[{"id": "e", "src": "v", "dst": "w"},
                   {"id": "e", "src": "w", "dst": "v"}]),
     "edges[1].id: duplicate edge 'e'"),
    (doc_of(edges=[{"id": "e", "src": "zz", "dst": "w"}]),
     "edges[0].src: unknown vertex 'zz'"),
    (doc_of(edges=[{"id": "e", "src": "v", "dst": "zz"}]),
     "edges[0].dst: unknown vertex 'zz'"),
    (doc_of(edges=[{"id": "e", "src": "v", "dst": "w", "cardinality": 3}]),
     "edges[0].cardinality: must be a string"),
    (doc_of(edges=[{"id": "e", "src": "v", "dst": "w",
                    "cardinality": "finite:0"}]),
     "edges[0].cardinality:"),
])
def test_parse_diagnostics(doc, needle):
    with pytest.raises(DocumentError) as ei:
        parse_graph_document(doc)
    assert needle in str(ei.value)


def test_load_graph_file_errors(tmp_path):
    with pytest.raises(DocumentError, match="cannot read"):
        load_graph_file(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(DocumentError, match="invalid JSON"):
        load_graph_file(str(bad))


# --- reports and claim lines -----------------------------------------------------------


def test_claim_lines_reject_unknown_tags():
    with pytest.raises(KeyError):
        ClaimLine("text", "made-up-tag")


def test_report_render_shape():
    r = Report("analyze", "demo")
    r.say("plain fact")
    r.say("tagged fact", "af-iff-acyclic")
    text = r.render_text()
    lines = text.splitlines()
    assert lines[0] == "analyze: demo"
    assert lines[1] == "  plain fact  [computed]"
    assert lines[2] == "  tagged fact  [af-iff-acyclic]"


def test_every_rendered_claim_carries_a_registered_tag():
    code, text = run_command(["analyze", "--graph", str(GRAPH_DIR / "g1.json")])
    assert code == 0
    tags = set(known_tags())
    for line in text.splitlines()[1:]:
        m = re.fullmatch(r"  .*  \[([a-z0-9-]+)\]", line)
        assert m, line
        assert m.group(1) in tags


# --- run_command: answers ------------------------------------------------------------


def test_classify_g1_text():
    code, text = run_command(["classify", "--graph", str(GRAPH_DIR / "g1.json")])
    assert code == 0
    assert "UniqueIrrepCompacts dim=2" in text
    assert "[af-unique-irrep-compacts]" in text
    assert "simple: yes" in text


def test_classify_loop_text():
    code, text = run_command(["classify", "--graph", str(GRAPH_DIR / "loop.json")])
    assert code == 0
    assert "NotSimple" in text
    assert "exitless cycle" in text


def test_classify_family_unknown_depth():
    code, text = run_command(["classify", "--family", "forbidden_ladder_2_2",
                              "--depth", "4"])
    assert code == 0
    assert "UnknownAtDepth(4)" in text


def test_classify_constant_family_goes_finite():
    code, text = run_command(["classify", "--family", "rose2"])
    assert code == 0
    assert "family rose2 (constant)" in text
    assert "MultipleIrreps" in text


def test_bratteli_ladder2_json():
    code, text = run_command(["bratteli", "--family", "ladder2",
                              "--depth", "5", "--json"])
    assert code == 0
    obj = json.loads(text)
    assert obj["d"] == [1, 2, 4, 8, 16]
    assert obj["m"] == [2, 2, 2, 2]
    assert obj["limit"] == "UHF 2^infinity"
    assert obj["corner"] == "w_1"
    assert obj["kind"] == "corner"


def test_bratteli_embedding_flag():
    code, text = run_command(["bratteli", "--family", "ladder2", "--depth", "4",
                              "--verify-embedding", "--json"])
    assert code == 0
    assert json.loads(text)["embedding_ok"] is True


def test_bratteli_ray_compacts():
    code, text = run_command(["bratteli", "--family", "ray", "--depth", "6"])
    assert code == 0
    assert "limit: Compacts" in text
    assert "[multiplicity-one-chain-compacts]" in text


def test_analyze_uncountable_rose():
    code, text = run_command(["analyze", "--graph",
                              str(GRAPH_DIR / "uncountable_rose.json")])
    assert code == 0
    assert "row class: HasUncountableEmitter" in text
    assert "infinitely many" in text


def test_ideals_two_sinks():
    code, text = run_command(["ideals", "--graph",
                              str(GRAPH_DIR / "two_sinks.json"), "--json"])
    assert code == 0
    obj = json.loads(text)
    assert obj["sets"] == [[], ["w_1"], ["w_2"], ["v", "w_1", "w_2"]]


def test_ladder_subcommand():
    code, text = run_command(["ladder", "--family", "ladder2", "--depth", "5"])
    assert code == 0
    assert "doubled-path ladder length: 4" in text


def test_ck_text_report():
    code, text = run_command(["ck", "--graph", str(GRAPH_DIR / "g1.json")])
    assert code == 0
    assert "algebra dimension: 4" in text
    assert "blocks: w: M_2" in text
    assert "matches the imposed set: yes" in text


def test_ck_toeplitz_gaps():
    code, text = run_command(["ck", "--graph", str(GRAPH_DIR / "g1.json"),
                              "--relative", "none", "--json"])
    assert code == 0
    obj = json.loads(text)
    assert obj["dimension"] == 5
    assert obj["imposed"] == []
    assert obj["gaps"] == {"v": True}
    assert obj["relations_verified"] is True
    assert "blocks" not in obj


def test_corner_subcommand():
    code, text = run_command(["corner", "--graph",
                              str(GRAPH_DIR / "two_sinks.json"),
                              "--vertex", "v", "--json"])
    assert code == 0
    obj = json.loads(text)
    assert obj["dimension"] == 2 and obj["full"] is True


def test_family_list():
    code, text = run_command(["family", "--list"])
    assert code == 0
    for name in ("ladder<k>", "ray", "forbidden_ladder[_a_b]", "rose<n>",
                 "uncountable_rose", "aleph0_rose"):
        assert name in text


def test_family_stage_document_round_trips():
    code, text = run_command(["family", "ray", "--depth", "4"])
    assert code == 0
    # the trailer after the claims is the document itself
    start = text.index("{")
    doc = json.loads(text[start:])
    g = parse_graph_document(doc)
    assert len(g.vertices) == 4
    from graphck import ray_family
    assert g == ray_family().stage(4)


def test_restrict_out_file(tmp_path):
    out = tmp_path / "sub.json"
    code, text = run_command(["restrict", "--graph",
                              str(GRAPH_DIR / "two_sinks.json"),
                              "--vertex", "w_1", "--out", str(out)])
    assert code == 0
    g = load_graph_file(str(out))
    assert g.vertices == ("w_1",)
    assert "closure is saturated: yes" in text


def test_ck_export_writes_model(tmp_path):
    out = tmp_path / "model.json"
    code, _ = run_command(["ck", "--graph", str(GRAPH_DIR / "g1.json"),
                           "--export", str(out)])
    assert code == 0
    model = json.loads(out.read_text())
    assert model["basis"] == ["w", "e"]
    assert set(model["p"]) == {"v", "w"}
    assert model["s"]["e"] == [[1, 0, 1]]


def test_output_is_deterministic():
    argv = ["classify", "--graph", str(GRAPH_DIR / "two_sinks.json"), "--json"]
    a = run_command(argv)
    b = run_command(argv)
    assert a == b


# --- run_command: failures -------------------------------------------------------------


def test_missing_source_is_usage_error():
    code, text = run_command(["classify"])
    assert code == 2
    assert "pass --graph FILE or --family NAME" in text


def test_both_sources_is_usage_error():
    code, text = run_command(["classify", "--graph", "x.json",
                              "--family", "ray"])
    assert code == 2
    assert "only one of" in text


def test_unknown_family():
    code, text = run_command(["classify", "--family", "moebius"])
    assert code == 2
    assert "unknown family 'moebius'" in text


def test_unknown_subcommand():
    code, text = run_command(["frobnicate"])
    assert code == 2
    assert "invalid choice" in text


def test_ck_on_cyclic_graph_is_precondition_error():
    code, text = run_command(["ck", "--graph", str(GRAPH_DIR / "loop.json")])
    assert code == 3
    assert text == "error: cyclic graph: no finite-dimensional model"


def test_restrict_unknown_vertex():
    code, text = run_command(["restrict", "--graph",
                              str(GRAPH_DIR / "g1.json"), "--vertex", "zz"])
    assert code == 3
    assert "zz" in text


def test_ck_bad_relative_spec():
    code, text = run_command(["ck", "--graph", str(GRAPH_DIR / "g1.json"),
                              "--relative", "w"])
    assert code == 3
    assert "must name regular vertices" in text


def test_ideals_bound_exceeded():
    code, text = run_command(["ideals", "--graph",
                              str(GRAPH_DIR / "two_sinks.json"),
                              "--bound", "2"])
    assert code == 3
    assert "bound" in text


def test_malformed_graph_file(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text(json.dumps({"vertices": ["v"],
                             "edges": [{"id": "e", "src": "v", "dst": "zz"}]}))
    code, text = run_command(["analyze", "--graph", str(p)])
    assert code == 2
    assert "edges[0].dst: unknown vertex 'zz'" in text


def test_help_exits_zero():
    code, text = run_command(["--help"])
    assert code == 0
    assert text == ""


# --- batch mode -----------------------------------------------------------------------


def test_batch_over_directory(tmp_path):
    for name, g in (("a_first", g1()), ("b_second", two_sinks())):
        (tmp_path / f"{name}.json").write_text(
            json.dumps(emit_graph_document(g)))
    (tmp_path / "c_broken.json").write_text("{nope")
    code, text = run_command(["classify", "--batch", str(tmp_path), "--json"])
    assert code == 2  # worst per-file outcome wins
    objs = json.loads(text)
    assert [o["subject"].rsplit("/", 1)[-1] for o in objs] == \
        ["a_first.json", "b_second.json", "c_broken.json"]
    assert objs[0]["verdict"] == "UniqueIrrepCompacts"
    assert objs[1]["verdict"] == "NotSimple"
    assert objs[2]["command"] == "error"
    assert "invalid JSON" in objs[2]["error"]


def test_batch_explicit_files_keep_order(tmp_path):
    p1 = tmp_path / "z_late.json"
    p2 = tmp_path / "a_early.json"
    p1.write_text(json.dumps(emit_graph_document(g1())))
    p2.write_text(json.dumps(emit_graph_document(two_sinks())))
    code, text = run_command(["analyze", "--batch", str(p1), str(p2), "--json"])
    assert code == 0
    objs = json.loads(text)
    assert [o["subject"] for o in objs] == [str(p1), str(p2)]


def test_batch_empty_directory(tmp_path):
    code, text = run_command(["classify", "--batch", str(tmp_path)])
    assert code == 2
    assert "no .json documents" in text


def test_batch_reports_precondition_per_file(tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text(json.dumps({"vertices": [], "edges": []}))
    fine = tmp_path / "fine.json"
    fine.write_text(json.dumps(emit_graph_document(g1())))
    code, text = run_command(["classify", "--batch", str(empty), str(fine),
                              "--json"])
    assert code == 3
    objs = json.loads(text)
    assert objs[0]["command"] == "error"
    assert objs[1]["verdict"] == "UniqueIrrepCompacts"
