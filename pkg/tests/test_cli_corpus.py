import io
import json

import pytest

from kalliance.cli import main
from kalliance.corpus import (
    CorpusSpec,
    GraphSpec,
    default_corpus_spec,
    load_corpus_spec,
    run_corpus,
)
from kalliance.graphs import from_edge_list, generate, to_edge_list
from kalliance.solver import solve


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


SMALL_SPEC = CorpusSpec(
    graphs=(
        GraphSpec.of("complete", n=4),
        GraphSpec.of("hypercube", d=2),
        GraphSpec.of("star", n=5),
        GraphSpec.of("random_tree", n=7, seed=1),
        GraphSpec.of("random_cubic", n=6, seed=0),
    ),
    forest_identity_samples=50,
    shrink_samples=25,
)


# ---------------------------------------------------------------------------
# CLI subcommands
# ---------------------------------------------------------------------------

def test_gen_writes_edge_list(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "gen", "--family", "hypercube", "--d", "3")
    assert code == 0
    assert from_edge_list(out) == generate("hypercube", d=3)

    target = tmp_path / "q3.el"
    code, _, _ = run_cli(capsys, "gen", "--family", "hypercube", "--d", "3", "-o", str(target))
    assert code == 0
    assert from_edge_list(target.read_text()) == generate("hypercube", d=3)


def test_gen_bad_params_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "gen", "--family", "random_cubic", "--n", "7")
    assert code == 2
    assert "error" in err


def test_solve_round_trip(capsys, tmp_path):
    g = generate("petersen")
    path = tmp_path / "pet.el"
    path.write_text(to_edge_list(g))
    code, out, _ = run_cli(capsys, "solve", "--graph", str(path), "--target", "gka", "--k", "1")
    assert code == 0
    payload = json.loads(out)
    direct = solve(g, "gamma_k_a", 1)
    assert payload["status"] == "found"
    assert payload["value"] == direct.value
    assert tuple(payload["witness"]) == direct.witness_members()
    assert set(payload["stats"]) == {"subsets", "prunes", "millis"}


def test_solve_reads_stdin(capsys, monkeypatch):
    text = to_edge_list(generate("hypercube", d=3))
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code, out, _ = run_cli(capsys, "solve", "--graph", "-", "--target", "gka", "--k", "0")
    assert code == 0
    assert json.loads(out)["value"] == 4


def test_solve_flags_do_not_change_results(capsys, tmp_path):
    path = tmp_path / "pet.el"
    path.write_text(to_edge_list(generate("petersen")))
    base = ["solve", "--graph", str(path), "--target", "gkca", "--k", "0"]
    code, out, _ = run_cli(capsys, *base)
    reference = json.loads(out)
    for extra in (["--no-prune"], ["--workers", "3"], ["--no-prune", "--workers", "2"]):
        code, out, _ = run_cli(capsys, *base, *extra)
        assert code == 0
        payload = json.loads(out)
        assert (payload["value"], payload["witness"]) == (
            reference["value"],
            reference["witness"],
        )


def test_solve_nonexistence_status(capsys, tmp_path):
    path = tmp_path / "star.el"
    path.write_text(to_edge_list(generate("star", n=5)))
    code, out, _ = run_cli(capsys, "solve", "--graph", str(path), "--target", "gka", "--k", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "none_exists"
    assert "value" not in payload and "witness" not in payload


def test_solve_k_validation(capsys, tmp_path):
    path = tmp_path / "g.el"
    path.write_text("n 2\n0 1\n")
    assert run_cli(capsys, "solve", "--graph", str(path), "--target", "gka")[0] == 2
    assert run_cli(capsys, "solve", "--graph", str(path), "--target", "gamma", "--k", "0")[0] == 2


def test_solve_warns_on_out_of_range_k(capsys, tmp_path):
    path = tmp_path / "g.el"
    path.write_text("n 2\n0 1\n")
    code, _, err = run_cli(capsys, "solve", "--graph", str(path), "--target", "gka", "--k", "9")
    assert code == 0
    assert "warning" in err


def test_missing_file_is_exit_3(capsys):
    assert run_cli(capsys, "solve", "--graph", "/nonexistent.el", "--target", "gamma")[0] == 3


def test_parse_error_is_exit_3(capsys, tmp_path):
    path = tmp_path / "bad.el"
    path.write_text("0 0\n")
    assert run_cli(capsys, "solve", "--graph", str(path), "--target", "gamma")[0] == 3


def test_unknown_subcommand_is_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_bounds_array_output(capsys, tmp_path):
    path = tmp_path / "q3.el"
    path.write_text(to_edge_list(generate("hypercube", d=3)))
    code, out, _ = run_cli(
        capsys, "bounds", "--graph", str(path), "--k", "0", "--target", "gka",
        "--assume-planar",
    )
    assert code == 0
    reports = json.loads(out)
    assert isinstance(reports, list)
    by_name = {r["name"]: r for r in reports}
    assert by_name["lower_maxdeg"]["value"] == 4
    assert by_name["planar_graph_lower"]["value"] == 4
    assert all(
        set(r) == {"name", "anchor", "kind", "target", "k", "value", "applicable", "reason"}
        for r in reports
    )


def test_bounds_with_set_certifies_and_adds_face_bound(capsys, tmp_path):
    path = tmp_path / "k3.el"
    path.write_text(to_edge_list(generate("complete", n=3)))
    code, out, _ = run_cli(
        capsys, "bounds", "--graph", str(path), "--k", "2", "--target", "gka",
        "--assume-planar", "--set", "0,1,2",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["certificate"]["satisfied"] is True
    assert payload["components"] == 1
    by_name = {r["name"]: r for r in payload["reports"]}
    assert by_name["faces_lower"]["value"] == 3


def test_oracle_check_exits_clean(capsys, tmp_path):
    path = tmp_path / "pet.el"
    path.write_text(to_edge_list(generate("petersen")))
    code, _, err = run_cli(
        capsys, "oracle-check", "--graph", str(path), "--kmin", "-3", "--kmax", "3"
    )
    assert code == 0
    assert "0 mismatches" in err


def test_paper_suite_passes(capsys):
    code, out, _ = run_cli(capsys, "paper-suite")
    assert code == 0
    assert "FAIL" not in out


# ---------------------------------------------------------------------------
# Corpus machinery
# ---------------------------------------------------------------------------

def test_small_corpus_has_no_violations():
    result = run_corpus(SMALL_SPEC)
    assert result.total_violations() == 0
    assert result.checks_run["upper_witness"] > 0
    assert result.checks_run["cubic_augment"] == 2  # K_4 and the random cubic graph
    assert result.checks_run["forest_identity"] == 50
    assert result.checks_run["shrink_samples"] == 25


def test_corpus_csv_is_deterministic_across_workers():
    first = run_corpus(SMALL_SPEC).to_csv()
    second = run_corpus(SMALL_SPEC).to_csv()
    parallel = run_corpus(SMALL_SPEC, workers=3).to_csv()
    assert first == second == parallel
    header = first.splitlines()[0]
    assert header == "graph,family,n,m,k,target,status,value,best_lower,best_upper,violations"


def test_corpus_spec_json_round_trip():
    text = json.dumps(SMALL_SPEC.to_json_dict())
    again = load_corpus_spec(text)
    assert again == SMALL_SPEC


def test_empty_corpus_spec():
    result = run_corpus(CorpusSpec(graphs=()))
    assert result.records == []
    assert result.total_violations() == 0
    assert result.to_csv().count("\n") == 1  # header only


def test_oversize_corpus_graph_is_recorded_not_fatal():
    spec = CorpusSpec(
        graphs=(GraphSpec.of("complete", n=30),),
        k_policy=(0, 0),
        forest_identity_samples=0,
        shrink_samples=0,
    )
    result = run_corpus(spec)
    assert result.total_violations() == 0
    statuses = {e.status for r in result.records for e in r.entries}
    assert statuses == {"resource_error"}


def test_certify_cli_small_spec(capsys, tmp_path):
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps(SMALL_SPEC.to_json_dict()))
    csv_path = tmp_path / "out.csv"
    json_path = tmp_path / "out.json"
    code, _, err = run_cli(
        capsys, "certify", "--corpus", str(spec_path),
        "-o", str(csv_path), "--json", str(json_path),
    )
    assert code == 0
    assert "0 violations" in err
    assert csv_path.read_text().startswith("graph,family,n,m,k,target,")
    report = json.loads(json_path.read_text())
    assert report["total_violations"] == 0


def test_certify_cli_default_corpus(capsys, tmp_path):
    csv_path = tmp_path / "default.csv"
    code, _, err = run_cli(capsys, "certify", "--corpus", "default", "-o", str(csv_path))
    assert code == 0
    assert "0 violations" in err
    assert csv_path.read_text().count("\n") > 1000


def test_certify_cli_empty_spec_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps({"graphs": []})))
    code, out, err = run_cli(capsys, "certify", "--corpus", "-")
    assert code == 0
    assert out.count("\n") == 1


def test_default_spec_composition():
    spec = default_corpus_spec()
    families = [gs.family for gs in spec.graphs]
    assert families.count("random_tree") == 50
    assert families.count("random_cubic") == 30
    assert families.count("random_graph") == 50
    assert "petersen" in families and "hypercube" in families
    for gs in spec.graphs:
        params = dict(gs.params)
        if gs.family == "random_tree":
            assert params["n"] <= 12
        elif gs.family == "random_cubic":
            assert params["n"] <= 14
        elif gs.family == "random_graph":
            assert params["n"] <= 11


def test_gen_solve_pipeline_matches_library(capsys):
    code, out, _ = run_cli(capsys, "gen", "--family", "complete", "--n", "6")
    assert code == 0
    g = from_edge_list(out)
    assert solve(g, "gamma_k_a", 1).value == solve(generate("complete", n=6), "gamma_k_a", 1).value
