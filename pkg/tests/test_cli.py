import json
import os

import pytest

from workbench import catalog, cli


def test_catalog_contents():
    names = [e["name"] for e in catalog.list_examples()]
    assert len(names) >= 12 and len(set(names)) == len(names)
    for required in ["example-3.1-n2", "example-3.1-n3", "example-3.2", "example-3.3-n2",
                     "lemma-2.16-F-D6", "case1-D4", "B-lemma-2.7"] + \
            [f"lemma-2.11-case{i}" for i in range(1, 7)]:
        assert required in names


@pytest.mark.parametrize("name", [e["name"] for e in catalog.list_examples()])
def test_catalog_entry_passes_regression(name):
    cfg = catalog.get_example(name)
    report = cli.run(cfg)
    assert report["tasks"]["validate"]["valid"]
    res = cli.regression(cfg, report)
    assert res["pass"], res["diffs"]


def test_run_example31_report():
    report = cli.run(catalog.get_example("example-3.1-n2"))
    gens = {g["word"] for g in report["tasks"]["covariants"]["generators"]}
    assert gens == {"d^2", "u^2", "d*u*d*u", "u*d*u*d"}
    assert report["tasks"]["hdet"]["trivial"]
    assert report["tasks"]["pertinency"]["pty"]["pty_ge_2"] == "certified"


def test_run_case1_flags():
    p = cli.run(catalog.get_example("lemma-2.11-case1"))["tasks"]["pertinency"]
    assert p["pty"]["pty_eq_3"] == "certified" and p["isolated_singularity"]


def test_beta_zero_is_a_config_error():
    cfg = catalog.get_example("example-3.1-n2")
    cfg["algebra"] = {"family": "downup", "params": {"alpha": 1, "beta": 0}}
    with pytest.raises(cli.ConfigError, match="noetherian"):
        cli.run(cfg)


@pytest.mark.parametrize("mutate,where", [
    (lambda c: c.update(N=2), "N"),
    (lambda c: c.update(tasks=[]), "tasks"),
    (lambda c: c.update(tasks=["validate", "dance"]), "tasks[1]"),
    (lambda c: c["grading"].update(d="zz"), "grading.d"),
    (lambda c: c.update(group={"kind": "nonsense"}), "group"),
])
def test_config_errors_carry_location(mutate, where):
    cfg = catalog.get_example("example-3.1-n2")
    mutate(cfg)
    with pytest.raises(cli.ConfigError) as info:
        cli.run(cfg)
    assert info.value.location == where


def test_invalid_grading_is_a_config_error():
    cfg = catalog.get_example("example-3.1-n3")
    cfg["algebra"] = {"family": "downup", "params": {"alpha": 1, "beta": 1}}
    with pytest.raises(cli.ConfigError, match="homogeneous"):
        cli.run(cfg)


def test_regression_diffs():
    cfg = catalog.get_example("example-3.3-n2")
    report = cli.run(cfg)
    cfg["expected"]["hilbert"] = [1, 0, 2, 0, 6]
    res = cli.regression(cfg, report)
    assert not res["pass"]
    assert res["diffs"][0]["first_mismatch_degree"] == 4
    cfg["expected"] = {}
    assert cli.regression(cfg, report)["pass"]


def test_reports_are_deterministic():
    a = json.dumps(cli.run(catalog.get_example("case1-D6")), sort_keys=True)
    b = json.dumps(cli.run(catalog.get_example("case1-D6")), sort_keys=True)
    assert a == b


def test_main_exit_codes(tmp_path, capsys):
    assert cli.main(["examples"]) == 0
    assert "example-3.2" in capsys.readouterr().out
    out = tmp_path / "r.json"
    assert cli.main(["run", "example-3.3-n2", "--out", str(out)]) == 0
    for suffix in (".json", ".dims.csv", ".hilbert.png"):
        assert os.path.exists(str(out)[:-5] + suffix)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"algebra": {"family": "downup", "params": {"alpha": 0, "beta": 0}},
                               "group": {"kind": "cyclic", "n": 2},
                               "grading": {"d": "1", "u": "1"}}))
    assert cli.main(["run", str(bad)]) == 1
    cfg = catalog.get_example("example-3.2")
    cfg["expected"]["generators"] = ["d^4"]
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps(cfg))
    assert cli.main(["regress", str(wrong)]) == 3
    assert cli.main(["regress", "example-3.2"]) == 0


def test_examples_write(tmp_path):
    assert cli.main(["examples", "--write", str(tmp_path)]) == 0
    files = sorted(os.listdir(tmp_path))
    assert "example-3.2.json" in files
    cfg = json.loads((tmp_path / "example-3.2.json").read_text())
    assert cli.regression(cfg)["pass"]


def test_computation_error_exit_code(tmp_path):
    cfg = {"algebra": {"generators": ["x", "y"], "relations": ["yx - xy"]},
           "group": {"kind": "cyclic", "n": 2}, "grading": {"x": "1", "y": "0"},
           "tasks": ["validate", "hdet"], "N": 4}
    p = tmp_path / "c.json"
    p.write_text(json.dumps(cfg))
    # custom algebras have no closed-form codeterminant; reported, not fatal
    assert cli.main(["run", str(p)]) == 0
    cfg["memberships"] = [{"word": "x^9"}]
    cfg["tasks"] = ["memberships"]
    p.write_text(json.dumps(cfg))
    assert cli.main(["run", str(p)]) == 1


def test_bad_group_table_is_a_config_error():
    cfg = catalog.get_example("example-3.1-n2")
    cfg["group"] = {"kind": "table", "elements": ["a", "b"], "table": [[0, 1], [1, 1]]}
    with pytest.raises(cli.ConfigError):
        cli.run(cfg)


def test_task_failure_exit_code(monkeypatch):
    from workbench.errors import CompletionBudgetExceeded

    def boom(*args, **kwargs):
        raise CompletionBudgetExceeded("too many rules")

    monkeypatch.setitem(cli._TASKS, "hdet", boom)
    assert cli.main(["run", "example-3.2"]) == 2
