import json

from weylwords.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out) if out.strip() else None, err


def test_roots_window_example(capsys):
    code, data, _ = run_json(
        capsys, "roots", "--type", "A1", "--cutoff", "1"
    )
    assert code == 0
    assert data["type"] == "A1"
    window = data["window"]
    assert window["count"] == 4
    reals = [b for b in window["roots"] if b["classical"] is not None]
    assert len(reals) == 3


def test_roots_subsystem(capsys):
    code, data, _ = run_json(capsys, "roots", "--type", "A2", "--J", "1")
    assert code == 0
    assert data["subsystem_roots"] == [[-1, 0], [1, 0]]


def test_roots_bad_type_is_usage_error(capsys):
    code, _, err = run(capsys, "roots", "--type", "Z9")
    assert code == 2
    assert "error" in err


def test_missing_subcommand_is_usage_error(capsys):
    assert run(capsys, )[0] == 2


def test_weyl_inspector(capsys):
    code, data, _ = run_json(capsys, "weyl", "--type", "A2", "--word", "1,2,1")
    assert code == 0
    assert data["length"] == 3
    assert sorted(data["inversions"]) == [[0, 1], [1, 0], [1, 1]]


def test_biconvex_realize_and_roundtrip(capsys):
    param = json.dumps(
        {"J": [1], "K": [], "u": [], "y": {"lambda": [0], "wbar": []}}
    )
    code, view, _ = run_json(
        capsys, "biconvex", "realize", "--type", "A1", "--param", param,
        "--cutoff", "3",
    )
    assert code == 0
    assert view["tail"] == [[-1]]
    assert len(view["members"]) == 3

    code, back, _ = run_json(
        capsys, "biconvex", "parametrize", "--type", "A1", "--J", "1",
        "--view", json.dumps({k: view[k] for k in ("tail", "finite", "cutoff")}),
    )
    assert code == 0
    assert back == {"J": [1], "K": [], "u": [], "y": {"lambda": [0], "wbar": []}}


def test_biconvex_parametrize_rejects_non_biconvex(capsys):
    window = json.dumps(
        {
            "J": [1],
            "cutoff": 2,
            "elements": [{"level": 1, "classical": [-1]}],
            "tail": [[-1]],
        }
    )
    code, data, _ = run_json(
        capsys, "biconvex", "parametrize", "--type", "A1", "--window", window
    )
    assert code == 1
    assert data["biconvex"] is False


def test_biconvex_enumerate_example(capsys):
    code, data, _ = run_json(
        capsys, "biconvex", "enumerate", "--type", "A1", "--cutoff", "1",
        "--max-size", "1",
    )
    assert code == 0
    assert data["count"] == 3
    assert data["printed"] == [[], ["a1"], ["1d-a1"]]


def test_biconvex_enumerate_refuses_oversized(capsys):
    code, _, err = run(
        capsys, "biconvex", "enumerate", "--type", "C2", "--cutoff", "6",
        "--max-size", "2", "--window-limit", "24",
    )
    assert code == 2
    assert "window has" in err


def test_biconvex_classify_full_window(capsys):
    window = {
        "J": [1],
        "cutoff": 2,
        "elements": [
            {"level": 0, "classical": [1]},
            {"level": 1, "classical": [1]},
            {"level": 2, "classical": [1]},
            {"level": 1, "classical": [-1]},
            {"level": 2, "classical": [-1]},
            {"level": 1, "classical": None},
            {"level": 2, "classical": None},
        ],
        "tail": [[1], [-1]],
        "imaginary_tail": True,
    }
    code, data, _ = run_json(
        capsys, "biconvex", "classify", "--type", "A1", "--window",
        json.dumps(window),
    )
    assert code == 0
    assert data == {
        "biconvex": True,
        "case": "b",
        "element": {"lambda": [0], "wbar": []},
    }


def test_word_make_and_classify(capsys):
    code, data, _ = run_json(
        capsys, "word", "make", "--type", "A1", "--K", "", "--cutoff", "2"
    )
    assert code == 0
    assert data["period"] == [{"a": 1}, {"c": 1}]
    assert data["inversions"] == ["1d-a1", "2d-a1"]

    code, cls, _ = run_json(
        capsys, "word", "classify", "--type", "A1", "--word", json.dumps(
            {k: data[k] for k in ("J", "head", "period")}
        ),
    )
    assert code == 0
    assert cls["K"] == []
    assert cls["param"]["u"] == []


def test_word_act_and_equiv(capsys):
    base = {"J": [1], "head": [], "period": [{"a": 1}, {"c": 1}]}
    code, acted, _ = run_json(
        capsys, "word", "act", "--type", "A1", "--word", json.dumps(base),
        "--x", json.dumps({"lambda": [0], "wbar": [1]}),
    )
    assert code == 0

    other = {"J": [1], "head": [], "period": [{"c": 1}, {"a": 1}]}
    code, data, _ = run_json(
        capsys, "word", "equiv", "--type", "A1", "--word", json.dumps(acted),
        "--word2", json.dumps(other),
    )
    assert code == 0 and data["equivalent"] is True

    code, data, _ = run_json(
        capsys, "word", "equiv", "--type", "A1", "--word", json.dumps(base),
        "--word2", json.dumps(other),
    )
    assert code == 0 and data["equivalent"] is False


def test_word_make_requires_proper_k(capsys):
    code, _, err = run(capsys, "word", "make", "--type", "A1", "--K", "1")
    assert code == 2
    assert "proper" in err


def test_word_usage_errors(capsys):
    base = json.dumps({"J": [1], "head": [], "period": [{"a": 1}, {"c": 1}]})
    assert run(capsys, "word", "act", "--type", "A1", "--word", base)[0] == 2
    assert run(capsys, "word", "equiv", "--type", "A1", "--word", base)[0] == 2
    assert run(capsys, "word", "classify", "--type", "A1")[0] == 2
    bad_letter = json.dumps({"J": [1], "head": [], "period": [{"z": 1}]})
    assert run(capsys, "word", "classify", "--type", "A1", "--word", bad_letter)[0] == 2
    code, _, err = run(
        capsys, "biconvex", "parametrize", "--type", "A1", "--J", "1",
        "--view", "{not json",
    )
    assert code == 2 and "bad view JSON" in err


def test_word_make_from_param(capsys):
    param = {
        "J": [1, 2],
        "K": [1],
        "u": [2],
        "y": {"lambda": [0, 0], "wbar": []},
    }
    code, data, _ = run_json(
        capsys, "word", "make", "--type", "A2", "--param", json.dumps(param),
        "--cutoff", "1",
    )
    assert code == 0
    code, cls, _ = run_json(
        capsys, "word", "classify", "--type", "A2", "--word", json.dumps(
            {k: data[k] for k in ("J", "head", "period")}
        ),
    )
    assert code == 0
    assert cls["param"] == param


def test_biconvex_realize_default_cutoff(capsys):
    param = json.dumps(
        {"J": [1], "K": [], "u": [], "y": {"lambda": [0], "wbar": []}}
    )
    code, view, _ = run_json(
        capsys, "biconvex", "realize", "--type", "A1", "--param", param
    )
    assert code == 0
    assert view["cutoff"] == 3


def test_verify_out_file(tmp_path, capsys):
    target = tmp_path / "verify.json"
    code, out, err = run(
        capsys, "verify", "length", "--type", "A1", "--len", "3",
        "--out", str(target),
    )
    assert code == 0
    assert json.loads(target.read_text())["passed"] is True
    assert "[pass]" in err


def test_verify_suite_passes(capsys):
    code, data, err = run_json(
        capsys, "verify", "length", "--type", "A1", "--len", "4"
    )
    assert code == 0
    assert data["passed"] is True
    assert "[pass] length" in err


def test_verify_unknown_suite_is_usage_error(capsys):
    assert run(capsys, "verify", "nonsense")[0] == 2


def test_table_format(capsys):
    code, out, _ = run(
        capsys, "--format", "table", "roots", "--type", "A1"
    )
    assert code == 0
    assert "type: A1" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "roots.json"
    code, out, _ = run(
        capsys, "--out", str(target), "roots", "--type", "A1"
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["type"] == "A1"
