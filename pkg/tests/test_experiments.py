import io
import json
import subprocess
import sys

import pytest

from ffmult.errors import BudgetError, ConfigError
from ffmult.experiments import (list_builtins, run_experiment, validate_config)


def decay_config(**over):
    cfg = {
        "kind": "decay-table",
        "field": {"p": 2, "r": 1},
        "seed": 4,
        "n": {"start": 4, "stop": 7},
        "function": {"kind": "random", "values": "pm1"},
        "phase": {"terms": [{"coef": 1, "factors": [[1, 0, 1, 0, 1, 1, 1],
                                                    [0, 1, 1, 1, 0, 0, 1]]}]},
    }
    cfg.update(over)
    return cfg


def test_minimal_valid_config_normalizes():
    cfg = validate_config(decay_config())
    assert cfg.kind == "decay-table"
    assert cfg.budget == 2_000_000 and cfg.domain == "all"
    assert cfg.n_start == 4 and cfg.n_stop == 7


def test_unknown_key_rejected():
    with pytest.raises(ConfigError) as e:
        validate_config({"kind": "tk-check", "fieldd": {"p": 2},
                         "field": {"p": 2}, "n": {"start": 3},
                         "tk": {"W": 1, "H": 3}})
    assert any("fieldd" in p for p in e.value.problems)


def test_all_violations_reported_at_once():
    with pytest.raises(ConfigError) as e:
        validate_config({"kind": "nope", "field": {"p": 9}, "n": {"start": 0},
                         "domain": "everything"})
    text = "\n".join(e.value.problems)
    assert "kind" in text and "field.p" in text and "n.start" in text and "domain" in text
    assert len(e.value.problems) >= 4


def test_missing_seed_for_random_function():
    cfg = decay_config()
    del cfg["seed"]
    with pytest.raises(ConfigError) as e:
        validate_config(cfg)
    assert any("seed" in p for p in e.value.problems)


def test_budget_overrun_cites_cost():
    cfg = {
        "kind": "gowers-decay", "field": {"p": 2, "r": 1},
        "n": {"start": 12, "stop": 12},
        "function": {"kind": "builtin", "name": "one"},
        "gowers": {"k": 3},
    }
    with pytest.raises(ConfigError) as e:
        validate_config(cfg)
    assert any(p.startswith("budget:") and "n=12" in p for p in e.value.problems)


def test_run_decay_table_and_reproducibility():
    r1 = run_experiment(decay_config())
    r2 = run_experiment(decay_config())
    assert r1.rows == r2.rows
    assert [row[0] for row in r1.rows] == [4, 5, 6, 7]
    assert all(len(row) == len(r1.columns) for row in r1.rows)


def test_csv_stream_has_versioned_schema_and_rows():
    buf = io.StringIO()
    run_experiment(decay_config(), stream=buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "# ffmult-experiment schema=decay-table/v1"
    assert any(line.startswith("# columns=n,abs_mean,re,im,count") for line in lines)
    data = [line for line in lines if not line.startswith("#")]
    assert len(data) == 4
    assert data[0].split(",")[0] == "4"


def test_distance_growth_is_nondecreasing():
    cfg = {
        "kind": "distance-growth", "field": {"p": 2, "r": 1},
        "n": {"start": 1, "stop": 8},
        "function": {"kind": "builtin", "name": "moebius"},
        "hayes": {},
    }
    rows = run_experiment(cfg).rows
    vals = [row[1] for row in rows]
    assert all(a <= b + 1e-15 for a, b in zip(vals, vals[1:]))


def test_gowers_ap_katai_tk_kinds_run():
    base = {"field": {"p": 3, "r": 1}, "n": {"start": 2, "stop": 3},
            "function": {"kind": "builtin", "name": "liouville"}}
    g = run_experiment({**base, "kind": "gowers-decay", "gowers": {"k": 2}})
    assert len(g.rows) == 2 and all(v[1] >= 0 for v in g.rows)
    a = run_experiment({"kind": "ap-decay", "field": {"p": 5, "r": 1},
                        "n": {"start": 2, "stop": 2},
                        "function": {"kind": "builtin", "name": "liouville"},
                        "ap": {"k": 3}})
    assert len(a.rows) == 1 and a.rows[0][3] in (True, False)
    k = run_experiment({**base, "kind": "katai-check",
                        "katai": {"k": 1, "per_pair": True},
                        "n": {"start": 4, "stop": 5}})
    assert len(k.rows) == 2
    t = run_experiment({"kind": "tk-check", "field": {"p": 2, "r": 1},
                        "n": {"start": 6, "stop": 8}, "tk": {"W": 1, "H": 4}})
    assert [row[0] for row in t.rows] == [6, 7, 8]


def test_bias_rank_demo_rows():
    cfg = {"kind": "bias-rank-demo", "field": {"p": 2, "r": 1},
           "bias": {"r_values": [1, 2, 3], "slot_dim": 4, "arity": 2}}
    rows = run_experiment(cfg).rows
    assert [row[0] for row in rows] == [1, 2, 3]
    for r, bias, rank, bound, meets in rows:
        assert abs(bias - 2.0 ** -r) < 1e-12 and meets


def test_zero_count_kind_runs_seeded():
    cfg = {"kind": "zero-count-check", "field": {"p": 3, "r": 1}, "seed": 5,
           "zero_count": {"dim": 3, "trials": 10, "max_total_degree": 2}}
    rows = run_experiment(cfg).rows
    assert len(rows) == 10
    assert all(r[4] for r in rows)   # D <= 2 on dim 3: bound always met


def test_character_function_descriptor():
    cfg = {
        "kind": "decay-table", "field": {"p": 3, "r": 1},
        "n": {"start": 3, "stop": 4},
        "function": {"kind": "character",
                     "hayes": {"theta": "1/3",
                               "short": {"s": 1, "index": 1}}},
        "phase": {"terms": [{"coef": 1, "factors": [[1, 2, 0, 1]]}]},
    }
    rows = run_experiment(cfg).rows
    assert len(rows) == 2


def test_twist_function_descriptor():
    cfg = decay_config(function={"kind": "twist",
                                 "base": {"kind": "builtin", "name": "moebius"},
                                 "hayes": {"theta": 0.5}, "conjugate": True})
    del cfg["seed"]
    rows = run_experiment(cfg).rows
    assert len(rows) == 4


def test_json_output_format():
    res = run_experiment(decay_config())
    doc = json.loads(res.to_json())
    assert doc["schema"] == "decay-table/v1"
    assert len(doc["rows"]) == 4


def test_list_builtins_text():
    text = list_builtins()
    assert "moebius" in text and "decay-table" in text


# -- CLI ------------------------------------------------------------------------


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "ffmult.cli", *args],
                          capture_output=True, text=True)


def test_cli_list_builtins():
    r = run_cli("--list-builtins")
    assert r.returncode == 0 and "zero-count-check" in r.stdout


def test_cli_run_umbrella_and_byte_identical_payload(tmp_path):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(decay_config(
        output={"path": str(tmp_path / "a.csv")})))
    r1 = run_cli("run", str(cfg_path))
    assert r1.returncode == 0, r1.stderr
    r2 = run_cli("run", str(cfg_path), "--output", str(tmp_path / "b.csv"))
    assert r2.returncode == 0

    def payload(path):
        return [l for l in path.read_text().splitlines() if not l.startswith("#")]

    assert payload(tmp_path / "a.csv") == payload(tmp_path / "b.csv")


def test_cli_validation_exit_code(tmp_path):
    cfg_path = tmp_path / "bad.json"
    cfg_path.write_text(json.dumps({"kind": "tk-check", "field": {"p": 2},
                                    "n": {"start": 3}, "tk": {"W": 1, "H": 3},
                                    "typo_key": 1}))
    r = run_cli("run", str(cfg_path))
    assert r.returncode == 1 and "typo_key" in r.stderr


def test_cli_budget_exit_code(tmp_path):
    cfg_path = tmp_path / "big.json"
    cfg_path.write_text(json.dumps({
        "kind": "gowers-decay", "field": {"p": 2, "r": 1},
        "n": {"start": 12, "stop": 12},
        "function": {"kind": "builtin", "name": "one"},
        "gowers": {"k": 3}}))
    r = run_cli("run", str(cfg_path))
    assert r.returncode == 2


def test_cli_subcommand_with_flag_overrides():
    r = run_cli("tk-check", "--p", "2", "--n-start", "5", "--n-stop", "6",
                "--set", "tk.W=1", "--set", "tk.H=4")
    assert r.returncode == 0
    assert "columns=n,A,lhs,ratio" in r.stdout
    assert any(line.startswith("5,") for line in r.stdout.splitlines())


def test_cli_no_command_prints_help():
    r = run_cli()
    assert r.returncode == 1
