#!/usr/bin/env python3
"""The config-driven experiment runner, in-process.

The same configs drive the `ffmult` command line tool:

    ffmult run config.json
    ffmult tk-check --p 2 --n-start 6 --n-stop 10 --set tk.W=1 --set tk.H=5
    ffmult --list-builtins

Identical config + seed always reproduces a byte-identical numeric payload.
"""

import io

from ffmult import run_experiment, validate_config

decay = {
    "kind": "decay-table",
    "field": {"p": 2, "r": 1},
    "seed": 4,
    "n": {"start": 5, "stop": 10},
    "function": {"kind": "random", "values": "pm1"},
    "phase": {"terms": [{"coef": 1,
                         "factors": [[1, 0, 1, 0, 1, 1, 1, 0, 1, 1],
                                     [0, 1, 1, 1, 0, 0, 1, 1, 0, 1]]}]},
}

print("validated config:", validate_config(decay).kind)
buf = io.StringIO()
run_experiment(decay, stream=buf)
print(buf.getvalue())

tk = {"kind": "tk-check", "field": {"p": 2, "r": 1},
      "n": {"start": 6, "stop": 10}, "tk": {"W": 1, "H": 5}}
result = run_experiment(tk)
print("tk-check rows (n, A, lhs, ratio):")
for row in result.rows:
    print("  ", row)
