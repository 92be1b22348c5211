#!/usr/bin/env python3
"""End-to-end checks for the command line tool.

Usage: cli_checks.py <binary> <fixtures_dir>

Runs every subcommand against the JSON fixtures and verifies exit codes,
report contents, error surfaces, and determinism of the output.
"""

import json
import os
import subprocess
import sys

BIN = sys.argv[1]
FIX = sys.argv[2]

failures = []
checks = 0


def check(name, cond, detail=""):
    global checks
    checks += 1
    if not cond:
        failures.append(f"{name}: {detail}")
        print(f"FAIL {name}  {detail}")


def run(args, stdin=None, env_extra=None):
    env = dict(os.environ)
    env.pop("VERONESE_FIELD", None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [BIN] + args, input=stdin, capture_output=True, text=True, env=env
    )
    return proc.returncode, proc.stdout, proc.stderr


def run_json(args, stdin=None, env_extra=None):
    code, out, err = run(args + ["--json"], stdin=stdin, env_extra=env_extra)
    try:
        return code, json.loads(out), err
    except json.JSONDecodeError:
        return code, None, err


def fx(name):
    return os.path.join(FIX, name)


# ---- build ----------------------------------------------------------------

code, rep, _ = run_json(["build", fx("five_vars_three_pieces.json")])
check("build exit", code == 0)
check(
    "build gens",
    rep["gens"]
    == ["x1*x2", "x1*x3", "x2*x4", "x3*x4", "x1*x5", "x2*x5", "x3*x5"],
    str(rep["gens"]),
)
check("build ngens", rep["ngens"] == 7)
check("build payload", rep["payload"] == "veronese")
check("build names", rep["ring"]["names"] == ["x1", "x2", "x3", "x4", "x5"])

code, out, _ = run(["build", fx("five_vars_three_pieces.json")])
check("build text", "minimal generators (7):" in out, out)

# determinism: two runs give byte-identical reports
_, out1, _ = run(["build", fx("five_vars_three_pieces.json"), "--json"])
_, out2, _ = run(["build", fx("five_vars_three_pieces.json"), "--json"])
check("build deterministic", out1 == out2)

# stdin document
with open(fx("five_vars_three_pieces.json")) as f:
    text = f.read()
code, rep, _ = run_json(["build", "-"], stdin=text)
check("build stdin", code == 0 and rep["ngens"] == 7)

# ---- betti: formula vs oracle ---------------------------------------------

code, formula, _ = run_json(["betti", "--formula", fx("union_gap_pair.json")])
check("betti formula exit", code == 0)
check("betti formula pdim", formula["pdim"] == 2)
check("betti formula reg", formula["regularity"] == 4)
check(
    "betti formula table",
    formula["table"]
    == [
        [0, [2], 3],
        [0, [3], 2],
        [0, [4], 1],
        [1, [3], 2],
        [1, [4], 4],
        [1, [5], 2],
        [2, [5], 2],
        [2, [6], 1],
    ],
    str(formula["table"]),
)

code, oracle, _ = run_json(["betti", "--oracle", fx("union_gap_pair.json")])
check("betti oracle exit", code == 0)
check("betti routes agree", formula["table"] == oracle["table"])

for name in ("five_vars_two_pieces_deep.json", "fat_pair.json", "fat_pair_deep.json"):
    _, f_rep, _ = run_json(["betti", "--formula", fx(name)])
    _, o_rep, _ = run_json(["betti", "--oracle", fx(name)])
    check(f"betti agree {name}", f_rep["table"] == o_rep["table"])

# oracle honors the grading flag on a blocked ring
code, fine, _ = run_json(
    ["betti", "--oracle", "--grading", "fine", fx("non_general_pair.json")]
)
check("betti fine exit", code == 0)
check("betti fine degree width", all(len(row[1]) == 4 for row in fine["table"]))
code, block, _ = run_json(
    ["betti", "--oracle", "--grading", "block", fx("non_general_pair.json")]
)
check("betti block degree width", all(len(row[1]) == 2 for row in block["table"]))

# flag validation
code, _, err = run(["betti", fx("union_gap_pair.json")])
check("betti needs a route", code == 2 and "error:" in err, err)
code, _, err = run(["betti", "--formula", "--oracle", fx("union_gap_pair.json")])
check("betti route conflict", code == 2)
code, _, err = run(
    ["betti", "--formula", "--grading", "fine", fx("union_gap_pair.json")]
)
check("betti formula grading clash", code == 2 and "total-graded" in err, err)
code, _, err = run(["betti", "--formula", fx("skew_edges.json")])
check("betti no closed form", code == 2 and "closed form" in err, err)

# ---- cwl -------------------------------------------------------------------

code, rep, _ = run_json(["cwl", fx("five_vars_three_pieces.json")])
check("cwl yes exit", code == 0 and rep["verdict"] is True)
code, rep, _ = run_json(["cwl", fx("five_vars_two_pieces_deep.json")])
check("cwl deep yes", code == 0 and rep["verdict"] is True)
code, rep, _ = run_json(["cwl", fx("skew_edges.json")])
check("cwl skew no", code == 1 and rep["verdict"] is False)
code, rep, _ = run_json(["cwl", fx("non_general_pair.json")])
check("cwl non-general no", code == 1 and rep["verdict"] is False)

# ---- polymatroidal ----------------------------------------------------------

code, rep, _ = run_json(["polymatroidal", "--all", fx("five_vars_two_pieces_deep.json")])
check("poly all exit", code == 0 and rep["verdict"] is True)
check("poly all range", [c["degree"] for c in rep["components"]] == [3, 4, 5])

code, rep, _ = run_json(["polymatroidal", "--degree", "2", fx("union_gap_pair.json")])
check("poly degree 2", code == 0 and rep["verdict"] is True)

code, rep, _ = run_json(["polymatroidal", "--degree", "3", fx("union_gap_pair.json")])
check("poly degree 3 exit", code == 1 and rep["verdict"] is False)
wit = rep["components"][0]["witness"]
check("poly witness u", wit["u"] == "x2^2*x4", str(wit))
check("poly witness v", wit["v"] == "x1*x2*x5", str(wit))
check("poly witness var", wit["variable"] == 2 and wit["variable_name"] == "x2")
check("poly witness tried", len(wit["tried"]) == 2, str(wit["tried"]))

code, _, err = run(["polymatroidal", fx("union_gap_pair.json")])
check("poly needs mode", code == 2)
code, _, err = run(
    ["polymatroidal", "--degree", "2", "--all", fx("union_gap_pair.json")]
)
check("poly mode conflict", code == 2)

# ---- linear-quotients --------------------------------------------------------

code, rep, _ = run_json(["linear-quotients", fx("five_vars_three_pieces.json")])
check("lq found", code == 0 and rep["verdict"] is True and rep["determined"] is True)
check("lq order length", len(rep["order"]) == 7)
check("lq steps aligned", len(rep["colon_steps"]) == 7 and rep["colon_steps"][0] == [])
check(
    "lq steps linear",
    all(all("*" not in m and "^" not in m for m in step) for step in rep["colon_steps"]),
    str(rep["colon_steps"]),
)

code, rep, _ = run_json(["linear-quotients", fx("skew_edges.json")])
check("lq skew refuted", code == 1 and rep["verdict"] is False and rep["determined"] is True)

# ---- split -------------------------------------------------------------------

code, rep, _ = run_json(["split", fx("case4_pair.json")])
check("split exit", code == 0 and rep["verdict"] is True)
check("split ok", rep["splitting_ok"] is True and rep["betti_additivity"] is True)
check("split exhaustive", rep["exhaustive"] is True and rep["subsets_checked"] == 7)
check("split V", rep["V"] == ["x1^2*x4"], str(rep["V"]))
check(
    "split intersection",
    rep["intersection"] == ["x1^2*x2*x4", "x1^2*x3*x4", "x1^2*x4*x5"],
    str(rep["intersection"]),
)
check("split image count", len(rep["images"]) == 3)

code, _, err = run(["split", fx("skew_edges.json")])
check("split needs two pieces", code == 2 and "two veronese pieces" in err, err)

# ---- dual --------------------------------------------------------------------

code, rep, _ = run_json(["dual", fx("six_vertex_complex.json")])
check("dual exit", code == 0)
check(
    "dual gens",
    rep["gens"] == ["x1", "x2*x5", "x5*x6", "x2*x3*x4", "x3*x4*x6"],
    str(rep["gens"]),
)

code, _, err = run(["dual", fx("five_vars_two_pieces_deep.json")])
check("dual needs squarefree", code == 2, err)

# ---- seqcm -------------------------------------------------------------------

code, rep, _ = run_json(["seqcm", fx("six_vertex_complex.json")])
check("seqcm six vertex", code == 0 and rep["verdict"] is True)
code, rep, _ = run_json(["seqcm", fx("square_complex.json")])
check("seqcm square", code == 0 and rep["verdict"] is True)
code, _, err = run(["seqcm", fx("skew_edges.json")])
check("seqcm needs complex", code == 2 and "complex" in err, err)

# ---- mult-bound / hilbert ------------------------------------------------------

code, rep, _ = run_json(["mult-bound", fx("cycle_cover.json")])
check("mult-bound exit", code == 0 and rep["verdict"] is True)
check("mult-bound equality", rep["lhs"] == "8" and rep["rhs"] == "8")
check("mult-bound shifts", rep["max_shifts"] == [2, 4])

code, rep, _ = run_json(["hilbert", fx("skew_edges.json")])
check("hilbert exit", code == 0)
check("hilbert numerator", rep["numerator"] == [[0, "1"], [2, "-2"], [4, "1"]])
check("hilbert codim", rep["codim"] == 2 and rep["multiplicity"] == "4")

code, out, _ = run(["hilbert", fx("skew_edges.json")])
check("hilbert text", "numerator: 1 - 2*t^2 + t^4" in out, out)

# ---- field handling -------------------------------------------------------------

code, rep, _ = run_json(["cwl", "--field", "2", fx("five_vars_three_pieces.json")])
check("field flag prime", code == 0 and rep["verdict"] is True)
code, rep, _ = run_json(["cwl", "--field", "0", fx("five_vars_three_pieces.json")])
check("field flag exact", code == 0 and rep["verdict"] is True)
code, _, err = run(["cwl", "--field", "6", fx("five_vars_three_pieces.json")])
check("field flag composite", code == 2 and "prime" in err, err)
code, rep, _ = run_json(
    ["cwl", fx("five_vars_three_pieces.json")], env_extra={"VERONESE_FIELD": "2"}
)
check("field env prime", code == 0 and rep["verdict"] is True)
code, _, err = run(
    ["cwl", fx("five_vars_three_pieces.json")], env_extra={"VERONESE_FIELD": "6"}
)
check("field env composite", code == 2 and "prime" in err, err)
code, _, err = run(
    ["cwl", fx("five_vars_three_pieces.json")], env_extra={"VERONESE_FIELD": "zzz"}
)
check("field env garbage", code == 2 and "integer" in err, err)
code, rep, _ = run_json(
    ["cwl", "--field", "3", fx("five_vars_three_pieces.json")],
    env_extra={"VERONESE_FIELD": "6"},
)
check("field flag beats env", code == 0 and rep["verdict"] is True)

# ---- error surfaces ----------------------------------------------------------

code, _, err = run(["build", os.path.join(FIX, "missing.json")])
check("missing file", code == 2 and "error:" in err, err)
code, _, err = run(["build", "-"], stdin="{ not json")
check("bad json", code == 2 and "parse error" in err, err)
code, _, err = run(
    ["build", "-"],
    stdin='{"ring":{"blocks":[3]},"veronese":[{"support":[0,1]}]}',
)
check("bad index", code == 2 and "out of range" in err, err)
code, _, err = run(["frobnicate", fx("skew_edges.json")])
check("unknown subcommand", code == 2)
code, _, _ = run(["--help"])
check("help exits zero", code == 0)
code, _, _ = run([])
check("no subcommand", code == 2)

# ---- summary -------------------------------------------------------------------

print(f"cli_checks: {checks} checks, {len(failures)} failures")
sys.exit(1 if failures else 0)
