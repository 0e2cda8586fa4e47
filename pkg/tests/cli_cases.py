"""Golden CLI cases: name -> (argv, exit code).  Paths are relative to the
repository root."""

CASES = {
    "code_running": (["--spec", "specs/running.json", "code", "3/2-1/2*sqrt(5)", "7"], 0),
    "returns_a": (["--spec", "specs/running.json", "returns", "a"], 0),
    "returns_c_left": (["returns", "c", "--left"], 0),
    "factors_6": (["factors", "6"], 0),
    "derive_c": (["derive", "c", "3"], 0),
    "induce_word_a": (["induce", "--word", "a"], 0),
    "induce_interval": (["induce", "--interval", "0", "3-sqrt(5)"], 0),
    "eval_alpha": (["eval", "3/2-1/2*sqrt(5)", "5"], 0),
    "admissible_ok": (["admissible", "0", "-2+sqrt(5)"], 0),
    "graph_rotation": (["--example", "rotation", "graph"], 0),
    "graph_rotation_dot": (["--example", "rotation", "graph", "--modified", "--dot", "-"], 0),
    "euclid_rotation": (["--spec", "specs/rotation.json", "euclid", "10"], 0),
    "morphism_rotation": (["--example", "rotation", "morphism", "--max-len", "20"], 0),
    # parse errors
    "err_bad_json": (["--spec", "tests/data/bad_json.json", "factors", "2"], 2),
    "err_empty_alphabet": (["--spec", "tests/data/empty_alphabet.json", "factors", "2"], 2),
    "err_bad_order": (["--spec", "tests/data/bad_order.json", "factors", "2"], 2),
    "err_decimal_length": (["--spec", "tests/data/decimal_length.json", "factors", "2"], 2),
    "err_missing_file": (["--spec", "tests/data/nope.json", "factors", "2"], 2),
    "err_decimal_point": (["code", "0.5", "3"], 2),
    "err_foreign_root": (["code", "sqrt(2)/2", "3"], 2),
    "err_usage": (["frobnicate"], 2),
    # domain errors
    "err_out_of_domain": (["code", "2", "3"], 3),
    "err_not_a_factor": (["returns", "aa"], 3),
    "err_decomposable": (["--spec", "tests/data/decomposable.json", "factors", "2"], 3),
    "err_negative_length": (["factors", "-1"], 3),
    "err_euclid_three": (["euclid", "3"], 3),
    # not admissible
    "err_not_admissible": (["admissible", "0", "-5/2+3/2*sqrt(5)"], 4),
    "err_induce_not_admissible": (["induce", "--interval", "0", "2-3*(3/2-1/2*sqrt(5))"], 4),
    # connections
    "err_connection_induce": (["--example", "connection", "induce", "--seq", "R"], 5),
    "err_connection_graph": (["--spec", "specs/connection.json", "graph"], 5),
    "err_rational_euclid": (["--spec", "tests/data/rational.json", "euclid", "5"], 5),
    # budgets
    "err_vertex_budget": (["graph", "--max-vertices", "3"], 6),
}
