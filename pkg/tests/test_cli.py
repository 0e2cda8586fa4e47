import os
import subprocess
import sys
from pathlib import Path

import pytest

from iet_rauzy.cli import run_command
from iet_rauzy.errors import AlphabetMismatch, ParseError
from iet_rauzy.examples import fibonacci_rotation, rotation_with_connection, running_example
from iet_rauzy.specfile import dump_iet, load_iet, parse_iet_file

from cli_cases import CASES

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture(autouse=True)
def at_root(monkeypatch):
    monkeypatch.chdir(ROOT)


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    argv, code = CASES[name]
    res = run_command(argv)
    assert res.exit_code == code
    assert res.text == (GOLDEN / f"{name}.txt").read_text(encoding="utf-8")


def test_worked_examples_on_the_command_line():
    assert run_command(["code", "3/2-1/2*sqrt(5)", "7"]).text == "baccbac\n"
    assert run_command(["returns", "a"]).text == "cbba ccba ccbba\n"
    res = run_command(["admissible", "0", "-5/2+3/2*sqrt(5)"])
    assert res.exit_code == 4
    assert "T^-1(gamma_c)" in res.text and "T^0(gamma_c)" in res.text


def test_determinism():
    for argv in (["graph", "--modified", "--dot", "-"], ["morphism"], ["factors", "8"]):
        assert run_command(argv) == run_command(argv)


def test_dot_file(tmp_path):
    out = tmp_path / "g.dot"
    res = run_command(["--example", "rotation", "graph", "--dot", str(out)])
    assert res.exit_code == 0
    assert out.read_text(encoding="utf-8") == res.dot
    assert res.dot.count("->") == 4


def test_verify_suites():
    res = run_command(["verify"])
    assert res.exit_code == 0
    assert "FAIL" not in res.text
    res = run_command(["verify", "--suite", "coding"])
    assert res.text.count("PASS") == 7


@pytest.mark.parametrize("make", [running_example, fibonacci_rotation, rotation_with_connection])
def test_round_trip(make):
    T = make()
    text = dump_iet(T)
    assert load_iet(text) == T
    assert dump_iet(load_iet(text)) == text


def test_shipped_specs_are_canonical():
    for path in sorted((ROOT / "specs").glob("*.json")):
        text = path.read_text(encoding="utf-8")
        assert dump_iet(parse_iet_file(str(path))) == text


def test_transcribed_spec():
    T = parse_iet_file(str(ROOT / "tests" / "data" / "transcribed.json"))
    assert T == running_example()


def test_spec_errors():
    with pytest.raises(ParseError):
        load_iet('{"d": 5, "alphabet": [], "order2": [], "origin": "0", "lengths": {}}')
    with pytest.raises(AlphabetMismatch):
        load_iet('{"d": 5, "alphabet": ["a"], "order2": ["b"], "origin": "0", "lengths": {"a": "1"}}')
    with pytest.raises(ParseError) as info:
        load_iet('{"d": 5, "alphabet": ["a"], "order2": ["a"], "origin": "0", "lengths": {"a": "1"},\n "x": 1}')
    assert info.value.line == 2
    with pytest.raises(ParseError):
        load_iet("[1, 2]")
    with pytest.raises(ParseError):
        load_iet('{"d": "5", "alphabet": ["a"], "order2": ["a"], "origin": "0", "lengths": {"a": "1"}}')


def test_module_entry_point():
    env = dict(os.environ)
    proc = subprocess.run([sys.executable, "-m", "iet_rauzy", "returns", "c"],
                          capture_output=True, text=True, cwd=ROOT, env=env)
    assert proc.returncode == 0
    assert proc.stdout == "bac bbac c\n"
    proc = subprocess.run([sys.executable, "-m", "iet_rauzy", "code", "2", "1"],
                          capture_output=True, text=True, cwd=ROOT, env=env)
    assert proc.returncode == 3 and proc.stderr.startswith("error:")
