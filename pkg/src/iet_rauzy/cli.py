"""Command-line front end.

Usage: ``iet-rauzy [--spec FILE | --example NAME] COMMAND ...``.  Without a
spec the three-interval running example is used.  Points are exact
expressions such as ``3/2-1/2*sqrt(5)``.

Exit codes: 0 success, 1 failed verification, 2 bad input, 3 domain error,
4 interval not admissible, 5 connection found, 6 budget exhausted.
"""

import argparse
import contextlib
import io
import re
import sys
from dataclasses import dataclass
from typing import Optional

from . import examples
from .coding import coding_morphism, derived_set, factors, interval_J, natural_coding, return_words
from .errors import IetError, NotAdmissible, WordNotInLanguage
from .iet import SemiInterval
from .induction import admissibility_witness, apply_chi, chi_search, is_admissible
from .qfield import parse_quadnum
from .quadratic import build_graph, emit_dot, euclid_digits, extract_primitive_morphism
from .specfile import dump_iet, parse_iet_file

EXAMPLES = {
    "running": examples.running_example,
    "rotation": examples.fibonacci_rotation,
    "connection": examples.rotation_with_connection,
}


@dataclass
class CommandResult:
    exit_code: int
    text: str
    dot: Optional[str] = None


def _lex_key(alphabet):
    rank = {a: i for i, a in enumerate(alphabet)}
    return lambda w: [rank[a] for a in w]


def _words_line(T, words):
    return " ".join(sorted(words, key=_lex_key(T.alphabet)))


def _by_length(T, fs, n):
    lines = ["ε"]
    for k in range(1, n + 1):
        lines.append(_words_line(T, fs.of_length(k)))
    return lines


def _point(T, text):
    return parse_quadnum(text, T.d)


def cmd_eval(T, args):
    z = _point(T, args.z)
    T._check(z)
    out = []
    for _ in range(args.n):
        out.append(str(z))
        z = T(z)
    return out


def cmd_code(T, args):
    return [natural_coding(T, _point(T, args.z), args.n)]


def cmd_factors(T, args):
    return _by_length(T, factors(T, args.n), args.n)


def cmd_returns(T, args):
    side = "left" if args.left else "right"
    return [_words_line(T, return_words(T, args.w, side))]


def cmd_derive(T, args):
    f = coding_morphism(return_words(T, args.w), T.alphabet)
    ds = derived_set(T, args.w, f, args.n)
    lines = [f"{b} -> {f[b]}" for b in f.domain]
    return lines + _by_length(T, ds, args.n)


def cmd_induce(T, args):
    if args.seq is not None:
        chi = args.seq
    elif args.interval is not None:
        u, v = (_point(T, x) for x in args.interval)
        chi = chi_search(T, SemiInterval(u, v))
    else:
        J = interval_J(T, args.word)
        if J is None:
            raise WordNotInLanguage(f"{args.word!r} is not a factor")
        chi = chi_search(T, J)
    S, theta = apply_chi(T, chi)
    return [f"chi: {chi or 'ε'}", f"theta: {theta}", dump_iet(S).rstrip("\n")]


def cmd_admissible(T, args):
    u, v = (_point(T, x) for x in (args.u, args.v))
    I = SemiInterval(u, v)
    if is_admissible(T, I):
        return [f"{I} is admissible"]
    w = admissibility_witness(T, I)
    msg = f"{I} is not admissible: endpoint {w['endpoint']} is not a division point"
    if "k" in w:
        msg += f"; it equals T^{w['k']}(gamma_{w['letter']})"
        if "h" in w:
            msg += f" but T^{w['h']}(gamma_{w['letter']}) = {w['point']} lies in ]{u}, {v}["
    raise NotAdmissible(msg, interval=I, witness=w)


def cmd_graph(T, args, result):
    mode = "similarity" if args.modified else "equivalence"
    g = build_graph(T, mode, args.max_vertices)
    dot = emit_dot(g)
    result.dot = dot
    if args.dot == "-":
        return [dot.rstrip("\n")]
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
    lines = [f"mode: {mode}", f"vertices: {len(g)}"]
    if mode == "equivalence":
        lines.append(f"edges: {len(g.edges)}")
        lines += [f"v{i} -{k}-> v{j}" for i, k, j in g.edges]
    else:
        lines.append(f"edges: {len(g.arcs())}")
        lines += [f"v{i} -> v{j}" for i, j in g.arcs()]
    return lines


def cmd_morphism(T, args):
    mp = extract_primitive_morphism(T)
    ok = mp.factors(args.max_len) == set(factors(T, args.max_len).words)
    return [
        f"path: {mp.path or 'ε'}",
        f"cycle: {mp.cycle}",
        f"power: {mp.power}",
        f"theta: {mp.path_morphism}",
        f"eta: {mp.cycle_morphism}",
        f"seed: {mp.seed}",
        f"factors up to length {args.max_len} agree: {'yes' if ok else 'no'}",
    ]


def cmd_euclid(T, args):
    return [" ".join(str(x) for x in euclid_digits(T, args.n))]


def cmd_verify(T, args):
    from .verify import SUITES, run_suite

    names = list(SUITES) if args.suite == "all" else [args.suite]
    lines, ok = [], True
    for name in names:
        for label, passed in run_suite(name):
            lines.append(f"{'PASS' if passed else 'FAIL'} {name}: {label}")
            ok = ok and passed
    return lines, (0 if ok else 1)


def build_parser():
    from .verify import SUITES

    p = argparse.ArgumentParser(prog="iet-rauzy", description="Exact interval exchange toolkit.")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--spec", help="JSON specification file")
    src.add_argument("--example", choices=sorted(EXAMPLES), help="built-in transformation")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", help="orbit points z, T(z), ...")
    s.add_argument("z")
    s.add_argument("n", type=int)
    s = sub.add_parser("code", help="prefix of the natural coding at z")
    s.add_argument("z")
    s.add_argument("n", type=int)
    s = sub.add_parser("factors", help="factors up to length n, one length per line")
    s.add_argument("n", type=int)
    s = sub.add_parser("returns", help="first return words to w")
    s.add_argument("w")
    s.add_argument("--left", action="store_true")
    s = sub.add_parser("derive", help="derived set with respect to w")
    s.add_argument("w")
    s.add_argument("n", type=int)
    s = sub.add_parser("induce", help="induced transformation")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--seq", help="steps over L/R, applied left to right")
    g.add_argument("--interval", nargs=2, metavar=("U", "V"))
    g.add_argument("--word", help="induce on J_w")
    s = sub.add_parser("admissible", help="admissibility of [u, v[")
    s.add_argument("u")
    s.add_argument("v")
    s = sub.add_parser("graph", help="induction graph")
    s.add_argument("--modified", action="store_true", help="similarity classes")
    s.add_argument("--dot", help="write DOT to this file ('-' for stdout)")
    s.add_argument("--max-vertices", type=int, default=10_000)
    s = sub.add_parser("morphism", help="primitive morphic presentation")
    s.add_argument("--max-len", type=int, default=12)
    s = sub.add_parser("euclid", help="continued fraction digits (two intervals)")
    s.add_argument("n", type=int)
    s = sub.add_parser("verify", help="run built-in checks")
    s.add_argument("--suite", choices=["all", *SUITES], default="all")
    return p


COMMANDS = {
    "eval": cmd_eval,
    "code": cmd_code,
    "factors": cmd_factors,
    "returns": cmd_returns,
    "derive": cmd_derive,
    "induce": cmd_induce,
    "admissible": cmd_admissible,
    "morphism": cmd_morphism,
    "euclid": cmd_euclid,
}


def run_command(argv):
    """Run one command and capture its outcome instead of exiting."""
    parser = build_parser()
    # a leading space keeps argparse from reading "-1/2*sqrt(5)" as an option
    argv = [" " + a if re.match(r"-[0-9(s]", a) else a for a in argv]
    err = io.StringIO()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(exc.code if isinstance(exc.code, int) else 2, err.getvalue())
    result = CommandResult(0, "")
    try:
        if args.spec:
            T = parse_iet_file(args.spec)
        else:
            T = EXAMPLES[args.example or "running"]()
        if args.command == "graph":
            lines = cmd_graph(T, args, result)
        elif args.command == "verify":
            lines, result.exit_code = cmd_verify(T, args)
        else:
            for name in ("n", "max_len"):
                if getattr(args, name, 0) < 0:
                    raise ValueError(f"{name} must be nonnegative")
            lines = COMMANDS[args.command](T, args)
    except IetError as exc:
        return CommandResult(exc.exit_code, f"error: {exc}\n")
    except ValueError as exc:
        return CommandResult(3, f"error: {exc}\n")
    result.text = "\n".join(lines) + "\n"
    return result


def main(argv=None):
    res = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if res.exit_code in (0, 1) else sys.stderr
    stream.write(res.text)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
