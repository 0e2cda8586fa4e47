"""End-to-end acceptance checks on the worked examples.

Each test prints one ``PASS``/``FAIL`` line; under pytest the lines are
repeated in the terminal summary.  ``python3 tests/test_acceptance.py`` prints the same summary
without pytest.
"""

import functools
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from iet_rauzy.coding import (
    coding_morphism,
    derived_set_combinatorial,
    derived_set_geometric,
    factors,
    interval_J,
    natural_coding,
    return_words,
)
from iet_rauzy.errors import ConnectionDetected, NotAdmissible
from iet_rauzy.examples import ALPHA, fibonacci_rotation, rotation_with_connection, running_example
from iet_rauzy.iet import SemiInterval, idoc_probe
from iet_rauzy.induction import (
    admissibility_witness,
    apply_chi,
    chi_search,
    is_admissible,
    rauzy_right,
)
from iet_rauzy.quadratic import (
    boundary_orbit,
    build_graph,
    euclid_digits,
    extract_primitive_morphism,
    pi_bounds,
)

from conftest import q5, random_point

a = ALPHA

# words of length <= 6 as drawn in the factor tree of the running example
FACTOR_TREE = {
    1: "a b c",
    2: "ac ba bb cb cc",
    3: "acb acc bac bba cba cbb ccb",
    4: "acbb accb bacb bacc bbac cbac cbba ccba ccbb",
    5: "acbba accba accbb bacbb baccb bbacb bbacc cbacc cbbac ccbac ccbba",
    6: "acbbac accbac accbba bacbba baccba baccbb bbacbb bbaccb cbaccb cbbacb cbbacc ccbacc ccbbac",
}

# words of length <= 3 as drawn in the derived-set tree for w = c
DERIVED_TREE = {
    1: "a b c",
    2: "ac bb bc ca cb",
    3: "aca acb bbb bbc bcb cac cbb",
}

_results = {}


def criterion(n, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                _report(n, title, False, exc)
                raise
            _report(n, title, True)
        run.number = n
        run.title = title
        return run
    return wrap


def _report(n, title, ok, exc=None):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title}"
    if exc is not None:
        detail = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        line += f" ({detail})"
    _results[n] = line
    print(line)


@criterion(1, "first return words")
def test_01_return_words():
    T = running_example()
    assert return_words(T, "a") == {"cbba", "ccba", "ccbba"}
    assert return_words(T, "b") == {"acb", "accb", "b"}
    assert return_words(T, "c") == {"bac", "bbac", "c"}


def _boundary(S):
    top = [(x, S.gamma[x]) for x in S.alphabet] + [(None, S.r)]
    bottom = [(x, S.delta[x]) for x in S.order2] + [(None, S.r)]
    return top, bottom


@criterion(2, "right induction pictures")
def test_02_induced_transformations():
    T = running_example()
    S = rauzy_right(T).result
    top, bottom = _boundary(S)
    assert top == [("a", 0 * a), ("b", 1 - 2 * a), ("c", 1 - a), (None, 2 * a)]
    assert bottom == [("b", 0 * a), ("c", a), ("a", 4 * a - 1), (None, 2 * a)]
    S2 = rauzy_right(S).result
    top, bottom = _boundary(S2)
    assert top == [("a", 0 * a), ("c", 2 - 5 * a), ("b", 1 - 2 * a), (None, 1 - a)]
    assert bottom == [("b", 0 * a), ("c", a), ("a", 4 * a - 1), (None, 1 - a)]


@criterion(3, "automorphisms of induction sequences")
def test_03_automorphisms():
    T = running_example()
    S, theta = apply_chi(T, "RLL")
    assert theta.images == {"a": "bac", "b": "bbac", "c": "c"}
    assert S.domain == interval_J(T, "c")
    S, theta = apply_chi(T, "LLLLLL")
    assert theta.images == {"a": "ccba", "b": "cbba", "c": "ccbba"}
    assert S.domain == interval_J(T, "a")


@criterion(4, "factor complexity and factor tree")
def test_04_factor_complexity():
    T = running_example()
    counts = factors(T, 20).counts()
    assert counts[1:] == [2 * k + 1 for k in range(1, 21)]
    fs = factors(T, 6)
    for k, line in FACTOR_TREE.items():
        assert fs.of_length(k) == line.split(), k


@criterion(5, "derivation closure and derived-set tree")
def test_05_derived_sets():
    T = running_example()
    for w in factors(T, 3):
        if not w:
            continue
        f = coding_morphism(return_words(T, w), T.alphabet)
        assert derived_set_combinatorial(T, w, f, 5) == derived_set_geometric(T, w, f, 5), w
    f = coding_morphism(return_words(T, "c"), T.alphabet)
    assert f.images == {"a": "bac", "b": "bbac", "c": "c"}
    ds = derived_set_combinatorial(T, "c", f, 3)
    for k, line in DERIVED_TREE.items():
        assert ds.of_length(k) == line.split(), f"length {k}: got {' '.join(ds.of_length(k))}"


def _candidates(T):
    pts = sorted(boundary_orbit(T, 4, 4) | {T.origin, T.r})
    return [SemiInterval(u, v) for i, u in enumerate(pts) for v in pts[i + 1:]]


@criterion(6, "admissibility")
def test_06_admissibility():
    T = running_example()
    zero = 0 * a
    assert is_admissible(T, SemiInterval(zero, 1 - 2 * a))
    assert is_admissible(T, SemiInterval(zero, 1 - a))
    bad = SemiInterval(zero, 2 - 3 * a)
    assert not is_admissible(T, bad)
    w = admissibility_witness(T, bad)
    assert w["endpoint"] == 2 - 3 * a and T.iterate(T.gamma[w["letter"]], w["k"]) == 2 - 3 * a
    with pytest.raises(NotAdmissible):
        chi_search(T, bad)
    for u in factors(T, 4):
        if u:
            assert is_admissible(T, interval_J(T, u)), u
    seen = {True: 0, False: 0}
    for I in _candidates(T):
        try:
            S, _ = apply_chi(T, chi_search(T, I))
            found = S.domain == I
        except NotAdmissible:
            found = False
        assert is_admissible(T, I) == found, I
        seen[found] += 1
    assert seen[True] > 10 and seen[False] >= 50


@criterion(7, "induction graphs")
def test_07_graphs():
    R = fibonacci_rotation()
    g = build_graph(R, "equivalence")
    assert len(g) == 2
    assert sorted(g.edges) == [(0, "L", 1), (0, "R", 1), (1, "L", 0), (1, "R", 0)]
    m = build_graph(R, "similarity")
    assert len(m) == 1 and m.arcs() == [(0, 0)]
    T = running_example()
    m = build_graph(T, "similarity", max_vertices=10_000)
    assert len(m) <= 10_000
    v, cycle = 0, []
    for _ in range(6):
        v = m.successor(v, "L")
        cycle.append(v)
    assert cycle[-1] == 0 and len(set(cycle)) == 6


@criterion(8, "primitive morphic presentations")
def test_08_morphic_presentation():
    R = fibonacci_rotation()
    mp = extract_primitive_morphism(R)
    assert mp.cycle_morphism.is_primitive()
    assert mp.factors(20) == set(factors(R, 20).words)
    T = running_example()
    mp = extract_primitive_morphism(T)
    assert mp.cycle_morphism.is_primitive()
    assert mp.factors(12) == set(factors(T, 12).words)


@criterion(9, "reduced complexity lower bound")
def test_09_complexity_bounds():
    T = running_example()
    graph = build_graph(T, "similarity")
    vals, scale = pi_bounds(T, graph)
    assert scale == 2
    bound = 1 / (4 * q5(0, 1))
    assert vals and all(v > bound for v in vals)
    assert max(vals) == q5(-814, 370)


@criterion(10, "coding conjugacy on random sequences and points")
def test_10_coding_conjugacy():
    T = running_example()
    rng = random.Random(7)
    for _ in range(100):
        chi = "".join(rng.choice("LR") for _ in range(rng.randrange(0, 9)))
        S, theta = apply_chi(T, chi)
        z = random_point(rng, S.origin, S.r)
        assert theta(natural_coding(S, z, 30)).startswith(natural_coding(T, z, 30)), (chi, z)


@criterion(11, "connection in a non-regular presentation")
def test_11_connection():
    C = rotation_with_connection()
    assert C.order2 == ("c", "a", "b")
    assert [C.lengths[x] for x in C.alphabet] == [1 - 2 * a, a, a]
    assert C(C.gamma["b"]) == C.gamma["c"]
    assert idoc_probe(C, 50) is not None
    with pytest.raises(ConnectionDetected):
        apply_chi(C, "R")


@criterion(12, "continued fraction digits of the golden ratio")
def test_12_euclid():
    assert euclid_digits(fibonacci_rotation(), 10) == [1] * 10


CRITERIA = [v for k, v in sorted(globals().items()) if k.startswith("test_")]


def main():
    failed = 0
    for test in CRITERIA:
        try:
            test()
        except BaseException:
            failed += 1
    print(f"{len(CRITERIA) - failed}/{len(CRITERIA)} criteria passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
