"""Self-checks on the built-in examples, grouped in suites for ``verify``."""

from .coding import Morphism, derived_set, factors, interval_J, natural_coding, return_words
from .errors import ConnectionDetected, NotAdmissible
from .examples import ALPHA, fibonacci_rotation, rotation_with_connection, running_example
from .iet import SemiInterval, idoc_probe
from .induction import apply_chi, chi_search, rauzy_right
from .quadratic import build_graph, euclid_digits, extract_primitive_morphism


def _coding():
    T, R = running_example(), fibonacci_rotation()
    f = Morphism({"a": "bac", "b": "bbac", "c": "c"})
    yield "coding of T at alpha", natural_coding(T, ALPHA, 7) == "baccbac"
    yield "coding of R at alpha", natural_coding(R, ALPHA, 5) == "abaab"
    yield "return words to a", return_words(T, "a") == {"cbba", "ccba", "ccbba"}
    yield "return words to b", return_words(T, "b") == {"acb", "accb", "b"}
    yield "return words to c", return_words(T, "c") == {"bac", "bbac", "c"}
    yield "2k+1 factors of length k <= 20", \
        factors(T, 20).counts()[1:] == [2 * k + 1 for k in range(1, 21)]
    yield "derived set has 2k+1 words", derived_set(T, "c", f, 5).counts()[1:] == [3, 5, 7, 9, 11]


def _induction():
    T = running_example()
    a = ALPHA
    S = rauzy_right(T).result
    yield "right induction domain", S.domain == SemiInterval(0 * a, 2 * a)
    yield "right induction automorphism", rauzy_right(T).automorphism["a"] == "ac"
    _, th = apply_chi(T, "RLL")
    yield "RLL automorphism", th.images == {"a": "bac", "b": "bbac", "c": "c"}
    U, th = apply_chi(T, "LLLLLL")
    yield "L^6 automorphism", th.images == {"a": "ccba", "b": "cbba", "c": "ccbba"}
    yield "L^6 domain is J_a", U.domain == interval_J(T, "a")
    yield "search for J_c", chi_search(T, interval_J(T, "c")) == "RLL"
    try:
        chi_search(T, SemiInterval(0 * a, 2 - 3 * a))
        yield "[0, 2-3alpha[ rejected", False
    except NotAdmissible:
        yield "[0, 2-3alpha[ rejected", True


def _graphs():
    T, R = running_example(), fibonacci_rotation()
    g = build_graph(R, "equivalence")
    yield "G(R) has 2 vertices and 4 edges", len(g) == 2 and len(g.edges) == 4
    g = build_graph(R, "similarity")
    yield "modified G(R) is one loop", len(g) == 1 and g.arcs() == [(0, 0)]
    g = build_graph(T, "similarity")
    v, cyc = 0, []
    for _ in range(6):
        v = g.successor(v, "L")
        cyc.append(v)
    yield "L^6 cycle through the root", cyc[-1] == 0 and len(set(cyc)) == 6
    for name, X, n in (("R", R, 20), ("T", T, 12)):
        mp = extract_primitive_morphism(X)
        yield f"morphic presentation of {name}", mp.factors(n) == set(factors(X, n).words)
    yield "golden ratio digits", euclid_digits(R, 10) == [1] * 10
    C = rotation_with_connection()
    yield "connection detected", idoc_probe(C, 50) is not None
    try:
        apply_chi(C, "R")
        yield "connection halts induction", False
    except ConnectionDetected:
        yield "connection halts induction", True


SUITES = {"coding": _coding, "induction": _induction, "graphs": _graphs}


def run_suite(name):
    return list(SUITES[name]())
