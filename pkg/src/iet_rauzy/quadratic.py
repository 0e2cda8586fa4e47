"""Heights, return times, induction graphs and morphic presentations.

Everything here is meant for transformations defined over a real quadratic
field, where the induction graphs are finite.
"""

from collections import deque
from dataclasses import dataclass, field

from .coding import Morphism
from .errors import (
    CapExceeded,
    ConnectionDetected,
    NotRegular,
    VertexBudgetExceeded,
)
from .iet import Iet, SemiInterval, canonical_form, idoc_probe
from .induction import rauzy_step, apply_chi
from .qfield import QuadNum, clear_denominators, height_psi

__all__ = [
    "FiniteUnion",
    "integral_rescaling",
    "set_complexity",
    "reduced_complexity",
    "u_bound",
    "return_time",
    "boundary_orbit",
    "boundary_cells",
    "in_endpoint_family",
    "InductionGraph",
    "build_graph",
    "emit_dot",
    "MorphicPresentation",
    "extract_primitive_morphism",
    "fixed_point_factors",
    "euclid_digits",
    "certify_regular",
    "pi_bounds",
    "image",
    "orbit_cover",
]


class FiniteUnion:
    """A finite union of semi-intervals, kept as sorted disjoint parts with
    touching parts merged."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        items = sorted(parts, key=lambda p: p.lo)
        merged = []
        for p in items:
            if merged and p.lo <= merged[-1].hi:
                if p.hi > merged[-1].hi:
                    merged[-1] = SemiInterval(merged[-1].lo, p.hi)
            else:
                merged.append(p)
        self.parts = tuple(merged)

    @classmethod
    def of(cls, lo, hi):
        return cls([SemiInterval(lo, hi)])

    @property
    def measure(self):
        total = QuadNum(0)
        for p in self.parts:
            total = total + p.length
        return total

    def boundary(self):
        pts = []
        for p in self.parts:
            pts.extend((p.lo, p.hi))
        return pts

    def is_empty(self):
        return not self.parts

    def __bool__(self):
        return bool(self.parts)

    def __contains__(self, z):
        return any(z in p for p in self.parts)

    def union(self, other):
        return FiniteUnion(self.parts + other.parts)

    __or__ = union

    def intersect(self, other):
        out = []
        for p in self.parts:
            for q in other.parts:
                c = p.intersect(q)
                if c is not None:
                    out.append(c)
        return FiniteUnion(out)

    __and__ = intersect

    def issubset(self, other):
        return all(any(p.issubset(q) for q in other.parts) for p in self.parts)

    def __eq__(self, other):
        if not isinstance(other, FiniteUnion):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "FiniteUnion(" + " u ".join(str(p) for p in self.parts) + ")"


def image(T, X, inverse=False):
    """``T(X)`` (or ``T^{-1}(X)``) for a finite union ``X``."""
    out = []
    for p in X.parts:
        for a in T.alphabet:
            if inverse:
                c = p.intersect(T.J(a))
                if c is not None:
                    out.append(c.shift(-T.alpha[a]))
            else:
                c = p.intersect(T.I(a))
                if c is not None:
                    out.append(c.shift(T.alpha[a]))
    return FiniteUnion(out)


def integral_rescaling(T):
    """``(T', scale)`` where ``T'`` is ``T`` scaled by the least positive
    integer making the origin and all lengths lie in ``Z[sqrt(d)]``."""
    _, scale = clear_denominators([T.origin, *T.length_vector()])
    return Iet(T.alphabet, T.order2, [x * scale for x in T.length_vector()],
               T.origin * scale), scale


def _as_union(X):
    return FiniteUnion([X]) if isinstance(X, SemiInterval) else X


def set_complexity(X):
    """Largest height of a boundary point of ``X``."""
    X = _as_union(X)
    if X.is_empty():
        raise ValueError("complexity of an empty set")
    return max(height_psi(z) for z in X.boundary())


def reduced_complexity(X):
    """``|X|`` times :func:`set_complexity`."""
    X = _as_union(X)
    return X.measure * set_complexity(X)


def u_bound(T):
    """Largest height among translation values, separation points, their
    images and the ends of the domain.  ``T`` must be integral."""
    pts = list(T.alpha.values()) + T.separation_points()
    pts += [T(g) for g in T.separation_points()] + [T.origin, T.r]
    return max(height_psi(z) for z in pts)


def return_time(T, X, which="rho+", cap=None):
    """Exact return times of a finite union (or semi-interval) ``X``.

    ``rho+``: least ``n >= 1`` with ``T^n(X)`` inside ``X u ... u T^{n-1}(X)``;
    ``rho-``: the same for ``T^{-1}``; ``sigma+``/``sigma-``: least ``n >= 1``
    with ``T^{+-n}(X)`` meeting ``X``.
    """
    X = _as_union(X)
    if X.is_empty():
        raise ValueError("return time of an empty set")
    if which not in ("rho+", "rho-", "sigma+", "sigma-"):
        raise ValueError(f"unknown return time {which!r}")
    if cap is None:
        cap = 64 * max(1, -((-T.total_length / X.measure).__floor__()))
    inverse = which.endswith("-")
    covered = X
    Y = X
    for n in range(1, cap + 1):
        Y = image(T, Y, inverse)
        if which.startswith("sigma"):
            if not (Y & X).is_empty():
                return n
        else:
            if Y.issubset(covered):
                return n
            covered = covered | Y
    raise CapExceeded(f"{which} of {X} exceeds {cap}")


def orbit_cover(T, X, n, inverse=False):
    """``X u T(X) u ... u T^{n-1}(X)``."""
    X = _as_union(X)
    covered, Y = X, X
    for _ in range(n - 1):
        Y = image(T, Y, inverse)
        covered = covered | Y
    return covered


def boundary_orbit(T, m, n):
    """``T^i(Sep(T))`` for ``-m+1 <= i <= n``, as a frozenset."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    pts = set()
    for g in T.separation_points():
        z = T.iterate(g, 1 - m)
        for _ in range(-m + 1, n + 1):
            pts.add(z)
            z = T(z)
    return frozenset(pts)


def boundary_cells(T, m, n):
    """The semi-intervals cut out of the domain by :func:`boundary_orbit`."""
    cuts = sorted(boundary_orbit(T, m, n) | {T.origin, T.r})
    return [SemiInterval(x, y) for x, y in zip(cuts, cuts[1:])]


def in_endpoint_family(T, J, m, n):
    """Whether both ends of ``J`` lie in the boundary orbit (or are the ends
    of the domain)."""
    pts = boundary_orbit(T, m, n) | {T.origin, T.r}
    return J.lo in pts and J.hi in pts


# -- induction graphs ----------------------------------------------------------

@dataclass
class InductionGraph:
    """Graph of equivalence (or similarity) classes under the two inductions.

    ``vertices[i]`` is a canonical form, ``reps[i]`` the transformation
    (in the coordinates of the root) through which it was found,
    ``paths[i]`` the step sequence from the root and ``thetas[i]`` the
    automorphism along it.  ``edges`` holds ``(i, kind, j)`` with kind
    ``"R"`` or ``"L"``; :meth:`arcs` forgets the kinds.
    """

    mode: str
    vertices: list = field(default_factory=list)
    reps: list = field(default_factory=list)
    paths: list = field(default_factory=list)
    thetas: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    domains: list = field(default_factory=list)
    root: int = 0

    def arcs(self):
        seen, out = set(), []
        for i, _, j in self.edges:
            if (i, j) not in seen:
                seen.add((i, j))
                out.append((i, j))
        return out

    def successor(self, i, kind):
        for a, k, b in self.edges:
            if a == i and k == kind:
                return b
        return None

    def index(self, T):
        return self.vertices.index(canonical_form(T, self.mode))

    def __len__(self):
        return len(self.vertices)


def build_graph(T, mode="equivalence", max_vertices=10_000):
    """Breadth-first construction of the induction graph of ``T``.

    Raises :class:`NotRegular` if an induction step meets a connection.
    """
    g = InductionGraph(mode)
    index = {}

    def visit(S, path, theta):
        key = canonical_form(S, mode)
        if key in index:
            return index[key], False
        if len(g.vertices) >= max_vertices:
            raise VertexBudgetExceeded(f"more than {max_vertices} vertices")
        index[key] = len(g.vertices)
        g.vertices.append(key)
        g.reps.append(S)
        g.paths.append(path)
        g.thetas.append(theta)
        return index[key], True

    visit(T, "", Morphism.identity(T.alphabet))
    g.domains.append(T.domain)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        S = g.reps[i]
        if S.size < 2:
            continue
        for kind in ("R", "L"):
            try:
                st = rauzy_step(S, kind)
            except ConnectionDetected as exc:
                raise NotRegular(
                    f"connection while inducing vertex {i} ({kind}): {exc}",
                    certificate={"vertex": i, "path": g.paths[i] + kind, "point": exc.point},
                ) from None
            g.domains.append(st.result.domain)
            j, new = visit(st.result, g.paths[i] + kind, g.thetas[i] * st.automorphism)
            g.edges.append((i, kind, j))
            if new:
                queue.append(j)
    return g


def emit_dot(graph, name="G"):
    """DOT text of an induction graph; kinds label edges only in equivalence
    mode."""
    sym = {"R": "ψ", "L": "φ"}
    lines = [f"digraph {name} {{"]
    for i, v in enumerate(graph.vertices):
        label = v.label().replace('"', '\\"')
        extra = ", peripheries=2" if i == graph.root else ""
        lines.append(f'  v{i} [label="{label}"{extra}];')
    if graph.mode == "equivalence":
        for i, k, j in graph.edges:
            lines.append(f'  v{i} -> v{j} [label="{sym[k]}"];')
    else:
        for i, j in graph.arcs():
            lines.append(f"  v{i} -> v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _shortest_cycle(g, v):
    """Shortest step sequence leading from ``v`` back to ``v``."""
    out = {}
    for i, k, j in g.edges:
        out.setdefault(i, []).append((k, j))
    prev = {}
    queue = deque()
    for k, j in out.get(v, []):
        if j == v:
            return k
        if j not in prev:
            prev[j] = (None, k)
            queue.append(j)
    while queue:
        x = queue.popleft()
        for k, j in out.get(x, []):
            if j == v:
                steps = [k]
                while x is not None:
                    p, kk = prev[x]
                    steps.append(kk)
                    x = p
                return "".join(reversed(steps))
            if j not in prev:
                prev[j] = (x, k)
                queue.append(j)
    return None


@dataclass
class MorphicPresentation:
    """``path_morphism(cycle_morphism^omega(seed))`` codes the root."""

    path_morphism: Morphism
    cycle_morphism: Morphism
    seed: str
    path: str = ""
    cycle: str = ""
    power: int = 1

    def factors(self, n):
        return fixed_point_factors(self.cycle_morphism, self.seed, n, self.path_morphism)

    def prefix(self, length):
        w = self.cycle_morphism.fixed_point_prefix(self.seed, length)
        return self.path_morphism(w)[:length]


def fixed_point_factors(eta, seed, n, outer=None):
    """Factors of length ``<= n`` of ``outer(eta^omega(seed))``, computed
    exactly: first the two-letter factors of the fixed point by closure,
    then long enough images of them."""
    if outer is None:
        outer = Morphism.identity(eta.domain)
    w = eta.fixed_point_prefix(seed, 2)
    two = {w[k:k + 2] for k in range(len(w) - 1)}
    todo = list(two)
    while todo:
        u = eta(todo.pop())
        for k in range(len(u) - 1):
            if u[k:k + 2] not in two:
                two.add(u[k:k + 2])
                todo.append(u[k:k + 2])
    # every factor of length <= n of the fixed point sits inside eta^j(xy)
    blocks = list(two)
    letters = {a: a for a in eta.domain}
    for _ in range(200):
        if min(len(u) for u in letters.values()) >= n:
            break
        blocks = [eta(b) for b in blocks]
        letters = {a: eta(u) for a, u in letters.items()}
    else:
        raise CapExceeded("the morphism does not grow")
    inner = set()
    for b in blocks:
        for k in range(len(b)):
            for m in range(1, n + 1):
                if k + m <= len(b):
                    inner.add(b[k:k + m])
    out = {""}
    for u in inner:
        img = outer(u)
        for k in range(len(img)):
            for m in range(1, n + 1):
                if k + m <= len(img):
                    out.add(img[k:k + m])
    return out


def extract_primitive_morphism(T, max_vertices=10_000, max_power=64):
    """A primitive morphism ``eta``, a morphism ``theta`` and a letter ``a``
    such that the factors of ``theta(eta^omega(a))`` are those of ``T``.

    Uses the shortest cycle of the equivalence graph (ties broken by
    discovery order), reached from the root along the recorded BFS path.
    """
    g = build_graph(T, "equivalence", max_vertices)
    best = None
    for v in range(len(g)):
        c = _shortest_cycle(g, v)
        if c is not None and (best is None or len(c) < len(best[1])):
            best = (v, c)
    if best is None:
        raise NotRegular("the induction graph has no cycle")
    v, cycle = best
    S = g.reps[v]
    C, theta_c = apply_chi(S, cycle)
    rho = dict(zip(S.alphabet, C.alphabet))
    eta0 = Morphism({a: theta_c[rho[a]] for a in S.alphabet})
    eta = eta0
    for k in range(1, max_power + 1):
        if eta.is_primitive(S.alphabet):
            for a in S.alphabet:
                if eta[a].startswith(a) and len(eta[a]) > 1:
                    return MorphicPresentation(g.thetas[v], eta, a, g.paths[v], cycle, k)
        eta = eta * eta0
    raise CapExceeded(f"no suitable power of the cycle morphism up to {max_power}")


# -- two intervals ------------------------------------------------------------

def euclid_digits(T, n):
    """Continued fraction digits of ``lambda_1/lambda_2`` for a two interval
    exchange, read as run lengths of right induction cases.

    When ``lambda_1 < lambda_2`` the expansion starts with a 0.  A rational
    ratio ends in a connection: the last digit is emitted and then
    :class:`ConnectionDetected` is raised, with the digits found so far in its
    ``digits`` attribute.
    """
    if T.size != 2:
        raise ValueError("euclid_digits needs a two interval exchange")
    digits = []
    first, run, last = True, 0, None
    S = T
    while len(digits) < n:
        try:
            st = rauzy_step(S, "R")
        except ConnectionDetected as exc:
            if run:
                digits.append(run + 1)
            shown = " ".join(map(str, digits[:n])) or "none"
            err = ConnectionDetected(f"rational ratio, digits: {shown} ({exc})",
                                     point=exc.point, step=len(digits))
            err.digits = digits[:n]
            raise err from None
        # case 1 subtracts the second length from the first
        if first:
            first = False
            if st.case == 0:
                digits.append(0)
        if st.case == last or last is None:
            run += 1
        else:
            digits.append(run)
            run = 1
        last = st.case
        S = st.result
    return digits[:n]


def certify_regular(T, depth=50, max_vertices=10_000):
    """Declare ``T`` regular when the equivalence graph closes without any
    connection and no connection shows up within ``depth`` iterations.

    Returns the graph; raises :class:`NotRegular` otherwise.
    """
    conn = idoc_probe(T, depth)
    if conn is not None:
        raise NotRegular(f"T^{conn.h}(gamma_{conn.i}) = gamma_{conn.j}", certificate=conn)
    return build_graph(T, "equivalence", max_vertices)


def pi_bounds(T, graph=None):
    """Reduced complexities of every domain met while building the similarity
    graph of ``T``, measured on the integral rescaling.  Returns
    ``(values, scale)``."""
    if graph is None:
        graph = build_graph(T, "similarity")
    _, scale = integral_rescaling(T)
    vals = []
    for J in graph.domains:
        X = FiniteUnion.of(J.lo * scale, J.hi * scale)
        vals.append(reduced_complexity(X))
    return vals, scale

