"""Rauzy inductions, division points, admissibility and induced maps.

Induction steps keep letter names: an induced transformation uses the same
alphabet as its parent, only the top and bottom orders and the lengths
change.  A sequence of steps is written as a string over ``{"L", "R"}``
(``L`` for left induction, ``R`` for right induction) in the order the steps
are applied, so ``"RLL"`` means a right step followed by two left steps.
"""

import math
from dataclasses import dataclass, field

from .coding import Morphism, first_return_cells, interval_J
from .errors import (
    CapExceeded,
    ConnectionDetected,
    NotAdmissible,
    OutOfDomain,
    WordNotInLanguage,
)
from .iet import Iet, SemiInterval

__all__ = [
    "InductionStep",
    "DivisionData",
    "right_domain",
    "left_domain",
    "rauzy_right",
    "rauzy_left",
    "rauzy_step",
    "parse_chi",
    "apply_chi",
    "rho_point",
    "division_points",
    "is_admissible",
    "admissibility_witness",
    "is_right_admissible",
    "is_left_admissible",
    "chi_search",
    "induce",
    "first_return_map",
    "return_basis",
]

DEFAULT_CAP_FACTOR = 64


@dataclass(frozen=True)
class InductionStep:
    kind: str  # "R" or "L"
    case: int  # 0: a bottom interval is suppressed, 1: a top interval is
    automorphism: Morphism
    result: Iet


def right_domain(T):
    """``[l, max(gamma_s, delta_pi(s))[``."""
    t, b = T.alphabet[-1], T.order2[-1]
    if T.gamma[t] == T.delta[b]:
        raise ConnectionDetected(f"right ends coincide at {T.gamma[t]}", point=T.gamma[t])
    return SemiInterval(T.origin, max(T.gamma[t], T.delta[b]))


def left_domain(T):
    """``[min(mu_1, nu_pi(1)), r[``."""
    t, b = T.alphabet[0], T.order2[0]
    if T.mu[t] == T.nu[b]:
        raise ConnectionDetected(f"left ends coincide at {T.mu[t]}", point=T.mu[t])
    return SemiInterval(min(T.mu[t], T.nu[b]), T.r)


def _move(order, x, anchor, after):
    order = [y for y in order if y != x]
    k = order.index(anchor)
    order.insert(k + 1 if after else k, x)
    return order


def rauzy_right(T):
    """Induce ``T`` on :func:`right_domain`.

    With ``t`` the last top letter and ``b`` the last bottom letter, the
    shorter of ``I_t`` and ``J_b`` is cut off.  The letter that now travels
    through the removed piece gets the image ``b t`` under the automorphism.
    """
    right_domain(T)
    t, b = T.alphabet[-1], T.order2[-1]
    lt, lb = T.lengths[t], T.lengths[b]
    lengths = dict(T.lengths)
    top, bottom = list(T.alphabet), list(T.order2)
    if lt > lb:
        case, x = 0, b
        lengths[t] = lt - lb
        bottom = _move(bottom, b, t, after=True)
    else:
        case, x = 1, t
        lengths[b] = lb - lt
        top = _move(top, t, b, after=True)
    theta = Morphism.identity(T.alphabet)
    theta.images[x] = b + t
    S = Iet(top, bottom, lengths, T.origin)
    return InductionStep("R", case, theta, S)


def rauzy_left(T):
    """Induce ``T`` on :func:`left_domain` (mirror image of :func:`rauzy_right`)."""
    left_domain(T)
    t, b = T.alphabet[0], T.order2[0]
    lt, lb = T.lengths[t], T.lengths[b]
    lengths = dict(T.lengths)
    top, bottom = list(T.alphabet), list(T.order2)
    if lt > lb:
        case, x, cut = 0, b, lb
        lengths[t] = lt - lb
        bottom = _move(bottom, b, t, after=False)
    else:
        case, x, cut = 1, t, lt
        lengths[b] = lb - lt
        top = _move(top, t, b, after=False)
    theta = Morphism.identity(T.alphabet)
    theta.images[x] = b + t
    S = Iet(top, bottom, lengths, T.origin + cut)
    return InductionStep("L", case, theta, S)


def rauzy_step(T, kind):
    if kind == "R":
        return rauzy_right(T)
    if kind == "L":
        return rauzy_left(T)
    raise ValueError(f"unknown induction kind {kind!r}")


def parse_chi(chi):
    """Normalize a step sequence; accepts ``"RLL"`` or an iterable of
    ``"R"``/``"L"`` (``"psi"``/``"phi"`` are accepted as aliases)."""
    alias = {"R": "R", "L": "L", "psi": "R", "phi": "L", "ψ": "R", "φ": "L"}
    if isinstance(chi, str):
        chi = chi.strip()
        items = list(chi) if all(c in "LR" for c in chi) else chi.split()
    else:
        items = list(chi)
    try:
        return "".join(alias[c] for c in items)
    except KeyError as exc:
        raise ValueError(f"bad induction step {exc.args[0]!r}") from None


def apply_chi(T, chi, steps=None):
    """Apply a step sequence.  Returns ``(chi(T), theta)`` where ``theta`` is
    the composite automorphism ``theta_1 o theta_2 o ... o theta_n``, so that
    the coding of ``T`` at ``z`` is ``theta`` of the coding of ``chi(T)``.

    If ``steps`` is a list, every :class:`InductionStep` is appended to it.
    """
    chi = parse_chi(chi)
    theta = Morphism.identity(T.alphabet)
    S = T
    for k, kind in enumerate(chi):
        try:
            st = rauzy_step(S, kind)
        except ConnectionDetected as exc:
            raise ConnectionDetected(f"step {k} ({kind}): {exc}", point=exc.point, step=k) from None
        if steps is not None:
            steps.append(st)
        theta = theta * st.automorphism
        S = st.result
    return S, theta


# -- division points ---------------------------------------------------------

def _default_cap(T, I, cap):
    if cap is not None:
        return cap
    return DEFAULT_CAP_FACTOR * max(1, math.ceil(T.total_length / I.length))


def rho_point(T, I, z, direction="+", cap=None):
    """Least ``n > 0`` with ``T^n(z)`` in ``]u, v[`` (direction ``"+"``), or
    least ``n >= 0`` with ``T^{-n}(z)`` in ``]u, v[`` (direction ``"-"``)."""
    T._check(z)
    cap = _default_cap(T, I, cap)
    if direction == "+":
        for n in range(1, cap + 1):
            z = T(z)
            if I.contains_open(z):
                return n
    elif direction == "-":
        for n in range(0, cap + 1):
            if I.contains_open(z):
                return n
            z = T.apply_inv(z)
    else:
        raise ValueError(f"direction must be '+' or '-', not {direction!r}")
    raise CapExceeded(f"orbit of {z} does not enter ]{I.lo}, {I.hi}[ within {cap} steps")


@dataclass
class DivisionData:
    interval: SemiInterval
    points: frozenset
    # letter -> (rho_minus, rho_plus, [(k, T^k(gamma)), ...])
    per_separation: dict = field(default_factory=dict)

    def sorted_points(self):
        return sorted(self.points)


def _check_inside(T, I):
    if not I.issubset(T.domain):
        raise OutOfDomain(f"{I} is not inside the domain {T.domain}")


def division_points(T, I, cap=None):
    """Neighbours ``T^k(gamma_a)``, ``-rho^-(gamma_a) <= k < rho^+(gamma_a)``,
    of every separation point."""
    _check_inside(T, I)
    points = set()
    per = {}
    for a in T.alphabet:
        g = T.gamma[a]
        rm = rho_point(T, I, g, "-", cap)
        rp = rho_point(T, I, g, "+", cap)
        nbrs = []
        z = T.iterate(g, -rm)
        for k in range(-rm, rp):
            nbrs.append((k, z))
            z = T(z)
        points.update(p for _, p in nbrs)
        per[a] = (rm, rp, nbrs)
    return DivisionData(I, frozenset(points), per)


def is_admissible(T, I, cap=None):
    div = division_points(T, I, cap)
    ok = lambda x: x in div.points or x == T.r  # noqa: E731
    return ok(I.lo) and ok(I.hi)


def admissibility_witness(T, I, cap=None):
    """Explain why ``I`` is not admissible.

    Returns ``None`` if ``I`` is admissible.  Otherwise a dict with the failing
    ``endpoint``; when the endpoint is ``T^k(gamma_a)`` for some ``|k|`` within
    the cap, also ``letter``, ``k`` and the first ``h`` between 0 and ``k``
    with ``T^h(gamma_a)`` inside ``]u, v[`` (``point`` is that iterate).
    """
    div = division_points(T, I, cap)
    cap = _default_cap(T, I, cap)
    for e in (I.lo, I.hi):
        if e in div.points or e == T.r:
            continue
        info = {"endpoint": e}
        for a in T.alphabet:
            fw, bw = [T.gamma[a]], [T.gamma[a]]
            for _ in range(cap):
                fw.append(T(fw[-1]))
                bw.append(T.apply_inv(bw[-1]))
            if e in fw[1:]:
                k = fw.index(e, 1)
                hs = range(1, k)
                orbit = lambda h: fw[h]  # noqa: E731
            elif e in bw:
                k = -bw.index(e)
                hs = range(0, k, -1)
                orbit = lambda h: bw[-h]  # noqa: E731
            else:
                continue
            info.update(letter=a, k=k)
            for h in hs:
                if I.contains_open(orbit(h)):
                    info.update(h=h, point=orbit(h))
                    break
            break
        return info
    return None


def _one_sided(T, t, cap, right):
    if not (T.origin < t < T.r):
        return False
    beyond = (lambda z: t < z) if right else (lambda z: z < t)
    for a in T.alphabet:
        z = T.gamma[a]
        for _ in range(cap):
            if z == t:
                return True
            if not beyond(z):
                break
            z = T.apply_inv(z)
        z = T.gamma[a]
        for _ in range(cap):
            z = T(z)
            if z == t:
                return True
            if not beyond(z):
                break
    return False


def is_right_admissible(T, t, cap=None):
    """Whether ``[l, t[`` is right admissible: ``t = T^k(gamma_a)`` with every
    iterate strictly between (``0 < h < k`` or ``k < h <= 0``) lying above ``t``."""
    cap = cap or DEFAULT_CAP_FACTOR * max(1, math.ceil(T.total_length / (t - T.origin)))
    return _one_sided(T, t, cap, right=True)


def is_left_admissible(T, t, cap=None):
    """Mirror of :func:`is_right_admissible` for ``[t, r[``."""
    cap = cap or DEFAULT_CAP_FACTOR * max(1, math.ceil(T.total_length / (T.r - t)))
    return _one_sided(T, t, cap, right=False)


# -- realizing admissible intervals -------------------------------------------

def chi_search(T, I, max_steps=None):
    """Step sequence whose induced domain is ``I``.

    Descends greedily, preferring a right step whenever ``I`` fits in its
    domain.  Raises :class:`NotAdmissible` as soon as ``I`` fits in neither
    child domain.
    """
    _check_inside(T, I)
    if max_steps is None:
        max_steps = DEFAULT_CAP_FACTOR * max(1, math.ceil(T.total_length / I.length))
    chi = []
    S = T
    while S.domain != I:
        if len(chi) >= max_steps:
            raise CapExceeded(f"no induction sequence of length <= {max_steps} reaches {I}")
        try:
            if I.issubset(right_domain(S)):
                kind = "R"
            elif I.issubset(left_domain(S)):
                kind = "L"
            else:
                raise NotAdmissible(f"{I} is not admissible",
                                    interval=I, witness=_safe_witness(T, I))
        except ConnectionDetected as exc:
            raise ConnectionDetected(f"step {len(chi)}: {exc}", point=exc.point,
                                     step=len(chi)) from None
        chi.append(kind)
        S = rauzy_step(S, kind).result
    return "".join(chi)


def _safe_witness(T, I):
    try:
        return admissibility_witness(T, I)
    except CapExceeded:
        return None


def induce(T, I, check=False):
    """The transformation induced by ``T`` on the admissible interval ``I``.

    With ``check=True`` the result is compared with an independent
    first-return computation.
    """
    S, _ = apply_chi(T, chi_search(T, I))
    if check:
        expected = first_return_map(T, I)
        got = [(S.I(a), S.alpha[a]) for a in S.alphabet]
        if got != expected:
            raise AssertionError(f"induced map mismatch on {I}: {got} != {expected}")
    return S


def first_return_map(T, I):
    """The first-return map of ``T`` to ``I`` as ``[(cell, translation), ...]``
    sorted by position.  Cells are cut wherever an orbit meets a separation
    point or an end of ``I`` before returning."""
    return [(cell, image.lo - cell.lo) for cell, _, _, image in first_return_cells(T, I)]


def return_basis(T, w):
    """The automorphism ``theta`` attached to ``J_w``; ``theta(A)`` is the set
    of first right return words to ``w``."""
    if not w:
        return Morphism.identity(T.alphabet)
    J = interval_J(T, w)
    if J is None:
        raise WordNotInLanguage(f"{w!r} is not a factor")
    return apply_chi(T, chi_search(T, J))[1]
