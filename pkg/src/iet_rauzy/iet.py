"""Interval exchange transformations over a quadratic field.

An :class:`Iet` is given by a top order of its letters (the order of the
exchanged semi-intervals ``I_a``), a bottom order (the order of their images
``J_a``), a positive length per letter and the left end ``origin`` of the
domain.  Letters are single characters so that words are plain strings.
"""

import itertools
from dataclasses import dataclass
from bisect import bisect_right

from .errors import (
    AlphabetMismatch,
    DegenerateTransformation,
    NonPositiveLength,
    OutOfDomain,
    RadicandMismatch,
)
from .qfield import QuadNum

__all__ = [
    "SemiInterval",
    "Iet",
    "CanonicalIet",
    "Connection",
    "iet_new",
    "iet_apply",
    "iet_apply_inv",
    "iet_iterate",
    "locate",
    "separation_points",
    "mirror",
    "canonical_form",
    "is_indecomposable",
    "idoc_probe",
    "epsilon_for",
]


@dataclass(frozen=True)
class SemiInterval:
    """The nonempty semi-interval ``[lo, hi[``."""

    lo: QuadNum
    hi: QuadNum

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty semi-interval [{self.lo}, {self.hi}[")

    @property
    def length(self):
        return self.hi - self.lo

    def __contains__(self, z):
        return self.lo <= z < self.hi

    def contains_open(self, z):
        return self.lo < z < self.hi

    def issubset(self, other):
        return other.lo <= self.lo and self.hi <= other.hi

    def intersect(self, other):
        """The intersection, or ``None`` when it is empty."""
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo < hi:
            return SemiInterval(lo, hi)
        return None

    def shift(self, t):
        return SemiInterval(self.lo + t, self.hi + t)

    def __str__(self):
        return f"[{self.lo}, {self.hi}["


@dataclass(frozen=True)
class Connection:
    """Certificate ``T^h(gamma_i) = gamma_j`` between nonzero separation points
    (indices are 1-based, in the top order)."""

    i: int
    j: int
    h: int


class Iet:
    """An interval exchange transformation.

    Attributes computed on construction, all keyed by letter: ``gamma`` and
    ``mu`` (left/right ends of ``I_a``), ``delta`` and ``nu`` (left/right ends
    of ``J_a``), ``alpha`` (translation values).  ``r`` is the right end of the
    domain.
    """

    def __init__(self, alphabet, order2, lengths, origin=0):
        alphabet = tuple(alphabet)
        order2 = tuple(order2)
        if not alphabet:
            raise AlphabetMismatch("empty alphabet")
        if len(set(alphabet)) != len(alphabet):
            raise AlphabetMismatch(f"repeated letters in {alphabet}")
        for a in alphabet:
            if not isinstance(a, str) or len(a) != 1:
                raise AlphabetMismatch(f"letters must be single characters, got {a!r}")
        if sorted(order2) != sorted(alphabet) or len(order2) != len(alphabet):
            raise AlphabetMismatch(f"bottom order {order2} is not a permutation of {alphabet}")
        if isinstance(lengths, dict):
            if set(lengths) != set(alphabet):
                raise AlphabetMismatch("length keys do not match the alphabet")
            lengths = {a: _q(lengths[a]) for a in alphabet}
        else:
            lengths = list(lengths)
            if len(lengths) != len(alphabet):
                raise AlphabetMismatch("one length per letter is required")
            lengths = {a: _q(x) for a, x in zip(alphabet, lengths)}
        origin = _q(origin)
        ds = {x.d for x in [origin, *lengths.values()] if not x.is_rational()}
        if len(ds) > 1:
            raise RadicandMismatch(f"mixed radicands {sorted(ds)}")
        for a in alphabet:
            if lengths[a] <= 0:
                raise NonPositiveLength(f"length of {a!r} is {lengths[a]}, must be positive")

        self.alphabet = alphabet
        self.order2 = order2
        self.lengths = lengths
        self.origin = origin
        self.d = ds.pop() if ds else max(x.d for x in [origin, *lengths.values()])

        self.gamma, self.mu = {}, {}
        z = origin
        for a in alphabet:
            self.gamma[a] = z
            z = z + lengths[a]
            self.mu[a] = z
        self.r = z
        self.delta, self.nu = {}, {}
        z = origin
        for a in order2:
            self.delta[a] = z
            z = z + lengths[a]
            self.nu[a] = z
        self.alpha = {a: self.nu[a] - self.mu[a] for a in alphabet}
        self._gammas = [self.gamma[a] for a in alphabet]
        self._deltas = [self.delta[a] for a in order2]

    # -- basic data ----------------------------------------------------------

    @property
    def size(self):
        return len(self.alphabet)

    @property
    def pi(self):
        """Positional permutation: ``pi[i]`` is the bottom position of the
        ``i``-th letter in the top order (0-based)."""
        pos = {a: k for k, a in enumerate(self.order2)}
        return tuple(pos[a] for a in self.alphabet)

    @property
    def domain(self):
        return SemiInterval(self.origin, self.r)

    @property
    def total_length(self):
        return self.r - self.origin

    def length_vector(self):
        return tuple(self.lengths[a] for a in self.alphabet)

    def I(self, a):  # noqa: E743
        return SemiInterval(self.gamma[a], self.mu[a])

    def J(self, a):
        return SemiInterval(self.delta[a], self.nu[a])

    def separation_points(self):
        return list(self._gammas)

    # -- evaluation ----------------------------------------------------------

    def _check(self, z):
        if not (self.origin <= z < self.r):
            raise OutOfDomain(f"{z} is outside [{self.origin}, {self.r}[")

    def locate(self, z):
        """The letter ``a`` with ``z`` in ``I_a``."""
        self._check(z)
        return self.alphabet[bisect_right(self._gammas, z) - 1]

    def locate_image(self, z):
        """The letter ``a`` with ``z`` in ``J_a``."""
        self._check(z)
        return self.order2[bisect_right(self._deltas, z) - 1]

    def __call__(self, z):
        return z + self.alpha[self.locate(z)]

    def apply(self, z):
        return self(z)

    def apply_inv(self, z):
        return z - self.alpha[self.locate_image(z)]

    def iterate(self, z, n):
        f = self.apply if n >= 0 else self.apply_inv
        self._check(z)
        for _ in range(abs(n)):
            z = f(z)
        return z

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Iet):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.order2 == other.order2
                and self.lengths == other.lengths and self.origin == other.origin)

    def __hash__(self):
        return hash((self.alphabet, self.order2, self.length_vector(), self.origin))

    def __repr__(self):
        lens = ", ".join(f"{a}: {self.lengths[a]}" for a in self.alphabet)
        return (f"Iet({' '.join(self.alphabet)} / {' '.join(self.order2)}; "
                f"[{self.origin}, {self.r}[; {lens})")

    def relabel(self, mapping):
        return Iet([mapping[a] for a in self.alphabet], [mapping[a] for a in self.order2],
                   [self.lengths[a] for a in self.alphabet], self.origin)


def _q(x):
    if isinstance(x, QuadNum):
        return x
    return QuadNum(x)


def iet_new(alphabet, order2, lengths, origin=0):
    return Iet(alphabet, order2, lengths, origin)


def iet_apply(T, z):
    return T.apply(z)


def iet_apply_inv(T, z):
    return T.apply_inv(z)


def iet_iterate(T, z, n):
    return T.iterate(z, n)


def locate(T, z):
    return T.locate(z)


def separation_points(T):
    return T.separation_points()


def mirror(T):
    """The mirror image: both orders reversed, lengths read right to left."""
    return Iet(T.alphabet[::-1], T.order2[::-1],
               {a: T.lengths[a] for a in T.alphabet}, T.origin)


@dataclass(frozen=True)
class CanonicalIet:
    """Normal form of an IET under equivalence (or similarity).

    ``pi`` is positional (see :attr:`Iet.pi`), ``lengths`` are normalized to
    total length 1 on ``[0, 1[``.
    """

    pi: tuple
    lengths: tuple
    mode: str = "equivalence"
    mirrored: bool = False

    def key(self):
        return (self.pi, self.lengths)

    def to_iet(self, letters=None):
        s = len(self.pi)
        if letters is None:
            letters = _default_letters(s)
        order2 = [None] * s
        for i, j in enumerate(self.pi):
            order2[j] = letters[i]
        return Iet(letters, order2, list(self.lengths), 0)

    def label(self):
        return "(" + " ".join(str(j + 1) for j in self.pi) + ") [" + \
            ", ".join(str(x) for x in self.lengths) + "]"

    def __eq__(self, other):
        if not isinstance(other, CanonicalIet):
            return NotImplemented
        return self.key() == other.key() and self.mode == other.mode

    def __hash__(self):
        return hash((self.key(), self.mode))


def _default_letters(s):
    if s <= 26:
        return tuple(chr(ord("a") + k) for k in range(s))
    return tuple(chr(0x100 + k) for k in range(s))


def _normalized(T):
    total = T.total_length
    return T.pi, tuple(T.lengths[a] / total for a in T.alphabet)


def canonical_form(T, mode="equivalence"):
    """Canonical representative of the class of ``T``.

    In ``"equivalence"`` mode the lengths are rescaled to sum to 1.  In
    ``"similarity"`` mode the smaller (lexicographically, by permutation then
    exact length values) of the normal forms of ``T`` and of its mirror is
    kept, and ``mirrored`` records whether the mirror won.
    """
    if mode not in ("equivalence", "similarity"):
        raise ValueError(f"unknown mode {mode!r}")
    pi, lens = _normalized(T)
    if mode == "equivalence":
        return CanonicalIet(pi, lens, mode, False)
    mpi, mlens = _normalized(mirror(T))
    if (mpi, mlens) < (pi, lens):
        return CanonicalIet(mpi, mlens, mode, True)
    return CanonicalIet(pi, lens, mode, False)


def is_indecomposable(pi):
    """True unless some proper prefix ``{0..k-1}`` of positions is mapped
    onto itself.  ``pi`` is positional (see :attr:`Iet.pi`)."""
    pi = tuple(pi)
    seen = set()
    for k in range(len(pi) - 1):
        seen.add(pi[k])
        if max(seen) == k:
            return False
    return True


def idoc_probe(T, depth):
    """Bounded search for a connection between nonzero separation points.

    Returns a :class:`Connection` ``(i, j, h)`` with ``T^h(gamma_i) =
    gamma_j``, ``0 <= h <= depth`` (``i != j`` when ``h = 0``), or ``None``
    if the orbits stay disjoint up to ``depth`` steps.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    seps = T.separation_points()[1:]
    where = {g: j for j, g in enumerate(seps, start=2)}
    for i, g in enumerate(seps, start=2):
        z = g
        for h in range(depth + 1):
            j = where.get(z)
            if j is not None and (h > 0 or j != i):
                return Connection(i, j, h)
            z = T(z)
    return None


def epsilon_for(T, N):
    """Smallest nonzero ``|alpha_{i_1} + ... + alpha_{i_M}|`` over ``M <= N``.

    Points returning within distance below this value need at least ``N``
    iterations of ``T``.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    alphas = sorted(set(T.alpha.values()))
    best = None
    for M in range(1, N + 1):
        for combo in itertools.combinations_with_replacement(alphas, M):
            v = abs(sum(combo[1:], combo[0]))
            if v and (best is None or v < best):
                best = v
    if best is None:
        raise DegenerateTransformation("every translation sum vanishes")
    return best
