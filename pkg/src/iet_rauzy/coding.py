"""Natural codings, factor languages, return words and derived sets."""

import itertools

from .errors import (
    CapExceeded,
    DecomposablePermutation,
    NotACodingMorphism,
    WordNotInLanguage,
)
from .iet import SemiInterval, is_indecomposable

__all__ = [
    "Morphism",
    "FactorSet",
    "natural_coding",
    "interval_I",
    "interval_J",
    "word_translation",
    "factors",
    "first_return_cells",
    "return_words",
    "coding_morphism",
    "derived_set",
    "derived_set_combinatorial",
    "derived_set_geometric",
]


class Morphism:
    """A non-erasing morphism ``letter -> word`` between free monoids.

    Composition follows function composition: ``(f * g)(w) == f(g(w))``.
    """

    def __init__(self, images):
        images = dict(images)
        for a, w in images.items():
            if not w:
                raise ValueError(f"image of {a!r} is empty")
        self.images = images

    @classmethod
    def identity(cls, alphabet):
        return cls({a: a for a in alphabet})

    @property
    def domain(self):
        return tuple(self.images)

    def __call__(self, word):
        return "".join(self.images[a] for a in word)

    def __getitem__(self, a):
        return self.images[a]

    def __mul__(self, other):
        return Morphism({a: self(w) for a, w in other.images.items()})

    def __pow__(self, k):
        if k < 1:
            raise ValueError("only positive powers")
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(tuple(sorted(self.images.items())))

    def image_set(self):
        return set(self.images.values())

    def incidence_matrix(self, order=None):
        """``M[i][j]`` counts occurrences of letter ``order[i]`` in the image of
        ``order[j]`` (nested lists of ints)."""
        order = tuple(order) if order is not None else self.domain
        return [[self.images[b].count(a) for b in order] for a in order]

    def is_primitive(self, order=None):
        """Some power of the incidence matrix is entrywise positive.

        The search stops at Wielandt's exponent bound ``s^2 - 2s + 2``.
        """
        order = tuple(order) if order is not None else self.domain
        if set(order) != set(self.images) or any(set(w) - set(order) for w in self.images.values()):
            return False
        s = len(order)
        m = [[c > 0 for c in row] for row in self.incidence_matrix(order)]
        p = m
        for _ in range(max(1, s * s - 2 * s + 2)):
            if all(all(row) for row in p):
                return True
            p = [[any(p[i][k] and m[k][j] for k in range(s)) for j in range(s)] for i in range(s)]
        return all(all(row) for row in p)

    def fixed_point_prefix(self, a, length):
        """Prefix of ``self^omega(a)`` of at least ``length`` letters."""
        w = self.images[a]
        if not w.startswith(a) or len(w) < 2:
            raise ValueError(f"image of {a!r} must start with {a!r} and be longer than one letter")
        w = a
        while len(w) < length:
            w = self(w)
        return w

    def __repr__(self):
        return "Morphism(" + ", ".join(f"{a}->{w}" for a, w in self.images.items()) + ")"

    def __str__(self):
        return ", ".join(f"{a}->{w}" for a, w in self.images.items())


def determinant(matrix):
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    m = [list(row) for row in matrix]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


class FactorSet:
    """A finite factorial set of words, with all words up to ``max_len``."""

    def __init__(self, words, max_len, order=None):
        self.words = frozenset(words)
        self.max_len = max_len
        self.order = tuple(order) if order is not None else None

    def of_length(self, k):
        return self.sorted(w for w in self.words if len(w) == k)

    def sorted(self, words=None):
        words = self.words if words is None else words
        if self.order is None:
            return sorted(words, key=lambda w: (len(w), w))
        rank = {a: i for i, a in enumerate(self.order)}
        return sorted(words, key=lambda w: (len(w), [rank[a] for a in w]))

    def counts(self):
        return [len(self.of_length(k)) for k in range(self.max_len + 1)]

    def __contains__(self, w):
        return w in self.words

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self.words)

    def __eq__(self, other):
        if isinstance(other, FactorSet):
            return self.words == other.words
        if isinstance(other, (set, frozenset)):
            return self.words == other
        return NotImplemented

    def __repr__(self):
        return f"FactorSet({len(self.words)} words, max_len={self.max_len})"


def natural_coding(T, z, n):
    """First ``n`` letters of the natural coding of ``T`` at ``z``."""
    T._check(z)
    out = []
    for _ in range(n):
        a = T.locate(z)
        out.append(a)
        z = z + T.alpha[a]
    return "".join(out)


def word_translation(T, w):
    """Sum of the translation values of the letters of ``w``."""
    if not w:
        raise ValueError("empty word")
    total = T.alpha[w[0]]
    for a in w[1:]:
        total = total + T.alpha[a]
    return total


def interval_I(T, w):
    """``I_w``: points whose coding starts with ``w`` (``None`` if empty)."""
    cur = T.domain
    shift = 0
    for a in w:
        cur = cur.intersect(T.I(a).shift(-shift))
        if cur is None:
            return None
        shift = shift + T.alpha[a]
    return cur


def interval_J(T, w):
    """``J_w = T^{|w|}(I_w)`` (``None`` if empty)."""
    cur = interval_I(T, w)
    if cur is None or not w:
        return cur
    return cur.shift(word_translation(T, w))


def in_language(T, w):
    return interval_I(T, w) is not None


def factors(T, n):
    """All words of length at most ``n`` with nonempty ``I_w``.

    Built breadth first: ``I_{wa} = I_w  ∩  (I_a - alpha_w)``.
    """
    if not is_indecomposable(T.pi):
        raise DecomposablePermutation(f"permutation {T.pi} is decomposable")
    words = {""}
    layer = [("", T.domain, 0)]
    for _ in range(n):
        nxt = []
        for w, iw, shift in layer:
            for a in T.alphabet:
                cell = iw.intersect(T.I(a).shift(-shift))
                if cell is not None:
                    nxt.append((w + a, cell, shift + T.alpha[a]))
        layer = nxt
        words.update(w for w, _, _ in layer)
    return FactorSet(words, n, T.alphabet)


def first_return_cells(T, I, backward=False, cap=None):
    """Partition ``I`` by the first return of ``T`` (or of ``T^{-1}``).

    Returns a list of ``(cell, n, word, image)`` sorted by cell: points of
    ``cell`` come back to ``I`` after exactly ``n`` steps, landing in
    ``image``, and ``word`` is the coding read along the way (for the backward
    return it is the coding of the returned point, i.e. read forwards from the
    image).  Cells are cut at every separation point met on the way.
    """
    if cap is None:
        cap = 64 * max(1, _ratio_ceil(T.total_length, I.length))
    cells = []
    pending = [(I, I, 0, "")]
    while pending:
        src, cur, n, word = pending.pop()
        if n >= cap:
            raise CapExceeded(f"no return to {I} within {cap} steps")
        for a in (T.order2 if backward else T.alphabet):
            piece = cur.intersect(T.J(a) if backward else T.I(a))
            if piece is None:
                continue
            offset = piece.lo - cur.lo
            sub_src = SemiInterval(src.lo + offset, src.lo + offset + piece.length)
            if backward:
                img, w = piece.shift(-T.alpha[a]), a + word
            else:
                img, w = piece.shift(T.alpha[a]), word + a
            for part, inside in _split(img, I):
                off = part.lo - img.lo
                part_src = SemiInterval(sub_src.lo + off, sub_src.lo + off + part.length)
                if inside:
                    cells.append((part_src, n + 1, w, part))
                else:
                    pending.append((part_src, part, n + 1, w))
    cells.sort(key=lambda c: c[0].lo)
    return cells


def _split(img, I):
    """Cut ``img`` into the pieces inside and outside ``I``."""
    out = []
    if img.lo < I.lo:
        out.append((SemiInterval(img.lo, min(img.hi, I.lo)), False))
    mid = img.intersect(I)
    if mid is not None:
        out.append((mid, True))
    if img.hi > I.hi:
        out.append((SemiInterval(max(img.lo, I.hi), img.hi), False))
    return out


def _ratio_ceil(a, b):
    return -((-a) / b).__floor__()


def return_words(T, w, side="right"):
    """First right (or left) return words to ``w``, found geometrically.

    Right return words are read along the first return of ``T`` to ``J_w``;
    left return words along the first return of ``T^{-1}`` to ``I_w``.
    """
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', not {side!r}")
    I = interval_I(T, w)
    if I is None:
        raise WordNotInLanguage(f"{w!r} is not a factor")
    if side == "right":
        target = interval_J(T, w) if w else T.domain
        return {word for _, _, word, _ in first_return_cells(T, target)}
    return {word for _, _, word, _ in first_return_cells(T, I, backward=True)}


def coding_morphism(words, alphabet):
    """Coding morphism onto ``words``: sorted images (by ``alphabet`` order)
    assigned to the letters of ``alphabet`` in order."""
    rank = {a: i for i, a in enumerate(alphabet)}
    images = sorted(words, key=lambda w: [rank[a] for a in w])
    if len(images) > len(alphabet):
        raise NotACodingMorphism(f"{len(images)} words but only {len(alphabet)} letters")
    return Morphism(dict(zip(alphabet, images)))


def _check_coding(T, w, f):
    rets = return_words(T, w)
    imgs = list(f.images.values())
    if len(set(imgs)) != len(imgs) or set(imgs) != rets:
        raise NotACodingMorphism(
            f"{f} is not a bijection onto the return words {sorted(rets)}")
    return rets


def derived_set_combinatorial(T, w, f, n):
    """``{y : w f(y) in F(T)}`` for ``|y| <= n``; membership in ``F(T)`` is
    decided exactly by nonemptiness of ``I_{w f(y)}``."""
    _check_coding(T, w, f)
    letters = sorted(f.images)
    words = {""}
    layer = [""]
    for _ in range(n):
        layer = [y + b for y in layer for b in letters if in_language(T, w + f(y + b))]
        words.update(layer)
    return FactorSet(words, n, letters)


def derived_set_geometric(T, w, f, n):
    """Factors of the transformation induced on ``J_w``, recoded through
    ``f``: each induced letter ``x`` becomes ``f^{-1}(theta(x))``."""
    from .induction import chi_search, apply_chi

    _check_coding(T, w, f)
    if not w:
        S, theta = T, Morphism.identity(T.alphabet)
    else:
        S, theta = apply_chi(T, chi_search(T, interval_J(T, w)))
    back = {img: b for b, img in f.images.items()}
    rename = {x: back[theta[x]] for x in S.alphabet}
    fs = factors(S, n)
    return FactorSet({"".join(rename[x] for x in y) for y in fs.words}, n, sorted(f.images))


def derived_set(T, w, f, n):
    """Derived set of ``F(T)`` with respect to ``f``, up to length ``n``.

    Computed combinatorially and geometrically; the two must agree.
    """
    a = derived_set_combinatorial(T, w, f, n)
    b = derived_set_geometric(T, w, f, n)
    if a != b:
        raise AssertionError(f"derived set mismatch for w={w!r}: {sorted(a.words ^ b.words)}")
    return a


def every_letter_within(T, N):
    """True if every letter occurs in every factor of length ``N``."""
    fs = factors(T, N)
    return all(set(u) == set(T.alphabet) for u in fs.of_length(N))


def words_over(alphabet, n):
    for k in range(n + 1):
        for t in itertools.product(alphabet, repeat=k):
            yield "".join(t)
