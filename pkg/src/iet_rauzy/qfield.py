"""Exact arithmetic in a real quadratic field Q[sqrt(d)].

Elements are :class:`QuadNum` values ``p + q*sqrt(d)`` with rational ``p`` and
``q``.  ``d = 1`` encodes the field of rationals; in that case ``q`` is always
zero.  Comparisons never touch floating point.
"""

import ast
import math
from fractions import Fraction

from .errors import (
    DivisionByZero,
    NegativeRadicand,
    NonIntegralCoefficients,
    NonSquareFreeRadicand,
    ParseError,
    RadicandMismatch,
)

__all__ = [
    "QuadNum",
    "qnum",
    "is_square_free",
    "height_psi",
    "clear_denominators",
    "parse_quadnum",
]


def is_square_free(n):
    if n < 1:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


def _split_square(n):
    """Write ``n = k**2 * m`` with ``m`` square-free; return ``(k, m)``."""
    k, m = 1, n
    f = 2
    while f * f <= m:
        while m % (f * f) == 0:
            m //= f * f
            k *= f
        f += 1
    return k, m


def _check_radicand(d):
    if not isinstance(d, int) or isinstance(d, bool):
        raise TypeError(f"radicand must be an integer, got {d!r}")
    if d < 1:
        raise NegativeRadicand(f"radicand must be >= 1, got {d}")
    if not is_square_free(d):
        raise NonSquareFreeRadicand(f"radicand {d} is not square-free")


def _sign(x):
    return (x > 0) - (x < 0)


class QuadNum:
    """The number ``p + q*sqrt(d)``.

    Instances are immutable and hashable.  Plain ``int`` and ``Fraction``
    operands are promoted into the field of the other operand.  A rational
    element (``q == 0``) may be combined with an element of any field;
    mixing two genuinely different radicands raises
    :class:`RadicandMismatch`.
    """

    __slots__ = ("_p", "_q", "_d")

    def __init__(self, p=0, q=0, d=1):
        _check_radicand(d)
        p = Fraction(p)
        q = Fraction(q)
        if d == 1:
            p, q = p + q, Fraction(0)
        self._p = p
        self._q = q
        self._d = d

    @classmethod
    def _raw(cls, p, q, d):
        obj = object.__new__(cls)
        obj._p = p
        obj._q = q
        obj._d = d
        return obj

    @property
    def p(self):
        return self._p

    @property
    def q(self):
        return self._q

    @property
    def d(self):
        return self._d

    def is_rational(self):
        return self._q == 0

    # -- coercion ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QuadNum):
            if other._d == self._d:
                return other, self._d
            if other._q == 0 and self._q == 0:
                return other, max(self._d, other._d)
            if other._q == 0:
                return other, self._d
            if self._q == 0:
                return other, other._d
            raise RadicandMismatch(
                f"cannot combine elements of Q[sqrt({self._d})] and Q[sqrt({other._d})]")
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadNum._raw(Fraction(other), Fraction(0), self._d), self._d
        return None, None

    # -- field operations ----------------------------------------------------

    def __add__(self, other):
        o, d = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum._raw(self._p + o._p, self._q + o._q, d)

    __radd__ = __add__

    def __sub__(self, other):
        o, d = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum._raw(self._p - o._p, self._q - o._q, d)

    def __rsub__(self, other):
        o, d = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum._raw(o._p - self._p, o._q - self._q, d)

    def __mul__(self, other):
        o, d = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self._p * o._p + self._q * o._q * d
        q = self._p * o._q + self._q * o._p
        return QuadNum._raw(p, q, d)

    __rmul__ = __mul__

    def inverse(self):
        norm = self._p * self._p - self._q * self._q * self._d
        if norm == 0:
            raise DivisionByZero("division by zero in Q[sqrt(%d)]" % self._d)
        return QuadNum._raw(self._p / norm, -self._q / norm, self._d)

    def __truediv__(self, other):
        o, d = self._coerce(other)
        if o is None:
            return NotImplemented
        inv = o.inverse()
        return QuadNum._raw(self._p, self._q, d) * inv

    def __rtruediv__(self, other):
        o, d = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * QuadNum._raw(self._p, self._q, d).inverse()

    def __neg__(self):
        return QuadNum._raw(-self._p, -self._q, self._d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def conjugate(self):
        return QuadNum._raw(self._p, -self._q, self._d)

    # -- order ---------------------------------------------------------------

    def sign(self):
        """Exact sign of ``p + q*sqrt(d)`` as -1, 0 or +1."""
        sp, sq = _sign(self._p), _sign(self._q)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        # opposite signs: the larger magnitude wins (p^2 = q^2 d is impossible
        # for square-free d > 1 and q != 0)
        if self._p * self._p > self._q * self._q * self._d:
            return sp
        return sq

    def _cmp(self, other):
        o, _ = self._coerce(other)
        if o is None:
            return None
        return (self - o).sign()

    def __eq__(self, other):
        if isinstance(other, QuadNum):
            if self._q == 0 and other._q == 0:
                return self._p == other._p
            return self._d == other._d and self._p == other._p and self._q == other._q
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._q == 0 and self._p == other
        return NotImplemented

    def __hash__(self):
        if self._q == 0:
            return hash(self._p)
        return hash((self._p, self._q, self._d))

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __bool__(self):
        return self._p != 0 or self._q != 0

    # -- conversions ---------------------------------------------------------

    def approx(self, digits=30):
        """A ``Fraction`` approximation, with ``sqrt(d)`` truncated to ``digits`` places."""
        if self._q == 0:
            return self._p
        scale = 10 ** digits
        root = Fraction(math.isqrt(self._d * scale * scale), scale)
        return self._p + self._q * root

    def __float__(self):
        return float(self.approx(20))

    def __floor__(self):
        k = math.floor(self.approx(20))
        while self < k:
            k -= 1
        while self >= k + 1:
            k += 1
        return k

    def __ceil__(self):
        return -math.floor(-self)

    def is_integral(self):
        return self._p.denominator == 1 and self._q.denominator == 1

    # -- text ----------------------------------------------------------------

    def __str__(self):
        p, q, d = self._p, self._q, self._d
        if q == 0:
            return str(p)
        mag = abs(q)
        root = f"sqrt({d})" if mag == 1 else f"{mag}*sqrt({d})"
        if p == 0:
            return root if q > 0 else "-" + root
        return f"{p} {'+' if q > 0 else '-'} {root}"

    def __repr__(self):
        return f"QuadNum({str(self._p)!r}, {str(self._q)!r}, {self._d})"

    def __reduce__(self):
        return (QuadNum, (self._p, self._q, self._d))


def qnum(p, q=0, d=1):
    """Build ``p + q*sqrt(d)``; arguments may be ints, Fractions or strings."""
    return QuadNum(Fraction(p), Fraction(q), d)


def height_psi(z):
    """The height ``max(|m|, |n|)`` of ``z = m + n*sqrt(d)`` in Z[sqrt(d)]."""
    z = _as_quad(z)
    if not z.is_integral():
        raise NonIntegralCoefficients(f"{z} does not have integer coefficients")
    return int(max(abs(z.p), abs(z.q)))


def clear_denominators(values):
    """Scale a list of field elements by the least positive integer making
    every coefficient integral.  Returns ``(scaled, scale)``."""
    values = [_as_quad(v) for v in values]
    ds = {v.d for v in values if not v.is_rational()}
    if len(ds) > 1:
        raise RadicandMismatch(f"mixed radicands {sorted(ds)}")
    scale = 1
    for v in values:
        for c in (v.p, v.q):
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
    return [v * scale for v in values], scale


def _as_quad(z):
    if isinstance(z, QuadNum):
        return z
    return QuadNum(Fraction(z), 0, 1)


# -- parsing -----------------------------------------------------------------

class _Evaluator:
    def __init__(self, d, text):
        self.d = d
        self.text = text

    def fail(self, node, message):
        col = getattr(node, "col_offset", None)
        raise ParseError(f"{message} in {self.text!r}", column=None if col is None else col + 1)

    def sqrt(self, node, n):
        if not n.is_rational() or n.p.denominator != 1 or n.p < 0:
            self.fail(node, "sqrt() takes a nonnegative integer")
        n = int(n.p)
        if n == 0:
            return QuadNum(0, 0, self.d)
        k, m = _split_square(n)
        if m == 1:
            return QuadNum(k, 0, self.d)
        if m != self.d:
            raise RadicandMismatch(f"sqrt({n}) does not lie in Q[sqrt({self.d})]")
        return QuadNum(0, k, self.d)

    def eval(self, node):
        if isinstance(node, ast.Expression):
            return self.eval(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                self.fail(node, "only integer literals are accepted")
            return QuadNum(node.value, 0, self.d)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = self.eval(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a = self.eval(node.left)
            b = self.eval(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if not b:
                    self.fail(node, "division by zero")
                return a / b
            if isinstance(node.op, ast.Pow):
                if not b.is_rational() or b.p.denominator != 1 or abs(b.p) > 64:
                    self.fail(node, "exponent must be a small integer")
                e = int(b.p)
                r = QuadNum(1, 0, self.d)
                for _ in range(abs(e)):
                    r = r * a
                return r if e >= 0 else r.inverse()
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "sqrt":
            if len(node.args) != 1 or node.keywords:
                self.fail(node, "sqrt() takes exactly one argument")
            return self.sqrt(node, self.eval(node.args[0]))
        self.fail(node, "unsupported syntax")


def parse_quadnum(text, d=1):
    """Parse an expression such as ``"1 - 2*(3/2 - 1/2*sqrt(5))"``.

    The grammar is integer literals, ``+ - * /``, integer powers, parentheses
    and ``sqrt(n)`` with ``n`` an integer of the form ``k**2 * d``.  Decimal
    literals are rejected.
    """
    _check_radicand(d)
    if not isinstance(text, str):
        raise ParseError(f"expected an expression string, got {text!r}")
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"malformed expression {text!r}", column=exc.offset) from None
    return _Evaluator(d, text).eval(tree)

