"""Exact arithmetic and genealogy for dyadic rationals k/2^h.

The dyadics are exactly the numbers of finite birthday: each one is
reached from 0 by a unique finite sequence of "+"/"-" moves in the
genealogical tree, and the length of that path is its birthday.  The
tree also supplies the two canonical options of a number (its nearest
strict ancestors on either side), which is what the recursive layers
build on.

Everything here is integer-exact; numerators are plain Python ints and
never overflow.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .errors import EmptyIntervalError, NoParentError, UnsupportedError

PLUS = "+"
MINUS = "-"


class Dyadic:
    """A dyadic rational num / 2**exp, kept fully reduced.

    Canonical form: exp == 0, or num is odd.  Instances are immutable by
    convention, hashable, totally ordered, and support exact +, -, *.
    Comparison and arithmetic accept plain ints.
    """

    __slots__ = ("num", "exp")

    def __init__(self, num: int, exp: int = 0) -> None:
        if exp < 0:
            raise ValueError("exp must be nonnegative")
        if num == 0:
            exp = 0
        else:
            while exp > 0 and num % 2 == 0:
                num //= 2
                exp -= 1
        self.num = num
        self.exp = exp

    @classmethod
    def from_fraction(cls, value) -> "Dyadic":
        """Exact conversion; rejects fractions whose denominator is not a power of two."""
        f = Fraction(value)
        h = f.denominator.bit_length() - 1
        if f.denominator != 1 << h:
            raise UnsupportedError(
                f"{f} is not dyadic (denominator {f.denominator})")
        return cls(f.numerator, h)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def is_integer(self) -> bool:
        return self.exp == 0

    # -- order ---------------------------------------------------------

    def _cmp(self, other) -> int:
        if isinstance(other, int):
            other = Dyadic(other)
        elif not isinstance(other, Dyadic):
            return NotImplemented
        lhs = self.num << other.exp
        rhs = other.num << self.exp
        return (lhs > rhs) - (lhs < rhs)

    def __eq__(self, other):
        c = self._cmp(other)
        return c == 0 if c is not NotImplemented else NotImplemented

    def __lt__(self, other):
        c = self._cmp(other)
        return c < 0 if c is not NotImplemented else NotImplemented

    def __le__(self, other):
        c = self._cmp(other)
        return c <= 0 if c is not NotImplemented else NotImplemented

    def __gt__(self, other):
        c = self._cmp(other)
        return c > 0 if c is not NotImplemented else NotImplemented

    def __ge__(self, other):
        c = self._cmp(other)
        return c >= 0 if c is not NotImplemented else NotImplemented

    def __hash__(self):
        # Dyadic(3) == 3 must hash like the int 3.
        return hash(self.as_fraction())

    def __bool__(self):
        return self.num != 0

    # -- ring arithmetic -------------------------------------------------

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.num, self.exp)

    def __abs__(self) -> "Dyadic":
        return Dyadic(abs(self.num), self.exp)

    def __add__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        elif not isinstance(other, Dyadic):
            return NotImplemented
        e = max(self.exp, other.exp)
        num = (self.num << (e - self.exp)) + (other.num << (e - other.exp))
        return Dyadic(num, e)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        elif not isinstance(other, Dyadic):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if isinstance(other, int):
            return Dyadic(other) + (-self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        elif not isinstance(other, Dyadic):
            return NotImplemented
        return Dyadic(self.num * other.num, self.exp + other.exp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        elif not isinstance(other, Dyadic):
            return NotImplemented
        return div_exact(self, other)

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"

    def __repr__(self) -> str:
        return f"Dyadic({self.num}, {self.exp})"


ZERO = Dyadic(0)
ONE = Dyadic(1)


def _as_dyadic(a) -> Dyadic:
    if isinstance(a, Dyadic):
        return a
    if isinstance(a, int):
        return Dyadic(a)
    raise TypeError(f"expected a dyadic, got {a!r}")


def compare(a, b) -> int:
    """Total order, returned as -1/0/+1; agrees with rational value order."""
    c = _as_dyadic(a)._cmp(_as_dyadic(b))
    assert c is not NotImplemented
    return c


def div_exact(a, b) -> Dyadic:
    """Division restricted to divisors +-2^j, the only ones with dyadic inverse.

    The dyadics form a ring, not a field; for general division convert to
    the normal-form layer.
    """
    a = _as_dyadic(a)
    b = _as_dyadic(b)
    if b.num == 0:
        raise ZeroDivisionError("division by zero")
    mag = abs(b.num)
    if mag & (mag - 1):
        raise UnsupportedError(
            f"1/({b}) is not dyadic; only division by +-2^j stays in the ring")
    num = a.num << b.exp
    if b.num < 0:
        num = -num
    return Dyadic(num, a.exp + mag.bit_length() - 1)


def _floor_scaled(d: Dyadic, h: int) -> int:
    """floor(d * 2**h), via arithmetic shifts (exact for negatives too)."""
    shift = h - d.exp
    if shift >= 0:
        return d.num << shift
    return d.num >> -shift


def _ceil_scaled(d: Dyadic, h: int) -> int:
    return -_floor_scaled(-d, h)


def simplest_in_interval(lo: Optional[Dyadic] = None,
                         hi: Optional[Dyadic] = None) -> Dyadic:
    """The unique oldest dyadic strictly between lo and hi (None = unbounded).

    Uniqueness is the mediator property: two same-birthday candidates
    would have a still-older number between them.  The search tries the
    integers first (smallest absolute value wins), then halves the grid
    until exactly one point of the 2^-h lattice falls inside.
    """
    if lo is not None:
        lo = _as_dyadic(lo)
    if hi is not None:
        hi = _as_dyadic(hi)
    if lo is None and hi is None:
        return ZERO
    if lo is None:
        return ZERO if hi > 0 else Dyadic(_ceil_scaled(hi, 0) - 1)
    if hi is None:
        return ZERO if lo < 0 else Dyadic(_floor_scaled(lo, 0) + 1)
    if lo >= hi:
        raise EmptyIntervalError(f"empty interval: ({lo}, {hi})")
    k_min = _floor_scaled(lo, 0) + 1
    k_max = _ceil_scaled(hi, 0) - 1
    if k_min <= k_max:
        if k_min <= 0 <= k_max:
            return ZERO
        return Dyadic(k_min if k_min > 0 else k_max)
    # Both bounds now share their integer part; the open interval has
    # width >= 2^-max(exp), so this loop always hits, and the first level
    # that meets the interval holds exactly one lattice point.
    for h in range(1, max(lo.exp, hi.exp) + 2):
        k_min = _floor_scaled(lo, h) + 1
        k_max = _ceil_scaled(hi, h) - 1
        if k_min <= k_max:
            assert k_min == k_max
            return Dyadic(k_min, h)
    raise AssertionError(f"no lattice point in ({lo}, {hi})")


def _navigate(a: Dyadic):
    """Walk the tree from 0 to a.

    Returns (ancestors, lo, hi): the strict ancestors oldest-first, and
    the tightest ancestors below/above a (None where a is extreme).
    """
    lo: Optional[Dyadic] = None
    hi: Optional[Dyadic] = None
    cur = ZERO
    path = []
    while cur != a:
        path.append(cur)
        if a > cur:
            lo = cur
        else:
            hi = cur
        cur = simplest_in_interval(lo, hi)
    return path, lo, hi


def sign_expansion(a) -> str:
    """The tree path from 0 to a as a string over "+"/"-"; "" encodes 0."""
    a = _as_dyadic(a)
    path, _, _ = _navigate(a)
    return "".join(PLUS if a > p else MINUS for p in path)


def decode_signs(signs: str) -> Dyadic:
    """Inverse of sign_expansion."""
    lo: Optional[Dyadic] = None
    hi: Optional[Dyadic] = None
    cur = ZERO
    for ch in signs:
        if ch == PLUS:
            lo = cur
        elif ch == MINUS:
            hi = cur
        else:
            raise ValueError(f"bad sign {ch!r}")
        cur = simplest_in_interval(lo, hi)
    return cur


def birthday(a) -> int:
    """Generation index: the length of the sign expansion."""
    path, _, _ = _navigate(_as_dyadic(a))
    return len(path)


def lineage(a) -> list[Dyadic]:
    """Strict ancestors of a, oldest first; [] for 0."""
    path, _, _ = _navigate(_as_dyadic(a))
    return path


def parent(a) -> Dyadic:
    a = _as_dyadic(a)
    path, _, _ = _navigate(a)
    if not path:
        raise NoParentError("0 has no parent")
    return path[-1]


def children(a) -> tuple[Dyadic, Dyadic]:
    """The two successors (minus-child, plus-child) of a, one birthday later."""
    a = _as_dyadic(a)
    _, lo, hi = _navigate(a)
    return simplest_in_interval(lo, a), simplest_in_interval(a, hi)


def left_parent(a) -> Optional[Dyadic]:
    """Greatest strict ancestor below a (the canonical left option), or None."""
    _, lo, _ = _navigate(_as_dyadic(a))
    return lo


def right_parent(a) -> Optional[Dyadic]:
    """Least strict ancestor above a (the canonical right option), or None."""
    _, _, hi = _navigate(_as_dyadic(a))
    return hi


def by_birthday(n: int) -> list[list[Dyadic]]:
    """Levels 0..n of the tree, each level in tree order (minus-child first)."""
    levels = [[ZERO]]
    for _ in range(n):
        nxt = []
        for a in levels[-1]:
            lo, hi = children(a)
            nxt.append(lo)
            nxt.append(hi)
        levels.append(nxt)
    return levels
