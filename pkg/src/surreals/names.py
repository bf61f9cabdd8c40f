"""Names {X|Y}, the mediator theorem, and the genetic operations.

A name is any pair of finite sets of numbers with X < Y.  It designates
its mediator: the unique oldest number strictly between the two sides.
Many names designate the same number (synonyms); the intime name of a
number is the canonical one built from its nearest strict ancestors.

The genetic operations (negation, addition, multiplication) recompute
arithmetic the slow way, by recursion over options resolved through the
mediator, and exist to cross-check the direct dyadic ring.  They are
memoized and guarded by a birthday cap; all operands must be tier-1.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import Optional

from . import dyadic as dy
from . import normalform as nf
from .dyadic import Dyadic, ZERO, ONE
from .errors import (InvalidNameError, NotPositiveError, RecursionCapError,
                     UnsupportedError)

DEFAULT_RECURSION_CAP = 12
_recursion_cap = DEFAULT_RECURSION_CAP


def set_default_recursion_cap(cap: int) -> None:
    """Adjust the default birthday cap for the genetic operations."""
    if cap <= 0:
        raise ValueError("cap must be positive")
    global _recursion_cap
    _recursion_cap = cap


def default_recursion_cap() -> int:
    return _recursion_cap


class Name:
    """A pair {X|Y} of finite sets of surreals with X < Y elementwise.

    Sides are stored deduplicated and sorted ascending; construction
    validates the X < Y invariant.
    """

    __slots__ = ("left", "right")

    def __init__(self, left=(), right=()):
        self.left = _side(left)
        self.right = _side(right)
        if self.left and self.right:
            if nf.compare(self.left[-1], self.right[0]) >= 0:
                raise InvalidNameError(
                    f"not a name: {nf.render(self.left[-1])} is not below "
                    f"{nf.render(self.right[0])}")

    def __eq__(self, other):
        if isinstance(other, Name):
            return self.left == other.left and self.right == other.right
        return NotImplemented

    def __hash__(self):
        return hash((self.left, self.right))

    def __str__(self):
        lhs = ", ".join(nf.render(v) for v in self.left)
        rhs = ", ".join(nf.render(v) for v in self.right)
        return "{" + lhs + " | " + rhs + "}"

    def __repr__(self):
        return f"Name({self.left!r}, {self.right!r})"


def _side(values) -> tuple:
    out = {nf._as_surreal(v) for v in values}
    return tuple(sorted(out, key=cmp_to_key(nf.compare)))


def _dyadic_members(n: Name, what: str) -> None:
    for v in n.left + n.right:
        if not isinstance(v, Dyadic):
            raise UnsupportedError(
                f"{what} needs finite-birthday members; got {nf.render(v)}")


def resolve(n: Name) -> Dyadic:
    """The mediator of {X|Y}: the oldest number with X < z < Y."""
    _dyadic_members(n, "resolve")
    lo = n.left[-1] if n.left else None
    hi = n.right[0] if n.right else None
    return dy.simplest_in_interval(lo, hi)


def is_name_of(n: Name, a) -> bool:
    """Does {X|Y} designate a?

    Equivalent to resolve(n) == a, phrased through the three-part
    characterization: a lies between the sides, X reaches the greatest
    strict ancestor below a, and Y reaches the least one above.
    """
    _dyadic_members(n, "is_name_of")
    a = nf._as_surreal(a)
    if not isinstance(a, Dyadic):
        raise UnsupportedError("is_name_of tests finite-birthday numbers only")
    if any(x >= a for x in n.left) or any(y <= a for y in n.right):
        return False
    lp = dy.left_parent(a)
    if lp is not None and not (n.left and n.left[-1] >= lp):
        return False
    rp = dy.right_parent(a)
    if rp is not None and not (n.right and n.right[0] <= rp):
        return False
    return True


def synonymous(n1: Name, n2: Name) -> bool:
    """Two names are synonymous when they designate the same number."""
    return resolve(n1) == resolve(n2)


def intime_name(a) -> Name:
    """The canonical name of a: nearest strict ancestor on each side."""
    a = _tier1(a)
    lp = dy.left_parent(a)
    rp = dy.right_parent(a)
    return Name(() if lp is None else (lp,), () if rp is None else (rp,))


def dextronome(a) -> Name:
    """A name {X|Y} of a > 0 with 0 < X, obtained by trimming the intime name.

    When the canonical left option is not positive it is replaced by the
    oldest number in (0, a), which keeps the left side cofinal.
    """
    a = _tier1(a)
    if a <= 0:
        raise NotPositiveError("dextronomes exist for positive numbers only")
    lp = dy.left_parent(a)
    rp = dy.right_parent(a)
    if lp is None or lp <= 0:
        lp = dy.simplest_in_interval(ZERO, a)
    return Name((lp,), () if rp is None else (rp,))


def genetic_inverse_name(a, probe) -> Name:
    """The inverse-by-sieve name {E|F} of 1/a over a finite probe set.

    E collects the positive probes z with z*a < 1, F those with z*a > 1.
    Whenever 1/a is dyadic and the probes bracket it tightly enough,
    resolve({E|F}) == 1/a; when 1/a is not dyadic (|numerator| not a
    power of two) no finite name can resolve to it at this tier, and the
    mediator is merely some dyadic between the sides.
    """
    a = _tier1(a)
    if a <= 0:
        raise NotPositiveError("inverse names are built for positive numbers")
    members = [_tier1(z) for z in probe]
    left = [z for z in members if z > 0 and z * a < ONE]
    right = [z for z in members if z > 0 and z * a > ONE]
    return Name(left, right)


# -- genetic recursions ---------------------------------------------------

_NEG_MEMO: dict = {}
_ADD_MEMO: dict = {}
_MUL_MEMO: dict = {}


def _tier1(a) -> Dyadic:
    a = nf._as_surreal(a)
    if not isinstance(a, Dyadic):
        raise UnsupportedError(
            f"genetic operations are tier-1 only; got {nf.render(a)}")
    return a


def _check_cap(cap: Optional[int], *operands: Dyadic) -> None:
    cap = _recursion_cap if cap is None else cap
    for a in operands:
        if dy.birthday(a) > cap:
            raise RecursionCapError(
                f"birthday of {a} exceeds the recursion cap {cap}")


def _options(a: Dyadic, full: bool):
    """Left/right option sets of a: canonical singletons, or all older numbers."""
    if not full:
        lp = dy.left_parent(a)
        rp = dy.right_parent(a)
        return (() if lp is None else (lp,),
                () if rp is None else (rp,))
    n = dy.birthday(a)
    older = [v for level in dy.by_birthday(n - 1) for v in level] if n else []
    return (tuple(v for v in older if v < a),
            tuple(v for v in older if v > a))


def genetic_neg(a, cap: Optional[int] = None, full: bool = False) -> Dyadic:
    """Negation by the cut rule -x = {-Y | -X}; equals the direct negation."""
    a = _tier1(a)
    _check_cap(cap, a)
    return _neg(a, full)


def _neg(a: Dyadic, full: bool) -> Dyadic:
    key = (a, full)
    hit = _NEG_MEMO.get(key)
    if hit is None:
        lefts, rights = _options(a, full)
        hit = resolve(Name([_neg(r, full) for r in rights],
                           [_neg(l, full) for l in lefts]))
        _NEG_MEMO[key] = hit
    return hit


def genetic_add(a, b, cap: Optional[int] = None, full: bool = False) -> Dyadic:
    """Recursive sum {X+b, Y+a | U+b, V+a} resolved via the mediator."""
    a = _tier1(a)
    b = _tier1(b)
    _check_cap(cap, a, b)
    return _add(a, b, full)


def _add(a: Dyadic, b: Dyadic, full: bool) -> Dyadic:
    key = (a, b, full)
    hit = _ADD_MEMO.get(key)
    if hit is None:
        a_left, a_right = _options(a, full)
        b_left, b_right = _options(b, full)
        lefts = [_add(x, b, full) for x in a_left] + \
                [_add(a, y, full) for y in b_left]
        rights = [_add(x, b, full) for x in a_right] + \
                 [_add(a, y, full) for y in b_right]
        hit = resolve(Name(lefts, rights))
        _ADD_MEMO[key] = hit
    return hit


def genetic_mul(a, b, cap: Optional[int] = None, full: bool = False) -> Dyadic:
    """Recursive product; option combinations use the exact dyadic ring.

    Left options come from like-sided pairs, right options from mixed
    pairs, each shaped p*b + a*q - p*q; the mediator of the resulting
    name is the product.
    """
    a = _tier1(a)
    b = _tier1(b)
    _check_cap(cap, a, b)
    return _mul(a, b, full)


def _mul(a: Dyadic, b: Dyadic, full: bool) -> Dyadic:
    key = (a, b, full)
    hit = _MUL_MEMO.get(key)
    if hit is None:
        a_left, a_right = _options(a, full)
        b_left, b_right = _options(b, full)

        def combo(p, q):
            return _mul(p, b, full) + _mul(a, q, full) - _mul(p, q, full)

        lefts = [combo(p, q) for p in a_left for q in b_left] + \
                [combo(p, q) for p in a_right for q in b_right]
        rights = [combo(p, q) for p in a_left for q in b_right] + \
                 [combo(p, q) for p in a_right for q in b_left]
        hit = resolve(Name(lefts, rights))
        _MUL_MEMO[key] = hit
    return hit
