"""Conway normal form: finite sums w^(y_0)*r_0 + w^(y_1)*r_1 + ...

Exponents are themselves surreal numbers (strictly decreasing along the
sum), coefficients are nonzero rationals, and w is the first infinite
number.  A value is kept in the lowest tier that can hold it: anything
equal to a dyadic is a `Dyadic`, everything else is a `NormalForm`.
A `Surreal` is either of the two.

Leading-term dominance drives everything: the sign of a form is the
sign of its first coefficient, and two positive values are of the same
order of magnitude exactly when their leading exponents agree.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from typing import Union

from . import dyadic as dy
from .dyadic import Dyadic, ZERO, ONE
from .errors import NotOrdinalError, NotPositiveError, UnsupportedError

Rational = Fraction


class _OmegaOrLater:
    """Birthday tag for values beyond the finite generations."""

    def __repr__(self):
        return "OMEGA_OR_LATER"

    def __str__(self):
        return "omega-or-later"


OMEGA_OR_LATER = _OmegaOrLater()


class NormalForm:
    """Immutable term sequence ((exponent, coefficient), ...).

    Invariants: exponents strictly decreasing, coefficients nonzero, and
    the value is not representable as a plain Dyadic.  Do not construct
    directly; go through `from_terms`, which canonicalizes.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = tuple(terms)

    # -- order ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, NormalForm):
            return self.terms == other.terms
        if isinstance(other, (Dyadic, int)):
            return False  # canonical tier: a form never equals a dyadic
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def _rich(self, other, op):
        if isinstance(other, (NormalForm, Dyadic, int)):
            return op(compare(self, other), 0)
        return NotImplemented

    def __lt__(self, other):
        return self._rich(other, lambda c, z: c < z)

    def __le__(self, other):
        return self._rich(other, lambda c, z: c <= z)

    def __gt__(self, other):
        return self._rich(other, lambda c, z: c > z)

    def __ge__(self, other):
        return self._rich(other, lambda c, z: c >= z)

    # -- arithmetic ------------------------------------------------------

    def __neg__(self):
        return neg(self)

    def __add__(self, other):
        if isinstance(other, (NormalForm, Dyadic, int)):
            return add(self, other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (NormalForm, Dyadic, int)):
            return sub(self, other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (NormalForm, Dyadic, int)):
            return sub(other, self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (NormalForm, Dyadic, int)):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (NormalForm, Dyadic, int)):
            return div(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (NormalForm, Dyadic, int)):
            return div(other, self)
        return NotImplemented

    def __bool__(self):
        return True  # zero is a Dyadic

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"NormalForm({self.terms!r})"


Surreal = Union[Dyadic, NormalForm]


def _as_surreal(x) -> Surreal:
    if isinstance(x, (Dyadic, NormalForm)):
        return x
    if isinstance(x, int):
        return Dyadic(x)
    if isinstance(x, Fraction):
        return from_terms([(ZERO, x)])
    raise TypeError(f"expected a surreal, got {x!r}")


def _as_coeff(r) -> Fraction:
    if isinstance(r, Dyadic):
        return r.as_fraction()
    return Fraction(r)


def as_terms(x: Surreal) -> tuple:
    """View any surreal as a normal-form term tuple; () is 0."""
    if isinstance(x, NormalForm):
        return x.terms
    x = _as_surreal(x)
    if isinstance(x, NormalForm):
        return x.terms
    if x.num == 0:
        return ()
    return ((ZERO, x.as_fraction()),)


def from_terms(pairs) -> Surreal:
    """Merge, sort, and tier-reduce a term list into a canonical Surreal."""
    acc: dict = {}
    for y, r in pairs:
        y = _as_surreal(y)
        r = _as_coeff(r)
        if r == 0:
            continue
        acc[y] = acc.get(y, Fraction(0)) + r
    terms = [(y, r) for y, r in acc.items() if r != 0]
    terms.sort(key=cmp_to_key(lambda p, q: compare(p[0], q[0])), reverse=True)
    return _canonical(tuple(terms))


def _canonical(terms: tuple) -> Surreal:
    if not terms:
        return ZERO
    if len(terms) == 1 and terms[0][0] == ZERO:
        r = terms[0][1]
        den = r.denominator
        if den & (den - 1) == 0:
            return Dyadic(r.numerator, den.bit_length() - 1)
    return NormalForm(terms)


def compare(a, b) -> int:
    """Total order as -1/0/+1: lexicographic on terms by (exponent, coefficient)."""
    a = _as_surreal(a)
    b = _as_surreal(b)
    if isinstance(a, Dyadic) and isinstance(b, Dyadic):
        return dy.compare(a, b)
    ta, tb = as_terms(a), as_terms(b)
    i = j = 0
    while i < len(ta) or j < len(tb):
        if i == len(ta):
            return -_sign_of(tb[j][1])
        if j == len(tb):
            return _sign_of(ta[i][1])
        c = compare(ta[i][0], tb[j][0])
        if c > 0:
            return _sign_of(ta[i][1])
        if c < 0:
            return -_sign_of(tb[j][1])
        if ta[i][1] != tb[j][1]:
            return 1 if ta[i][1] > tb[j][1] else -1
        i += 1
        j += 1
    return 0


def _sign_of(r: Fraction) -> int:
    return (r > 0) - (r < 0)


def sign(x) -> int:
    """Sign of a surreal: the sign of its leading coefficient."""
    x = _as_surreal(x)
    if isinstance(x, Dyadic):
        return (x.num > 0) - (x.num < 0)
    return _sign_of(x.terms[0][1])


def add(a, b) -> Surreal:
    a = _as_surreal(a)
    b = _as_surreal(b)
    if isinstance(a, Dyadic) and isinstance(b, Dyadic):
        return a + b
    return from_terms(as_terms(a) + as_terms(b))


def neg(a) -> Surreal:
    a = _as_surreal(a)
    if isinstance(a, Dyadic):
        return -a
    return NormalForm(tuple((y, -r) for y, r in a.terms))


def sub(a, b) -> Surreal:
    return add(a, neg(b))


def mul(a, b) -> Surreal:
    """Distribute term by term; exponents add as surreals, coefficients as rationals."""
    a = _as_surreal(a)
    b = _as_surreal(b)
    if isinstance(a, Dyadic) and isinstance(b, Dyadic):
        return a * b
    return from_terms((add(y1, y2), r1 * r2)
                      for y1, r1 in as_terms(a)
                      for y2, r2 in as_terms(b))


def omega_pow(a) -> Surreal:
    """The monomial w^a (coefficient 1); the oldest value of its magnitude."""
    return from_terms([(_as_surreal(a), Fraction(1))])


def inverse(a) -> Surreal:
    """Inverse of a monomial w^y*r; multi-term inverses are infinite series."""
    a = _as_surreal(a)
    terms = as_terms(a)
    if not terms:
        raise ZeroDivisionError("0 has no inverse")
    if len(terms) > 1:
        raise UnsupportedError(
            "inverse of a multi-term form is an infinite series")
    y, r = terms[0]
    return from_terms([(neg(y), 1 / r)])


def div(a, b) -> Surreal:
    return mul(a, inverse(b))


def _require_positive(x, what: str) -> Surreal:
    x = _as_surreal(x)
    if sign(x) <= 0:
        raise NotPositiveError(f"{what} needs strictly positive operands")
    return x


def magnitude_exponent(x) -> Surreal:
    """The exponent y with x commensurable to w^y (positive x only)."""
    x = _require_positive(x, "magnitude")
    if isinstance(x, Dyadic):
        return ZERO
    return x.terms[0][0]


def commensurable(a, b) -> bool:
    """Mutually bounded by integer multiples: equal leading exponents."""
    return compare(magnitude_exponent(a), magnitude_exponent(b)) == 0


def much_less(a, b) -> bool:
    """a << b: every integer multiple of a stays below b."""
    return compare(magnitude_exponent(a), magnitude_exponent(b)) < 0


def leading_magnitude(x) -> Surreal:
    """The oldest number of x's order of magnitude, as a monomial w^y."""
    return omega_pow(magnitude_exponent(x))


def is_real(a) -> bool:
    """Dyadics, plus single-term forms of exponent 0 (bounded rationals)."""
    a = _as_surreal(a)
    if isinstance(a, Dyadic):
        return True
    return len(a.terms) == 1 and a.terms[0][0] == ZERO


def is_ordinal(a) -> bool:
    """Cantor-normal-form shape: positive integer coefficients, ordinal exponents."""
    a = _as_surreal(a)
    if isinstance(a, Dyadic):
        return a.exp == 0 and a.num >= 0
    return all(r.denominator == 1 and r > 0 and is_ordinal(y)
               for y, r in a.terms)


def natural_sum(a, b) -> Surreal:
    """Commutative term-merge sum of two ordinals (not ordinal addition)."""
    a = _as_surreal(a)
    b = _as_surreal(b)
    if not is_ordinal(a) or not is_ordinal(b):
        raise NotOrdinalError("natural_sum is defined for ordinals only")
    return add(a, b)


def birthday(x):
    """Finite generation index for dyadics; OMEGA_OR_LATER for true forms."""
    x = _as_surreal(x)
    if isinstance(x, Dyadic):
        return dy.birthday(x)
    return OMEGA_OR_LATER


OMEGA = omega_pow(ONE)


# -- text rendering ------------------------------------------------------

def render(value) -> str:
    """Canonical text: "5/8", "w", "w*2 + 1/2", "w^(1/2)*3 + 2", "w^(-1)"."""
    value = _as_surreal(value)
    if isinstance(value, Dyadic):
        return str(value)
    parts = []
    for k, (y, r) in enumerate(value.terms):
        body = _render_term(y, abs(r))
        if k == 0:
            parts.append(body if r > 0 else "-" + body)
        else:
            parts.append((" + " if r > 0 else " - ") + body)
    return "".join(parts)


def _render_term(y: Surreal, coeff: Fraction) -> str:
    if isinstance(y, Dyadic) and y.num == 0:
        return str(coeff)
    if isinstance(y, Dyadic) and y == ONE:
        head = "w"
    else:
        head = f"w^({render(y)})"
    if coeff == 1:
        return head
    return f"{head}*{coeff}"


def render_explicit(value) -> str:
    """Normal-form view with nothing abbreviated: every term as w^(y)*r."""
    value = _as_surreal(value)
    terms = as_terms(value)
    if not terms:
        return "0"
    parts = []
    for k, (y, r) in enumerate(terms):
        body = f"w^({render(y)})*{abs(r)}"
        if k == 0:
            parts.append(body if r > 0 else "-" + body)
        else:
            parts.append((" + " if r > 0 else " - ") + body)
    return "".join(parts)
