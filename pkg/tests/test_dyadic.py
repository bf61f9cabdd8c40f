import random
from fractions import Fraction

import pytest

from surreals.dyadic import (Dyadic, ZERO, ONE, birthday, by_birthday,
                             children, compare, decode_signs, div_exact,
                             left_parent, lineage, parent, right_parent,
                             sign_expansion, simplest_in_interval)
from surreals.errors import (EmptyIntervalError, NoParentError,
                             UnsupportedError)

from helpers import all_upto, random_dyadic


def test_constructor_reduces():
    assert (Dyadic(4, 2).num, Dyadic(4, 2).exp) == (1, 0)
    assert (Dyadic(6, 1).num, Dyadic(6, 1).exp) == (3, 0)
    assert (Dyadic(3, 2).num, Dyadic(3, 2).exp) == (3, 2)
    assert (Dyadic(0, 7).num, Dyadic(0, 7).exp) == (0, 0)
    with pytest.raises(ValueError):
        Dyadic(1, -1)


def test_canonicality_random():
    rng = random.Random(1)
    for _ in range(2000):
        num = rng.randint(-1 << 20, 1 << 20)
        exp = rng.randint(0, 20)
        d = Dyadic(num, exp)
        assert d.exp == 0 or d.num % 2 == 1
        assert d.as_fraction() == Fraction(num, 1 << exp)


def test_compare_examples():
    assert Dyadic(-1, 1) < ZERO
    x = Dyadic(7, 3)
    assert not x < x and not x > x
    # rational cross-multiplication oracle: 3*8 vs 5*4
    assert Fraction(3, 4) > Fraction(5, 8)
    assert Dyadic(3, 2) > Dyadic(5, 3)
    assert compare(Dyadic(3, 2), Dyadic(5, 3)) == 1


def test_order_isomorphic_to_rationals():
    values = sorted(all_upto(10))
    fracs = [v.as_fraction() for v in values]
    assert fracs == sorted(fracs)
    assert all(a != b for a, b in zip(fracs, fracs[1:]))


def test_ring_arithmetic():
    half = Dyadic(1, 1)
    assert half + half == ONE
    rng = random.Random(2)
    for _ in range(500):
        a, b = random_dyadic(rng, 8), random_dyadic(rng, 8)
        assert a + ZERO == a
        assert (a + b).as_fraction() == a.as_fraction() + b.as_fraction()
        assert (a - b).as_fraction() == a.as_fraction() - b.as_fraction()
        assert (a * b).as_fraction() == a.as_fraction() * b.as_fraction()
    assert Dyadic(3, 2) * Dyadic(-2) == Dyadic(-3, 1)
    assert Dyadic(3, 2) * -2 == -3 * Dyadic(1, 1)


def test_negation():
    assert -ZERO == ZERO
    assert -ONE == Dyadic(-1)
    assert -Dyadic(5, 3) == Dyadic(-5, 3)
    for a in all_upto(10):
        assert -(-a) == a


def test_int_interop():
    assert Dyadic(3) == 3
    assert Dyadic(1, 1) < 1
    assert 2 + Dyadic(1, 1) == Dyadic(5, 1)
    assert hash(Dyadic(3)) == hash(3)


def test_sign_expansion_examples():
    assert sign_expansion(ZERO) == ""
    assert sign_expansion(Dyadic(1, 1)) == "+-"
    assert sign_expansion(Dyadic(5, 1)) == "+++-"
    assert sign_expansion(Dyadic(-5, 1)) == "---+"


def test_tree_bijection():
    seen = set()
    for n in range(9):
        for bits in range(1 << n):
            signs = "".join("+" if (bits >> k) & 1 else "-" for k in range(n))
            v = decode_signs(signs)
            assert sign_expansion(v) == signs
            seen.add(v)
    assert len(seen) == (1 << 9) - 1
    for v in all_upto(10):
        assert decode_signs(sign_expansion(v)) == v


def test_birthday_examples():
    assert birthday(ZERO) == 0
    assert birthday(Dyadic(-2)) == 2
    assert birthday(Dyadic(3, 2)) == 3  # first appears in generation 3
    for n, level in enumerate(by_birthday(10)):
        assert all(birthday(v) == n for v in level)


def test_generation_bound():
    for n, level in enumerate(by_birthday(8)):
        assert all(-n <= v <= n for v in level)


def test_parent_children():
    assert parent(ONE) == ZERO
    assert parent(Dyadic(5, 1)) == Dyadic(3)
    assert parent(Dyadic(-1, 1)) == Dyadic(-1)
    with pytest.raises(NoParentError):
        parent(ZERO)
    assert children(ZERO) == (Dyadic(-1), ONE)
    assert children(Dyadic(3)) == (Dyadic(5, 1), Dyadic(4))
    assert children(Dyadic(1, 1)) == (Dyadic(1, 2), Dyadic(3, 2))
    for v in all_upto(7):
        lo, hi = children(v)
        assert lo < v < hi
        assert parent(lo) == v and parent(hi) == v
        assert birthday(lo) == birthday(hi) == birthday(v) + 1


def test_lineage():
    assert lineage(ZERO) == []
    assert lineage(Dyadic(5, 1)) == [ZERO, ONE, Dyadic(2), Dyadic(3)]
    assert lineage(Dyadic(-1)) == [ZERO]
    for v in all_upto(9):
        line = lineage(v)
        assert len(line) == birthday(v)
        # every strict ancestor is older
        assert [birthday(u) for u in line] == list(range(len(line)))


def test_left_right_parents():
    assert left_parent(ZERO) is None and right_parent(ZERO) is None
    assert left_parent(Dyadic(3)) == Dyadic(2) and right_parent(Dyadic(3)) is None
    assert left_parent(Dyadic(1, 1)) == ZERO and right_parent(Dyadic(1, 1)) == ONE
    for v in all_upto(8):
        line = lineage(v)
        below = [u for u in line if u < v]
        above = [u for u in line if u > v]
        assert left_parent(v) == (max(below) if below else None)
        assert right_parent(v) == (min(above) if above else None)


def test_lexicographic_order_matches_value_order():
    # pad with 0 sitting between "-" and "+"
    def key(v):
        bits = [1 if c == "+" else -1 for c in sign_expansion(v)]
        return bits + [0] * (10 - len(bits))

    values = all_upto(10)
    by_key = sorted(values, key=key)
    by_value = sorted(values)
    assert by_key == by_value


def test_simplest_in_interval_examples():
    assert simplest_in_interval(None, None) == ZERO
    assert simplest_in_interval(ZERO, None) == ONE
    assert simplest_in_interval(None, ZERO) == Dyadic(-1)
    assert simplest_in_interval(Dyadic(1, 3), Dyadic(7, 3)) == Dyadic(1, 1)
    assert simplest_in_interval(Dyadic(-3, 1), None) == ZERO
    assert simplest_in_interval(Dyadic(5, 1), None) == Dyadic(3)
    assert simplest_in_interval(None, Dyadic(-5, 1)) == Dyadic(-3)
    assert simplest_in_interval(Dyadic(3, 1), Dyadic(2)) == Dyadic(7, 2)
    assert simplest_in_interval(Dyadic(-5), Dyadic(-2)) == Dyadic(-3)
    with pytest.raises(EmptyIntervalError):
        simplest_in_interval(ONE, ONE)
    with pytest.raises(EmptyIntervalError):
        simplest_in_interval(Dyadic(2), ONE)


def test_simplest_is_oldest_inside():
    # brute-force oracle over everything of birthday <= 8
    values = sorted(all_upto(8))
    rng = random.Random(3)
    for _ in range(300):
        i = rng.randrange(len(values))
        j = rng.randrange(len(values))
        if i == j:
            continue
        lo, hi = min(i, j), max(i, j)
        z = simplest_in_interval(values[lo], values[hi])
        assert values[lo] < z < values[hi]
        inside = [v for v in values[lo + 1:hi] if birthday(v) < birthday(z)]
        assert not inside


def test_div_exact():
    assert div_exact(Dyadic(3), Dyadic(2)) == Dyadic(3, 1)
    assert div_exact(Dyadic(5, 2), Dyadic(-1, 1)) == Dyadic(-5, 1)
    assert Dyadic(7) / Dyadic(4) == Dyadic(7, 2)
    with pytest.raises(UnsupportedError):
        div_exact(ONE, Dyadic(3))
    with pytest.raises(ZeroDivisionError):
        div_exact(ONE, ZERO)


def test_text_rendering():
    assert str(Dyadic(3)) == "3"
    assert str(Dyadic(-3)) == "-3"
    assert str(Dyadic(5, 3)) == "5/8"
    assert str(Dyadic(-5, 3)) == "-5/8"
    assert str(ZERO) == "0"
